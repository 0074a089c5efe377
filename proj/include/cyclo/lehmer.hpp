// The Omega-expansion of derivative ratios in the scaled Jordan values
// t_r = J_r(n) / (2r):
//
//   t_1^[h] + 2 sum_{l>=1} B_{2l} C(h,2l) (t_1 - l)^[h-2l] Omega_l
//
// with the four known Omega_l. For h <= 9 the l >= 5 terms vanish, so the
// printed Omegas determine the sum completely. The source display equates
// this with b_n(h)/Phi_n(1), but evaluation shows it matches
// Phi_n^(h)(1)/Phi_n(1) = h! b_n(h)/Phi_n(1) instead; the checker evaluates
// both candidates and records which one agrees.
#pragma once

#include <stdexcept>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/ntheory.hpp"

namespace cyclo {

enum class LehmerNormalization { derivative_ratio, b_ratio, neither };

inline const char* to_string(LehmerNormalization n) {
  switch (n) {
    case LehmerNormalization::derivative_ratio: return "derivative_ratio";
    case LehmerNormalization::b_ratio: return "b_ratio";
    default: return "neither";
  }
}

// Omega_l evaluated at t, where t[r] = J_r(n)/(2r) for r = 1..8.
inline Rat lehmer_omega(unsigned l, const std::vector<Rat>& t) {
  if (t.size() < 9) throw std::invalid_argument("lehmer_omega: need t[1..8]");
  const Rat& t2 = t[2];
  const Rat& t4 = t[4];
  const Rat& t6 = t[6];
  const Rat& t8 = t[8];
  switch (l) {
    case 1:
      return t2;
    case 2:
      return t4 - Rat(5) * falling(t2, 2);
    case 3:
      return t6 - Rat(7) * t4 * (t2 - 1) + make_rat(35, 3) * falling(t2, 3) +
             make_rat(14, 3) * t2;
    case 4:
      return t8 - make_rat(20, 3) * t6 * (t2 - 1) - make_rat(7, 3) * falling(t4, 2) +
             make_rat(70, 3) * t4 * falling(t2 - 1, 2) - make_rat(175, 9) * falling(t2, 4) +
             make_rat(10, 3) * t6 - make_rat(280, 9) * falling(t2, 2) + make_rat(290, 9) * t2;
    default:
      throw std::invalid_argument("lehmer_omega: only Omega_1..Omega_4 are known");
  }
}

struct LehmerCheck {
  Rat rhs;               // the Omega-expansion value
  Rat derivative_ratio;  // Phi_n^(h)(1) / Phi_n(1)
  Rat b_ratio;           // b_n(h) / Phi_n(1)
  LehmerNormalization matched = LehmerNormalization::neither;
};

inline LehmerCheck lehmer_check(unsigned long n, unsigned h) {
  if (n < 2) throw std::invalid_argument("lehmer_check: n must be >= 2");
  if (h > 9) throw std::invalid_argument("lehmer_check: h must be <= 9");

  std::vector<Rat> t(9);
  for (unsigned r = 1; r <= 8; ++r) t[r] = make_rat(jordan(r, n), Int(2 * r));

  Rat rhs = falling(t[1], h);
  for (unsigned l = 1; l <= 4 && 2 * l <= h; ++l)
    rhs += Rat(2) * bernoulli(2 * l) * Rat(binomial(h, 2 * l)) *
           falling(t[1] - Rat(static_cast<long>(l)), h - 2 * l) * lehmer_omega(l, t);

  IntPoly phi = cyclotomic_poly(n);
  std::vector<Int> low = shifted_low_coeffs(phi, h);
  Int phi_at_one = phi.eval(Int(1));

  LehmerCheck out;
  out.rhs = rhs;
  out.derivative_ratio = make_rat(factorial(h) * low[h], phi_at_one);
  out.b_ratio = make_rat(low[h], phi_at_one);
  if (out.rhs == out.derivative_ratio)
    out.matched = LehmerNormalization::derivative_ratio;
  else if (out.rhs == out.b_ratio)
    out.matched = LehmerNormalization::b_ratio;
  return out;
}

}  // namespace cyclo
