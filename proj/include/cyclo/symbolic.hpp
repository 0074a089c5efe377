// The recursive construction of R[l] = Phi_n^(l)(1) / Phi_n(1) as an element
// of Q[phi, J_2, J_3, ...], generic in n >= 2:
//
//   * the Taylor coefficients c_m in Q[d] of the shifted log-derivative
//     kernel (((d-1)t - 1)(1+t)^(d-1) + 1) / (t((1+t)^d - 1)),
//   * the substitution d^j -> J_j (constant terms drop since
//     sum_{d|n} mu(d) = 0 for n >= 2),
//   * the Leibniz recursion R[k+1] = sum_i C(k,i) R[i] S[k-i] with
//     S[m] = m! * substituted c_m.
//
// The recursion deliberately keeps every variable J_1..J_{L+1}, including the
// odd-index ones; that J_3, J_5, ... cancel out of every R[l] is asserted
// after the fact, not assumed.
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo/jpoly.hpp"
#include "cyclo/ntheory.hpp"
#include "cyclo/series.hpp"

namespace cyclo {

namespace detail {

// Quotient p / d for a polynomial p in d with zero constant term.
inline DPoly divide_by_symbol(const DPoly& p) {
  if (p.is_zero()) return p;
  if (p.coeff(0) != 0) throw std::logic_error("divide_by_symbol: nonzero constant term");
  std::vector<Rat> c(p.coeffs().begin() + 1, p.coeffs().end());
  return DPoly(std::move(c));
}

}  // namespace detail

// Taylor coefficients c_0..c_order of the kernel. Numerator and denominator
// both carry a common factor d*t^2 which is cancelled exactly before the
// series division; the reduced denominator then starts at the unit 1.
inline std::vector<DPoly> taylor_h_coeffs(unsigned order) {
  DSeries num(order), den(order);
  DPoly d_minus_1{Rat(-1), Rat(1)};
  for (unsigned j = 0; j <= order; ++j) {
    // [t^(j+2)] (((d-1)t - 1)(1+t)^(d-1) + 1) = (d-1) C(d-1, j+1) - C(d-1, j+2)
    DPoly a = d_minus_1 * binom_poly(-1, j + 1) - binom_poly(-1, j + 2);
    num.set_coeff(j, detail::divide_by_symbol(a));
    // [t^(j+2)] t((1+t)^d - 1) = C(d, j+1)
    den.set_coeff(j, detail::divide_by_symbol(binom_poly(0, j + 1)));
  }
  DSeries q = num / den;
  std::vector<DPoly> out(order + 1);
  for (unsigned m = 0; m <= order; ++m) out[m] = q.coeff(m);
  return out;
}

// sum_j c_j d^j  ->  sum_{j>=1} c_j J_j, dropping the constant term
// (valid generically for n >= 2).
inline JPoly jordan_substitute(const DPoly& c) {
  JPoly out;
  for (long j = 1; j <= c.degree(); ++j) {
    Rat cj = c.coeff(j);
    if (cj != 0) out += JPoly::variable(static_cast<unsigned>(j)) * cj;
  }
  return out;
}

struct RatioTable {
  unsigned max_order = 0;
  std::vector<JPoly> R;  // R[l] for l = 0..max_order
};

inline RatioTable ratio_table(unsigned max_order) {
  if (max_order == 0) throw std::invalid_argument("ratio_table: order must be >= 1");
  std::vector<DPoly> c = taylor_h_coeffs(max_order - 1);
  std::vector<JPoly> s(max_order);
  for (unsigned m = 0; m < max_order; ++m)
    s[m] = jordan_substitute(c[m]) * Rat(factorial(m));

  RatioTable rt;
  rt.max_order = max_order;
  rt.R.resize(max_order + 1);
  rt.R[0] = JPoly::constant(Rat(1));
  for (unsigned k = 0; k < max_order; ++k) {
    JPoly next;
    for (unsigned i = 0; i <= k; ++i) next += rt.R[i] * s[k - i] * Rat(binomial(k, i));
    rt.R[k + 1] = std::move(next);
  }
  return rt;
}

// No R[l] may mention J_3, J_5, J_7, ...
inline bool assert_even_only(const RatioTable& rt) {
  for (const JPoly& r : rt.R)
    if (r.uses_odd_variable_above_one()) return false;
  return true;
}

struct ConjectureResult {
  bool holds = false;
  JPoly quotient;  // R[2k+1] / (phi - 2k) when holds
};

// Divisibility of R[2k+1] by (phi - 2k): decided by the substitution
// phi <- 2k (kernel of that homomorphism is exactly the ideal (phi - 2k)),
// with the synthetic-division quotient as witness.
inline ConjectureResult conjecture_check(const RatioTable& rt, unsigned k) {
  if (k == 0) throw std::invalid_argument("conjecture_check: k must be >= 1");
  if (2 * k + 1 > rt.max_order) throw std::invalid_argument("conjecture_check: table order too small");
  const JPoly& r = rt.R[2 * k + 1];
  ConjectureResult out;
  out.holds = r.substitute_phi(Rat(2 * static_cast<long>(k))).is_zero();
  if (out.holds) {
    JPoly::LinearDivision div = r.divide_by_phi_minus(Rat(2 * static_cast<long>(k)));
    if (!div.remainder.is_zero())
      throw std::logic_error("conjecture_check: substitution and division disagree");
    out.quotient = std::move(div.quotient);
  }
  return out;
}

// Substitute J_j <- J_j(n); the central numeric/symbolic bridge.
inline Rat eval_ratio_at(const RatioTable& rt, unsigned l, unsigned long n) {
  if (n < 2) throw std::invalid_argument("eval_ratio_at: n must be >= 2");
  if (l > rt.max_order) throw std::invalid_argument("eval_ratio_at: order above table");
  std::vector<Rat> cache;
  return rt.R[l].evaluate([&](unsigned j) {
    if (cache.size() < j) cache.resize(j);
    if (cache[j - 1] == 0) cache[j - 1] = Rat(jordan(j, n));
    return cache[j - 1];
  });
}

namespace fixtures {

// The four printed ratio displays. R[5] is stated divided by (phi - 4).
inline JPoly ratio2() {
  JPoly phi = JPoly::phi(), j2 = JPoly::variable(2);
  return j2 * make_rat(1, 12) + phi * phi * make_rat(1, 4) - phi * make_rat(1, 2);
}

inline JPoly ratio3() {
  JPoly phi = JPoly::phi(), j2 = JPoly::variable(2);
  JPoly inner = j2 + phi * (phi - JPoly::constant(Rat(4)));
  return (phi - JPoly::constant(Rat(2))) * inner * make_rat(1, 8);
}

inline JPoly ratio4() {
  JPoly phi = JPoly::phi(), j2 = JPoly::variable(2), j4 = JPoly::variable(4);
  JPoly phi2 = phi * phi;
  JPoly s = j2 * phi2 * Rat(30) - j2 * phi * Rat(180) + j2 * j2 * Rat(5) + j2 * Rat(220) -
            j4 * Rat(2) + phi2 * phi2 * Rat(15) - phi2 * phi * Rat(180) + phi2 * Rat(660) -
            phi * Rat(720);
  return s * make_rat(1, 240);
}

inline JPoly ratio5_over_phi_minus_4() {
  JPoly phi = JPoly::phi(), j2 = JPoly::variable(2), j4 = JPoly::variable(4);
  JPoly phi2 = phi * phi;
  JPoly s = phi2 * phi2 * Rat(3) - phi2 * phi * Rat(48) + j2 * phi2 * Rat(10) +
            phi2 * Rat(228) - j2 * phi * Rat(80) - phi * Rat(288) + j2 * j2 * Rat(5) +
            j2 * Rat(100) - j4 * Rat(2);
  return s * make_rat(1, 96);
}

}  // namespace fixtures

// R[2], R[3], R[4] equal the printed polynomials; R[5] equals (phi - 4)
// times the printed degree-5 display.
inline bool corollary_fixtures(const RatioTable& rt) {
  if (rt.max_order < 5) throw std::invalid_argument("corollary_fixtures: need table order >= 5");
  JPoly phi_minus_4 = JPoly::phi() - JPoly::constant(Rat(4));
  return rt.R[2] == fixtures::ratio2() && rt.R[3] == fixtures::ratio3() &&
         rt.R[4] == fixtures::ratio4() &&
         rt.R[5] == phi_minus_4 * fixtures::ratio5_over_phi_minus_4();
}

// Canonical text form used by golden-file tests.
inline std::string serialize(const RatioTable& rt) {
  std::ostringstream out;
  out << "ratio_table order=" << rt.max_order << "\n";
  for (unsigned l = 0; l <= rt.max_order; ++l) out << "R[" << l << "] = " << rt.R[l].str() << "\n";
  return out.str();
}

}  // namespace cyclo
