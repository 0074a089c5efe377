// Cyclotomic polynomials and their scalar identities at x = 1: the shifted
// coefficients b_n(h) of Phi_n(x+1), derivative values Phi_n^(k)(1), the
// Lebesgue and Hoelder identities, prime-power reduction, positivity of the
// shifted coefficients, and the sign change of Phi'_{2p} left of 1.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cyclo/ntheory.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

namespace detail {

// f * (x^d - 1), done as a shift-and-subtract pass.
inline IntPoly mul_power_minus_one(const IntPoly& f, unsigned long d) {
  if (f.is_zero()) return f;
  const std::vector<Int>& a = f.coeffs();
  std::vector<Int> c(a.size() + d, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i + d] += a[i];
    c[i] -= a[i];
  }
  return IntPoly(std::move(c));
}

// Exact quotient f / (x^d - 1). The recurrence q_i = q_{i-d} - a_i settles
// every coefficient; the top d equations are then verified so a nonzero
// remainder cannot slip through.
inline IntPoly div_power_minus_one(const IntPoly& f, unsigned long d) {
  if (f.is_zero()) return f;
  const std::vector<Int>& a = f.coeffs();
  if (a.size() <= d) throw NonExactDivision("degree below divisor");
  std::vector<Int> q(a.size() - d);
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = -a[i];
    if (i >= d) q[i] += q[i - d];
  }
  for (std::size_t i = q.size(); i < a.size(); ++i) {
    Int expect = (i >= d && i - d < q.size()) ? q[i - d] : Int(0);
    if (a[i] != expect) throw NonExactDivision("nonzero remainder by x^d - 1");
  }
  return IntPoly(std::move(q));
}

}  // namespace detail

// Phi_n from the Moebius product over divisors: all mu = +1 factors are
// multiplied first (divisors ascending), then the mu = -1 factors are
// divided out exactly, again ascending.
inline IntPoly cyclotomic_poly(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  if (n == 1) return IntPoly{Int(-1), Int(1)};
  std::vector<unsigned long> pos, neg;
  for (unsigned long d : divisors(n)) {
    int mu = moebius(n / d);
    if (mu == 1) pos.push_back(d);
    else if (mu == -1) neg.push_back(d);
  }
  IntPoly f = IntPoly::one();
  for (unsigned long d : pos) f = detail::mul_power_minus_one(f, d);
  for (unsigned long d : neg) f = detail::div_power_minus_one(f, d);
  return f;
}

struct CycloData {
  unsigned long n = 1;
  IntPoly phi;             // Phi_n
  std::vector<Int> b;      // b_n(h) = [x^h] Phi_n(x+1), h = 0..phi(n)
  unsigned long degree = 0;  // = euler_phi(n)
};

inline CycloData cyclo_data(unsigned long n) {
  CycloData d;
  d.n = n;
  d.phi = cyclotomic_poly(n);
  d.degree = euler_phi(n);
  IntPoly shifted = d.phi.taylor_shift(Int(1));
  d.b = shifted.coeffs();
  d.b.resize(d.degree + 1);
  return d;
}

// Phi_n^(k)(1) for orders 0..kmax, as k! * b_n(k); zero past the degree.
inline std::vector<Int> derivs_at_one_upto(const IntPoly& phi, unsigned kmax) {
  std::vector<Int> low = shifted_low_coeffs(phi, kmax);
  std::vector<Int> out(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) out[k] = factorial(k) * low[k];
  return out;
}

inline std::vector<Int> derivs_at_one_upto(unsigned long n, unsigned kmax) {
  return derivs_at_one_upto(cyclotomic_poly(n), kmax);
}

inline Int deriv_at_one(unsigned long n, unsigned k) {
  IntPoly phi = cyclotomic_poly(n);
  if (static_cast<long>(k) > phi.degree()) return 0;
  return derivs_at_one_upto(phi, k)[k];
}

// Phi_n(1) = exp(Lambda(n)), and equals the divisor product prod d^mu(n/d).
inline bool check_lebesgue(unsigned long n) {
  if (n < 2) throw std::invalid_argument("check_lebesgue: n must be >= 2");
  Int value = cyclotomic_poly(n).eval(Int(1));
  if (value != static_cast<long>(mangoldt_exp(n))) return false;
  Int num = 1, den = 1;
  for (unsigned long d : divisors(n)) {
    int mu = moebius(n / d);
    if (mu == 1) num *= d;
    else if (mu == -1) den *= d;
  }
  return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) && num / den == value;
}

// 2 Phi_n'(1) == phi(n) Phi_n(1).
inline bool check_holder(unsigned long n) {
  if (n < 2) throw std::invalid_argument("check_holder: n must be >= 2");
  IntPoly phi = cyclotomic_poly(n);
  std::vector<Int> d01 = derivs_at_one_upto(phi, 1);
  return 2 * d01[1] == Int(euler_phi(n)) * d01[0];
}

// Phi_{p^e}(x) == Phi_p(x^{p^{e-1}}).
inline bool check_prime_power_reduction(unsigned long p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("check_prime_power_reduction: p must be prime");
  if (e < 2) throw std::invalid_argument("check_prime_power_reduction: e must be >= 2");
  unsigned long pe = p, step = 1;
  for (unsigned i = 1; i < e; ++i) {
    pe *= p;
    step *= p;
  }
  return cyclotomic_poly(pe) == cyclotomic_poly(p).compose_power(step);
}

// Phi_p^(l)(1) = p(p-1)...(p-l) / (l+1) for primes p and 0 <= l < p.
inline Int prime_deriv_formula(unsigned long p, unsigned l) {
  if (!is_prime(p)) throw std::invalid_argument("prime_deriv_formula: p must be prime");
  if (l >= p) throw std::invalid_argument("prime_deriv_formula: need l < p");
  Int num = 1;
  for (unsigned i = 0; i <= l; ++i) num *= Int(static_cast<long>(p) - static_cast<long>(i));
  return detail::div_coeff_exact(num, Int(static_cast<long>(l) + 1));
}

// b_n(h) > 0 for every 1 <= h <= phi(n).
inline bool check_positivity(unsigned long n) {
  CycloData d = cyclo_data(n);
  for (unsigned long h = 1; h <= d.degree; ++h)
    if (d.b[h] <= 0) return false;
  return true;
}

struct SignChange {
  double at_left = 0.0;  // Phi'_{2p}(1 - 1/sqrt(p)), double precision
  Int at_one;            // Phi'_{2p}(1), exact
};

inline SignChange sign_change_2p(unsigned long p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("sign_change_2p: p must be an odd prime");
  IntPoly dphi = cyclotomic_poly(2 * p).derivative();
  SignChange s;
  s.at_left = dphi.eval_double(1.0 - 1.0 / std::sqrt(static_cast<double>(p)));
  s.at_one = dphi.eval(Int(1));
  return s;
}

// The dyadic rational (2^bits - a) / 2^bits with a = floor(2^bits / sqrt(p)):
// strictly between 1 - 1/sqrt(p) and 1, and within 2^-bits of the left end.
inline Rat rational_left_point(unsigned long p, unsigned bits) {
  Int two_b = pow_ui(2, bits);
  Int four_b = two_b * two_b;
  Int a;
  mpz_sqrt(a.get_mpz_t(), Int(four_b / p).get_mpz_t());
  while ((a + 1) * (a + 1) * static_cast<long>(p) <= four_b) ++a;
  return make_rat(two_b - a, two_b);
}

// Certifies a real root of Phi'_{2p} in (1 - 1/sqrt(p), 1). The double
// evaluation decides when it clears `margin`; otherwise the sign is settled
// exactly at rational points approaching 1 - 1/sqrt(p) from above, where the
// value is eventually negative because it is strictly negative at the
// endpoint itself.
inline bool certify_sign_change(unsigned long p, double margin = 1e-6) {
  SignChange s = sign_change_2p(p);
  if (s.at_one <= 0) return false;
  if (s.at_left < -margin) return true;
  if (s.at_left > margin) return false;
  IntPoly dphi = cyclotomic_poly(2 * p).derivative();
  for (unsigned bits = 24; bits <= 96; bits += 8)
    if (dphi.eval(rational_left_point(p, bits)) < 0) return true;
  return false;
}

}  // namespace cyclo
