// Exact scalar arithmetic: arbitrary-precision integers and rationals
// (GMP-backed) plus the small combinatorial helpers used everywhere else.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cyclo {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational num/den: gcd-reduced, positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow_ui(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Divisibility convention used by every congruence check in this library:
// divides(0, a) <=> a == 0, divides(m, a) <=> a == 0 (mod |m|).
inline bool divides(long m, const Int& a) {
  if (m == 0) return a == 0;
  unsigned long mod = m < 0 ? static_cast<unsigned long>(-(m + 1)) + 1UL
                            : static_cast<unsigned long>(m);
  return mpz_divisible_ui_p(a.get_mpz_t(), mod) != 0;
}

inline unsigned long isqrt(unsigned long n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), Int(static_cast<unsigned long>(n)).get_mpz_t());
  return r.get_ui();
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
  if (is_integer(v)) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace cyclo
