// Self-reciprocal polynomials of even degree 2q: the combinatorial identity
// b(t;h) = sum_l C(q-l, h-2l) a(t;l) between the quadratic-product and
// linear-product coefficient families, the transform f(x) = x^q g(x + 1/x),
// its shifted-coefficient identity, and the odd-derivative congruences
// at x = 1 that follow from it.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cyclo/ntheory.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/report.hpp"

namespace cyclo {

struct NotSelfReciprocal : std::runtime_error {
  explicit NotSelfReciprocal(const std::string& what) : std::runtime_error(what) {}
};
struct OddDegree : std::runtime_error {
  explicit OddDegree(const std::string& what) : std::runtime_error(what) {}
};

struct TSeq {
  std::vector<Rat> t;  // t_1 .. t_q
  std::size_t q() const { return t.size(); }
};

// Coefficients of prod_j (x^2 + t_j x + t_j), h = 0..2q. This is the direct
// convolution expansion and serves as the oracle side of the identity.
inline std::vector<Rat> expand_quadratic_product(const TSeq& ts) {
  RatPoly p = RatPoly::one();
  for (const Rat& t : ts.t) p = p * RatPoly{t, t, Rat(1)};
  std::vector<Rat> c = p.coeffs();
  c.resize(2 * ts.q() + 1);
  return c;
}

// Coefficients of prod_j (y + t_j), l = 0..q.
inline std::vector<Rat> expand_linear_product(const TSeq& ts) {
  RatPoly p = RatPoly::one();
  for (const Rat& t : ts.t) p = p * RatPoly{t, Rat(1)};
  std::vector<Rat> c = p.coeffs();
  c.resize(ts.q() + 1);
  return c;
}

// b(h) = sum_{l=0}^{floor(h/2)} C(q-l, h-2l) a(l), with C(m,n) = 0 for m < n.
template <typename T>
std::vector<T> b_from_a(const std::vector<T>& a, std::size_t q) {
  if (a.size() != q + 1) throw std::invalid_argument("b_from_a: need q+1 coefficients");
  std::vector<T> b(2 * q + 1, T(0));
  for (std::size_t h = 0; h <= 2 * q; ++h)
    for (std::size_t l = 0; 2 * l <= h && l <= q; ++l)
      b[h] += T(binomial(q - l, h - 2 * l)) * a[l];
  return b;
}

namespace detail {

inline std::size_t half_degree_checked(const IntPoly& f) {
  if (f.is_zero() || f.degree() % 2 != 0) throw OddDegree("expected even degree");
  if (!f.is_self_reciprocal()) throw NotSelfReciprocal("coefficients are not palindromic");
  return static_cast<std::size_t>(f.degree()) / 2;
}

}  // namespace detail

// g with f(x) = x^q g(x + 1/x), for self-reciprocal f of degree 2q. Uses the
// basis P_m(y) with x^m + x^-m = P_m(x + 1/x): P_0 = 2, P_1 = y,
// P_m = y P_{m-1} - P_{m-2}.
inline IntPoly g_from_f(const IntPoly& f) {
  std::size_t q = detail::half_degree_checked(f);
  IntPoly g{f.coeff(q)};
  IntPoly pm_prev{Int(2)};          // P_0
  IntPoly pm = {Int(0), Int(1)};    // P_1
  for (std::size_t m = 1; m <= q; ++m) {
    g = g + pm * f.coeff(q + m);
    IntPoly next = IntPoly{Int(0), Int(1)} * pm - pm_prev;
    pm_prev = pm;
    pm = next;
  }
  return g;
}

// x^q g(x + 1/x) with denominators cleared: sum_l g_l x^(q-l) (x^2+1)^l.
inline IntPoly recompose_from_g(const IntPoly& g, std::size_t q) {
  if (static_cast<long>(q) < g.degree()) throw std::invalid_argument("recompose_from_g: q below deg g");
  IntPoly acc;
  IntPoly x2p1 = {Int(1), Int(0), Int(1)};
  IntPoly pow = IntPoly::one();
  for (long l = 0; l <= g.degree(); ++l) {
    acc = acc + IntPoly::monomial(g.coeff(l), q - l) * pow;
    pow = pow * x2p1;
  }
  return acc;
}

// alpha(l) = [y^l] g(y+2).
inline std::vector<Int> alpha_coeffs(const IntPoly& g) {
  std::vector<Int> c = g.taylor_shift(Int(2)).coeffs();
  c.resize(g.degree() + 1);
  return c;
}

// beta(h) = sum_l C(q-l, h-2l) alpha(l), with beta = coefficients of f(x+1).
inline bool check_recip_identity(const IntPoly& f) {
  std::size_t q = detail::half_degree_checked(f);
  std::vector<Int> beta = f.taylor_shift(Int(1)).coeffs();
  beta.resize(2 * q + 1);
  return beta == b_from_a(alpha_coeffs(g_from_f(f)), q);
}

// Odd-derivative congruences for self-reciprocal integer f of degree 2q:
//   recip.i       2q-2 | 2 f'''(1)
//   recip.i_even  2q-2 | f'''(1)          (only when q is even)
//   recip.ii      2q-2k | f^(2k+1)(1)     for k = 2..k_max
// Dividends past the degree are zero and pass under the divides convention.
inline std::vector<CongruenceReport> check_recip_congruences(const IntPoly& f, unsigned k_max) {
  std::size_t q = detail::half_degree_checked(f);
  std::vector<Int> beta = f.taylor_shift(Int(1)).coeffs();
  auto deriv = [&](unsigned m) {
    return m < beta.size() ? Int(factorial(m) * beta[m]) : Int(0);
  };
  std::vector<CongruenceReport> out;
  long qd = static_cast<long>(q);
  out.push_back(make_report("recip.i", {{"q", qd}, {"k", 1}}, 2 * deriv(3), 2 * qd - 2));
  if (q % 2 == 0)
    out.push_back(make_report("recip.i_even", {{"q", qd}, {"k", 1}}, deriv(3), 2 * qd - 2));
  for (unsigned k = 2; k <= k_max; ++k)
    out.push_back(make_report("recip.ii", {{"q", qd}, {"k", static_cast<long>(k)}},
                              deriv(2 * k + 1), 2 * qd - 2 * static_cast<long>(k)));
  return out;
}

inline std::vector<CongruenceReport> check_recip_congruences(const IntPoly& f) {
  std::size_t q = detail::half_degree_checked(f);
  unsigned k_max = q >= 2 ? static_cast<unsigned>((2 * q - 1) / 2) : 1;
  return check_recip_congruences(f, k_max);
}

// The Stirling instance: with t_j = sign*j the quadratic-product coefficients
// equal sum_l C(q-l, h-2l) * s(q+1, l+1) for sign = -1, and the same with
// |s(q+1, l+1)| for sign = +1.
inline bool stirling_example_check(std::size_t q, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stirling_example_check: sign must be +-1");
  IntPoly p = IntPoly::one();
  for (std::size_t j = 1; j <= q; ++j) {
    long tj = sign * static_cast<long>(j);
    p = p * IntPoly{Int(tj), Int(tj), Int(1)};
  }
  std::vector<Int> lhs = p.coeffs();
  lhs.resize(2 * q + 1);
  std::vector<Int> a(q + 1);
  for (std::size_t l = 0; l <= q; ++l) {
    a[l] = stirling1(q + 1, l + 1);
    if (sign == 1) a[l] = abs(a[l]);
  }
  return lhs == b_from_a(a, q);
}

}  // namespace cyclo
