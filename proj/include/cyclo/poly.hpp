// Dense univariate polynomials over an exact coefficient ring (Int or Rat):
// convolution product, exact division, formal derivatives, Taylor shifts and
// evaluation. Value-semantic and immutable once built; the coefficient
// vector is kept canonical (no trailing zeros, empty == zero polynomial).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/numeric.hpp"

namespace cyclo {

struct NonExactDivision : std::runtime_error {
  explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly one() { return Poly{T(1)}; }
  static Poly monomial(T coeff, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(coeff);
    return Poly(std::move(c));
  }
  // x^d - 1
  static Poly power_minus_one(std::size_t d) {
    std::vector<T> c(d + 1, T(0));
    c[0] = T(-1);
    c[d] = T(1);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    std::vector<T> c(c_);
    for (T& v : c) v = -v;
    return Poly(std::move(c));
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> c(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<T> c(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
  }

  Poly operator*(const T& s) const {
    if (s == 0) return Poly();
    std::vector<T> c(c_);
    for (T& v : c) v *= s;
    return Poly(std::move(c));
  }

  // k-fold formal derivative; zero polynomial once k exceeds the degree.
  Poly derivative(unsigned k = 1) const {
    std::vector<T> c(c_);
    for (unsigned round = 0; round < k; ++round) {
      if (c.size() <= 1) return Poly();
      for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * T(static_cast<long>(i));
      c.pop_back();
    }
    return Poly(std::move(c));
  }

  // f(x + shift) by the in-place synthetic (Horner) scheme.
  Poly taylor_shift(const T& shift) const {
    if (c_.size() < 2 || shift == 0) return *this;
    std::vector<T> a(c_);
    const std::size_t n = a.size();
    const bool plus_one = (shift == T(1));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) {
        if (plus_one)
          a[j - 1] += a[j];
        else
          a[j - 1] += shift * a[j];
      }
    }
    return Poly(std::move(a));
  }

  // Horner evaluation in any ring U the coefficients convert into.
  template <typename U>
  U eval(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  double eval_double(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
    return acc;
  }

  // f(x^m)
  Poly compose_power(std::size_t m) const {
    if (m == 0) throw std::invalid_argument("compose_power: m must be positive");
    if (is_zero() || m == 1) return *this;
    std::vector<T> c((c_.size() - 1) * m + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * m] = c_[i];
    return Poly(std::move(c));
  }

  // Coefficient palindrome, i.e. x^deg * f(1/x) == f(x).
  bool is_self_reciprocal() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return !c_.empty();
  }

  std::string str(std::string_view var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      T a = c_[i];
      if (out.empty()) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      const bool unit = (a == T(1));
      if (!unit || i == 0) out += to_string(a);
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  std::vector<T> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

namespace detail {
inline Int div_coeff_exact(const Int& num, const Int& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw NonExactDivision("coefficient " + num.get_str() + " not divisible by " + den.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}
inline Rat div_coeff_exact(const Rat& num, const Rat& den) { return num / den; }
}  // namespace detail

// Quotient q with a == q*b exactly; throws NonExactDivision otherwise
// (for Int coefficients this includes any non-integral quotient step).
template <typename T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (a.is_zero()) return Poly<T>();
  if (a.degree() < b.degree()) throw NonExactDivision("dividend degree below divisor degree");

  std::vector<T> r = a.coeffs();
  const std::vector<T>& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<T> q(r.size() - db, T(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    if (r[db + k] == 0) continue;
    q[k] = detail::div_coeff_exact(r[db + k], d.back());
    for (std::size_t j = 0; j <= db; ++j) r[j + k] -= q[k] * d[j];
  }
  for (std::size_t j = 0; j < db; ++j)
    if (r[j] != 0) throw NonExactDivision("nonzero remainder");
  return Poly<T>(std::move(q));
}

// The low-order coefficients b(0..hmax) of f(x+1), via b(h) = sum_i C(i,h) a_i.
// Kept independent of taylor_shift so the two routes can cross-check.
template <typename T>
std::vector<T> shifted_low_coeffs(const Poly<T>& f, std::size_t hmax) {
  std::vector<T> b(hmax + 1, T(0));
  if (f.is_zero()) return b;
  const std::vector<T>& a = f.coeffs();
  std::vector<Int> bin{1};  // C(i, 0..min(i,hmax)) for the current row i
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) {
      if (i <= hmax) bin.push_back(1);
      for (std::size_t h = bin.size() - 1 - (i <= hmax ? 1 : 0); h >= 1; --h)
        bin[h] += bin[h - 1];
    }
    if (a[i] == 0) continue;
    for (std::size_t h = 0; h < bin.size(); ++h) b[h] += T(bin[h]) * a[i];
  }
  return b;
}

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

}  // namespace cyclo
