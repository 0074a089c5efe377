// Sparse multivariate polynomials over the exact rationals in the Jordan
// totient symbols J_1, J_2, J_3, ...  J_1 is the Euler totient and is
// displayed as "phi". Terms are kept in a canonical order (lexicographic on
// exponent vectors, largest first) so equality, display and golden files are
// all deterministic.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/numeric.hpp"

namespace cyclo {

class JPoly {
 public:
  // Exponents for J_1..J_m with trailing zeros trimmed; empty = constant term.
  using Mono = std::vector<unsigned>;

  struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const {
      const std::size_t n = std::max(a.size(), b.size());
      for (std::size_t i = 0; i < n; ++i) {
        unsigned ai = i < a.size() ? a[i] : 0;
        unsigned bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai > bi;
      }
      return false;
    }
  };

  using TermMap = std::map<Mono, Rat, MonoGreater>;

  JPoly() = default;

  static JPoly constant(Rat c) {
    JPoly p;
    p.add_term({}, std::move(c));
    return p;
  }
  static JPoly variable(unsigned j) {
    if (j == 0) throw std::invalid_argument("JPoly::variable: index starts at 1");
    JPoly p;
    Mono m(j, 0);
    m[j - 1] = 1;
    p.add_term(std::move(m), Rat(1));
    return p;
  }
  // phi = J_1
  static JPoly phi() { return variable(1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  bool operator==(const JPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const JPoly& o) const { return !(*this == o); }

  JPoly operator-() const {
    JPoly p(*this);
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  JPoly& operator+=(const JPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  JPoly operator+(const JPoly& o) const {
    JPoly p(*this);
    p += o;
    return p;
  }
  JPoly operator-(const JPoly& o) const { return *this + (-o); }

  JPoly operator*(const Rat& s) const {
    if (s == 0) return JPoly();
    JPoly p(*this);
    for (auto& [m, c] : p.terms_) c *= s;
    return p;
  }

  JPoly operator*(const JPoly& o) const {
    JPoly p;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Mono m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        p.add_term(std::move(m), ca * cb);
      }
    return p;
  }

  // Largest variable index with a nonzero exponent anywhere; 0 for constants.
  unsigned max_variable() const {
    unsigned mx = 0;
    for (const auto& [m, c] : terms_)
      for (std::size_t i = m.size(); i-- > 0;)
        if (m[i] > 0) {
          mx = std::max<unsigned>(mx, static_cast<unsigned>(i) + 1);
          break;
        }
    return mx;
  }

  // True if any J_3, J_5, J_7, ... appears (J_1 = phi is exempt).
  bool uses_odd_variable_above_one() const {
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 2; i < m.size(); i += 2)
        if (m[i] > 0) return true;  // m[i] is the exponent of J_{i+1}
    return false;
  }

  // max over monomials of sum_j j * e_j.
  long weighted_degree() const {
    long deg = 0;
    for (const auto& [m, c] : terms_) {
      long w = 0;
      for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<long>(i + 1) * m[i];
      deg = std::max(deg, w);
    }
    return deg;
  }

  long phi_degree() const {
    long deg = 0;
    for (const auto& [m, c] : terms_)
      if (!m.empty()) deg = std::max<long>(deg, m[0]);
    return deg;
  }

  // Substitute phi (= J_1) by a rational constant.
  JPoly substitute_phi(const Rat& value) const {
    JPoly p;
    for (const auto& [m, c] : terms_) {
      if (m.empty() || m[0] == 0) {
        p.add_term(m, c);
        continue;
      }
      Rat scale = c;
      for (unsigned i = 0; i < m[0]; ++i) scale *= value;
      Mono rest = m;
      rest[0] = 0;
      p.add_term(std::move(rest), std::move(scale));
    }
    return p;
  }

  struct LinearDivision;
  // Synthetic division by the monic linear factor (phi - c), with phi = J_1.
  LinearDivision divide_by_phi_minus(const Rat& c) const;

  // value_of(j) supplies the value of J_j.
  Rat evaluate(const std::function<Rat(unsigned)>& value_of) const {
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
      Rat term = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned rep = 0; rep < m[i]; ++rep) term *= value_of(static_cast<unsigned>(i) + 1);
      acc += term;
    }
    return acc;
  }

  // Canonical display: terms in monomial order, coefficients as p/q,
  // J_1 rendered as phi. Example: "1/4*phi^2 - 1/2*phi + 1/12*J2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      Rat a = c;
      if (out.empty()) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      std::string vars;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += i == 0 ? "phi" : "J" + std::to_string(i + 1);
        if (m[i] > 1) vars += "^" + std::to_string(m[i]);
      }
      if (vars.empty()) {
        out += to_string(a);
      } else {
        if (a != 1) out += to_string(a) + "*";
        out += vars;
      }
    }
    return out;
  }

 private:
  TermMap terms_;

  void add_term(Mono m, Rat c) {
    if (c == 0) return;
    while (!m.empty() && m.back() == 0) m.pop_back();
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // this * phi^e
  JPoly shift_phi(unsigned e) const {
    if (e == 0) return *this;
    JPoly p;
    for (const auto& [m, c] : terms_) {
      Mono shifted = m;
      if (shifted.empty()) shifted.resize(1, 0);
      shifted[0] += e;
      p.add_term(std::move(shifted), c);
    }
    return p;
  }
};

struct JPoly::LinearDivision {
  JPoly quotient;
  JPoly remainder;  // free of phi
};

inline JPoly::LinearDivision JPoly::divide_by_phi_minus(const Rat& c) const {
  // split into phi-degree layers: this = sum_e layer[e] * phi^e
  std::map<unsigned, JPoly> layers;
  for (const auto& [m, coeff] : terms_) {
    unsigned e = m.empty() ? 0 : m[0];
    Mono rest = m;
    if (!rest.empty()) rest[0] = 0;
    layers[e].add_term(std::move(rest), coeff);
  }
  unsigned top = layers.empty() ? 0 : layers.rbegin()->first;
  LinearDivision out;
  JPoly carry;  // running quotient layer B_e
  for (unsigned e = top; e >= 1; --e) {
    auto it = layers.find(e);
    JPoly layer = carry * c;
    if (it != layers.end()) layer += it->second;
    // layer is now B_{e-1}; fold phi^{e-1} * layer into the quotient
    out.quotient += layer.shift_phi(e - 1);
    carry = std::move(layer);
  }
  out.remainder = carry * c;
  auto it0 = layers.find(0);
  if (it0 != layers.end()) out.remainder += it0->second;
  return out;
}

}  // namespace cyclo
