// Truncated formal power series in t whose coefficients are polynomials in
// the symbol d over the exact rationals. Truncation order is explicit in the
// value and never silently extended.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cyclo/poly.hpp"

namespace cyclo {

struct NonUnitLeadingTerm : std::runtime_error {
  explicit NonUnitLeadingTerm(const std::string& what) : std::runtime_error(what) {}
};

// There is no dedicated symbol type: a DPoly is a RatPoly read in d.
using DPoly = RatPoly;

class DSeries {
 public:
  explicit DSeries(std::size_t order) : c_(order + 1) {}
  DSeries(std::size_t order, std::vector<DPoly> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
  }

  std::size_t order() const { return c_.size() - 1; }
  const DPoly& coeff(std::size_t m) const { return c_.at(m); }
  void set_coeff(std::size_t m, DPoly p) { c_.at(m) = std::move(p); }

  bool operator==(const DSeries& o) const { return c_ == o.c_; }

  // Product truncated at the smaller order of the two operands.
  DSeries operator*(const DSeries& o) const {
    DSeries out(std::min(order(), o.order()));
    for (std::size_t m = 0; m <= out.order(); ++m) {
      DPoly acc;
      for (std::size_t i = 0; i <= m; ++i) acc = acc + c_[i] * o.c_[m - i];
      out.c_[m] = std::move(acc);
    }
    return out;
  }

  // Quotient truncated at the smaller order. The divisor's t^0 coefficient
  // must be a nonzero constant rational (a unit of Q[d][[t]]).
  DSeries operator/(const DSeries& o) const {
    const DPoly& lead = o.c_[0];
    if (lead.is_zero() || lead.degree() > 0)
      throw NonUnitLeadingTerm("series division: t^0 coefficient is not a nonzero rational");
    const Rat unit = lead.coeff(0);
    DSeries q(std::min(order(), o.order()));
    for (std::size_t m = 0; m <= q.order(); ++m) {
      DPoly acc = c_[m];
      for (std::size_t i = 1; i <= m; ++i) acc = acc - o.c_[i] * q.c_[m - i];
      q.c_[m] = acc * (Rat(1) / unit);
    }
    return q;
  }

 private:
  std::vector<DPoly> c_;
};

// Coefficient of t^j in (1+t)^(d+offset), i.e.
// (d+offset)(d+offset-1)...(d+offset-j+1) / j!  as a polynomial in d.
inline DPoly binom_poly(long offset, unsigned j) {
  DPoly p = DPoly::one();
  for (unsigned i = 0; i < j; ++i) p = p * DPoly{Rat(offset - static_cast<long>(i)), Rat(1)};
  return p * make_rat(Int(1), factorial(j));
}

}  // namespace cyclo
