// Number-theoretic scalar functions: factorization, Moebius, Euler/Jordan
// totients, Carmichael lambda, Stirling numbers of the first kind, Bernoulli
// numbers, falling factorials, and the GL(k, Z/nZ) order formula.
//
// Everything here is a pure function of its arguments; desk-scale inputs
// (n up to ~10^6) are factored by deterministic trial division.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclo/numeric.hpp"

namespace cyclo {

struct Factorization {
  unsigned long n = 1;
  // (prime, exponent) pairs, primes strictly increasing, exponents >= 1.
  std::vector<std::pair<unsigned long, unsigned>> factors;
};

inline Factorization factorize(unsigned long n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

// All divisors of n in increasing order.
inline std::vector<unsigned long> divisors(unsigned long n) {
  Factorization f = factorize(n);
  std::vector<unsigned long> ds{1};
  for (auto [p, e] : f.factors) {
    std::size_t old = ds.size();
    unsigned long pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < old; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline int moebius(unsigned long n) {
  Factorization f = factorize(n);
  for (auto [p, e] : f.factors)
    if (e > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

inline unsigned long euler_phi(unsigned long n) {
  Factorization f = factorize(n);
  unsigned long phi = 1;
  for (auto [p, e] : f.factors) {
    unsigned long pk = 1;
    for (unsigned i = 1; i < e; ++i) pk *= p;
    phi *= pk * (p - 1);
  }
  return phi;
}

// Jordan totient J_k(n), evaluated through the multiplicative product form
// n^k * prod_{p|n} (1 - p^{-k}). The divisor-sum definition is kept as a
// test oracle, not duplicated here.
inline Int jordan(unsigned k, unsigned long n) {
  if (k == 0) throw std::invalid_argument("jordan: k must be positive");
  Factorization f = factorize(n);
  Int r = 1;
  for (auto [p, e] : f.factors) {
    Int pk = pow_ui(p, k);
    r *= pow_int(pk, e - 1) * (pk - 1);
  }
  return r;
}

// Carmichael lambda: exponent of (Z/nZ)^*.
inline unsigned long carmichael(unsigned long n) {
  Factorization f = factorize(n);
  unsigned long lam = 1;
  for (auto [p, e] : f.factors) {
    unsigned long part;
    if (p == 2) {
      part = e == 1 ? 1 : (e == 2 ? 2 : (1UL << (e - 2)));
    } else {
      part = 1;
      for (unsigned i = 1; i < e; ++i) part *= p;
      part *= p - 1;
    }
    lam = std::lcm(lam, part);
  }
  return lam;
}

// exp(Lambda(n)) as an integer: p when n = p^e, 1 otherwise.
inline unsigned long mangoldt_exp(unsigned long n) {
  Factorization f = factorize(n);
  return f.factors.size() == 1 ? f.factors[0].first : 1;
}

// Signed Stirling number of the first kind:
// x(x-1)...(x-m+1) = sum_j s(m,j) x^j. Returns 0 for j > m.
inline Int stirling1(unsigned m, unsigned j) {
  if (j > m) return 0;
  std::vector<Int> row{1};  // row for m = 0
  for (unsigned i = 0; i < m; ++i) {
    std::vector<Int> next(i + 2);
    for (unsigned t = 0; t <= i + 1; ++t) {
      if (t > 0) next[t] = row[t - 1];
      if (t <= i) next[t] -= static_cast<long>(i) * row[t];
    }
    row = std::move(next);
  }
  return row[j];
}

// Bernoulli numbers of the convention t*e^t/(e^t - 1), so B_1 = +1/2 and
// sum_{j<m} C(m,j) B_j = m for every m >= 1.
inline Rat bernoulli(unsigned m) {
  std::vector<Rat> b(m + 1);
  for (unsigned j = 0; j <= m; ++j) {
    Rat acc(static_cast<long>(j) + 1);
    for (unsigned i = 0; i < j; ++i) acc -= Rat(binomial(j + 1, i)) * b[i];
    b[j] = acc / Rat(static_cast<long>(j) + 1);
  }
  return b[m];
}

// Falling factorial R(R-1)...(R-l+1); empty product = 1.
inline Rat falling(const Rat& r, unsigned l) {
  Rat acc(1);
  Rat term = r;
  for (unsigned i = 0; i < l; ++i) {
    acc *= term;
    term -= 1;
  }
  return acc;
}

// |GL_k(Z/nZ)| = n^{k(k-1)/2} * prod_{j=1}^{k} J_j(n).
inline Int gl_order(unsigned k, unsigned long n) {
  if (k == 0) throw std::invalid_argument("gl_order: k must be positive");
  Int r = pow_ui(n, static_cast<unsigned long>(k) * (k - 1) / 2);
  for (unsigned j = 1; j <= k; ++j) r *= jordan(j, n);
  return r;
}

}  // namespace cyclo
