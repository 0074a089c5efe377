#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyclo/poly.hpp"
#include "cyclo/series.hpp"

using namespace cyclo;

namespace {

IntPoly random_poly(std::mt19937_64& rng, std::size_t deg, long bound) {
  std::vector<Int> c(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i)
    c[i] = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  if (c[deg] == 0) c[deg] = 1;
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("multiplication") {
  IntPoly xm1{Int(-1), Int(1)};
  IntPoly xp1{Int(1), Int(1)};
  CHECK(xm1 * xp1 == IntPoly{Int(-1), Int(0), Int(1)});
  CHECK(IntPoly() * xp1 == IntPoly());
  IntPoly geo{Int(1), Int(1), Int(1)};
  CHECK(geo * xm1 == IntPoly{Int(-1), Int(0), Int(0), Int(1)});
}

TEST_CASE("exact division") {
  IntPoly xm1{Int(-1), Int(1)};
  CHECK(exact_div(IntPoly::power_minus_one(3), xm1) == IntPoly{Int(1), Int(1), Int(1)});
  CHECK(exact_div(IntPoly::power_minus_one(6), IntPoly::power_minus_one(2)) ==
        IntPoly{Int(1), Int(0), Int(1), Int(0), Int(1)});
  CHECK_THROWS_AS(exact_div(IntPoly{Int(1), Int(0), Int(1)}, xm1), NonExactDivision);
  CHECK_THROWS_AS(exact_div(xm1, IntPoly()), std::invalid_argument);
  // non-integral coefficient step
  CHECK_THROWS_AS(exact_div(IntPoly{Int(0), Int(1)}, IntPoly{Int(0), Int(2)}), NonExactDivision);
}

TEST_CASE("division round trip") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly a = random_poly(rng, 1 + rng() % 30, 40);
    IntPoly b = random_poly(rng, 1 + rng() % 20, 40);
    REQUIRE(exact_div(a * b, b) == a);
  }
}

TEST_CASE("derivative") {
  IntPoly x3 = IntPoly::monomial(Int(1), 3);
  CHECK(x3.derivative() == IntPoly{Int(0), Int(0), Int(3)});
  CHECK(x3.derivative(4) == IntPoly());
  IntPoly f{Int(5), Int(10), Int(10), Int(5), Int(1)};  // Phi_5(x+1)
  CHECK(f.derivative().coeff(0) == 10);
}

TEST_CASE("taylor shift") {
  IntPoly phi6{Int(1), Int(-1), Int(1)};
  CHECK(phi6.taylor_shift(Int(1)) == IntPoly{Int(1), Int(1), Int(1)});
  IntPoly phi5{Int(1), Int(1), Int(1), Int(1), Int(1)};
  CHECK(phi5.taylor_shift(Int(1)) == IntPoly{Int(5), Int(10), Int(10), Int(5), Int(1)});
  CHECK(phi5.taylor_shift(Int(0)) == phi5);
}

TEST_CASE("taylor shift round trip at degree 200") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    IntPoly f = random_poly(rng, 200, 1000);
    REQUIRE(f.taylor_shift(Int(1)).taylor_shift(Int(-1)) == f);
    REQUIRE(f.taylor_shift(Int(3)).taylor_shift(Int(-3)) == f);
  }
}

TEST_CASE("derivative values appear as shifted coefficients") {
  // derivative(f, j)(1) = j! * [x^j] f(x+1)
  std::mt19937_64 rng(13);
  IntPoly f = random_poly(rng, 25, 50);
  IntPoly shifted = f.taylor_shift(Int(1));
  for (unsigned j = 0; j <= 25; ++j)
    REQUIRE(f.derivative(j).eval(Int(1)) == factorial(j) * shifted.coeff(j));
}

TEST_CASE("shifted_low_coeffs agrees with the full shift") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    IntPoly f = random_poly(rng, 5 + rng() % 60, 200);
    IntPoly shifted = f.taylor_shift(Int(1));
    std::vector<Int> low = shifted_low_coeffs(f, 12);
    for (unsigned h = 0; h <= 12; ++h) REQUIRE(low[h] == shifted.coeff(h));
  }
}

TEST_CASE("evaluation") {
  IntPoly phi6{Int(1), Int(-1), Int(1)};
  CHECK(phi6.eval(Int(1)) == 1);
  CHECK(IntPoly().eval(Int(123)) == 0);
  CHECK(IntPoly{Int(-1), Int(1)}.eval(Int(1)) == 0);
  CHECK(phi6.eval(make_rat(1, 2)) == make_rat(3, 4));
  CHECK(phi6.eval_double(0.5) == Catch::Approx(0.75));
}

TEST_CASE("series multiplication and division") {
  // series of (1+t) over constant polynomials
  DSeries one_plus_t(3);
  one_plus_t.set_coeff(0, DPoly::one());
  one_plus_t.set_coeff(1, DPoly::one());
  DSeries one(3);
  one.set_coeff(0, DPoly::one());
  CHECK(one_plus_t / one == one_plus_t);

  DSeries sq = one_plus_t * one_plus_t;
  CHECK(sq.coeff(2) == DPoly{Rat(1)});
  CHECK(sq / one_plus_t == one_plus_t);

  DSeries bad(3);
  bad.set_coeff(0, DPoly{Rat(0), Rat(1)});  // constant term d, not a unit
  CHECK_THROWS_AS(one_plus_t / bad, NonUnitLeadingTerm);
  DSeries zero_lead(3);
  CHECK_THROWS_AS(one_plus_t / zero_lead, NonUnitLeadingTerm);
}

TEST_CASE("series division round trip") {
  std::mt19937_64 rng(23);
  auto random_series = [&](std::size_t order, bool unit_lead) {
    DSeries s(order);
    for (std::size_t m = 0; m <= order; ++m) {
      std::vector<Rat> c(1 + rng() % 4);
      for (Rat& v : c) v = make_rat(static_cast<long>(rng() % 19) - 9, 1 + rng() % 6);
      s.set_coeff(m, DPoly(std::move(c)));
    }
    if (unit_lead) s.set_coeff(0, DPoly{make_rat(1 + rng() % 6, 1 + rng() % 3)});
    return s;
  };
  for (int trial = 0; trial < 25; ++trial) {
    DSeries a = random_series(6, false);
    DSeries b = random_series(6, true);
    REQUIRE((a * b) / b == a);
  }
}

TEST_CASE("binom_poly") {
  CHECK(binom_poly(0, 0) == DPoly::one());
  CHECK(binom_poly(0, 1) == DPoly{Rat(0), Rat(1)});
  // (d-1)(d-2)/2 = (d^2 - 3d + 2)/2
  CHECK(binom_poly(-1, 2) == DPoly{Rat(1), make_rat(-3, 2), make_rat(1, 2)});
  // at integer d = D the value is the binomial C(D + offset, j)
  for (long offset = -2; offset <= 2; ++offset)
    for (unsigned j = 0; j <= 6; ++j) {
      DPoly p = binom_poly(offset, j);
      for (long d = static_cast<long>(j) - offset; d <= static_cast<long>(j) - offset + 8; ++d) {
        Rat v = p.eval(Rat(d));
        REQUIRE(is_integer(v));
        REQUIRE(v.get_num() == binomial(static_cast<unsigned long>(d + offset), j));
      }
    }
}

TEST_CASE("polynomial printing") {
  CHECK(IntPoly{Int(1), Int(0), Int(-1), Int(1)}.str() == "x^3 - x^2 + 1");
  CHECK(IntPoly().str() == "0");
  CHECK(IntPoly{Int(-2), Int(3)}.str("y") == "3*y - 2");
}
