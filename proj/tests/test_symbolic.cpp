#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/symbolic.hpp"

using namespace cyclo;

TEST_CASE("taylor kernel coefficients") {
  std::vector<DPoly> c = taylor_h_coeffs(2);
  CHECK(c[0] == DPoly{make_rat(-1, 2), make_rat(1, 2)});
  CHECK(c[1] == DPoly{make_rat(5, 12), make_rat(-6, 12), make_rat(1, 12)});
  CHECK(c[2] == DPoly{make_rat(-3, 8), make_rat(4, 8), make_rat(-1, 8)});
}

TEST_CASE("kernel coefficients have no odd powers of d past the linear term") {
  // c_m = (-1)^m d/2 + even polynomial, so d^3, d^5, ... never appear
  std::vector<DPoly> c = taylor_h_coeffs(14);
  for (unsigned m = 0; m <= 14; ++m) {
    REQUIRE(c[m].degree() <= static_cast<long>(m) + 1);
    for (long j = 3; j <= c[m].degree(); j += 2) REQUIRE(c[m].coeff(j) == 0);
  }
}

TEST_CASE("jordan substitution") {
  CHECK(jordan_substitute(DPoly{make_rat(-1, 2), make_rat(1, 2)}) ==
        JPoly::phi() * make_rat(1, 2));
  CHECK(jordan_substitute(DPoly{Rat(5)}) == JPoly());
  JPoly want = JPoly::variable(2) * make_rat(1, 12) - JPoly::phi() * make_rat(1, 2);
  CHECK(jordan_substitute(DPoly{make_rat(5, 12), make_rat(-1, 2), make_rat(1, 12)}) == want);
}

TEST_CASE("ratio table low orders") {
  RatioTable rt = ratio_table(5);
  CHECK(rt.R[0] == JPoly::constant(Rat(1)));
  CHECK(rt.R[1] == JPoly::phi() * make_rat(1, 2));
  CHECK(rt.R[2] == fixtures::ratio2());
  CHECK(rt.R[3] == fixtures::ratio3());
  CHECK(rt.R[4] == fixtures::ratio4());
  CHECK(corollary_fixtures(rt));
}

TEST_CASE("odd jordan variables cancel") {
  RatioTable rt = ratio_table(12);
  CHECK(assert_even_only(rt));
  RatioTable broken = rt;
  broken.R[4] += JPoly::variable(3);
  CHECK_FALSE(assert_even_only(broken));
}

TEST_CASE("variable and weighted-degree bounds") {
  RatioTable rt = ratio_table(12);
  for (unsigned l = 0; l <= 12; ++l) {
    REQUIRE(rt.R[l].max_variable() <= l + 1);
    REQUIRE(rt.R[l].weighted_degree() <= static_cast<long>(l));
  }
}

TEST_CASE("conjecture divisibility with quotient witnesses") {
  RatioTable rt = ratio_table(11);
  JPoly phi = JPoly::phi();
  for (unsigned k = 1; k <= 5; ++k) {
    ConjectureResult c = conjecture_check(rt, k);
    REQUIRE(c.holds);
    REQUIRE(c.quotient * (phi - JPoly::constant(Rat(2L * k))) == rt.R[2 * k + 1]);
  }
  // k = 1: quotient is (J2 + phi(phi-4))/8
  ConjectureResult c1 = conjecture_check(rt, 1);
  JPoly want1 = (JPoly::variable(2) + phi * (phi - JPoly::constant(Rat(4)))) * make_rat(1, 8);
  CHECK(c1.quotient == want1);
  // k = 2: quotient is the printed degree-5 display
  ConjectureResult c2 = conjecture_check(rt, 2);
  CHECK(c2.quotient == fixtures::ratio5_over_phi_minus_4());
}

TEST_CASE("negative control: R[2] is not divisible by phi - 2") {
  RatioTable rt = ratio_table(3);
  CHECK_FALSE(rt.R[2].substitute_phi(Rat(2)).is_zero());
  JPoly::LinearDivision d = rt.R[2].divide_by_phi_minus(Rat(2));
  CHECK_FALSE(d.remainder.is_zero());
  // reconstruction with remainder still exact
  CHECK(d.quotient * (JPoly::phi() - JPoly::constant(Rat(2))) + d.remainder == rt.R[2]);
}

TEST_CASE("numeric bridge: symbolic ratios match real derivative values") {
  RatioTable rt = ratio_table(8);
  CHECK(eval_ratio_at(rt, 3, 5) == 6);
  CHECK(eval_ratio_at(rt, 2, 6) == 2);
  for (unsigned long n : {2UL, 5UL, 9UL, 12UL, 30UL})
    CHECK(eval_ratio_at(rt, 1, n) == make_rat(euler_phi(n), 2));

  for (unsigned long n = 2; n <= 120; ++n) {
    IntPoly phi = cyclotomic_poly(n);
    Int phi1 = phi.eval(Int(1));
    unsigned lmax = std::min<unsigned>(8, euler_phi(n));
    std::vector<Int> deriv = derivs_at_one_upto(phi, lmax);
    for (unsigned l = 0; l <= lmax; ++l) {
      Rat ratio = eval_ratio_at(rt, l, n);
      REQUIRE(Rat(deriv[l]) == ratio * Rat(phi1));
      REQUIRE(ratio > 0);
      // integrality holds except at the Wilson boundary l = phi(n), n prime,
      // where the ratio is (p-1)!/p in lowest terms
      if (is_prime(n) && l == euler_phi(n)) {
        REQUIRE_FALSE(is_integer(ratio));
        REQUIRE(ratio == make_rat(factorial(n - 1), Int(n)));
      } else {
        REQUIRE(is_integer(ratio));
      }
    }
  }
}

TEST_CASE("ratios of orders past the degree vanish") {
  RatioTable rt = ratio_table(8);
  // phi(n) < l <= 8: Phi^(l)(1) = 0, so the evaluated ratio must be 0
  for (unsigned long n : {3UL, 4UL, 6UL}) {  // phi = 2
    for (unsigned l = 3; l <= 8; ++l) REQUIRE(eval_ratio_at(rt, l, n) == 0);
  }
}

TEST_CASE("serialization is canonical and matches the golden file") {
  RatioTable rt = ratio_table(8);
  std::string text = serialize(rt);
  CHECK(text.find("R[1] = 1/2*phi\n") != std::string::npos);
  std::ifstream in(std::string(CYCLO_TEST_DATA) + "/ratio_table_order8.golden", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream want;
  want << in.rdbuf();
  REQUIRE(text == want.str());
}

TEST_CASE("jpoly display rules") {
  JPoly p = JPoly::phi() * JPoly::phi() * make_rat(1, 4) - JPoly::phi() * make_rat(1, 2) +
            JPoly::variable(2) * make_rat(1, 12);
  CHECK(p.str() == "1/4*phi^2 - 1/2*phi + 1/12*J2");
  CHECK(JPoly().str() == "0");
  CHECK(JPoly::constant(make_rat(-3, 7)).str() == "-3/7");
  CHECK((JPoly::variable(4) * JPoly::phi()).str() == "phi*J4");
}
