#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cyclo/congruence.hpp"
#include "cyclo/report.hpp"

using namespace cyclo;

TEST_CASE("divides convention") {
  CHECK(divides(0, Int(0)));
  CHECK_FALSE(divides(0, Int(3)));
  CHECK(divides(-6, Int(12)));
  CHECK(divides(6, Int(-12)));
  CHECK_FALSE(divides(5, Int(12)));
  CHECK(divides(1, Int(7)));
}

TEST_CASE("trivial modulus table") {
  const std::pair<unsigned, unsigned long> table[] = {
      {2, 24},  {4, 240},   {6, 504},   {8, 480},   {10, 264},
      {12, 65520}, {14, 24}, {16, 16320}, {18, 28728}, {20, 13200}};
  for (auto [k, want] : table) REQUIRE(trivial_modulus(k).M == want);
  for (unsigned k = 1; k <= 21; k += 2) REQUIRE(trivial_modulus(k).M == 2);
}

TEST_CASE("trivial modulus parts carry the exact level") {
  for (unsigned k : {2u, 3u, 7u, 12u, 16u, 20u}) {
    TrivialModulus t = trivial_modulus(k);
    unsigned long prod = 1;
    for (auto [p, e] : t.parts) {
      unsigned long pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= p;
      REQUIRE(k % carmichael(pe) == 0);
      REQUIRE(k % carmichael(pe * p) != 0);
      prod *= pe;
    }
    REQUIRE(prod == t.M);
  }
}

TEST_CASE("trivial congruence of jordan values") {
  CHECK(jordan(3, 5) == 124);
  CHECK(trivial_modulus(3).M == 2);
  CHECK(jordan(4, 7) == 2400);
  CHECK(trivial_modulus(4).M == 240);
  for (unsigned k = 3; k <= 10; ++k) {
    std::vector<CongruenceReport> reports = check_trivial_congruence(k, 300);
    REQUIRE(reports.size() == 300 - (k + 2) + 1);
    for (const CongruenceReport& r : reports) REQUIRE(r.pass);
  }
  CHECK_THROWS_AS(check_trivial_congruence(2, 100), std::invalid_argument);
}

TEST_CASE("non-divisibility witness search") {
  // k=3, M'=4: J_3(3) = 26 = 2 mod 4; primes coprime to 4 come first
  auto w = nondivisibility_witness(3, 4, 2, 100);
  REQUIRE(w.has_value());
  CHECK(*w == 3);
  // k odd, M'=3: small prime witness exists
  auto w3 = nondivisibility_witness(3, 3, 2, 100);
  REQUIRE(w3.has_value());
  CHECK(mpz_fdiv_ui(jordan(3, *w3).get_mpz_t(), 3) != 0);
  // a budget too small to reach any witness reports none
  auto none = nondivisibility_witness(3, 4, 4, 0);  // only n = 4: J_3(4) = 56 = 0 mod 4
  CHECK_FALSE(none.has_value());
}

TEST_CASE("theorem3 worked instances") {
  // n=5: phi=4, modulus 2, dividend 2*Phi'''(1) = 60
  std::vector<CongruenceReport> r5 = check_theorem3_for(5, 2);
  REQUIRE(r5.size() == 3);  // thm3.i, thm3.i4 (4 | phi), thm3.ii k=2
  CHECK(r5[0].claim_id == "thm3.i");
  CHECK(r5[0].dividend == 60);
  CHECK(r5[0].modulus == 2);
  CHECK(r5[0].pass);
  CHECK(r5[1].claim_id == "thm3.i4");
  CHECK(r5[1].dividend == 30);
  CHECK(r5[1].pass);
  // k=2: phi(5)-4 = 0 and Phi^(5)(1) = 0: passes by the zero convention
  CHECK(r5[2].claim_id == "thm3.ii");
  CHECK(r5[2].dividend == 0);
  CHECK(r5[2].modulus == 0);
  CHECK(r5[2].pass);

  // n=15: phi=8, 4 | phi, Phi'''(1) divisible by 6
  std::vector<CongruenceReport> r15 = check_theorem3_for(15, 2);
  CHECK(r15[1].claim_id == "thm3.i4");
  CHECK(r15[1].modulus == 6);
  CHECK(r15[1].dividend == deriv_at_one(15, 3));
  CHECK(r15[1].pass);
}

TEST_CASE("theorem3 sweeps clean") {
  std::vector<CongruenceReport> reports = check_theorem3(2, 400, 10);
  for (const CongruenceReport& r : reports) REQUIRE(r.pass);
}

TEST_CASE("theorem3 agrees with the self-reciprocal code path") {
  for (unsigned long n = 3; n <= 120; ++n) {
    std::vector<CongruenceReport> a = check_theorem3_for(n, 6);
    std::vector<CongruenceReport> b = check_theorem3_via_selfrecip(n, 6);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].claim_id == b[i].claim_id);
      REQUIRE(a[i].params.at("k") == b[i].params.at("k"));
      REQUIRE(a[i].dividend == b[i].dividend);
      REQUIRE(a[i].modulus == b[i].modulus);
      REQUIRE(a[i].pass == b[i].pass);
    }
  }
}

TEST_CASE("report json lines format") {
  std::vector<CongruenceReport> reports;
  reports.push_back(make_report("thm3.ii", {{"n", 7}, {"k", 2}}, Int(0), 2));
  reports.push_back(make_report("thm3.i", {{"n", 5}, {"k", 1}}, Int(60), 2));
  std::ostringstream out;
  emit_report(reports, ReportFormat::json_lines, out);
  CHECK(out.str() ==
        "{\"claim_id\":\"thm3.i\",\"params\":{\"k\":1,\"n\":5},\"dividend\":\"60\","
        "\"modulus\":2,\"verdict\":\"pass\"}\n"
        "{\"claim_id\":\"thm3.ii\",\"params\":{\"k\":2,\"n\":7},\"dividend\":\"0\","
        "\"modulus\":2,\"verdict\":\"pass\"}\n");
}

TEST_CASE("report csv format and ordering") {
  std::vector<CongruenceReport> reports;
  reports.push_back(make_report("prop3.trivial", {{"k", 3}, {"n", 9}}, Int(702), 2));
  reports.push_back(make_report("prop3.trivial", {{"k", 3}, {"n", 5}}, Int(124), 2));
  reports.push_back(make_report("prop3.witness", {{"k", 3}, {"n", 3}}, Int(26), 4, "J_3(3) mod 4 = 2"));
  std::ostringstream out;
  emit_report(reports, ReportFormat::csv, out);
  CHECK(out.str() ==
        "claim_id,n,k,dividend,modulus,verdict,witness\n"
        "prop3.trivial,5,3,124,2,pass,\n"
        "prop3.trivial,9,3,702,2,pass,\n"
        "prop3.witness,3,3,26,4,fail,J_3(3) mod 4 = 2\n");
}

TEST_CASE("report edge cases") {
  std::ostringstream empty;
  emit_report({}, ReportFormat::json_lines, empty);
  CHECK(empty.str().empty());
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
  CHECK(parse_report_format("json-lines") == ReportFormat::json_lines);
  // big dividends stay exact decimal strings
  std::vector<CongruenceReport> reports;
  reports.push_back(make_report("prop3.trivial", {{"k", 20}, {"n", 999}}, jordan(20, 999), 13200));
  std::ostringstream out;
  emit_report(reports, ReportFormat::json_lines, out);
  CHECK(out.str().find("\"dividend\":\"" + jordan(20, 999).get_str() + "\"") != std::string::npos);
}
