// Structured pass/fail records for congruence checks, with deterministic
// JSON-lines and CSV emitters. Records are sorted by (claim_id, n, k) before
// emission so parallel producers and golden files agree byte for byte.
#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclo/numeric.hpp"

namespace cyclo {

struct CongruenceReport {
  std::string claim_id;
  std::map<std::string, long> params;  // e.g. {"n": 15, "k": 2}
  Int dividend;
  long modulus = 0;
  bool pass = false;
  std::string witness;  // optional note, empty when absent
};

inline CongruenceReport make_report(std::string claim_id, std::map<std::string, long> params,
                                    Int dividend, long modulus, std::string witness = {}) {
  CongruenceReport r;
  r.claim_id = std::move(claim_id);
  r.params = std::move(params);
  r.pass = divides(modulus, dividend);
  r.dividend = std::move(dividend);
  r.modulus = modulus;
  r.witness = std::move(witness);
  return r;
}

inline bool all_pass(const std::vector<CongruenceReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CongruenceReport& r) { return r.pass; });
}

enum class ReportFormat { json_lines, csv };

inline ReportFormat parse_report_format(const std::string& name) {
  if (name == "jsonl" || name == "json-lines") return ReportFormat::json_lines;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format: " + name);
}

namespace detail {

inline long param_or(const CongruenceReport& r, const char* key, long fallback) {
  auto it = r.params.find(key);
  return it == r.params.end() ? fallback : it->second;
}

inline bool report_order(const CongruenceReport& a, const CongruenceReport& b) {
  if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
  long an = param_or(a, "n", -1), bn = param_or(b, "n", -1);
  if (an != bn) return an < bn;
  return param_or(a, "k", -1) < param_or(b, "k", -1);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

// One record per line; dividends are exact decimal strings (they routinely
// exceed 64 bits), field order is fixed.
inline void emit_report(std::vector<CongruenceReport> reports, ReportFormat format,
                        std::ostream& out) {
  std::stable_sort(reports.begin(), reports.end(), detail::report_order);
  if (format == ReportFormat::json_lines) {
    for (const CongruenceReport& r : reports) {
      nlohmann::ordered_json j;
      j["claim_id"] = r.claim_id;
      j["params"] = r.params;  // std::map keeps key order deterministic
      j["dividend"] = r.dividend.get_str();
      j["modulus"] = r.modulus;
      j["verdict"] = r.pass ? "pass" : "fail";
      if (!r.witness.empty()) j["witness"] = r.witness;
      out << j.dump() << '\n';
    }
  } else {
    out << "claim_id,n,k,dividend,modulus,verdict,witness\n";
    for (const CongruenceReport& r : reports) {
      long n = detail::param_or(r, "n", -1), k = detail::param_or(r, "k", -1);
      out << detail::csv_escape(r.claim_id) << ',';
      if (n >= 0) out << n;
      out << ',';
      if (k >= 0) out << k;
      out << ',' << r.dividend.get_str() << ',' << r.modulus << ','
          << (r.pass ? "pass" : "fail") << ',' << detail::csv_escape(r.witness) << '\n';
    }
  }
}

}  // namespace cyclo
