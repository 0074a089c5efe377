// Command-line front end: every identity and congruence family is a
// subcommand that prints a human summary to stdout and, where it produces
// congruence records, can write them as JSON-lines or CSV via --out.
// Exit codes: 0 all checks passed, 1 some verification failed, 2 usage error.
#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclo/congruence.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/lehmer.hpp"
#include "cyclo/parallel.hpp"
#include "cyclo/report.hpp"
#include "cyclo/selfrecip.hpp"
#include "cyclo/symbolic.hpp"

namespace cyclo::cli {

namespace detail {

struct Range {
  unsigned long lo = 0;
  unsigned long hi = 0;
};

// "A..B" (inclusive) or a single integer.
inline Range parse_range(const std::string& s) {
  Range r;
  std::size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoul(s);
    } else {
      r.lo = std::stoul(s.substr(0, dots));
      r.hi = std::stoul(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or A..B, got '" + s + "'");
  }
  if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range '" + s + "'");
  return r;
}

// Deterministic across platforms, unlike std::uniform_int_distribution.
inline long rand_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct ReportSink {
  std::string path;
  std::string format = "jsonl";

  // Returns false (usage error) if the file cannot be written.
  bool write(const std::vector<CongruenceReport>& reports) const {
    if (path.empty()) return true;
    ReportFormat f = parse_report_format(format);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << path << "\n";
      return false;
    }
    emit_report(reports, f, out);
    return true;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--out", path, "write machine-readable reports to this file");
    cmd->add_option("--format", format, "report format: jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
  }
};

inline std::vector<CongruenceReport> flatten(std::vector<std::vector<CongruenceReport>> chunks) {
  std::vector<CongruenceReport> out;
  for (auto& c : chunks) out.insert(out.end(), std::make_move_iterator(c.begin()),
                                    std::make_move_iterator(c.end()));
  return out;
}

inline std::size_t count_failures(const std::vector<CongruenceReport>& reports) {
  std::size_t f = 0;
  for (const CongruenceReport& r : reports)
    if (!r.pass) ++f;
  return f;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args) {
  CLI::App app{"exact verification of cyclotomic-polynomial derivative identities and "
               "totient congruences"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for per-n fan-out")->check(CLI::PositiveNumber);

  // phi <n>
  unsigned long phi_n = 1;
  CLI::App* cmd_phi = app.add_subcommand("phi", "print the n-th cyclotomic polynomial");
  cmd_phi->add_option("n", phi_n, "index n >= 1")->required()->check(CLI::PositiveNumber);

  // derivs <n> [--max-order K]
  unsigned long derivs_n = 1;
  long derivs_maxk = -1;
  CLI::App* cmd_derivs = app.add_subcommand("derivs", "shifted coefficients b_n(h) and derivative values at 1");
  cmd_derivs->add_option("n", derivs_n, "index n >= 1")->required()->check(CLI::PositiveNumber);
  cmd_derivs->add_option("--max-order", derivs_maxk, "highest derivative order (default phi(n))");

  // verify ...
  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification family");
  cmd_verify->require_subcommand(1);

  std::string t3_range = "2..2000";
  unsigned t3_kmax = 10;
  detail::ReportSink t3_sink;
  CLI::App* cmd_t3 = cmd_verify->add_subcommand("theorem3", "odd-derivative congruences of Phi_n at 1");
  cmd_t3->add_option("--n", t3_range, "range of n as A..B")->required();
  cmd_t3->add_option("--k-max", t3_kmax, "highest k for order-(2k+1) derivatives");
  t3_sink.attach(cmd_t3);

  std::string tr_range = "3..20";
  unsigned long tr_nmax = 1000;
  detail::ReportSink tr_sink;
  CLI::App* cmd_tr = cmd_verify->add_subcommand("trivial", "J_k(n) = 0 mod M(k) for n >= k+2");
  cmd_tr->add_option("--k", tr_range, "range of k as A..B (k >= 3)")->required();
  cmd_tr->add_option("--n-max", tr_nmax, "largest n");
  tr_sink.attach(cmd_tr);

  std::string pos_range = "2..1000";
  CLI::App* cmd_pos = cmd_verify->add_subcommand("positivity", "b_n(h) > 0 for 1 <= h <= phi(n)");
  cmd_pos->add_option("--n", pos_range, "range of n as A..B")->required();

  unsigned long sc_pmax = 100;
  CLI::App* cmd_sc = cmd_verify->add_subcommand("signchange", "Phi'_2p < 0 at 1 - 1/sqrt(p) and > 0 at 1");
  cmd_sc->add_option("--p-max", sc_pmax, "largest odd prime p");

  // symbolic ...
  CLI::App* cmd_sym = app.add_subcommand("symbolic", "ratio-table computations in Q[phi, J2, ...]");
  cmd_sym->require_subcommand(1);

  unsigned table_order = 12;
  std::string table_golden;
  CLI::App* cmd_table = cmd_sym->add_subcommand("table", "print the canonical ratio table");
  cmd_table->add_option("--order", table_order, "table order L")->check(CLI::PositiveNumber);
  cmd_table->add_option("--golden", table_golden, "compare against this golden file");

  unsigned conj_kmax = 15;
  CLI::App* cmd_conj = cmd_sym->add_subcommand("conjecture", "divisibility of R[2k+1] by (phi - 2k)");
  cmd_conj->add_option("--k-max", conj_kmax, "check k = 1..K")->check(CLI::PositiveNumber);

  CLI::App* cmd_cor = cmd_sym->add_subcommand("corollary", "compare R[2..5] with the printed formulas");

  // lehmer
  unsigned long lehmer_nmax = 300;
  CLI::App* cmd_lehmer = app.add_subcommand("lehmer", "Omega-expansion of derivative ratios, h <= 9");
  cmd_lehmer->add_option("--n-max", lehmer_nmax, "largest n");

  // selfrecip
  unsigned long sr_trials = 500;
  std::uint64_t sr_seed = 1;
  detail::ReportSink sr_sink;
  CLI::App* cmd_sr = app.add_subcommand("selfrecip", "randomized self-reciprocal identity and congruence checks");
  cmd_sr->add_option("--trials", sr_trials, "number of random trials");
  cmd_sr->add_option("--seed", sr_seed, "RNG seed");
  sr_sink.attach(cmd_sr);

  // table1
  CLI::App* cmd_table1 = app.add_subcommand("table1", "print the trivial-congruence modulus table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (cmd_phi->parsed()) {
      std::cout << "Phi_" << phi_n << "(x) = " << cyclotomic_poly(phi_n).str() << "\n";
      return 0;
    }

    if (cmd_derivs->parsed()) {
      CycloData d = cyclo_data(derivs_n);
      unsigned long kmax = derivs_maxk < 0 ? d.degree : static_cast<unsigned long>(derivs_maxk);
      std::cout << "n=" << derivs_n << " phi=" << d.degree << "\n";
      std::cout << "b =";
      for (unsigned long h = 0; h <= d.degree; ++h) std::cout << (h ? "," : " ") << d.b[h].get_str();
      std::cout << "\n";
      for (unsigned long k = 0; k <= kmax; ++k) {
        Int v = k <= d.degree ? Int(factorial(k) * d.b[k]) : Int(0);
        std::cout << "deriv(" << k << ") = " << v.get_str() << "\n";
      }
      return 0;
    }

    if (cmd_t3->parsed()) {
      detail::Range r = detail::parse_range(t3_range);
      auto reports = detail::flatten(map_range(
          r.lo, r.hi, jobs, [&](unsigned long n) { return check_theorem3_for(n, t3_kmax); }));
      std::size_t fails = detail::count_failures(reports);
      std::cout << "theorem3 n=" << r.lo << ".." << r.hi << " k_max=" << t3_kmax << ": "
                << reports.size() << " checks, " << fails << " failures\n";
      if (!t3_sink.write(reports)) return 2;
      return fails == 0 ? 0 : 1;
    }

    if (cmd_tr->parsed()) {
      detail::Range r = detail::parse_range(tr_range);
      if (r.lo < 3) throw CLI::ValidationError("--k", "k must be >= 3");
      auto reports = detail::flatten(map_range(
          r.lo, r.hi, jobs, [&](unsigned long k) {
            return check_trivial_congruence(static_cast<unsigned>(k), tr_nmax);
          }));
      std::size_t fails = detail::count_failures(reports);
      std::cout << "trivial k=" << r.lo << ".." << r.hi << " n_max=" << tr_nmax << ": "
                << reports.size() << " checks, " << fails << " failures\n";
      if (!tr_sink.write(reports)) return 2;
      return fails == 0 ? 0 : 1;
    }

    if (cmd_pos->parsed()) {
      detail::Range r = detail::parse_range(pos_range);
      std::vector<char> ok = map_range(r.lo, r.hi, jobs, [](unsigned long n) {
        return static_cast<char>(check_positivity(n));
      });
      std::size_t fails = 0;
      for (std::size_t i = 0; i < ok.size(); ++i) {
        if (!ok[i]) {
          ++fails;
          std::cout << "positivity failed at n=" << r.lo + i << "\n";
        }
      }
      std::cout << "positivity n=" << r.lo << ".." << r.hi << ": " << ok.size()
                << " checked, " << fails << " failures\n";
      return fails == 0 ? 0 : 1;
    }

    if (cmd_sc->parsed()) {
      std::size_t checked = 0, fails = 0;
      for (unsigned long p = 3; p <= sc_pmax; p += 2) {
        if (!is_prime(p)) continue;
        ++checked;
        SignChange s = sign_change_2p(p);
        bool ok = certify_sign_change(p);
        if (!ok) ++fails;
        std::cout << "p=" << p << " left=" << s.at_left << " at_one=" << s.at_one.get_str()
                  << (ok ? " certified" : " FAILED") << "\n";
      }
      std::cout << "signchange p<=" << sc_pmax << ": " << checked << " primes, " << fails
                << " failures\n";
      return fails == 0 ? 0 : 1;
    }

    if (cmd_table->parsed()) {
      RatioTable rt = ratio_table(table_order);
      std::string text = serialize(rt);
      std::cout << text;
      if (!table_golden.empty()) {
        std::ifstream in(table_golden, std::ios::binary);
        if (!in) {
          std::cerr << "cannot open golden file: " << table_golden << "\n";
          return 2;
        }
        std::ostringstream want;
        want << in.rdbuf();
        if (want.str() != text) {
          std::cerr << "table differs from golden file " << table_golden << "\n";
          return 1;
        }
        std::cerr << "table matches golden file\n";
      }
      return 0;
    }

    if (cmd_conj->parsed()) {
      RatioTable rt = ratio_table(2 * conj_kmax + 1);
      JPoly phi = JPoly::phi();
      std::size_t fails = 0;
      for (unsigned k = 1; k <= conj_kmax; ++k) {
        ConjectureResult c = conjecture_check(rt, k);
        bool rebuilt = c.holds &&
                       c.quotient * (phi - JPoly::constant(Rat(2 * static_cast<long>(k)))) ==
                           rt.R[2 * k + 1];
        if (!(c.holds && rebuilt)) ++fails;
        std::cout << "conjecture k=" << k << ": " << (c.holds && rebuilt ? "pass" : "FAIL")
                  << "\n";
      }
      return fails == 0 ? 0 : 1;
    }

    if (cmd_cor->parsed()) {
      RatioTable rt = ratio_table(5);
      bool ok = corollary_fixtures(rt);
      std::cout << "corollary fixtures: " << (ok ? "pass" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }

    if (cmd_lehmer->parsed()) {
      std::size_t checked = 0, fails = 0;
      auto rows = map_range(2, lehmer_nmax, jobs, [](unsigned long n) {
        std::vector<LehmerNormalization> row;
        for (unsigned h = 0; h <= 9; ++h) row.push_back(lehmer_check(n, h).matched);
        return row;
      });
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (unsigned h = 0; h <= 9; ++h) {
          ++checked;
          if (rows[i][h] != LehmerNormalization::derivative_ratio) {
            ++fails;
            std::cout << "lehmer mismatch at n=" << 2 + i << " h=" << h << ": "
                      << to_string(rows[i][h]) << "\n";
          }
        }
      std::cout << "lehmer n<=" << lehmer_nmax << " h<=9: " << checked
                << " checks, all derivative_ratio: " << (fails == 0 ? "yes" : "NO") << "\n";
      return fails == 0 ? 0 : 1;
    }

    if (cmd_sr->parsed()) {
      std::mt19937_64 rng(sr_seed);
      std::size_t id_fails = 0;
      std::vector<CongruenceReport> reports;
      for (unsigned long trial = 0; trial < sr_trials; ++trial) {
        // random rational t-sequence, q <= 12, entries in [-50, 50]
        TSeq ts;
        std::size_t q = static_cast<std::size_t>(detail::rand_in(rng, 1, 12));
        for (std::size_t j = 0; j < q; ++j) {
          long num = detail::rand_in(rng, -50, 50);
          long den = trial % 2 == 0 ? 1 : detail::rand_in(rng, 1, 8);
          ts.t.push_back(make_rat(num, den));
        }
        if (b_from_a(expand_linear_product(ts), q) != expand_quadratic_product(ts)) ++id_fails;

        // random self-reciprocal integer polynomial of degree 2q
        std::vector<Int> c(2 * q + 1);
        for (std::size_t i = 0; i <= q; ++i) {
          long v = detail::rand_in(rng, -20, 20);
          if (i == 0 && v == 0) v = 1;
          c[i] = v;
          c[2 * q - i] = v;
        }
        IntPoly f(std::move(c));
        if (!check_recip_identity(f)) ++id_fails;
        for (CongruenceReport& r : check_recip_congruences(f)) {
          r.params["trial"] = static_cast<long>(trial);
          reports.push_back(std::move(r));
        }
      }
      std::size_t cong_fails = detail::count_failures(reports);
      std::cout << "selfrecip trials=" << sr_trials << " seed=" << sr_seed
                << ": identity failures=" << id_fails << ", congruence failures=" << cong_fails
                << "\n";
      if (!sr_sink.write(reports)) return 2;
      return id_fails == 0 && cong_fails == 0 ? 0 : 1;
    }

    if (cmd_table1->parsed()) {
      std::cout << "odd " << trivial_modulus(3).M << "\n";
      for (unsigned k = 2; k <= 20; k += 2)
        std::cout << k << " " << trivial_modulus(k).M << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace cyclo::cli
