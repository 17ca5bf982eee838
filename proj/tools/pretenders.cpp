// pretenders: command-line front end for the primary pretender library.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage or I/O error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pretenders/cascade.hpp"
#include "pretenders/census.hpp"
#include "pretenders/golden.hpp"
#include "pretenders/period.hpp"
#include "pretenders/pretender.hpp"
#include "pretenders/serialize.hpp"
#include "pretenders/tables.hpp"

using namespace pretenders;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

int cmd_density(u32 q) {
  const Characterization* e = default_cascade().find(q);
  if (!e) {
    std::cerr << q << " is not a primary pretender\n";
    return kUsage;
  }
  std::cout << "q=" << q << " roots=" << roots_label(e->k, e->m)
            << " density=" << e->density.to_string() << " rarity=" << e->rarity().to_string()
            << " (" << e->rarity().render_decimal(2) << ")\n";
  return kOk;
}

int cmd_period(bool digits, std::size_t samples, u64 seed, bool minimality) {
  const Cascade& cascade = default_cascade();
  const PeriodConstant pc = period_constant();
  int status = kOk;
  if (digits) std::cout << pc.decimal.size() << '\n';
  else std::cout << pc.decimal << '\n';

  if (samples > 0) {
    const PeriodicityReport r = periodicity_check(cascade, samples, seed);
    std::cout << "periodicity: " << r.checked << " samples, "
              << (r.ok() ? "all equal" : "counterexample " + r.counterexample->to_string()) << '\n';
    if (!r.ok()) status = kMismatch;
  }
  if (minimality) {
    const MinimalityReport r = minimality_witnesses(cascade);
    for (const MinimalityWitness& w : r.witnesses)
      std::cout << "p=" << w.p << " q_b=" << w.q_base << " q_(b+N/p)=" << w.q_shifted
                << " b=" << w.base.to_string() << '\n';
    for (u32 p : r.failed_primes) std::cout << "p=" << p << " NO WITNESS\n";
    if (!r.ok()) status = kMismatch;
  }
  return status;
}

int cmd_table(const std::string& which, const std::string& format, u64 max_b) {
  const Cascade& cascade = default_cascade();
  const TableId id = parse_table_id(which);
  if (format != "txt" && format != "csv") throw std::invalid_argument("table format must be txt or csv");
  if (id == TableId::t3) {
    const FirstBaseScan scan = first_bases(cascade, max_b);
    const CensusReport report = census(cascade, &scan);
    if (format == "csv") {
      std::cout << "q,k,m,first_base,rarity\n";
      for (const CensusRow& r : report.rows)
        std::cout << r.q << ',' << r.k << ',' << r.m << ','
                  << (r.first_base ? std::to_string(*r.first_base) : "") << ',' << r.rarity_display << '\n';
    } else {
      std::cout << render_cascade(cascade, Format::txt);
    }
    return kOk;
  }
  const Grid grid = id == TableId::mod36 ? gen_mod36(cascade)
                    : id == TableId::t1  ? gen_table1(cascade)
                                         : gen_table2(cascade);
  std::cout << (format == "csv" ? render_grid_csv(id, grid) : render_grid_txt(id, grid));
  return kOk;
}

void report_line(bool ok, const std::string& what, const std::string& detail = "") {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what;
  if (!detail.empty()) std::cout << " - " << detail;
  std::cout << '\n';
}

int cmd_verify(const std::string& golden_dir, u64 oracle_limit, u64 max_b) {
  using clock = std::chrono::steady_clock;
  bool all_ok = true;
  auto note = [&](bool ok, const std::string& what, const std::string& detail = "") {
    all_ok = all_ok && ok;
    report_line(ok, what, detail);
  };
  auto print_mismatches = [](const RegressionReport& r) {
    for (std::size_t i = 0; i < r.mismatches.size() && i < 20; ++i) std::cout << "         " << r.mismatches[i] << '\n';
  };

  // Golden assets are read up front so missing files surface as exit 2.
  const GoldenTable t1 = load_golden(golden_dir, TableId::t1);
  const GoldenTable t2 = load_golden(golden_dir, TableId::t2);
  const GoldenTable t3 = load_golden(golden_dir, TableId::t3);
  const GoldenTable m36 = load_golden(golden_dir, TableId::mod36);
  const std::string period_digits = load_golden_period(golden_dir);

  const auto t0 = clock::now();
  const Cascade& cascade = default_cascade();
  note(cascade.size() == 132, "cascade entries", std::to_string(cascade.size()));
  note(family_check(cascade).ok(), "family construction");

  for (auto [id, grid, golden] : {std::tuple{TableId::mod36, gen_mod36(cascade), &m36},
                                  std::tuple{TableId::t1, gen_table1(cascade), &t1},
                                  std::tuple{TableId::t2, gen_table2(cascade), &t2}}) {
    const RegressionReport r = regression(id, grid, *golden);
    note(r.ok(), std::string("table ") + std::string(to_string(id)),
         std::to_string(r.compared) + " cells, " + std::to_string(r.mismatches.size()) + " mismatches");
    print_mismatches(r);
    if (id == TableId::t2)
      for (const CellMismatch& m : r.cells) {
        const Adjudication a = adjudicate_t2(m);
        std::cout << "         b=" << a.base << ": oracle " << a.oracle
                  << (a.derived_agrees ? " agrees with derived" : " DISAGREES with derived")
                  << (a.reason.empty() ? "" : "; " + a.reason) << '\n';
      }
  }

  const FirstBaseScan scan = first_bases(cascade, max_b);
  const CensusReport report = census(cascade, &scan);
  const RegressionReport r3 = regression(report, t3);
  note(r3.ok() && scan.complete(), "table t3",
       std::to_string(t3.rows.size()) + " rows, " + std::to_string(r3.mismatches.size()) + " mismatches, " +
           std::to_string(scan.missing.size()) + " first bases unseen below " + std::to_string(max_b));
  print_mismatches(r3);

  const PeriodConstant pc = period_constant();
  note(pc.decimal == period_digits, "period digits", std::to_string(pc.decimal.size()) + " digits");
  const LcmReport lcm_report = verify_lcm(cascade);
  note(lcm_report.equal(), "lcm of moduli equals period");

  u64 oracle_mismatch = 0;
  for (u64 b = 0; b <= oracle_limit; ++b)
    if (cascade.classify(b) != primary_pretender_oracle(b)) ++oracle_mismatch;
  note(oracle_mismatch == 0, "classify == oracle on [0, " + std::to_string(oracle_limit) + "]",
       std::to_string(oracle_mismatch) + " mismatches");

  const double secs = std::chrono::duration<double>(clock::now() - t0).count();
  std::cout << (all_ok ? "verify: all checks passed" : "verify: MISMATCHES FOUND") << " (" << secs << " s)\n";
  return all_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primary pretenders: least composite q with b^q == b (mod q)"};
  app.require_subcommand(1);

  std::string base_text;
  auto* classify = app.add_subcommand("classify", "q_b from the cascade (b decimal, any size)");
  classify->add_option("b", base_text, "base")->required();

  auto* oracle = app.add_subcommand("oracle", "q_b by brute force over composites");
  oracle->add_option("b", base_text, "base")->required();

  std::string format = "txt";
  auto* cascade_cmd = app.add_subcommand("cascade", "the 132-entry decision list");
  cascade_cmd->add_option("--format", format, "csv, json or txt")->check(CLI::IsMember({"csv", "json", "txt"}));

  u32 q = 0;
  auto* density = app.add_subcommand("density", "exact density and rarity of a primary pretender");
  density->add_option("q", q, "primary pretender")->required();

  u64 max_b = kFirstBaseScanLimit;
  unsigned threads = 0;
  auto* firstbases = app.add_subcommand("firstbases", "first bases as CSV");
  firstbases->add_option("--max", max_b, "scan bases [0, B)");
  firstbases->add_option("--threads", threads, "worker threads (0 = all cores)");

  bool digits = false;
  bool minimality = false;
  std::size_t samples = 0;
  u64 seed = 561;
  auto* period = app.add_subcommand("period", "the period N = p!_59 * p!_9");
  period->add_flag("--digits", digits, "print the digit count instead of the digits");
  period->add_option("--samples", samples, "check classify(b) == classify(b + N) on N samples");
  period->add_option("--seed", seed, "sampling seed");
  period->add_flag("--minimality", minimality, "print a minimality witness per prime divisor");

  std::string which;
  std::string table_format = "txt";
  auto* table = app.add_subcommand("table", "regenerate a table");
  table->add_option("--which", which, "mod36, t1, t2 or t3")->required()->check(CLI::IsMember({"mod36", "t1", "t2", "t3"}));
  table->add_option("--format", table_format, "txt or csv")->check(CLI::IsMember({"txt", "csv"}));
  table->add_option("--max", max_b, "first-base scan bound for t3");

  std::string golden = PRETENDERS_DEFAULT_GOLDEN_DIR;
  u64 oracle_limit = 100'000;
  auto* verify = app.add_subcommand("verify", "regress every table against golden data");
  verify->add_option("--golden", golden, "golden asset directory");
  verify->add_option("--oracle-limit", oracle_limit, "compare classify and oracle on [0, N]");
  verify->add_option("--max", max_b, "first-base scan bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) {
      std::cout << default_cascade().classify(Natural::parse(base_text)) << '\n';
    } else if (*oracle) {
      std::cout << primary_pretender_oracle(Natural::parse(base_text)) << '\n';
    } else if (*cascade_cmd) {
      std::cout << render_cascade(default_cascade(), parse_format(format));
    } else if (*density) {
      return cmd_density(q);
    } else if (*firstbases) {
      const Cascade& c = default_cascade();
      const FirstBaseScan scan = first_bases(c, max_b, threads);
      std::cout << render_census_csv(census(c, &scan));
      if (!scan.complete()) {
        std::cerr << scan.missing.size() << " entries have no first base below " << max_b << '\n';
        return kMismatch;
      }
    } else if (*period) {
      return cmd_period(digits, samples, seed, minimality);
    } else if (*table) {
      return cmd_table(which, table_format, max_b);
    } else if (*verify) {
      return cmd_verify(golden, oracle_limit, max_b);
    }
  } catch (const GoldenError& e) {
    std::cerr << "golden data error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kOk;
}
