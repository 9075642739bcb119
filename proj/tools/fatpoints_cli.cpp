/**
 * Command-line front end. Subcommands:
 *   exact       check one configuration
 *   sweep       run a degree-range case list
 *   exceptions  scan a published exception region and compare tables
 *   reduce      trace the reduction of a window case to its case list
 *   audit       run the exact arithmetic verifiers
 *   verify      replay a certificate file
 *
 * Exit codes: 0 clean (known exceptions count as clean), 1 unexpected
 * special case or failed verification, 2 usage or runtime error.
 */

#include "fatpoints/fatpoints.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

namespace {

using namespace fatpoints;

struct CommonOpts {
  uint32_t prime = kDefaultPrime;
  std::string seed_text;
  int retries = 3;
  std::string oracle = "auto";
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_jobs) {
  cmd->add_option("--prime", o.prime, "rank prime, 2 <= p < 2^15 (default 31991)");
  cmd->add_option("--seed", o.seed_text, "base seed, decimal or 0x-hex (default the published constant)");
  cmd->add_option("--retries", o.retries, "extra attempts after a short rank (default 3)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--oracle", o.oracle, "exact-rank oracle: auto|force|off (default auto)")
      ->check(CLI::IsMember({"auto", "force", "off"}));
  if (with_jobs) cmd->add_option("--jobs", o.jobs, "worker threads (default 1)")->check(CLI::PositiveNumber);
}

CheckPolicy make_policy(const CommonOpts& o) {
  CheckPolicy p;
  p.field = PrimeField(o.prime);
  if (!o.seed_text.empty()) p.base_seed = std::stoull(o.seed_text, nullptr, 0);
  p.retries = o.retries;
  p.oracle = o.oracle == "force" ? OracleMode::forced : o.oracle == "off" ? OracleMode::off : OracleMode::automatic;
  return p;
}

// Quadruple view of a config made of multiplicities <= 5 only.
bool as_quadruple(const FatPointConfig& c, SweepCase& sc) {
  for (auto& [m, cnt] : c.spec)
    if (m > 5) return false;
  sc = SweepCase{c.d, 0, 0, c.count_of(5), c.count_of(4), c.count_of(3), c.count_of(2)};
  return sc.config() == c;  // rejects 1-points hiding in the config
}

bool is_known_exception(const FatPointConfig& c) {
  if (c.d != 9 && c.d != 10) return false;
  SweepCase sc;
  if (!as_quadruple(c, sc)) return false;
  for (const auto& row : known_exceptions(c.d))
    if (row.w == sc.w && row.x == sc.x && row.y == sc.y && row.z == sc.z) return true;
  return false;
}

void print_outcome(const CaseOutcome& o) {
  const auto& v = o.verdict;
  std::cout << "config: " << o.config.to_string() << "\n";
  std::cout << "length " << v.length << ", series " << v.series << ", expected rank " << v.expected_rank << "\n";
  std::cout << "rank " << v.rank << " after " << o.attempt_ranks.size() << " attempt(s)";
  if (o.oracle_run) std::cout << ", exact rank " << o.oracle_rank;
  std::cout << "\n";
  std::cout << (v.special ? "SPECIAL" : "good postulation") << ": dim " << v.dim << ", vdim " << v.vdim << ", edim "
            << v.edim << "\n";
  if (!o.events.empty()) {
    std::cout << "events:";
    for (const auto& e : o.events) std::cout << ' ' << e;
    std::cout << "\n";
  }
  std::cout << "duration " << o.duration_ms << " ms\n";
}

int cmd_exact(const std::string& config_text, const CommonOpts& opts, const std::string& out_path,
              const std::string& dump_path) {
  const CheckPolicy policy = make_policy(opts);
  const FatPointConfig config = FatPointConfig::parse(config_text);
  const CaseOutcome o = check_exact(config, policy);
  print_outcome(o);

  if (!dump_path.empty()) {
    auto ev = build_matrix(config, policy.field, o.attempt_seeds.front());
    std::ofstream out(dump_path);
    if (!out) throw std::runtime_error("cannot open " + dump_path);
    dump_matrix(ev.matrix, policy.field.p(), out);
    std::cout << "matrix of attempt 0 written to " << dump_path << "\n";
  }
  if (!out_path.empty()) CertificateWriter(out_path).append(make_record(o, policy));

  if (!o.verdict.special) return 0;
  if (is_known_exception(config)) {
    std::cout << "this is a known exception in degree " << config.d << "\n";
    return 0;
  }
  return 1;
}

int cmd_sweep(const std::string& range, int d, const CommonOpts& opts, const std::string& out_path) {
  std::vector<SweepCase> cases;
  if (range == "11-21")
    cases = enumerate_11_21(d);
  else if (range == "22-37")
    cases = enumerate_22_37(d);
  else if (range == "38-52") {
    if (d > 52) throw CLI::ValidationError("--d", "sweep range 38-52 ends at 52");
    cases = enumerate_38_52(d);
  } else
    throw CLI::ValidationError("--range", "expected 11-21, 22-37 or 38-52");

  const CheckPolicy policy = make_policy(opts);
  std::unique_ptr<CertificateWriter> cert;
  std::size_t resumed = 0;
  if (!out_path.empty()) {
    const auto done = existing_config_keys(out_path);
    if (!done.empty()) {
      std::vector<SweepCase> todo;
      for (const auto& c : cases)
        if (!done.count(c.config().to_string())) todo.push_back(c);
      resumed = cases.size() - todo.size();
      cases = std::move(todo);
    }
    cert = std::make_unique<CertificateWriter>(out_path);
  }

  std::cout << "degree " << d << ", " << cases.size() << " case(s) to run";
  if (resumed) std::cout << " (" << resumed << " already certified)";
  std::cout << "\n";

  std::vector<CaseOutcome> specials;
  std::size_t done_count = 0;
  run_cases(cases, policy, opts.jobs, [&](std::size_t, const SweepCase&, CaseOutcome o) {
    if (cert) cert->append(make_record(o, policy));
    if (o.verdict.special) specials.push_back(o);
    if (++done_count % 200 == 0) std::cerr << "checked " << done_count << "/" << cases.size() << "\n";
  });

  if (specials.empty()) {
    std::cout << "all cases postulate well\n";
    return 0;
  }
  std::cout << specials.size() << " special case(s):\n";
  for (const auto& o : specials)
    std::cout << "  " << o.config.to_string() << " rank " << o.verdict.rank << " expected " << o.verdict.expected_rank
              << "\n";
  return 1;
}

int cmd_exceptions(int d, const CommonOpts& opts, const std::string& out_path, const std::string& csv_path) {
  const CheckPolicy policy = make_policy(opts);
  auto cases = enumerate_exceptions_region(d);

  std::unique_ptr<CertificateWriter> cert;
  std::size_t resumed = 0;
  std::vector<ExceptionRow> rows;
  if (!out_path.empty()) {
    // Resume: recover rows of already-certified specials, then run the rest.
    const auto done = existing_config_keys(out_path);
    if (!done.empty()) {
      for (const auto& r : read_certificates(out_path))
        if (r.verdict.special) {
          CaseOutcome o;
          o.config = FatPointConfig::parse(r.config_text);
          o.verdict = r.verdict;
          rows.push_back(exception_row(o));
        }
      std::vector<SweepCase> todo;
      for (const auto& c : cases)
        if (!done.count(c.config().to_string())) todo.push_back(c);
      resumed = cases.size() - todo.size();
      cases = std::move(todo);
    }
    cert = std::make_unique<CertificateWriter>(out_path);
  }

  std::cout << "degree " << d << ", scanning " << cases.size() << " case(s)";
  if (resumed) std::cout << " (" << resumed << " already certified)";
  std::cout << "\n";

  std::size_t done_count = 0;
  run_cases(cases, policy, opts.jobs, [&](std::size_t, const SweepCase&, CaseOutcome o) {
    if (cert) cert->append(make_record(o, policy));
    if (o.verdict.special) rows.push_back(exception_row(o));
    if (++done_count % 500 == 0) std::cerr << "checked " << done_count << "/" << cases.size() << "\n";
  });
  sort_exception_rows(rows);

  std::cout << "w,x,y,z,min,e,r,d\n";
  for (const auto& r : rows) std::cout << r.csv() << "\n";
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open " + csv_path);
    out << exceptions_csv(rows);
    std::cout << "table written to " << csv_path << "\n";
  }

  if (rows == known_exceptions(d)) {
    std::cout << rows.size() << " exception(s), matching the published table\n";
    return 0;
  }
  std::cout << "MISMATCH against the published table (" << rows.size() << " found, " << known_exceptions(d).size()
            << " published)\n";
  return 1;
}

int cmd_reduce(const std::string& config_text, const CommonOpts& opts, bool rank_check_exit,
               const std::string& out_path) {
  const CheckPolicy policy = make_policy(opts);
  const FatPointConfig config = FatPointConfig::parse(config_text);
  SweepCase start;
  if (!as_quadruple(config, start))
    throw CLI::ValidationError("config", "reduce expects multiplicities 2..5 only");

  RuleRegistry rules(policy);
  const ReductionTrace tr = reduce(start, rules);

  std::cout << "start:  " << tr.start.config().to_string() << "\n";
  for (const auto& s : tr.steps) std::cout << "  " << s.rule_id << " -> " << s.after.config().to_string() << "\n";
  std::cout << "final:  " << tr.final_case.config().to_string() << "\n";
  std::cout << "trace: " << tr.to_string() << "\n";
  if (tr.few_quintuples) {
    std::cout << "exit: too few 5-points for the drain; the arithmetic share bound covers this case\n";
    if (rank_check_exit) {
      const CaseOutcome o = check_exact(tr.final_case.config(), policy);
      print_outcome(o);
      if (!out_path.empty()) CertificateWriter(out_path).append(make_record(o, policy, tr.to_string()));
      return o.verdict.special ? 1 : 0;
    }
  }
  return 0;
}

int cmd_audit() {
  const AuditReport r = run_audit();
  auto line = [](const char* name, bool ok) { std::cout << name << ": " << (ok ? "ok" : "FAILED") << "\n"; };
  line("layer tables", r.layers_ok);
  line("overflow decompositions", r.beta_ok);
  line("descent at thresholds", r.descent_ok);
  line("descent sharpness below thresholds", r.descent_sharp);
  line("5-point share bound", r.five_point_ok);
  line("residual degree bounds", r.residual_ok);
  return r.all() ? 0 : 1;
}

int cmd_verify(const std::string& in_path) {
  const auto records = read_certificates(in_path);
  std::size_t matches = 0, mismatches = 0, unverifiable = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const VerifyResult res = verify_record(records[i]);
    switch (res.status) {
      case VerifyStatus::match:
        ++matches;
        break;
      case VerifyStatus::mismatch:
        ++mismatches;
        std::cout << "record " << i + 1 << " (" << records[i].config_text << "): MISMATCH, " << res.detail << "\n";
        break;
      case VerifyStatus::unverifiable:
        ++unverifiable;
        std::cout << "record " << i + 1 << " (" << records[i].config_text << "): unverifiable, " << res.detail
                  << "\n";
        break;
    }
    if ((i + 1) % 500 == 0) std::cerr << "verified " << i + 1 << "/" << records.size() << "\n";
  }
  std::cout << records.size() << " record(s): " << matches << " match, " << mismatches << " mismatch, "
            << unverifiable << " unverifiable\n";
  return (mismatches == 0 && unverifiable == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"good-postulation checks for unions of fat points in projective 3-space"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string config_text, out_path, dump_path, csv_path, range, in_path;
  int degree = 0;
  bool rank_check_exit = false;

  auto* exact = app.add_subcommand("exact", "check one configuration, e.g. \"d=10 n=3 5^9\"");
  exact->add_option("config", config_text, "configuration text")->required();
  add_common(exact, opts, false);
  exact->add_option("--out", out_path, "append a certificate to this file");
  exact->add_option("--dump-matrix", dump_path, "write the attempt-0 matrix (rows cols p header)");

  auto* sweep = app.add_subcommand("sweep", "run a degree-range case list");
  sweep->add_option("--range", range, "11-21, 22-37 or 38-52")->required();
  sweep->add_option("--d", degree, "degree to sweep")->required();
  add_common(sweep, opts, true);
  sweep->add_option("--out", out_path, "append certificates; existing ones are skipped (resume)");

  auto* exceptions = app.add_subcommand("exceptions", "scan a published exception region");
  exceptions->add_option("--d", degree, "degree, 9 or 10")->required()->check(CLI::IsMember({9, 10}));
  add_common(exceptions, opts, true);
  exceptions->add_option("--out", out_path, "append certificates; existing ones are skipped (resume)");
  exceptions->add_option("--csv", csv_path, "also write the exception table as CSV");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a window case to its degree range's case list");
  reduce_cmd->add_option("config", config_text, "configuration text with multiplicities 2..5")->required();
  add_common(reduce_cmd, opts, false);
  reduce_cmd->add_flag("--rank-check-exit", rank_check_exit, "on a few-5-points exit, rank-check the exit case");
  reduce_cmd->add_option("--out", out_path, "append a certificate for the exit check");

  auto* audit = app.add_subcommand("audit", "run the exact arithmetic verifiers");
  (void)audit;

  auto* verify = app.add_subcommand("verify", "replay a certificate file");
  verify->add_option("--in", in_path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (exact->parsed()) return cmd_exact(config_text, opts, out_path, dump_path);
    if (sweep->parsed()) return cmd_sweep(range, degree, opts, out_path);
    if (exceptions->parsed()) return cmd_exceptions(degree, opts, out_path, csv_path);
    if (reduce_cmd->parsed()) return cmd_reduce(config_text, opts, rank_check_exit, out_path);
    if (audit->parsed()) return cmd_audit();
    if (verify->parsed()) return cmd_verify(in_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
