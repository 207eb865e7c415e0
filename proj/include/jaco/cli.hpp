#pragma once

// Command-line driver. `run` takes the argument vector without the program
// name and writes to the given streams, so it can be driven in-process.
//
// Exit status: 0 success, 1 a checked claim failed, 2 usage or validation
// error, 3 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jaco/analysis.hpp"
#include "jaco/errors.hpp"
#include "jaco/export.hpp"
#include "jaco/graph.hpp"
#include "jaco/paths.hpp"
#include "jaco/sequences.hpp"
#include "jaco/verify.hpp"

namespace jaco::cli {

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kUsage = 2, kIo = 3 };

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_at_least(const char* flag, Int value, Int minimum) {
  if (value < minimum)
    throw UsageError(std::string(flag) + " must be >= " + std::to_string(minimum) + ", got " +
                     std::to_string(value));
}

struct Options {
  Int a = 1;
  Int n = 0;
  Int a_min = 1;
  Int a_max = 3;
  unsigned jobs = 1;
  std::string format = "dot";
  std::string out_path;
  bool check_closed_form = false;
  bool psi = false;
  bool oracle_psi = false;
};

struct Result {
  std::string text;
  int status = kOk;
};

inline Result build_cmd(const Options& o) {
  require_at_least("--a", o.a, 1);
  require_at_least("--n", o.n, 1);
  return {render(build(Order(o.a), o.n), parse_export_format(o.format))};
}

inline Result seq_cmd(const Options& o) {
  require_at_least("--a", o.a, 1);
  require_at_least("--horizon", o.n, 0);
  const SequenceTable table(Order(o.a), o.n);
  Result r{seq_dump(table)};
  if (o.check_closed_form) {
    const LucasBasis basis = lucas_basis_covering(Order(o.a), o.n);
    bool ok = true;
    for (Int n = 1; n <= o.n && ok; ++n) ok = c_closed(basis, n) == table.c(n);
    r.text += ok ? "CLOSED-FORM OK\n" : "CLOSED-FORM MISMATCH\n";
    if (!ok) r.status = kClaimFailed;
  }
  return r;
}

inline Result zeck_cmd(const Options& o) {
  require_at_least("--a", o.a, 1);
  require_at_least("--value", o.n, 1);
  const ZeckRep rep = zeck_encode(Order(o.a), o.n);
  std::ostringstream out;
  for (std::size_t i = 1; i <= rep.digits.size(); ++i)
    out << (i > 1 ? " " : "") << "alpha[" << i << "]=" << rep.digits[i - 1];
  out << '\n' << "tau=" << tau(rep) << '\n';
  bool ok;
  try {
    ok = zeck_decode(rep) == o.n;
  } catch (const ValidationError&) {
    ok = false;
  }
  out << "value_check=" << (ok ? "OK" : "FAIL") << '\n';
  return {out.str(), ok ? kOk : kClaimFailed};
}

inline Result verify_cmd(const Options& o) {
  require_at_least("--a-min", o.a_min, 1);
  require_at_least("--a-max", o.a_max, o.a_min);
  require_at_least("--n", o.n, 1);
  require_at_least("--jobs", o.jobs, 1);
  VerifyConfig cfg;
  cfg.a_min = o.a_min;
  cfg.a_max = o.a_max;
  cfg.n = o.n;
  cfg.jobs = o.jobs;
  const VerificationReport report = verify_suite(cfg);
  return {to_text(report), report.pass() ? kOk : kClaimFailed};
}

inline Result paths_cmd(const Options& o) {
  require_at_least("--a", o.a, 1);
  require_at_least("--n", o.n, 1);
  const bool with_psi = o.psi || o.oracle_psi;
  if (with_psi && !o.oracle_psi && o.a != 1)
    throw UsageError("psi recursion needs --a 1; use --oracle-psi for other orders");
  const JacoGraph g = build(Order(o.a), o.n);
  const std::vector<Int> dist = distances(g);
  std::vector<PathCount> psi;
  if (with_psi) psi = o.oracle_psi ? psi_oracle(g) : psi_recursive(g);
  std::ostringstream out;
  out << (with_psi ? "i dist psi\n" : "i dist\n");
  for (Int i = 1; i <= g.size(); ++i) {
    out << i << ' ' << dist[i];
    if (with_psi) out << ' ' << psi[i];
    out << '\n';
  }
  return {out.str()};
}

inline Result milestone_cmd(const Options& o) {
  require_at_least("--a", o.a, 1);
  return {"n_star=" + std::to_string(milestone_delta(Order(o.a)).n_star) + "\n"};
}

inline Result conjecture_cmd(const Options& o) {
  require_at_least("--n", o.n, 9);
  require_at_least("--jobs", o.jobs, 1);
  const ConjectureReport report = conjecture_scan(o.n, o.jobs);
  return {to_text(report), report.violations() == 0 ? kOk : kClaimFailed};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Jaco graph constructions, sequences and claim checks", "jaco"};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
  };

  auto* build = app.add_subcommand("build", "Export J_n(a)");
  build->add_option("--a", o.a, "Order a")->required();
  build->add_option("--n", o.n, "Vertex count")->required();
  build->add_option("--format", o.format, "dot | json | csv")
      ->check(CLI::IsMember({"dot", "json", "csv"}));
  add_out(build);

  auto* seq = app.add_subcommand("seq", "Dump the c-series table");
  seq->add_option("--a", o.a, "Order a")->required();
  seq->add_option("--horizon", o.n, "Last index")->required();
  seq->add_flag("--check-closed-form", o.check_closed_form,
                "Compare every row against the Zeckendorf closed form");
  add_out(seq);

  auto* zeck = app.add_subcommand("zeck", "Generalized Zeckendorf digits of a value");
  zeck->add_option("--a", o.a, "Order a")->required();
  zeck->add_option("--value", o.n, "Value to encode")->required();
  add_out(zeck);

  auto* verify = app.add_subcommand("verify", "Run the claim registry");
  verify->add_option("--a-min", o.a_min, "Smallest order")->required();
  verify->add_option("--a-max", o.a_max, "Largest order")->required();
  verify->add_option("--n", o.n, "Largest graph size")->required();
  verify->add_option("--jobs", o.jobs, "Worker threads");
  add_out(verify);

  auto* paths = app.add_subcommand("paths", "Distances and shortest-path counts from v_1");
  paths->add_option("--a", o.a, "Order a")->required();
  paths->add_option("--n", o.n, "Vertex count")->required();
  paths->add_flag("--psi", o.psi, "Add shortest-path counts (a = 1)");
  paths->add_flag("--oracle-psi", o.oracle_psi, "Count by dynamic programming, any a");
  add_out(paths);

  auto* milestone = app.add_subcommand("milestone", "Smallest graph with a lone Jaconian v_{a+1}");
  milestone->add_option("--a", o.a, "Order a")->required();
  add_out(milestone);

  auto* conjecture = app.add_subcommand("conjecture", "Scan non-repetition of d+ against psi");
  conjecture->add_option("--n", o.n, "Largest vertex")->required();
  conjecture->add_option("--jobs", o.jobs, "Worker threads");
  add_out(conjecture);

  std::vector<const char*> argv{"jaco"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  detail::Result result;
  try {
    if (*build) result = detail::build_cmd(o);
    else if (*seq) result = detail::seq_cmd(o);
    else if (*zeck) result = detail::zeck_cmd(o);
    else if (*verify) result = detail::verify_cmd(o);
    else if (*paths) result = detail::paths_cmd(o);
    else if (*milestone) result = detail::milestone_cmd(o);
    else if (*conjecture) result = detail::conjecture_cmd(o);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const TheoremViolation& e) {
    err << "claim violated: " << e.what() << '\n';
    return kClaimFailed;
  }

  if (o.out_path.empty()) {
    out << result.text;
    out.flush();
    if (!out) return kIo;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << " for writing\n";
      return kIo;
    }
    file << result.text;
    file.close();
    if (!file) {
      err << "error: failed writing " << o.out_path << '\n';
      return kIo;
    }
  }
  return result.status;
}

}  // namespace jaco::cli
