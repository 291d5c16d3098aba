#include "lieqrt/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lieqrt/error.hpp"
#include "lieqrt/experiments.hpp"

namespace lieqrt {

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  int workers = 1;
  double tolerance = 1e-8;
  int trials = 0;
  double epsilon = 0.02;
  int steps = 5;
  double scale = 1.0;
  std::vector<double> m;
  std::string rep = "su2";
  double spin = 5.0;
  int modes = 0;
  std::string alpha = "-2:2:41";
  std::string eta = "0:3:61";
};

void add_global(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--out", o.out, "output file (stdout when absent)");
  cmd->add_option("--format", o.format, "csv or json; inferred from --out")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", o.tolerance, "report-only tolerance")->check(CLI::PositiveNumber);
}

void add_rep(CLI::App* cmd, Options& o, bool so2n_allowed) {
  if (so2n_allowed)
    cmd->add_option("--rep", o.rep, "su2 or so2n")->check(CLI::IsMember({"su2", "so2n"}));
  cmd->add_option("--spin", o.spin, "spin s (multiple of 1/2)");
  if (so2n_allowed) cmd->add_option("--modes", o.modes, "fermionic modes n")->check(CLI::Range(1, 10));
}

std::string resolve_format(const Options& o) {
  std::string inferred;
  const auto dot = o.out.rfind('.');
  if (dot != std::string::npos) {
    const std::string ext = o.out.substr(dot + 1);
    if (ext == "json" || ext == "csv") inferred = ext;
  }
  if (!o.format.empty()) {
    require(inferred.empty() || inferred == o.format, ErrorKind::InvalidInput,
            "--format " + o.format + " conflicts with output file extension");
    return o.format;
  }
  return inferred.empty() ? "csv" : inferred;
}

std::string one_line(const ExperimentReport& rep) {
  std::ostringstream os;
  os << rep.experiment;
  if (rep.config.contains("rep")) os << ' ' << rep.config["rep"].get<std::string>();
  os << ": rows=" << rep.table.rows.size() << " violations=" << rep.violations();
  for (const auto& [k, v] : rep.summary.items())
    if (v.is_number() && k != "violations") os << ' ' << k << '=' << v.dump();
  os.precision(3);
  os << " runtime=" << std::fixed << rep.runtime_seconds << 's';
  return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie-algebraic resource theory experiments", "lieqrt"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run every module invariant suite");
  add_global(verify, o);

  auto* thm1 = app.add_subcommand("thm1", "CFO images of coherent states stay free");
  add_global(thm1, o);
  add_rep(thm1, o, true);
  thm1->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
  thm1->add_option("--scale", o.scale, "CFO coefficient range")->check(CLI::NonNegativeNumber);

  auto* fig2 = app.add_subcommand("fig2", "purity of M|s,m> for random GL(2) elements");
  add_global(fig2, o);
  add_rep(fig2, o, false);
  fig2->add_option("--trials", o.trials, "samples per m")->check(CLI::PositiveNumber);
  fig2->add_option("--m", o.m, "comma-separated weights")->delimiter(',');

  auto* fig3 = app.add_subcommand("fig3", "average purity after a weak-measurement channel");
  add_global(fig3, o);
  add_rep(fig3, o, true);
  fig3->add_option("--trials", o.trials, "number of random states")->check(CLI::PositiveNumber);
  fig3->add_option("--epsilon", o.epsilon, "measurement strength")->check(CLI::NonNegativeNumber);
  fig3->add_option("--steps", o.steps, "measurement steps N")->check(CLI::Range(1, 12));

  auto* scan = app.add_subcommand("scan", "closed form against direct evaluation on a grid");
  add_global(scan, o);
  add_rep(scan, o, false);
  scan->add_option("--m", o.m, "comma-separated weights")->delimiter(',');
  scan->add_option("--alpha", o.alpha, "alpha grid lo:hi:count");
  scan->add_option("--eta", o.eta, "|eta| grid lo:hi:count");

  auto* structures = app.add_subcommand("structures", "Pauli, ring and commutant witnesses");
  add_global(structures, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ExperimentReport report;
  std::string format;
  try {
    format = resolve_format(o);
    CLI::App* cmd = app.get_subcommands().front();
    const bool so2n = o.rep == "so2n";
    const bool spin_given = cmd->get_option_no_throw("--spin") && cmd->count("--spin") > 0;
    const bool modes_given = cmd->get_option_no_throw("--modes") && cmd->count("--modes") > 0;
    require(!(so2n && spin_given), ErrorKind::InvalidInput, "--spin conflicts with --rep so2n");
    require(so2n || !modes_given, ErrorKind::InvalidInput, "--modes needs --rep so2n");

    ExperimentConfig cfg;
    cfg.seed = o.seed;
    cfg.workers = o.workers;
    cfg.tolerance = o.tolerance;
    cfg.epsilon = o.epsilon;
    cfg.steps = o.steps;
    cfg.cfo_scale = o.scale;
    cfg.m_values = o.m;
    auto pick = [&](int dflt_trials, int dflt_modes) {
      cfg.trials = o.trials > 0 ? o.trials : dflt_trials;
      cfg.rep = so2n ? RepSpec::so2n(o.modes > 0 ? o.modes : dflt_modes) : RepSpec::su2(o.spin);
    };

    if (cmd == verify) {
      report = run_verify(o.seed);
    } else if (cmd == thm1) {
      pick(1000, 2);
      report = run_thm1(cfg);
    } else if (cmd == fig2) {
      pick(10000, 0);
      report = run_fig2(cfg);
    } else if (cmd == fig3) {
      pick(150, 8);
      report = run_fig3(cfg);
    } else if (cmd == scan) {
      pick(1, 0);
      cfg.alpha = Grid::parse(o.alpha);
      cfg.eta = Grid::parse(o.eta);
      report = run_closed_form_scan(cfg);
    } else {
      report = run_structures_suite();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::InvalidInput:
      case ErrorKind::DimensionMismatch:
        err << "run with --help for usage\n";
        return kExitUsage;
      case ErrorKind::NumericalFailure:
        return kExitNonFinite;
      default:
        return kExitViolation;
    }
  }

  auto emit = [&](std::ostream& os) {
    if (format == "json")
      write_json(os, report);
    else
      write_csv(os, report);
  };
  if (o.out.empty()) {
    emit(out);
    err << one_line(report) << '\n';
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out << " for writing\n";
      return kExitUsage;
    }
    emit(file);
    out << one_line(report) << '\n';
  }

  if (report.has_nonfinite()) {
    err << "error: non-finite values in report\n";
    return kExitNonFinite;
  }
  if (report.violations() > 0) {
    err << "error: " << report.violations() << " rows violate their invariant\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace lieqrt
