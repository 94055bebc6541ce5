#include "growdom/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "growdom/classify.hpp"
#include "growdom/config.hpp"
#include "growdom/eigenpair.hpp"
#include "growdom/error.hpp"
#include "growdom/io.hpp"
#include "growdom/solver.hpp"
#include "growdom/steady.hpp"
#include "growdom/verify.hpp"

namespace growdom::cli {

namespace {

namespace fs = std::filesystem;

struct CommonFlags {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::string> dt;
  std::optional<double> t_end;
  std::optional<std::size_t> grid;
  bool quiet = false;
};

// A check ran to completion and reported FAIL.
struct VerificationFailed {
  std::string summary;
};

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("config", flags.config, "Scenario file")->required();
  sub->add_option("--out", flags.out, "Output directory (overrides [output] directory)");
  sub->add_option("--dt", flags.dt, "Time step, or auto");
  sub->add_option("--t-end", flags.t_end, "Final time");
  sub->add_option("--grid", flags.grid, "Interior points per axis");
  sub->add_flag("--quiet", flags.quiet, "Suppress the summary line");
}

ScenarioConfig load_with_overrides(const CommonFlags& flags) {
  ScenarioConfig cfg = load_config(flags.config);
  if (flags.out) cfg.directory = *flags.out;
  if (flags.dt) {
    if (*flags.dt == "auto") {
      cfg.dt.reset();
    } else {
      double x = 0.0;
      try {
        x = std::stod(*flags.dt);
      } catch (const std::exception&) {
        throw DomainError("--dt expects a number or auto");
      }
      if (!(x > 0.0)) throw DomainError("--dt must be positive");
      cfg.dt = x;
    }
  }
  if (flags.t_end) {
    if (!(*flags.t_end > 0.0)) throw DomainError("--t-end must be positive");
    cfg.t_end = *flags.t_end;
  }
  if (flags.grid) {
    if (*flags.grid < Grid::kMinPoints) throw DomainError("--grid must be at least 3");
    std::fill(cfg.points.begin(), cfg.points.end(), *flags.grid);
  }
  // Re-validate the overridden values through the model constructors.
  (void)cfg.model();
  return cfg;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("sweep values: cannot parse '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw DomainError("sweep values: cannot parse '" + item + "'");
    }
    values.push_back(x);
  }
  if (values.empty()) throw DomainError("sweep values: empty list");
  return values;
}

std::string cmd_run(const ScenarioConfig& cfg) {
  const ModelParams p = cfg.model();
  const double dt = cfg.resolved_dt();
  IntegrateOptions opts;
  opts.snapshot_every = cfg.snapshot_every;
  opts.scheme = cfg.scheme;
  opts.stop_at_steady = cfg.stop_at_steady;
  const Trajectory traj = integrate(cfg.initial(), cfg.t_end, dt, p, opts);

  OutputSession out(cfg.directory);
  export_trajectory(out, traj, p);
  if (cfg.emit_plot) emit_trajectory_plot(out, p.growth());
  out.commit();

  const RegimeReport rep = classify(p, principal_eigen_analytic(p.grid()).lambda1);
  std::ostringstream os;
  os << regime_name(rep.regime) << " trend: final sup_norm " << fmt("%.6g", sup_norm(traj.final_field()))
     << " at t=" << fmt("%.6g", traj.final_time()) << " (threshold " << fmt("%.4f", rep.threshold)
     << ", " << traj.steps << " steps, dt " << fmt("%.6g", dt) << ")";
  return os.str();
}

std::string cmd_steady(const ScenarioConfig& cfg) {
  const ModelParams p = cfg.model();
  const SteadyResult s = solve_steady(p);
  OutputSession out(cfg.directory);
  export_steady(out, s);
  if (cfg.emit_plot) emit_field_plot(out, "steady.csv", p.growth());
  out.commit();
  return steady_summary(s);
}

std::string cmd_eigen(const ScenarioConfig& cfg) {
  const Grid grid = cfg.grid();
  const EigenPair analytic = principal_eigen_analytic(grid);
  const EigenPair numeric = principal_eigen_numeric(grid);
  OutputSession out(cfg.directory);
  out.write("eigen_analytic.csv", [&](std::ostream& os) { write_field_csv(os, analytic.phi); });
  out.write("eigen_numeric.csv", [&](std::ostream& os) { write_field_csv(os, numeric.phi); });
  out.write("eigen_summary.txt", [&](std::ostream& os) {
    os << "lambda1_analytic = " << fmt("%.17g", analytic.lambda1) << '\n'
       << "lambda1_numeric = " << fmt("%.17g", numeric.lambda1) << '\n'
       << "residual_numeric = " << fmt("%.17g", numeric.residual) << '\n'
       << "iterations = " << numeric.iterations << '\n';
  });
  out.commit();
  return "lambda1 analytic " + fmt("%.10g", analytic.lambda1) + ", numeric " +
         fmt("%.10g", numeric.lambda1) + " (" + std::to_string(numeric.iterations) +
         " iterations, residual " + fmt("%.3g", numeric.residual) + ")";
}

std::string cmd_classify(const ScenarioConfig& cfg) {
  const ModelParams p = cfg.model();
  const double lambda1 = principal_eigen_analytic(p.grid()).lambda1;
  const RegimeReport rep = classify(p, lambda1);
  OutputSession out(cfg.directory);
  out.write("classify.csv", [&](std::ostream& os) {
    os << "r,threshold,regime,margin,critical_harvest,lambda1\n"
       << fmt("%.17g", p.r()) << ',' << fmt("%.17g", rep.threshold) << ','
       << regime_name(rep.regime) << ',' << fmt("%.17g", rep.margin) << ','
       << fmt("%.17g", rep.critical_harvest) << ',' << fmt("%.17g", lambda1) << '\n';
  });
  out.commit();
  return std::string(regime_name(rep.regime)) + ", threshold " + fmt("%.4f", rep.threshold) +
         ", margin " + fmt("%.4f", rep.margin);
}

std::string cmd_sweep(const ScenarioConfig& cfg, const std::string& axis_text,
                      const std::string& values_text) {
  const ModelParams p = cfg.model();
  const SweepAxis axis = parse_axis(axis_text);
  const std::vector<double> values = parse_values(values_text);
  SweepOptions opts;
  opts.attach_steady = true;
  const auto entries = sweep(p, axis, values, opts);
  OutputSession out(cfg.directory);
  out.write("sweep.csv", [&](std::ostream& os) { write_sweep_csv(os, axis, entries); });
  out.commit();

  std::size_t persist = 0;
  std::size_t extinct = 0;
  std::size_t failed = 0;
  std::vector<double> amplitudes;
  for (const SweepEntry& e : entries) {
    if (!e.report) {
      ++failed;
    } else if (e.report->regime == Regime::Persistence) {
      ++persist;
      if (e.max_vstar) amplitudes.push_back(*e.max_vstar);
    } else {
      ++extinct;
    }
  }
  std::ostringstream os;
  os << "sweep " << axis_name(axis) << ": " << persist << " Persistence, " << extinct
     << " Extinction, " << failed << " invalid";
  if (amplitudes.size() > 1) {
    const bool decreasing = std::adjacent_find(amplitudes.begin(), amplitudes.end(),
                                               std::less_equal<>()) == amplitudes.end();
    const bool increasing = std::adjacent_find(amplitudes.begin(), amplitudes.end(),
                                               std::greater_equal<>()) == amplitudes.end();
    if (decreasing) os << "; max v* decreasing along the sweep";
    if (increasing) os << "; max v* increasing along the sweep";
  }
  return os.str();
}

std::string cmd_verify(const ScenarioConfig& cfg, const std::string& check, std::size_t pairs,
                       std::uint64_t seed) {
  const ModelParams p = cfg.model();
  CheckSettings s;
  s.t_end = cfg.t_end;
  s.dt = cfg.resolved_dt();
  s.snapshot_every = cfg.snapshot_every;
  s.scheme = cfg.scheme;
  const Field v0 = cfg.initial();

  std::string text;
  std::vector<ViolationSample> series;
  std::string series_name;
  bool pass = true;
  if (check == "comparison") {
    ComparisonReport rep = check_comparison(0.5 * v0, v0, p, s);
    for (const auto& [low, high] : random_ordered_pairs(p.grid(), pairs, seed, p.K())) {
      const ComparisonReport r = check_comparison(low, high, p, s);
      if (r.max_violation > rep.max_violation) rep = r;
      rep.pass = rep.pass && r.pass;
    }
    std::ostringstream os;
    write_report(os, rep);
    text = os.str();
    series = rep.series;
    series_name = "violation";
    pass = rep.pass;
  } else if (check == "laplacian-sign") {
    const LaplacianSignReport rep = check_laplacian_sign(v0, p, s);
    std::ostringstream os;
    write_report(os, rep);
    text = os.str();
    series = rep.series;
    series_name = "max_laplacian_over_sup";
    pass = rep.pass;
  } else if (check == "sandwich") {
    const SandwichReport rep = sandwich_run(v0, p, s);
    std::ostringstream os;
    write_report(os, rep);
    text = os.str();
    series = rep.spread;
    series_name = "spread";
    pass = rep.pass;
  } else {
    throw DomainError("unknown check '" + check +
                      "' (expected comparison, laplacian-sign or sandwich)");
  }

  OutputSession out(cfg.directory);
  out.write("verify_" + check + ".txt", [&](std::ostream& os) { os << text; });
  out.write("verify_" + check + ".csv",
            [&](std::ostream& os) { write_series_csv(os, series, series_name); });
  out.commit();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!pass) throw VerificationFailed{text};
  return text;
}

std::string cmd_plot(const ScenarioConfig& cfg) {
  const GrowthFunction g = cfg.growth();
  OutputSession out(cfg.directory);
  std::vector<std::string> made;
  if (fs::exists(fs::path(cfg.directory) / "snapshots.csv")) {
    made.push_back(emit_trajectory_plot(out, g).filename().string());
  }
  if (fs::exists(fs::path(cfg.directory) / "steady.csv")) {
    made.push_back(emit_field_plot(out, "steady.csv", g).filename().string());
  }
  if (made.empty()) {
    throw IoError("nothing to plot in " + cfg.directory +
                  " (run or steady must be executed first)");
  }
  out.commit();
  std::string summary = "wrote";
  for (const auto& m : made) summary += " " + m;
  return summary;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harvested logistic population on an isotropically growing domain"};
  app.name("growdom");
  app.require_subcommand(1);

  CommonFlags flags;
  std::string axis;
  std::string values;
  std::string check;
  std::size_t pairs = 0;
  std::uint64_t seed = 1;

  auto* run_cmd = app.add_subcommand("run", "Integrate the model and write the trajectory");
  auto* steady_cmd = app.add_subcommand("steady", "Solve for the steady state on the grown domain");
  auto* eigen_cmd = app.add_subcommand("eigen", "Principal Dirichlet eigenpair");
  auto* classify_cmd = app.add_subcommand("classify", "Extinction / persistence classification");
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify along one parameter axis");
  auto* verify_cmd = app.add_subcommand("verify", "Run a comparison-principle check");
  auto* plot_cmd = app.add_subcommand("plot", "Write gnuplot scripts for existing outputs");
  for (auto* sub : {run_cmd, steady_cmd, eigen_cmd, classify_cmd, sweep_cmd, verify_cmd, plot_cmd}) {
    add_common(sub, flags);
  }
  sweep_cmd->add_option("axis", axis, "h, r, m or d")->required();
  sweep_cmd->add_option("values", values, "Comma-separated values")->required();
  verify_cmd->add_option("check", check, "comparison, laplacian-sign or sandwich")->required();
  verify_cmd->add_option("--pairs", pairs, "Extra random ordered pairs for the comparison check");
  verify_cmd->add_option("--seed", seed, "Seed for the random pairs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const ScenarioConfig cfg = load_with_overrides(flags);
    std::string summary;
    if (run_cmd->parsed()) summary = cmd_run(cfg);
    if (steady_cmd->parsed()) summary = cmd_steady(cfg);
    if (eigen_cmd->parsed()) summary = cmd_eigen(cfg);
    if (classify_cmd->parsed()) summary = cmd_classify(cfg);
    if (sweep_cmd->parsed()) summary = cmd_sweep(cfg, axis, values);
    if (verify_cmd->parsed()) summary = cmd_verify(cfg, check, pairs, seed);
    if (plot_cmd->parsed()) summary = cmd_plot(cfg);
    if (!flags.quiet) out << summary << '\n';
    return kSuccess;
  } catch (const VerificationFailed& f) {
    err << f.summary << '\n';
    return kVerificationFail;
  } catch (const NumericalError& e) {
    err << "growdom: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "growdom: error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "growdom: error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace growdom::cli
