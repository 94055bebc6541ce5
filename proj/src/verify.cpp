#include "growdom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <ostream>
#include <random>

#include "growdom/classify.hpp"
#include "growdom/error.hpp"
#include "growdom/steady.hpp"

namespace growdom {

namespace {

double resolve_dt(const CheckSettings& s, const ModelParams& p) {
  return s.dt > 0.0 ? s.dt : stable_dt(p, s.scheme);
}

Trajectory run(const Field& v0, const ModelParams& p, const CheckSettings& s,
               double t_start = 0.0) {
  IntegrateOptions opts;
  opts.snapshot_every = s.snapshot_every;
  opts.scheme = s.scheme;
  opts.t_start = t_start;
  return integrate(v0, s.t_end, resolve_dt(s, p), p, opts);
}

bool same_time(double a, double b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a)); }

const Field* field_at(const Trajectory& traj, double t) {
  for (const Snapshot& s : traj.snapshots) {
    if (same_time(s.t, t)) return &s.field;
  }
  return nullptr;
}

// max_i (a_i - b_i), or 0 if a <= b everywhere.
std::pair<double, std::size_t> excess(const Field& a, const Field& b) {
  double worst = 0.0;
  std::size_t node = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] - b[i] > worst) {
      worst = a[i] - b[i];
      node = i;
    }
  }
  return {worst, node};
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

EnvelopePair make_envelopes(const Field& v0, const EigenPair& e, double margin) {
  if (!(v0.grid() == e.phi.grid())) throw DomainError("envelopes: grid mismatch");
  if (!(margin >= 0.0 && margin < 1.0)) throw DomainError("envelopes: margin must be in [0, 1)");
  double upper = 0.0;
  double lower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v0.size(); ++i) {
    if (v0[i] < 0.0) throw DomainError("envelopes: initial datum must be nonnegative");
    // Interior zeros of v0 rule out any positive delta.
    const double ratio = v0[i] / e.phi[i];
    upper = std::max(upper, ratio);
    lower = std::min(lower, ratio);
  }
  EnvelopePair env;
  env.raw_upper = upper;
  env.raw_lower = lower;
  env.upper_amplitude = (1.0 + margin) * upper;
  env.lower_amplitude = (1.0 - margin) * lower;
  env.eigen = e;
  return env;
}

ComparisonReport check_comparison(const Field& v0_low, const Field& v0_high,
                                  const ModelParams& p, const CheckSettings& s,
                                  double tolerance) {
  if (v0_low.size() != v0_high.size()) throw DomainError("comparison: grid mismatch");
  for (std::size_t i = 0; i < v0_low.size(); ++i) {
    if (v0_low[i] > v0_high[i]) {
      throw DomainError("comparison: initial data not ordered at node " + std::to_string(i));
    }
  }
  auto pending = std::async(std::launch::async, [&] { return run(v0_high, p, s); });
  const Trajectory low = run(v0_low, p, s);
  const Trajectory high = pending.get();

  ComparisonReport rep;
  rep.tolerance = tolerance;
  for (std::size_t k = 0; k < low.snapshots.size(); ++k) {
    const auto [viol, node] = excess(low.snapshots[k].field, high.snapshots[k].field);
    rep.series.push_back({low.snapshots[k].t, viol});
    if (viol > rep.max_violation) {
      rep.max_violation = viol;
      rep.worst_time = low.snapshots[k].t;
      rep.worst_node = node;
    }
  }
  rep.pass = rep.max_violation <= tolerance;
  return rep;
}

LaplacianSignReport check_laplacian_sign(const Field& v0, const ModelParams& p,
                                         const CheckSettings& s, double rel_tol) {
  auto max_lap = [](const Field& v) {
    const Field lap = laplacian(v);
    return *std::max_element(lap.values().begin(), lap.values().end());
  };
  if (max_lap(v0) > rel_tol * sup_norm(v0)) {
    throw DomainError("laplacian sign: precondition Lap v0 <= 0 violated (max " +
                      num(max_lap(v0)) + ")");
  }
  const Trajectory traj = run(v0, p, s);
  const Grid& grid = p.grid();

  LaplacianSignReport rep;
  rep.rel_tol = rel_tol;
  for (const Snapshot& snap : traj.snapshots) {
    const double scale = sup_norm(snap.field);
    const Field lap = laplacian(snap.field);
    double worst = -std::numeric_limits<double>::infinity();
    std::size_t worst_node = 0;
    double boundary = -std::numeric_limits<double>::infinity();
    double interior = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lap.size(); ++i) {
      if (lap[i] > worst) {
        worst = lap[i];
        worst_node = i;
      }
      double& bucket = grid.adjacent_to_boundary(i) ? boundary : interior;
      bucket = std::max(bucket, lap[i]);
    }
    if (scale == 0.0) {
      rep.series.push_back({snap.t, 0.0});
      if (worst > 0.0) rep.pass = false;
      continue;
    }
    const double ratio = worst / scale;
    rep.series.push_back({snap.t, ratio});
    rep.max_ratio_boundary = std::max(rep.max_ratio_boundary, boundary / scale);
    if (interior > -std::numeric_limits<double>::infinity()) {
      rep.max_ratio_interior = std::max(rep.max_ratio_interior, interior / scale);
    }
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.worst_time = snap.t;
      rep.worst_node = worst_node;
    }
    if (worst > rel_tol * scale) rep.pass = false;
  }
  return rep;
}

SandwichReport sandwich_run(const Field& v0, const ModelParams& p, const CheckSettings& s,
                            double convergence_tolerance) {
  const EigenPair eig = principal_eigen_analytic(p.grid());
  if (classify(p, eig.lambda1).regime != Regime::Persistence) {
    throw DomainError("sandwich: parameters are not in the persistence regime");
  }
  if (sup_norm(v0) == 0.0) throw DomainError("sandwich: initial datum must be nontrivial");

  SandwichReport rep;
  rep.convergence_tolerance = convergence_tolerance;
  rep.envelopes = make_envelopes(v0, eig);
  const Field upper0 = rep.envelopes.upper();
  auto pending = std::async(std::launch::async, [&] { return run(upper0, p, s); });
  const Trajectory middle = run(v0, p, s);

  // With interior zeros in v0 the lower envelope is placed under v(T*) at the
  // first snapshot where the solution has become strictly positive.
  Trajectory lower;
  if (rep.envelopes.lower_amplitude > 0.0) {
    lower = run(rep.envelopes.lower(), p, s);
  } else {
    const Snapshot* start = nullptr;
    for (const Snapshot& snap : middle.snapshots) {
      const auto vals = snap.field.values();
      if (snap.t < s.t_end && std::all_of(vals.begin(), vals.end(), [](double x) { return x > 0.0; })) {
        start = &snap;
        break;
      }
    }
    if (start == nullptr) {
      throw NumericalError("sandwich: solution never became strictly positive");
    }
    const EnvelopePair later = make_envelopes(start->field, eig);
    rep.lower_start = start->t;
    rep.envelopes.raw_lower = later.raw_lower;
    rep.envelopes.lower_amplitude = later.lower_amplitude;
    lower = run(rep.envelopes.lower(), p, s, start->t);
  }

  const Trajectory upper = pending.get();

  for (const Snapshot& lo : lower.snapshots) {
    const Field* mid = field_at(middle, lo.t);
    const Field* up = field_at(upper, lo.t);
    if (mid == nullptr || up == nullptr) continue;
    rep.max_order_violation = std::max(
        {rep.max_order_violation, excess(lo.field, *mid).first, excess(*mid, *up).first});
    rep.spread.push_back({lo.t, sup_distance(*up, lo.field)});
  }
  rep.lower_final = lower.final_field();
  rep.middle_final = middle.final_field();
  rep.upper_final = upper.final_field();
  rep.distance_to_steady = sup_distance(rep.middle_final, solve_steady(p).field);

  rep.ordered = rep.max_order_violation <= rep.ordering_tolerance;
  const double final_spread = sup_distance(rep.upper_final, rep.lower_final);
  rep.converged = final_spread < convergence_tolerance &&
                  rep.distance_to_steady < convergence_tolerance;
  rep.pass = rep.ordered && rep.converged;
  return rep;
}

std::vector<std::pair<Field, Field>> random_ordered_pairs(const Grid& grid, std::size_t count,
                                                          std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> half(0.0, 0.5 * scale);
  std::vector<std::pair<Field, Field>> pairs;
  pairs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Field low(grid);
    Field high(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      low[i] = half(rng);
      high[i] = low[i] + half(rng);
    }
    pairs.emplace_back(std::move(low), std::move(high));
  }
  return pairs;
}

void write_report(std::ostream& os, const ComparisonReport& r) {
  os << (r.pass ? "PASS" : "FAIL") << " comparison max_violation=" << num(r.max_violation)
     << " tolerance=" << num(r.tolerance);
  if (!r.pass) os << " worst_node=" << r.worst_node << " worst_time=" << num(r.worst_time);
  os << '\n';
}

void write_report(std::ostream& os, const LaplacianSignReport& r) {
  os << (r.pass ? "PASS" : "FAIL") << " laplacian-sign max_ratio=" << num(r.max_ratio)
     << " boundary_adjacent=" << num(r.max_ratio_boundary)
     << " interior=" << num(r.max_ratio_interior) << " rel_tol=" << num(r.rel_tol);
  if (!r.pass) os << " worst_node=" << r.worst_node << " worst_time=" << num(r.worst_time);
  os << '\n';
}

void write_report(std::ostream& os, const SandwichReport& r) {
  os << (r.pass ? "PASS" : "FAIL") << " sandwich M=" << num(r.envelopes.upper_amplitude)
     << " delta=" << num(r.envelopes.lower_amplitude) << " lower_start=" << num(r.lower_start)
     << " max_order_violation=" << num(r.max_order_violation)
     << " final_spread=" << num(r.spread.empty() ? 0.0 : r.spread.back().value)
     << " distance_to_steady=" << num(r.distance_to_steady) << '\n';
}

void write_series_csv(std::ostream& os, const std::vector<ViolationSample>& series,
                      const std::string& value_name) {
  os << "t," << value_name << '\n';
  char buf[64];
  for (const ViolationSample& s : series) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.t, s.value);
    os << buf;
  }
}

}  // namespace growdom
