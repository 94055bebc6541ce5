#include "growdom/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "growdom/eigenpair.hpp"
#include "growdom/error.hpp"
#include "growdom/linalg.hpp"

namespace growdom {

std::string_view scheme_name(DiffusionScheme s) {
  return s == DiffusionScheme::BackwardEuler ? "backward_euler" : "crank_nicolson";
}

DiffusionScheme parse_scheme(std::string_view name) {
  if (name == "backward_euler") return DiffusionScheme::BackwardEuler;
  if (name == "crank_nicolson") return DiffusionScheme::CrankNicolson;
  throw DomainError("unknown scheme '" + std::string(name) +
                    "' (expected backward_euler or crank_nicolson)");
}

namespace {

double implicit_weight(DiffusionScheme s) {
  return s == DiffusionScheme::BackwardEuler ? 1.0 : 0.5;
}

std::string describe_time(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "t=%.17g", t);
  return buf;
}

// Advances in place; returns the most negative value seen before clamping.
double advance(std::vector<double>& v, double t, double dt, const ModelParams& p,
               DiffusionScheme scheme) {
  const Grid& grid = p.grid();
  const GrowthFunction& g = p.growth();
  const double theta = implicit_weight(scheme);
  const double rho_mid = g.rho(t + 0.5 * dt);
  const double c = p.d() / (rho_mid * rho_mid);
  const double dilution =
      std::pow(g.rho(t) / g.rho(t + dt), static_cast<double>(p.n()));

  std::vector<double> rhs(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double u = v[i];
    rhs[i] = u + dt * (p.r() * u * (1.0 - u / p.K()) - p.h() * u);
  }
  if (theta < 1.0) add_scaled_laplacian(v, grid, (1.0 - theta) * dt * c, rhs);
  for (double& x : rhs) x *= dilution;

  for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
    const double beta = theta * dt * c / (grid.spacing(axis) * grid.spacing(axis));
    linalg::solve_line_systems(rhs, grid, axis, beta);
  }

  double min_raw = 0.0;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    double& x = rhs[i];
    if (!std::isfinite(x)) {
      throw NumericalError("step: non-finite value at node " + std::to_string(i) +
                           " advancing from " + describe_time(t));
    }
    if (x < 0.0) {
      min_raw = std::min(min_raw, x);
      if (x < -kNegativeTolerance) {
        throw NumericalError("step: negative density " + std::to_string(x) +
                             " at node " + std::to_string(i) +
                             " advancing from " + describe_time(t));
      }
      x = 0.0;
    }
  }
  v.swap(rhs);
  return min_raw;
}

void check_step_args(const Field& v, double t, double dt, const ModelParams& p) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be nonnegative");
  if (!(v.grid() == p.grid())) {
    throw DomainError("field grid does not match the model grid");
  }
}

}  // namespace

Field step(const Field& v, double t, double dt, const ModelParams& p,
           DiffusionScheme scheme) {
  check_step_args(v, t, dt, p);
  std::vector<double> work(v.values().begin(), v.values().end());
  advance(work, t, dt, p, scheme);
  return Field(p.grid(), std::move(work));
}

Trajectory integrate(const Field& v0, double t_end, double dt, const ModelParams& p,
                     const IntegrateOptions& options) {
  const double t0 = options.t_start;
  check_step_args(v0, t0, dt, p);
  if (!(t_end > t0) || !std::isfinite(t_end)) {
    throw DomainError("t_end must exceed the start time");
  }
  if (options.snapshot_every == 0) throw DomainError("snapshot_every must be >= 1");
  for (double x : v0.values()) {
    if (x < 0.0) throw DomainError("initial condition must be nonnegative");
  }

  const auto n_steps =
      static_cast<std::size_t>(std::max(1.0, std::ceil((t_end - t0) / dt - 1e-9)));

  Trajectory traj;
  traj.dt = dt;
  traj.scheme = std::string(scheme_name(options.scheme));
  traj.diagnostics.reserve(n_steps + 1);
  traj.snapshots.push_back({t0, v0});
  traj.diagnostics.push_back({t0, sup_norm(v0), mass(v0)});

  std::vector<double> v(v0.values().begin(), v0.values().end());
  std::vector<double> previous;
  double t = t0;
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const double t_next = k == n_steps ? t_end : t0 + static_cast<double>(k) * dt;
    const double h = t_next - t;
    if (options.stop_at_steady) previous = v;
    try {
      traj.min_raw_value = std::min(traj.min_raw_value, advance(v, t, h, p, options.scheme));
    } catch (const NumericalError& e) {
      throw NumericalError(std::string(e.what()) + " (step " + std::to_string(k) +
                           " of " + std::to_string(n_steps) + ")");
    }
    t = t_next;
    traj.steps = k;

    Field current(p.grid(), v);
    traj.diagnostics.push_back({t, sup_norm(current), mass(current)});

    bool steady = false;
    if (options.stop_at_steady) {
      double change = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        change = std::max(change, std::abs(v[i] - previous[i]));
      }
      steady = change / h < options.steady_tol;
    }
    if (k % options.snapshot_every == 0 || k == n_steps || steady) {
      traj.snapshots.push_back({t, std::move(current)});
    }
    if (steady) {
      traj.stopped_at_steady = true;
      break;
    }
  }
  return traj;
}

double diffusion_dt_bound(const ModelParams& p) {
  const Grid& grid = p.grid();
  double bound = std::numeric_limits<double>::infinity();
  for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
    bound = std::min(bound, 0.25 * grid.spacing(axis) * grid.spacing(axis) / p.d());
  }
  return bound;
}

double reaction_dt_bound(const ModelParams& p) {
  const double rate = p.r() + p.h() + static_cast<double>(p.n()) * p.growth().k();
  return 0.1 / rate;
}

double stable_dt(const ModelParams& p, DiffusionScheme scheme) {
  const double reaction = reaction_dt_bound(p);
  if (scheme == DiffusionScheme::BackwardEuler) return reaction;
  return std::min(reaction, diffusion_dt_bound(p));
}

std::string_view shape_name(InitialShape s) {
  switch (s) {
    case InitialShape::SinPi: return "sin_pi";
    case InitialShape::Eigen: return "eigen";
    case InitialShape::Bump: return "bump";
    case InitialShape::PaperSin: return "paper_sin";
  }
  return "?";
}

InitialShape parse_shape(std::string_view name) {
  for (auto s : {InitialShape::SinPi, InitialShape::Eigen, InitialShape::Bump,
                 InitialShape::PaperSin}) {
    if (shape_name(s) == name) return s;
  }
  throw DomainError("unknown initial condition '" + std::string(name) +
                    "' (expected sin_pi, eigen, bump or paper_sin)");
}

Field initial_condition(const Grid& grid, InitialShape shape, double amplitude) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw DomainError("amplitude must be nonnegative");
  }
  constexpr double pi = std::numbers::pi;
  const std::size_t dim = grid.dim();
  auto per_axis = [&](auto&& f) {
    return Field::sample(grid, [&, dim](double y1, double y2) {
      double value = f(y1, grid.extent(0));
      if (dim > 1) value *= f(y2, grid.extent(1));
      return amplitude * value;
    });
  };
  switch (shape) {
    case InitialShape::SinPi:
      return per_axis([](double y, double L) { return std::sin(pi * y / L); });
    case InitialShape::Eigen:
      return amplitude * principal_eigen_analytic(grid).phi;
    case InitialShape::Bump:
      return per_axis([](double y, double L) {
        const double radius = 0.25 * L;
        const double s = (y - 0.5 * L) / radius;
        return std::abs(s) < 1.0 ? 0.5 * (1.0 + std::cos(pi * s)) : 0.0;
      });
    case InitialShape::PaperSin:
      // Boundary nodes are implicit zeros, so only the interior is sampled.
      return per_axis([](double y, double) { return std::sin(y); });
  }
  throw DomainError("unknown initial condition");
}

}  // namespace growdom
