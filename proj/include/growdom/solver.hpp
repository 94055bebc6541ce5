#ifndef GROWDOM_SOLVER_HPP
#define GROWDOM_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growdom/grid.hpp"
#include "growdom/model.hpp"

namespace growdom {

/// Time discretisation of the diffusion term. Both are first order in time
/// overall because the reaction is explicit.
///
/// BackwardEuler keeps the one-step map monotone for every dt admitted by
/// stable_dt, so comparison and positivity hold discretely. CrankNicolson is
/// only monotone while c*dt/dy^2 <= 1 per axis, which is why stable_dt also
/// enforces the explicit diffusion bound for it.
enum class DiffusionScheme { BackwardEuler, CrankNicolson };

std::string_view scheme_name(DiffusionScheme s);
DiffusionScheme parse_scheme(std::string_view name);

/// Values in [-kNegativeTolerance, 0) are rounded to zero; anything lower is
/// a scheme failure.
inline constexpr double kNegativeTolerance = 1e-12;

/// One IMEX step from t to t + dt.
///
/// Diffusion is implicit with the coefficient d/rho^2 frozen at t + dt/2
/// (tridiagonal solve in 1D, dimension-split line solves in 2D). Harvest and
/// the logistic term are explicit at t. The dilution -(n rho'/rho) v is
/// spatially uniform and linear, so it is applied through its exact
/// propagator (rho(t)/rho(t+dt))^n.
Field step(const Field& v, double t, double dt, const ModelParams& p,
           DiffusionScheme scheme = DiffusionScheme::BackwardEuler);

struct IntegrateOptions {
  std::size_t snapshot_every = 100;
  DiffusionScheme scheme = DiffusionScheme::BackwardEuler;
  /// Start time; the growth function is not autonomous.
  double t_start = 0.0;
  /// Stop once sup|v(t+dt) - v(t)| / dt drops below steady_tol.
  bool stop_at_steady = false;
  double steady_tol = 1e-8;
};

struct Snapshot {
  double t;
  Field field;
};

struct DiagnosticRow {
  double t;
  double sup_norm;
  double mass;
};

struct Trajectory {
  /// Initial state, every snapshot_every-th step and the final state.
  std::vector<Snapshot> snapshots;
  /// One row per step, plus the initial state.
  std::vector<DiagnosticRow> diagnostics;
  double dt = 0.0;
  std::size_t steps = 0;
  std::string scheme;
  /// Most negative value produced before clamping (0 if none).
  double min_raw_value = 0.0;
  bool stopped_at_steady = false;

  const Field& final_field() const { return snapshots.back().field; }
  double final_time() const { return snapshots.back().t; }
};

/// Steps v0 from options.t_start to t_end. The last step is shortened to land
/// on t_end exactly. Step errors are re-thrown with the failing time.
Trajectory integrate(const Field& v0, double t_end, double dt, const ModelParams& p,
                     const IntegrateOptions& options = {});

/// Recommended step: 0.1 / (r + h + n k) for the explicit reaction and
/// dilution. For Crank-Nicolson the diffusion bound 0.25 dy^2 / d is also
/// applied; backward Euler is exempt from it.
double stable_dt(const ModelParams& p,
                 DiffusionScheme scheme = DiffusionScheme::BackwardEuler);
/// min over axes of 0.25 dy^2 / d.
double diffusion_dt_bound(const ModelParams& p);
/// 0.1 / (r + h + n k).
double reaction_dt_bound(const ModelParams& p);

enum class InitialShape { SinPi, Eigen, Bump, PaperSin };

std::string_view shape_name(InitialShape s);
InitialShape parse_shape(std::string_view name);

/// sin_pi: prod sin(pi y/L); eigen: sup-normalised principal eigenfunction;
/// bump: raised cosine of half-width L/4 centred in the domain;
/// paper_sin: prod sin(y) on the interior, zero on the boundary.
/// Each is multiplied by amplitude (>= 0).
Field initial_condition(const Grid& grid, InitialShape shape, double amplitude = 1.0);

}  // namespace growdom

#endif  // GROWDOM_SOLVER_HPP
