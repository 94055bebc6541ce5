#ifndef GROWDOM_STEADY_HPP
#define GROWDOM_STEADY_HPP

#include <cstddef>
#include <vector>

#include "growdom/grid.hpp"
#include "growdom/model.hpp"

namespace growdom {

enum class SteadyRegime { Trivial, Positive };

struct SteadyResult {
  Field field;
  /// sup norm of the discrete elliptic residual at `field`.
  double residual = 0.0;
  std::size_t newton_iters = 0;
  SteadyRegime regime = SteadyRegime::Trivial;
  /// ||F||_inf before each Newton step and at the end.
  std::vector<double> residual_history;
};

struct SteadyOptions {
  double tol = 1e-10;
  std::size_t max_iter = 50;
  std::size_t max_halvings = 20;
};

/// Steady state of the fully grown domain:
///   (d/m^2) Lap v + r v (1 - v/K) - h v = 0,  v = 0 on the boundary.
///
/// Below or at the threshold r <= d lambda1/m^2 + h (closed-form lambda1)
/// the zero field is returned. Above it, damped Newton starts from
/// A * phi with A = K (1 - (h + d lambda1/m^2)/r).
///
/// Throws NumericalError on stagnation (max_halvings failed halvings) or if
/// the converged field is not strictly positive.
SteadyResult solve_steady(const ModelParams& p, const SteadyOptions& options = {});

/// ||F(v)||_inf for the discrete system above.
double residual(const Field& v, const ModelParams& p);

}  // namespace growdom

#endif  // GROWDOM_STEADY_HPP
