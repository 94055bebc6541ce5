#ifndef GROWDOM_EIGENPAIR_HPP
#define GROWDOM_EIGENPAIR_HPP

#include <cstddef>

#include "growdom/grid.hpp"

namespace growdom {

/// Principal Dirichlet eigenpair of -Laplacian on Omega(0).
///
/// phi is positive at every interior node and normalised so that its largest
/// sampled value is 1, which lets the comparison envelopes M*phi and
/// delta*phi read directly as amplitudes. `residual` is
/// ||-laplacian(phi) - lambda1*phi||_inf / lambda1 on the discrete operator.
struct EigenPair {
  double lambda1 = 0.0;
  Field phi;
  double residual = 0.0;
  std::size_t iterations = 0;  // 0 for the closed form
};

/// Closed form: pi^2/L^2 on (0, L), pi^2 (1/a^2 + 1/b^2) on (0,a) x (0,b),
/// with the continuous eigenfunction sampled on the grid.
EigenPair principal_eigen_analytic(const Grid& grid);

/// Inverse power iteration on the discrete Laplacian. Stops once successive
/// Rayleigh quotients differ by less than tol; throws NumericalError carrying
/// the last change if that does not happen within max_iter iterations.
EigenPair principal_eigen_numeric(const Grid& grid, double tol = 1e-12,
                                  std::size_t max_iter = 500);

/// Rayleigh quotient <-laplacian(v), v> / <v, v>, evaluated in the
/// sum-of-squared-differences form so that no cancellation occurs.
double rayleigh_quotient(const Field& v);

}  // namespace growdom

#endif  // GROWDOM_EIGENPAIR_HPP
