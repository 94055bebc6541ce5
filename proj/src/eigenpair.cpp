#include "growdom/eigenpair.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "growdom/error.hpp"
#include "growdom/linalg.hpp"

namespace growdom {

namespace {

double relative_residual(const Field& phi, double lambda) {
  Field r = laplacian(phi);
  double worst = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    worst = std::max(worst, std::abs(-r[i] - lambda * phi[i]));
  }
  return worst / lambda;
}

void normalise_sup(std::span<double> v) {
  double top = 0.0;
  for (double x : v) top = std::max(top, std::abs(x));
  if (top == 0.0) throw NumericalError("eigen: iterate collapsed to zero");
  for (double& x : v) x /= top;
}

// Applies (-laplacian)^{-1}: Thomas in 1D, sparse Cholesky in 2D.
class InverseLaplacian {
 public:
  explicit InverseLaplacian(const Grid& grid) : grid_(grid) {
    if (grid.dim() == 1) {
      const double w = 1.0 / (grid.spacing(0) * grid.spacing(0));
      off_.assign(grid.size(), -w);
      diag_.assign(grid.size(), 2.0 * w);
    } else {
      chol_.emplace();
      chol_->compute(-linalg::laplacian_matrix(grid));
      if (chol_->info() != Eigen::Success) {
        throw NumericalError("eigen: Cholesky factorisation of -laplacian failed");
      }
    }
  }

  void apply(std::span<const double> in, std::span<double> out) const {
    if (grid_.dim() == 1) {
      std::copy(in.begin(), in.end(), out.begin());
      linalg::solve_tridiagonal(off_, diag_, off_, out);
      return;
    }
    const auto n = static_cast<Eigen::Index>(in.size());
    Eigen::Map<const Eigen::VectorXd> b(in.data(), n);
    Eigen::Map<Eigen::VectorXd> x(out.data(), n);
    x = chol_->solve(b);
    if (chol_->info() != Eigen::Success) {
      throw NumericalError("eigen: sparse solve failed");
    }
  }

 private:
  Grid grid_;
  std::vector<double> off_;
  std::vector<double> diag_;
  std::optional<Eigen::SimplicialLDLT<linalg::SparseMatrix>> chol_;
};

}  // namespace

EigenPair principal_eigen_analytic(const Grid& grid) {
  constexpr double pi = std::numbers::pi;
  double lambda = 0.0;
  for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
    lambda += pi * pi / (grid.extent(axis) * grid.extent(axis));
  }
  const double a = grid.extent(0);
  const double b = grid.dim() > 1 ? grid.extent(1) : 0.0;
  Field phi = Field::sample(grid, [&](double y1, double y2) {
    const double s = std::sin(pi * y1 / a);
    return b > 0.0 ? s * std::sin(pi * y2 / b) : s;
  });
  normalise_sup(phi.values());
  const double res = relative_residual(phi, lambda);
  return EigenPair{lambda, std::move(phi), res, 0};
}

EigenPair principal_eigen_numeric(const Grid& grid, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw DomainError("eigen: tolerance must be positive");
  const InverseLaplacian solver(grid);

  std::vector<double> v(grid.size(), 1.0);
  std::vector<double> w(grid.size());
  double previous = 0.0;
  double change = 0.0;
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    solver.apply(v, w);
    // Rayleigh quotient of w: <-L w, w>/<w, w> = <v, w>/<w, w>. Every term is
    // positive for a positive iterate, so nothing cancels.
    double vw = 0.0;
    double ww = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      vw += v[i] * w[i];
      ww += w[i] * w[i];
    }
    const double lambda = vw / ww;
    normalise_sup(w);
    std::swap(v, w);
    change = std::abs(lambda - previous);
    previous = lambda;
    if (iter == 1 || change >= tol) continue;

    // The Perron vector of an inverse M-matrix is positive; flip a global
    // sign if the iterate came out negative.
    if (v[0] < 0.0) {
      for (double& x : v) x = -x;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!(v[i] > 0.0)) {
        throw NumericalError("eigen: eigenvector not positive at node " +
                             std::to_string(i));
      }
    }
    Field phi(grid, std::move(v));
    const double res = relative_residual(phi, lambda);
    return EigenPair{lambda, std::move(phi), res, iter};
  }
  throw NumericalError("eigen: inverse iteration did not converge in " +
                       std::to_string(max_iter) +
                       " iterations (last Rayleigh quotient change " +
                       std::to_string(change) + ")");
}

double rayleigh_quotient(const Field& v) {
  const Grid& grid = v.grid();
  double energy = 0.0;
  for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
    const double w = 1.0 / (grid.spacing(axis) * grid.spacing(axis));
    const std::size_t stride = axis == 0 ? 1 : grid.points(0);
    for (std::size_t node = 0; node < grid.size(); ++node) {
      const auto idx = grid.multi_index(node);
      // Edge to the lower neighbour (or the zero ghost), plus the final
      // edge to the upper ghost.
      const double below = idx[axis] > 0 ? v[node - stride] : 0.0;
      energy += w * (v[node] - below) * (v[node] - below);
      if (idx[axis] + 1 == grid.points(axis)) energy += w * v[node] * v[node];
    }
  }
  double norm = 0.0;
  for (double x : v.values()) norm += x * x;
  if (norm == 0.0) throw DomainError("rayleigh quotient of the zero field");
  return energy / norm;
}

}  // namespace growdom
