#ifndef GROWDOM_LINALG_HPP
#define GROWDOM_LINALG_HPP

#include <Eigen/SparseCore>
#include <span>
#include <vector>

#include "growdom/grid.hpp"

namespace growdom::linalg {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Thomas algorithm. lower[0] and upper[n-1] are ignored; x holds the
/// right-hand side on entry and the solution on exit. Throws NumericalError
/// on a zero or non-finite pivot.
void solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                       std::span<const double> upper, std::span<double> x);

/// Solves (I - beta * D2) x = b along every grid line parallel to `axis`,
/// where D2 is the undivided three-point second difference with zero ghosts.
/// `data` holds b on entry and x on exit.
void solve_line_systems(std::span<double> data, const Grid& grid,
                        std::size_t axis, double beta);

/// Discrete Dirichlet Laplacian assembled as a sparse matrix (node order of
/// the grid).
SparseMatrix laplacian_matrix(const Grid& grid);

}  // namespace growdom::linalg

#endif  // GROWDOM_LINALG_HPP
