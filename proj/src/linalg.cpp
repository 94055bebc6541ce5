#include "growdom/linalg.hpp"

#include <cmath>
#include <string>

#include "growdom/error.hpp"

namespace growdom::linalg {

void solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                       std::span<const double> upper, std::span<double> x) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || x.size() != n) {
    throw DomainError("tridiagonal solve: inconsistent sizes");
  }
  if (n == 0) return;
  std::vector<double> c(n);
  double pivot = diag[0];
  for (std::size_t i = 0;; ++i) {
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      throw NumericalError("tridiagonal solve: zero pivot at row " + std::to_string(i));
    }
    c[i] = upper[i] / pivot;
    x[i] /= pivot;
    if (i + 1 == n) break;
    pivot = diag[i + 1] - lower[i + 1] * c[i];
    x[i + 1] -= lower[i + 1] * x[i];
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
}

void solve_line_systems(std::span<double> data, const Grid& grid,
                        std::size_t axis, double beta) {
  const std::size_t n = grid.points(axis);
  const std::size_t lines = grid.size() / n;
  const std::size_t stride = axis == 0 ? 1 : grid.points(0);
  const std::vector<double> off(n, -beta);
  const std::vector<double> diag(n, 1.0 + 2.0 * beta);
  std::vector<double> line(n);
  for (std::size_t l = 0; l < lines; ++l) {
    // Axis 0 lines are contiguous rows; axis 1 lines are columns.
    const std::size_t start = axis == 0 ? l * n : l;
    for (std::size_t i = 0; i < n; ++i) line[i] = data[start + i * stride];
    solve_tridiagonal(off, diag, off, line);
    for (std::size_t i = 0; i < n; ++i) data[start + i * stride] = line[i];
  }
}

SparseMatrix laplacian_matrix(const Grid& grid) {
  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> entries;
  entries.reserve(grid.size() * (1 + 2 * grid.dim()));
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto idx = grid.multi_index(node);
    const auto row = static_cast<Eigen::Index>(node);
    for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
      const double w = 1.0 / (grid.spacing(axis) * grid.spacing(axis));
      const std::size_t stride = axis == 0 ? 1 : grid.points(0);
      entries.emplace_back(row, row, -2.0 * w);
      if (idx[axis] > 0) {
        entries.emplace_back(row, static_cast<Eigen::Index>(node - stride), w);
      }
      if (idx[axis] + 1 < grid.points(axis)) {
        entries.emplace_back(row, static_cast<Eigen::Index>(node + stride), w);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(grid.size());
  SparseMatrix a(n, n);
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

}  // namespace growdom::linalg
