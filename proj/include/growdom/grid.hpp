#ifndef GROWDOM_GRID_HPP
#define GROWDOM_GRID_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace growdom {

/// Uniform tensor grid of interior nodes on (0, L1) [x (0, L2)].
///
/// Node i on an axis sits at y = (i + 1) * spacing with spacing = L / (N + 1);
/// the Dirichlet boundary nodes are implicit and never stored. In 2D nodes are
/// ordered with axis 0 fastest: node = i0 + N0 * i1.
class Grid {
 public:
  static constexpr std::size_t kMinPoints = 3;

  /// The smallest valid grid: (0, 1) with 3 interior points.
  Grid() : Grid(interval(1.0, kMinPoints)) {}
  Grid(std::span<const double> extents, std::span<const std::size_t> points);

  static Grid interval(double length, std::size_t points);
  static Grid rectangle(double a, double b, std::size_t points_a,
                        std::size_t points_b);

  std::size_t dim() const { return dim_; }
  double extent(std::size_t axis) const { return extents_[axis]; }
  std::size_t points(std::size_t axis) const { return points_[axis]; }
  double spacing(std::size_t axis) const { return spacing_[axis]; }
  /// Total number of stored (interior) nodes.
  std::size_t size() const;
  /// Product of the spacings; the quadrature weight of one node.
  double cell_volume() const;

  double coordinate(std::size_t axis, std::size_t i) const {
    return static_cast<double>(i + 1) * spacing_[axis];
  }
  std::array<std::size_t, 2> multi_index(std::size_t node) const;
  std::size_t node(std::size_t i0, std::size_t i1 = 0) const {
    return i0 + points_[0] * i1;
  }
  /// True when the node has a Dirichlet ghost among its stencil neighbours.
  bool adjacent_to_boundary(std::size_t node) const;

  bool operator==(const Grid&) const = default;

 private:
  std::size_t dim_ = 1;
  std::array<double, 2> extents_{};
  std::array<std::size_t, 2> points_{1, 1};
  std::array<double, 2> spacing_{};
};

/// build_grid(dim, extents, points_per_axis).
Grid build_grid(std::size_t dim, std::span<const double> extents,
                std::span<const std::size_t> points);

/// Density sampled at the interior nodes of a Grid.
class Field {
 public:
  Field() = default;
  explicit Field(Grid grid);
  /// Throws DomainError on a size mismatch or non-finite entry.
  Field(Grid grid, std::vector<double> values);

  /// Samples f(y1, y2) at every node (y2 = 0 in 1D).
  static Field sample(const Grid& grid,
                      const std::function<double(double, double)>& f);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  Field& operator*=(double s);
  bool operator==(const Field&) const = default;

 private:
  Grid grid_;
  std::vector<double> values_ = std::vector<double>(Grid::kMinPoints, 0.0);
};

Field operator*(double s, Field v);

/// Second-order central difference Laplacian with zero Dirichlet ghosts.
Field laplacian(const Field& v);
/// Adds alpha * laplacian(v) into out (same grid); the building block shared
/// by the stepper and the steady residual.
void add_scaled_laplacian(std::span<const double> v, const Grid& grid,
                          double alpha, std::span<double> out);

double sup_norm(const Field& v);
/// Trapezoidal integral over Omega(0); the boundary contributes zero.
double mass(const Field& v);
/// Node-wise sum scaled by the cell volume.
double inner_product(const Field& a, const Field& b);
/// max |a - b|; throws DomainError for fields on different grids.
double sup_distance(const Field& a, const Field& b);

/// Header `y1[,y2],value`, one node per row, 17 significant digits.
void write_field_csv(std::ostream& os, const Field& v);
/// Reads the format above back; the grid is reconstructed from the node
/// coordinates and must be uniform.
Field read_field_csv(std::istream& is);

}  // namespace growdom

#endif  // GROWDOM_GRID_HPP
