#include "growdom/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "growdom/error.hpp"

namespace growdom {

Grid::Grid(std::span<const double> extents, std::span<const std::size_t> points) {
  if (extents.size() != points.size()) {
    throw DomainError("grid: extents and points must have the same length");
  }
  if (extents.size() < 1 || extents.size() > 2) {
    throw DomainError("grid: dimension must be 1 or 2, got " +
                      std::to_string(extents.size()));
  }
  dim_ = extents.size();
  for (std::size_t axis = 0; axis < dim_; ++axis) {
    if (!(extents[axis] > 0.0) || !std::isfinite(extents[axis])) {
      throw DomainError("grid: extent must be positive");
    }
    if (points[axis] < kMinPoints) {
      throw DomainError("grid: need at least 3 interior points per axis, got " +
                        std::to_string(points[axis]));
    }
    extents_[axis] = extents[axis];
    points_[axis] = points[axis];
    spacing_[axis] = extents[axis] / static_cast<double>(points[axis] + 1);
  }
}

Grid Grid::interval(double length, std::size_t points) {
  const double e[] = {length};
  const std::size_t n[] = {points};
  return Grid(e, n);
}

Grid Grid::rectangle(double a, double b, std::size_t points_a,
                     std::size_t points_b) {
  const double e[] = {a, b};
  const std::size_t n[] = {points_a, points_b};
  return Grid(e, n);
}

Grid build_grid(std::size_t dim, std::span<const double> extents,
                std::span<const std::size_t> points) {
  if (extents.size() != dim || points.size() != dim) {
    throw DomainError("grid: expected " + std::to_string(dim) +
                      " extents and point counts");
  }
  return Grid(extents, points);
}

std::size_t Grid::size() const { return points_[0] * points_[1]; }

double Grid::cell_volume() const {
  double vol = 1.0;
  for (std::size_t axis = 0; axis < dim_; ++axis) vol *= spacing_[axis];
  return vol;
}

std::array<std::size_t, 2> Grid::multi_index(std::size_t node) const {
  return {node % points_[0], node / points_[0]};
}

bool Grid::adjacent_to_boundary(std::size_t node) const {
  const auto idx = multi_index(node);
  for (std::size_t axis = 0; axis < dim_; ++axis) {
    if (idx[axis] == 0 || idx[axis] + 1 == points_[axis]) return true;
  }
  return false;
}

namespace {

void check_finite(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw DomainError("field: non-finite value at node " + std::to_string(i));
    }
  }
}

// Shape must agree exactly; extents only up to CSV round-off.
void check_same_layout(const Grid& a, const Grid& b) {
  bool same = a.dim() == b.dim();
  for (std::size_t axis = 0; same && axis < a.dim(); ++axis) {
    same = a.points(axis) == b.points(axis) &&
           std::abs(a.extent(axis) - b.extent(axis)) <=
               1e-12 * std::max(a.extent(axis), b.extent(axis));
  }
  if (!same) throw DomainError("fields live on different grids");
}

}  // namespace

Field::Field(Grid grid) : grid_(grid), values_(grid.size(), 0.0) {}

Field::Field(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw DomainError("field: expected " + std::to_string(grid_.size()) +
                      " values, got " + std::to_string(values_.size()));
  }
  check_finite(values_);
}

Field Field::sample(const Grid& grid,
                    const std::function<double(double, double)>& f) {
  std::vector<double> values(grid.size());
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto idx = grid.multi_index(node);
    const double y1 = grid.coordinate(0, idx[0]);
    const double y2 = grid.dim() > 1 ? grid.coordinate(1, idx[1]) : 0.0;
    values[node] = f(y1, y2);
  }
  return Field(grid, std::move(values));
}

Field& Field::operator*=(double s) {
  for (double& x : values_) x *= s;
  check_finite(values_);
  return *this;
}

Field operator*(double s, Field v) {
  v *= s;
  return v;
}

void add_scaled_laplacian(std::span<const double> v, const Grid& grid,
                          double alpha, std::span<double> out) {
  const std::size_t n0 = grid.points(0);
  const std::size_t n1 = grid.points(1);
  const double c0 = alpha / (grid.spacing(0) * grid.spacing(0));
  for (std::size_t i1 = 0; i1 < n1; ++i1) {
    const std::size_t row = i1 * n0;
    for (std::size_t i0 = 0; i0 < n0; ++i0) {
      const double left = i0 > 0 ? v[row + i0 - 1] : 0.0;
      const double right = i0 + 1 < n0 ? v[row + i0 + 1] : 0.0;
      out[row + i0] += c0 * (left - 2.0 * v[row + i0] + right);
    }
  }
  if (grid.dim() < 2) return;
  const double c1 = alpha / (grid.spacing(1) * grid.spacing(1));
  for (std::size_t i1 = 0; i1 < n1; ++i1) {
    for (std::size_t i0 = 0; i0 < n0; ++i0) {
      const std::size_t k = i0 + n0 * i1;
      const double down = i1 > 0 ? v[k - n0] : 0.0;
      const double up = i1 + 1 < n1 ? v[k + n0] : 0.0;
      out[k] += c1 * (down - 2.0 * v[k] + up);
    }
  }
}

Field laplacian(const Field& v) {
  Field out(v.grid());
  add_scaled_laplacian(v.values(), v.grid(), 1.0, out.values());
  return out;
}

double sup_norm(const Field& v) {
  double m = 0.0;
  for (double x : v.values()) m = std::max(m, std::abs(x));
  return m;
}

double mass(const Field& v) {
  double s = 0.0;
  for (double x : v.values()) s += x;
  return s * v.grid().cell_volume();
}

double inner_product(const Field& a, const Field& b) {
  check_same_layout(a.grid(), b.grid());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s * a.grid().cell_volume();
}

double sup_distance(const Field& a, const Field& b) {
  check_same_layout(a.grid(), b.grid());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_field_csv(std::ostream& os, const Field& v) {
  const Grid& grid = v.grid();
  os << (grid.dim() == 1 ? "y1,value\n" : "y1,y2,value\n");
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto idx = grid.multi_index(node);
    os << format_double(grid.coordinate(0, idx[0]));
    if (grid.dim() > 1) os << ',' << format_double(grid.coordinate(1, idx[1]));
    os << ',' << format_double(v[node]) << '\n';
  }
}

Field read_field_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("field csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t dim = 0;
  if (line == "y1,value") {
    dim = 1;
  } else if (line == "y1,y2,value") {
    dim = 2;
  } else {
    throw DomainError("field csv: unrecognised header '" + line + "'");
  }
  std::vector<std::array<double, 2>> coords;
  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    std::array<double, 2> y{};
    double value = 0.0;
    row >> y[0];
    if (dim > 1) row >> y[1];
    row >> value;
    if (!row) {
      throw DomainError("field csv: malformed row at line " + std::to_string(lineno));
    }
    coords.push_back(y);
    values.push_back(value);
  }
  if (coords.empty()) throw DomainError("field csv: no data rows");

  if (dim == 1) {
    const std::size_t n = coords.size();
    const double h = coords.front()[0];
    return Field(Grid::interval(h * static_cast<double>(n + 1), n), std::move(values));
  }
  // Axis 0 varies fastest: count rows until y2 changes.
  std::size_t n0 = 1;
  while (n0 < coords.size() && coords[n0][1] == coords[0][1]) ++n0;
  if (coords.size() % n0 != 0) throw DomainError("field csv: ragged 2D grid");
  const std::size_t n1 = coords.size() / n0;
  const double h0 = coords.front()[0];
  const double h1 = coords.front()[1];
  return Field(Grid::rectangle(h0 * static_cast<double>(n0 + 1),
                               h1 * static_cast<double>(n1 + 1), n0, n1),
               std::move(values));
}

}  // namespace growdom
