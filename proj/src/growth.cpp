#include "growdom/growth.hpp"

#include <cmath>
#include <string>

#include "growdom/error.hpp"
#include "growdom/grid.hpp"

namespace growdom {

namespace {

void check_time(double t) {
  if (!(t >= 0.0)) {
    throw DomainError("growth function evaluated at invalid time " +
                      std::to_string(t) + " (require t >= 0)");
  }
}

}  // namespace

GrowthFunction GrowthFunction::logistic(double k, double m) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("k must be positive for logistic growth");
  }
  if (!(m > 1.0) || !std::isfinite(m)) {
    throw DomainError("m must exceed 1 for logistic growth");
  }
  return {GrowthFamily::Logistic, k, m};
}

GrowthFunction GrowthFunction::constant() {
  return {GrowthFamily::Constant, 0.0, 1.0};
}

double GrowthFunction::decay_term(double t) const {
  // exp(-inf) = 0 gives the t -> infinity limits for free.
  return (m_ - 1.0) * std::exp(-k_ * t);
}

double GrowthFunction::rho(double t) const {
  check_time(t);
  if (family_ == GrowthFamily::Constant) return 1.0;
  // exp(kt) / (1 + (exp(kt) - 1)/m), rewritten to avoid overflow.
  return m_ / (1.0 + decay_term(t));
}

double GrowthFunction::rho_dot(double t) const {
  check_time(t);
  if (family_ == GrowthFamily::Constant) return 0.0;
  const double q = decay_term(t);
  const double s = 1.0 + q;
  return k_ * m_ * q / (s * s);
}

double GrowthFunction::rho_dot_over_rho(double t) const {
  check_time(t);
  if (family_ == GrowthFamily::Constant) return 0.0;
  const double q = decay_term(t);
  return k_ * q / (1.0 + q);
}

PhysicalField pushforward(const Field& v, const GrowthFunction& g, double t) {
  const double scale = g.rho(t);
  const Grid& grid = v.grid();
  PhysicalField out;
  out.dim = grid.dim();
  out.points.resize(grid.size());
  out.values.assign(v.values().begin(), v.values().end());
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto idx = grid.multi_index(node);
    for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
      out.points[node][axis] = scale * grid.coordinate(axis, idx[axis]);
    }
  }
  return out;
}

}  // namespace growdom
