#ifndef GROWDOM_MODEL_HPP
#define GROWDOM_MODEL_HPP

#include "growdom/grid.hpp"
#include "growdom/growth.hpp"

namespace growdom {

/// Coefficients of the harvested logistic model on the reference domain:
///   v_t = (d / rho^2) Lap v - (n rho'/rho) v + r v (1 - v/K) - h v.
/// Every constraint is checked on construction, so a ModelParams value is
/// always valid.
class ModelParams {
 public:
  ModelParams(double d, double r, double K, double h, GrowthFunction growth,
              Grid grid);

  double d() const { return d_; }
  double r() const { return r_; }
  double K() const { return K_; }
  double h() const { return h_; }
  const GrowthFunction& growth() const { return growth_; }
  const Grid& grid() const { return grid_; }
  /// Spatial dimension n.
  std::size_t n() const { return grid_.dim(); }

  ModelParams with_d(double d) const;
  ModelParams with_r(double r) const;
  ModelParams with_h(double h) const;
  ModelParams with_growth(GrowthFunction g) const;
  ModelParams with_grid(Grid g) const;

  bool operator==(const ModelParams&) const = default;

 private:
  double d_;
  double r_;
  double K_;
  double h_;
  GrowthFunction growth_;
  Grid grid_;
};

}  // namespace growdom

#endif  // GROWDOM_MODEL_HPP
