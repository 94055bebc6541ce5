#include "growdom/model.hpp"

#include <cmath>

#include "growdom/error.hpp"

namespace growdom {

ModelParams::ModelParams(double d, double r, double K, double h,
                         GrowthFunction growth, Grid grid)
    : d_(d), r_(r), K_(K), h_(h), growth_(growth), grid_(grid) {
  if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("d must be nonnegative");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("r must be nonnegative");
  if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("K must be positive");
  if (!(h >= 0.0) || !std::isfinite(h)) throw DomainError("h must be nonnegative");
}

ModelParams ModelParams::with_d(double d) const {
  return {d, r_, K_, h_, growth_, grid_};
}
ModelParams ModelParams::with_r(double r) const {
  return {d_, r, K_, h_, growth_, grid_};
}
ModelParams ModelParams::with_h(double h) const {
  return {d_, r_, K_, h, growth_, grid_};
}
ModelParams ModelParams::with_growth(GrowthFunction g) const {
  return {d_, r_, K_, h_, g, grid_};
}
ModelParams ModelParams::with_grid(Grid g) const {
  return {d_, r_, K_, h_, growth_, g};
}

}  // namespace growdom
