#ifndef GROWDOM_GROWTH_HPP
#define GROWDOM_GROWTH_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace growdom {

class Field;

enum class GrowthFamily { Logistic, Constant };

/// Isotropic domain growth factor rho(t), mapping the reference domain
/// Omega(0) onto Omega(t) = rho(t) * Omega(0).
///
/// Logistic: rho(t) = exp(kt) / (1 + (exp(kt) - 1) / m), k > 0, m > 1.
/// Constant: rho(t) = 1 (fixed domain), stored as k = 0, m = 1.
///
/// All evaluations use the closed form; rho(0) = 1 exactly and rho -> m.
class GrowthFunction {
 public:
  static GrowthFunction logistic(double k, double m);
  static GrowthFunction constant();

  GrowthFamily family() const { return family_; }
  double k() const { return k_; }
  double m() const { return m_; }
  /// rho(infinity).
  double final_size() const { return m_; }

  double rho(double t) const;
  double rho_dot(double t) const;
  /// rho'(t) / rho(t); multiply by the dimension n for the dilution rate.
  double rho_dot_over_rho(double t) const;

  bool operator==(const GrowthFunction&) const = default;

 private:
  GrowthFunction(GrowthFamily family, double k, double m)
      : family_(family), k_(k), m_(m) {}

  // (m - 1) exp(-kt); every closed form is a rational function of it.
  double decay_term(double t) const;

  GrowthFamily family_;
  double k_;
  double m_;
};

/// Field values on the physical (growing) domain.
struct PhysicalField {
  std::size_t dim = 1;
  /// Node coordinates x = rho(t) y; the second entry is unused in 1D.
  std::vector<std::array<double, 2>> points;
  std::vector<double> values;
};

/// u(x, t) = v(x / rho(t), t): scales every reference coordinate by rho(t)
/// and leaves the values untouched.
PhysicalField pushforward(const Field& v, const GrowthFunction& g, double t);

}  // namespace growdom

#endif  // GROWDOM_GROWTH_HPP
