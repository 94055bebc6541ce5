#ifndef GROWDOM_VERIFY_HPP
#define GROWDOM_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <iosfwd>
#include <string>
#include <vector>

#include "growdom/eigenpair.hpp"
#include "growdom/grid.hpp"
#include "growdom/model.hpp"
#include "growdom/solver.hpp"

namespace growdom {

/// Amplitudes M and delta with delta*phi <= v0 <= M*phi.
struct EnvelopePair {
  /// M after the inflation margin.
  double upper_amplitude = 0.0;
  /// delta after the deflation margin; 0 when v0 vanishes at an interior node.
  double lower_amplitude = 0.0;
  /// Tightest values, before the margin.
  double raw_upper = 0.0;
  double raw_lower = 0.0;
  EigenPair eigen;

  Field upper() const { return upper_amplitude * eigen.phi; }
  Field lower() const { return lower_amplitude * eigen.phi; }
};

/// margin = 0.01 inflates M by 1% and deflates delta by 1%.
EnvelopePair make_envelopes(const Field& v0, const EigenPair& e, double margin = 0.01);

struct CheckSettings {
  double t_end = 10.0;
  double dt = 0.0;  // <= 0 selects stable_dt
  std::size_t snapshot_every = 10;
  DiffusionScheme scheme = DiffusionScheme::BackwardEuler;
};

/// Scalar worst-case per snapshot time.
struct ViolationSample {
  double t;
  double value;
};

struct ComparisonReport {
  bool pass = true;
  double tolerance = 1e-10;
  /// max over snapshots and nodes of (low - high)^+.
  double max_violation = 0.0;
  double worst_time = 0.0;
  std::size_t worst_node = 0;
  std::vector<ViolationSample> series;
};

/// Integrates both data with the same dt and checks low <= high + tolerance
/// at every snapshot. Throws DomainError if the initial data are not ordered.
ComparisonReport check_comparison(const Field& v0_low, const Field& v0_high,
                                  const ModelParams& p, const CheckSettings& s,
                                  double tolerance = 1e-10);

struct LaplacianSignReport {
  bool pass = true;
  /// Relative tolerance: max Lap v must stay <= rel_tol * sup_norm(v).
  double rel_tol = 1e-8;
  /// max over snapshots of max(Lap v) / sup_norm(v), over every node.
  double max_ratio = -1.0;
  /// The same restricted to boundary-adjacent nodes and to the rest.
  double max_ratio_boundary = -1.0;
  double max_ratio_interior = -1.0;
  double worst_time = 0.0;
  std::size_t worst_node = 0;
  /// Per snapshot: max(Lap v) / sup_norm(v) (0 for the zero field).
  std::vector<ViolationSample> series;
};

/// Requires max Lap v0 <= rel_tol * sup_norm(v0), else DomainError.
LaplacianSignReport check_laplacian_sign(const Field& v0, const ModelParams& p,
                                         const CheckSettings& s, double rel_tol = 1e-8);

struct SandwichReport {
  bool pass = true;
  bool ordered = true;
  bool converged = true;
  double ordering_tolerance = 1e-10;
  double convergence_tolerance = 5e-3;
  EnvelopePair envelopes;
  /// Start time of the lower trajectory: 0, or the first snapshot where the
  /// middle trajectory is strictly positive if v0 has interior zeros.
  double lower_start = 0.0;
  double max_order_violation = 0.0;
  /// sup |upper - lower| at each common snapshot.
  std::vector<ViolationSample> spread;
  /// Distance of the final middle field to the Newton steady state.
  double distance_to_steady = 0.0;
  Field lower_final;
  Field middle_final;
  Field upper_final;
};

/// Runs delta*phi, v0 and M*phi to t_end and checks ordering throughout and
/// a common limit at the end. Throws DomainError outside the persistence
/// regime or for v0 == 0.
SandwichReport sandwich_run(const Field& v0, const ModelParams& p, const CheckSettings& s,
                            double convergence_tolerance = 5e-3);

/// Random ordered initial pairs low <= high with independent uniform node
/// values: low in [0, scale/2], high = low + [0, scale/2].
std::vector<std::pair<Field, Field>> random_ordered_pairs(const Grid& grid, std::size_t count,
                                                          std::uint64_t seed, double scale);

void write_report(std::ostream& os, const ComparisonReport& r);
void write_report(std::ostream& os, const LaplacianSignReport& r);
void write_report(std::ostream& os, const SandwichReport& r);
/// Two columns t,value.
void write_series_csv(std::ostream& os, const std::vector<ViolationSample>& series,
                      const std::string& value_name);

}  // namespace growdom

#endif  // GROWDOM_VERIFY_HPP
