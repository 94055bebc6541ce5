#ifndef GROWDOM_CLASSIFY_HPP
#define GROWDOM_CLASSIFY_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "growdom/model.hpp"

namespace growdom {

enum class Regime { Extinction, Persistence };

std::string_view regime_name(Regime r);

/// Position of r relative to the threshold d lambda1/m^2 + h, with m the
/// final domain size. The boundary case r == threshold is Extinction.
struct RegimeReport {
  double threshold = 0.0;
  Regime regime = Regime::Extinction;
  /// r - threshold.
  double margin = 0.0;
  /// h* = r - d lambda1/m^2; negative means extinction for every h >= 0.
  double critical_harvest = 0.0;
};

RegimeReport classify(const ModelParams& p, double lambda1);
double critical_harvest(const ModelParams& p, double lambda1);

enum class SweepAxis { H, R, M, D };

std::string_view axis_name(SweepAxis a);
SweepAxis parse_axis(std::string_view name);

/// Copy of base with one parameter replaced. M keeps the base growth rate k
/// and requires a logistic base. Throws DomainError on invalid values.
ModelParams with_axis_value(const ModelParams& base, SweepAxis axis, double value);

struct SweepEntry {
  double value = 0.0;
  std::optional<RegimeReport> report;
  /// max v* from solve_steady, when requested and the regime is Persistence.
  std::optional<double> max_vstar;
  /// Non-empty when this entry failed; the rest of the sweep still runs.
  std::string error;
};

struct SweepOptions {
  bool attach_steady = false;
  /// Defaults to the closed-form lambda1 of the base grid.
  std::optional<double> lambda1;
};

/// One entry per value, in input order. Entries are evaluated concurrently.
std::vector<SweepEntry> sweep(const ModelParams& base, SweepAxis axis,
                              std::span<const double> values,
                              const SweepOptions& options = {});

/// Columns: value,threshold,regime,margin,critical_harvest,max_vstar,note.
void write_sweep_csv(std::ostream& os, SweepAxis axis, const std::vector<SweepEntry>& entries);

}  // namespace growdom

#endif  // GROWDOM_CLASSIFY_HPP
