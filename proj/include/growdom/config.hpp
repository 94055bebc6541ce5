#ifndef GROWDOM_CONFIG_HPP
#define GROWDOM_CONFIG_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growdom/error.hpp"
#include "growdom/growth.hpp"
#include "growdom/model.hpp"
#include "growdom/solver.hpp"

namespace growdom {

/// Scenario file contents. Format: `key = value` lines grouped under
/// [model], [ic], [run] and [output]; `#` starts a comment.
///
/// [model]  d r K h growth_family(logistic|constant) k m dim extents points
///          (k and m only for logistic; extents/points comma separated)
/// [ic]     name(sin_pi|eigen|bump|paper_sin) amplitude=1
/// [run]    t_end dt=auto snapshot_every=100 scheme=backward_euler
///          stop_at_steady=false
/// [output] directory=out emit_plot=false
struct ScenarioConfig {
  double d = 0.0;
  double r = 0.0;
  double K = 0.0;
  double h = 0.0;
  GrowthFamily growth_family = GrowthFamily::Logistic;
  double k = 0.0;
  double m = 0.0;
  std::size_t dim = 1;
  std::vector<double> extents;
  std::vector<std::size_t> points;

  InitialShape ic = InitialShape::SinPi;
  double amplitude = 1.0;

  double t_end = 0.0;
  std::optional<double> dt;  // nullopt: auto
  std::size_t snapshot_every = 100;
  DiffusionScheme scheme = DiffusionScheme::BackwardEuler;
  bool stop_at_steady = false;

  std::string directory = "out";
  bool emit_plot = false;

  GrowthFunction growth() const;
  Grid grid() const;
  ModelParams model() const;
  Field initial() const;
  /// dt, or stable_dt(model(), scheme) when dt is auto.
  double resolved_dt() const;

  bool operator==(const ScenarioConfig&) const = default;
};

struct ConfigIssue {
  std::size_t line = 0;  // 0: not tied to a line (missing key)
  std::string message;
};

class ConfigError : public DomainError {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

/// Parses and validates; every problem found is reported in one ConfigError.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);
/// Inverse of parse_config (17 significant digits for every number).
std::string serialize_config(const ScenarioConfig& config);

}  // namespace growdom

#endif  // GROWDOM_CONFIG_HPP
