#ifndef GROWDOM_IO_HPP
#define GROWDOM_IO_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "growdom/grid.hpp"
#include "growdom/growth.hpp"
#include "growdom/model.hpp"
#include "growdom/solver.hpp"
#include "growdom/steady.hpp"

namespace growdom {

/// Files written into one output directory. Unless commit() is called, the
/// destructor removes every file it wrote, and the directory itself when the
/// session created it.
class OutputSession {
 public:
  explicit OutputSession(std::filesystem::path dir);
  ~OutputSession();
  OutputSession(const OutputSession&) = delete;
  OutputSession& operator=(const OutputSession&) = delete;

  const std::filesystem::path& dir() const { return dir_; }
  /// Writes dir/name through `writer`; throws IoError if the file cannot be
  /// created.
  std::filesystem::path write(const std::string& name,
                              const std::function<void(std::ostream&)>& writer);
  void commit() { committed_ = true; }

 private:
  std::filesystem::path dir_;
  bool created_dir_ = false;
  bool committed_ = false;
  std::vector<std::filesystem::path> written_;
};

/// Columns t,sup_norm,mass.
void write_diagnostics_csv(std::ostream& os, const Trajectory& traj);
/// key = value lines: parameters, growth, grid, scheme, dt.
void write_meta(std::ostream& os, const ModelParams& p, const Trajectory& traj);

/// diagnostics.csv, snapshots.csv (index,t,file), snapshot_NNNNN.csv, meta.txt.
void export_trajectory(OutputSession& out, const Trajectory& traj, const ModelParams& p);

/// regime, residual, iterations and max value on one line.
std::string steady_summary(const SteadyResult& s);
/// steady.csv and steady_summary.txt.
void export_steady(OutputSession& out, const SteadyResult& s);

struct TrajectoryIndexEntry {
  double t;
  std::string file;
};
/// Reads dir/snapshots.csv.
std::vector<TrajectoryIndexEntry> read_trajectory_index(const std::filesystem::path& dir);

/// Gnuplot script plus data for a trajectory directory written by
/// export_trajectory. 1D: space-time map over the growing interval
/// x = rho(t) y (spacetime.dat, plot_spacetime.gp). 2D: map of the final
/// snapshot in growing coordinates (final_growing.dat, plot_final.gp).
/// Throws IoError for missing files or an empty trajectory.
std::filesystem::path emit_trajectory_plot(OutputSession& out, const GrowthFunction& g);

/// Line plot (1D) or map (2D) of a single field CSV in the output
/// directory, drawn on the fully grown domain x = m y.
std::filesystem::path emit_field_plot(OutputSession& out, const std::string& field_csv,
                                      const GrowthFunction& g);

}  // namespace growdom

#endif  // GROWDOM_IO_HPP
