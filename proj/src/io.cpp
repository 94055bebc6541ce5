#include "growdom/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "growdom/error.hpp"

namespace growdom {

namespace fs = std::filesystem;

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Field read_field_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("missing input file " + path.string());
  return read_field_csv(in);
}

}  // namespace

OutputSession::OutputSession(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  if (!fs::exists(dir_, ec)) {
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory " + dir_.string() + ": " + ec.message());
    created_dir_ = true;
  } else if (!fs::is_directory(dir_, ec)) {
    throw IoError(dir_.string() + " exists and is not a directory");
  }
}

OutputSession::~OutputSession() {
  if (committed_) return;
  std::error_code ec;
  for (const fs::path& p : written_) fs::remove(p, ec);
  if (created_dir_ && fs::is_empty(dir_, ec)) fs::remove(dir_, ec);
}

fs::path OutputSession::write(const std::string& name,
                              const std::function<void(std::ostream&)>& writer) {
  const fs::path path = dir_ / name;
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write " + path.string());
  written_.push_back(path);
  writer(os);
  os.flush();
  if (!os) throw IoError("error while writing " + path.string());
  return path;
}

void write_diagnostics_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,sup_norm,mass\n";
  for (const DiagnosticRow& row : traj.diagnostics) {
    os << num(row.t) << ',' << num(row.sup_norm) << ',' << num(row.mass) << '\n';
  }
}

void write_meta(std::ostream& os, const ModelParams& p, const Trajectory& traj) {
  const Grid& g = p.grid();
  os << "d = " << num(p.d()) << '\n'
     << "r = " << num(p.r()) << '\n'
     << "K = " << num(p.K()) << '\n'
     << "h = " << num(p.h()) << '\n'
     << "growth_family = "
     << (p.growth().family() == GrowthFamily::Logistic ? "logistic" : "constant") << '\n'
     << "k = " << num(p.growth().k()) << '\n'
     << "m = " << num(p.growth().m()) << '\n'
     << "dim = " << g.dim() << '\n';
  os << "extents =";
  for (std::size_t a = 0; a < g.dim(); ++a) os << (a ? ", " : " ") << num(g.extent(a));
  os << "\npoints =";
  for (std::size_t a = 0; a < g.dim(); ++a) os << (a ? ", " : " ") << g.points(a);
  os << "\nscheme = " << traj.scheme
     << " (implicit diffusion, explicit reaction and harvest, exact dilution factor)\n"
     << "dt = " << num(traj.dt) << '\n'
     << "steps = " << traj.steps << '\n'
     << "t_final = " << num(traj.final_time()) << '\n'
     << "stopped_at_steady = " << (traj.stopped_at_steady ? "true" : "false") << '\n'
     << "min_raw_value = " << num(traj.min_raw_value) << '\n';
}

void export_trajectory(OutputSession& out, const Trajectory& traj, const ModelParams& p) {
  out.write("diagnostics.csv", [&](std::ostream& os) { write_diagnostics_csv(os, traj); });
  std::vector<std::string> names;
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%05zu.csv", i);
    names.emplace_back(name);
    out.write(name, [&](std::ostream& os) { write_field_csv(os, traj.snapshots[i].field); });
  }
  out.write("snapshots.csv", [&](std::ostream& os) {
    os << "index,t,file\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      os << i << ',' << num(traj.snapshots[i].t) << ',' << names[i] << '\n';
    }
  });
  out.write("meta.txt", [&](std::ostream& os) { write_meta(os, p, traj); });
}

std::string steady_summary(const SteadyResult& s) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: residual %.3g, iterations %zu, max %.6g",
                s.regime == SteadyRegime::Positive ? "Positive" : "Trivial", s.residual,
                s.newton_iters, sup_norm(s.field));
  return buf;
}

void export_steady(OutputSession& out, const SteadyResult& s) {
  out.write("steady.csv", [&](std::ostream& os) { write_field_csv(os, s.field); });
  out.write("steady_summary.txt", [&](std::ostream& os) { os << steady_summary(s) << '\n'; });
}

std::vector<TrajectoryIndexEntry> read_trajectory_index(const fs::path& dir) {
  const fs::path path = dir / "snapshots.csv";
  std::ifstream in(path);
  if (!in) throw IoError("missing input file " + path.string());
  std::string line;
  std::getline(in, line);
  std::vector<TrajectoryIndexEntry> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    if (a == std::string::npos || b == std::string::npos) {
      throw IoError("malformed row in " + path.string());
    }
    entries.push_back({std::stod(line.substr(a + 1, b - a - 1)), line.substr(b + 1)});
  }
  return entries;
}

fs::path emit_trajectory_plot(OutputSession& out, const GrowthFunction& g) {
  const auto index = read_trajectory_index(out.dir());
  if (index.empty()) throw IoError("trajectory in " + out.dir().string() + " is empty");

  std::vector<std::pair<double, Field>> snaps;
  for (const auto& e : index) snaps.emplace_back(e.t, read_field_file(out.dir() / e.file));
  const Grid& grid = snaps.front().second.grid();

  if (grid.dim() == 1) {
    out.write("spacetime.dat", [&](std::ostream& os) {
      os << "# t x value (x = rho(t) y, boundary zeros included)\n";
      for (const auto& [t, field] : snaps) {
        const PhysicalField u = pushforward(field, g, t);
        os << num(t) << ' ' << 0 << ' ' << 0 << '\n';
        for (std::size_t i = 0; i < u.values.size(); ++i) {
          os << num(t) << ' ' << num(u.points[i][0]) << ' ' << num(u.values[i]) << '\n';
        }
        os << num(t) << ' ' << num(g.rho(t) * grid.extent(0)) << ' ' << 0 << "\n\n";
      }
    });
    return out.write("plot_spacetime.gp", [&](std::ostream& os) {
      os << "set terminal pngcairo size 900,600\n"
         << "set output 'spacetime.png'\n"
         << "set xlabel 'x = rho(t) y'\n"
         << "set ylabel 't'\n"
         << "set cblabel 'u(x,t)'\n"
         << "set view map\n"
         << "set pm3d map\n"
         << "splot 'spacetime.dat' using 2:1:3 with pm3d notitle\n";
    });
  }

  const auto& [t_final, final_field] = snaps.back();
  const PhysicalField u = pushforward(final_field, g, t_final);
  out.write("final_growing.dat", [&](std::ostream& os) {
    os << "# x1 x2 value at t = " << num(t_final) << '\n';
    for (std::size_t node = 0; node < u.values.size(); ++node) {
      os << num(u.points[node][0]) << ' ' << num(u.points[node][1]) << ' '
         << num(u.values[node]) << '\n';
      if ((node + 1) % grid.points(0) == 0) os << '\n';
    }
  });
  return out.write("plot_final.gp", [&](std::ostream& os) {
    os << "set terminal pngcairo size 800,700\n"
       << "set output 'final.png'\n"
       << "set xlabel 'x1'\nset ylabel 'x2'\n"
       << "set view map\nset pm3d map\n"
       << "splot 'final_growing.dat' using 1:2:3 with pm3d notitle\n";
  });
}

fs::path emit_field_plot(OutputSession& out, const std::string& field_csv,
                         const GrowthFunction& g) {
  const Field field = read_field_file(out.dir() / field_csv);
  const double scale = g.final_size();
  const std::string stem = fs::path(field_csv).stem().string();
  return out.write("plot_" + stem + ".gp", [&](std::ostream& os) {
    os << "set terminal pngcairo size 800,600\n"
       << "set output '" << stem << ".png'\n"
       << "set datafile separator ','\n";
    if (field.grid().dim() == 1) {
      os << "set xlabel 'x = m y'\nset ylabel 'v'\n"
         << "plot '" << field_csv << "' every ::1 using ($1*" << num(scale)
         << "):2 with lines title '" << stem << "'\n";
    } else {
      os << "set xlabel 'x1'\nset ylabel 'x2'\nset size ratio -1\n"
         << "plot '" << field_csv << "' every ::1 using ($1*" << num(scale) << "):($2*"
         << num(scale) << "):3 with image notitle\n";
    }
  });
}

}  // namespace growdom
