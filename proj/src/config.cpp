#include "growdom/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace growdom {

GrowthFunction ScenarioConfig::growth() const {
  return growth_family == GrowthFamily::Logistic ? GrowthFunction::logistic(k, m)
                                                 : GrowthFunction::constant();
}

Grid ScenarioConfig::grid() const { return build_grid(dim, extents, points); }

ModelParams ScenarioConfig::model() const { return {d, r, K, h, growth(), grid()}; }

Field ScenarioConfig::initial() const { return initial_condition(grid(), ic, amplitude); }

double ScenarioConfig::resolved_dt() const {
  return dt ? *dt : stable_dt(model(), scheme);
}

namespace {

std::string join_issues(const std::vector<ConfigIssue>& issues) {
  std::string out = "invalid configuration:";
  for (const ConfigIssue& i : issues) {
    out += "\n  ";
    if (i.line > 0) out += "line " + std::to_string(i.line) + ": ";
    out += i.message;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view s) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) return std::nullopt;
  return x;
}

std::optional<std::size_t> to_count(std::string_view s) {
  std::size_t x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return x;
}

std::optional<bool> to_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  return std::nullopt;
}

template <class T, class Conv>
std::optional<std::vector<T>> to_list(std::string_view s, Conv conv) {
  std::vector<T> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = conv(trim(s.substr(0, comma)));
    if (!item) return std::nullopt;
    out.push_back(*item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Returns an error message on a type mismatch.
using Setter = std::function<std::optional<std::string>(ScenarioConfig&, std::string_view)>;

struct KeySpec {
  std::string section;
  std::string key;
  Setter set;
};

template <class T, class Conv>
Setter assign(T ScenarioConfig::*member, Conv conv, const char* what) {
  return [=](ScenarioConfig& c, std::string_view v) -> std::optional<std::string> {
    const auto x = conv(v);
    if (!x) return std::string("expected ") + what + ", got '" + std::string(v) + "'";
    c.*member = static_cast<T>(*x);
    return std::nullopt;
  };
}

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> table = {
      {"model", "d", assign(&ScenarioConfig::d, to_double, "a number")},
      {"model", "r", assign(&ScenarioConfig::r, to_double, "a number")},
      {"model", "K", assign(&ScenarioConfig::K, to_double, "a number")},
      {"model", "h", assign(&ScenarioConfig::h, to_double, "a number")},
      {"model", "growth_family",
       [](ScenarioConfig& c, std::string_view v) -> std::optional<std::string> {
         if (v == "logistic") {
           c.growth_family = GrowthFamily::Logistic;
         } else if (v == "constant") {
           c.growth_family = GrowthFamily::Constant;
         } else {
           return "expected logistic or constant, got '" + std::string(v) + "'";
         }
         return std::nullopt;
       }},
      {"model", "k", assign(&ScenarioConfig::k, to_double, "a number")},
      {"model", "m", assign(&ScenarioConfig::m, to_double, "a number")},
      {"model", "dim", assign(&ScenarioConfig::dim, to_count, "an integer")},
      {"model", "extents",
       [](ScenarioConfig& c, std::string_view v) -> std::optional<std::string> {
         auto list = to_list<double>(v, to_double);
         if (!list) return "expected a comma-separated list of numbers";
         c.extents = *list;
         return std::nullopt;
       }},
      {"model", "points",
       [](ScenarioConfig& c, std::string_view v) -> std::optional<std::string> {
         auto list = to_list<std::size_t>(v, to_count);
         if (!list) return "expected a comma-separated list of integers";
         c.points = *list;
         return std::nullopt;
       }},
      {"ic", "name",
       [](ScenarioConfig& c, std::string_view v) -> std::optional<std::string> {
         try {
           c.ic = parse_shape(v);
         } catch (const DomainError& e) {
           return std::string(e.what());
         }
         return std::nullopt;
       }},
      {"ic", "amplitude", assign(&ScenarioConfig::amplitude, to_double, "a number")},
      {"run", "t_end", assign(&ScenarioConfig::t_end, to_double, "a number")},
      {"run", "dt",
       [](ScenarioConfig& c, std::string_view v) -> std::optional<std::string> {
         if (v == "auto") {
           c.dt.reset();
           return std::nullopt;
         }
         const auto x = to_double(v);
         if (!x) return "expected a number or auto, got '" + std::string(v) + "'";
         c.dt = *x;
         return std::nullopt;
       }},
      {"run", "snapshot_every", assign(&ScenarioConfig::snapshot_every, to_count, "an integer")},
      {"run", "scheme",
       [](ScenarioConfig& c, std::string_view v) -> std::optional<std::string> {
         try {
           c.scheme = parse_scheme(v);
         } catch (const DomainError& e) {
           return std::string(e.what());
         }
         return std::nullopt;
       }},
      {"run", "stop_at_steady", assign(&ScenarioConfig::stop_at_steady, to_bool, "true or false")},
      {"output", "directory",
       [](ScenarioConfig& c, std::string_view v) -> std::optional<std::string> {
         if (v.empty()) return "directory must not be empty";
         c.directory = std::string(v);
         return std::nullopt;
       }},
      {"output", "emit_plot", assign(&ScenarioConfig::emit_plot, to_bool, "true or false")},
  };
  return table;
}

const std::vector<std::string> kSections = {"model", "ic", "run", "output"};

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : DomainError(join_issues(issues)), issues_(std::move(issues)) {}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::vector<ConfigIssue> issues;
  // "section.key" -> line it was set on.
  std::map<std::string, std::size_t> seen;
  std::string section;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        issues.push_back({lineno, "malformed section header"});
        continue;
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (std::find(kSections.begin(), kSections.end(), section) == kSections.end()) {
        issues.push_back({lineno, "unknown section [" + section + "]"});
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      issues.push_back({lineno, "expected key = value"});
      continue;
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (section.empty()) {
      issues.push_back({lineno, "key '" + key + "' outside of any section"});
      continue;
    }
    const auto& table = key_table();
    const auto spec = std::find_if(table.begin(), table.end(), [&](const KeySpec& s) {
      return s.section == section && s.key == key;
    });
    if (spec == table.end()) {
      issues.push_back({lineno, "unknown key '" + key + "' in [" + section + "]"});
      continue;
    }
    const std::string full = section + "." + key;
    if (seen.count(full)) {
      issues.push_back({lineno, "duplicate key '" + key + "' (first set on line " +
                                    std::to_string(seen[full]) + ")"});
      continue;
    }
    if (auto err = spec->set(cfg, value)) {
      issues.push_back({lineno, key + ": " + *err});
      continue;
    }
    seen[full] = lineno;
  }

  auto line_of = [&](const std::string& full) {
    const auto it = seen.find(full);
    return it == seen.end() ? std::size_t{0} : it->second;
  };
  auto has = [&](const std::string& full) { return seen.count(full) > 0; };

  const bool logistic = cfg.growth_family == GrowthFamily::Logistic;
  std::vector<std::string> required = {"model.d", "model.r", "model.K", "model.h",
                                       "model.growth_family", "model.dim", "model.extents",
                                       "model.points", "ic.name", "run.t_end"};
  if (logistic) {
    required.insert(required.begin() + 5, {"model.k", "model.m"});
  }
  for (const std::string& full : required) {
    if (!has(full)) {
      const auto dot = full.find('.');
      issues.push_back({0, "missing required key '" + full.substr(dot + 1) + "' in [" +
                               full.substr(0, dot) + "]"});
    }
  }

  auto check = [&](const std::string& full, bool ok, const std::string& message) {
    if (has(full) && !ok) issues.push_back({line_of(full), message});
  };
  check("model.d", cfg.d > 0.0, "d must be positive");
  check("model.r", cfg.r > 0.0, "r must be positive");
  check("model.K", cfg.K > 0.0, "K must be positive");
  check("model.h", cfg.h >= 0.0, "h must be nonnegative");
  if (logistic) {
    check("model.k", cfg.k > 0.0, "k must be positive for logistic growth");
    check("model.m", cfg.m > 1.0, "m must exceed 1 for logistic growth");
  } else {
    for (const char* key : {"model.k", "model.m"}) {
      if (has(key)) {
        issues.push_back({line_of(key), std::string(key + 6) +
                                            " applies only to logistic growth"});
      }
    }
  }
  check("model.dim", cfg.dim == 1 || cfg.dim == 2, "dim must be 1 or 2");
  check("model.extents", cfg.extents.size() == cfg.dim,
        "extents must list one length per dimension");
  check("model.extents",
        std::all_of(cfg.extents.begin(), cfg.extents.end(), [](double e) { return e > 0.0; }),
        "extents must be positive");
  check("model.points", cfg.points.size() == cfg.dim,
        "points must list one count per dimension");
  check("model.points",
        std::all_of(cfg.points.begin(), cfg.points.end(),
                    [](std::size_t n) { return n >= Grid::kMinPoints; }),
        "points must be at least 3 per axis");
  check("ic.amplitude", cfg.amplitude >= 0.0, "amplitude must be nonnegative");
  check("run.t_end", cfg.t_end > 0.0, "t_end must be positive");
  check("run.dt", !cfg.dt || *cfg.dt > 0.0, "dt must be positive or auto");
  check("run.snapshot_every", cfg.snapshot_every >= 1, "snapshot_every must be at least 1");

  if (!issues.empty()) throw ConfigError(std::move(issues));
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& c) {
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  auto join = [](const auto& items, auto fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + fmt(items[i]);
    return out;
  };
  std::ostringstream os;
  os << "[model]\n"
     << "d = " << num(c.d) << '\n'
     << "r = " << num(c.r) << '\n'
     << "K = " << num(c.K) << '\n'
     << "h = " << num(c.h) << '\n';
  if (c.growth_family == GrowthFamily::Logistic) {
    os << "growth_family = logistic\n"
       << "k = " << num(c.k) << '\n'
       << "m = " << num(c.m) << '\n';
  } else {
    os << "growth_family = constant\n";
  }
  os << "dim = " << c.dim << '\n'
     << "extents = " << join(c.extents, num) << '\n'
     << "points = " << join(c.points, [](std::size_t n) { return std::to_string(n); }) << '\n'
     << "\n[ic]\n"
     << "name = " << shape_name(c.ic) << '\n'
     << "amplitude = " << num(c.amplitude) << '\n'
     << "\n[run]\n"
     << "t_end = " << num(c.t_end) << '\n'
     << "dt = " << (c.dt ? num(*c.dt) : std::string("auto")) << '\n'
     << "snapshot_every = " << c.snapshot_every << '\n'
     << "scheme = " << scheme_name(c.scheme) << '\n'
     << "stop_at_steady = " << (c.stop_at_steady ? "true" : "false") << '\n'
     << "\n[output]\n"
     << "directory = " << c.directory << '\n'
     << "emit_plot = " << (c.emit_plot ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace growdom
