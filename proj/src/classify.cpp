#include "growdom/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <ostream>

#include "growdom/eigenpair.hpp"
#include "growdom/error.hpp"
#include "growdom/steady.hpp"

namespace growdom {

std::string_view regime_name(Regime r) {
  return r == Regime::Persistence ? "Persistence" : "Extinction";
}

namespace {

double diffusion_loss(const ModelParams& p, double lambda1) {
  if (!(lambda1 > 0.0)) throw DomainError("lambda1 must be positive");
  const double m = p.growth().final_size();
  return p.d() * lambda1 / (m * m);
}

}  // namespace

RegimeReport classify(const ModelParams& p, double lambda1) {
  const double loss = diffusion_loss(p, lambda1);
  RegimeReport rep;
  rep.threshold = loss + p.h();
  rep.margin = p.r() - rep.threshold;
  rep.regime = rep.margin > 0.0 ? Regime::Persistence : Regime::Extinction;
  rep.critical_harvest = p.r() - loss;
  return rep;
}

double critical_harvest(const ModelParams& p, double lambda1) {
  return p.r() - diffusion_loss(p, lambda1);
}

std::string_view axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::H: return "h";
    case SweepAxis::R: return "r";
    case SweepAxis::M: return "m";
    case SweepAxis::D: return "d";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view name) {
  for (auto a : {SweepAxis::H, SweepAxis::R, SweepAxis::M, SweepAxis::D}) {
    if (axis_name(a) == name) return a;
  }
  throw DomainError("unknown sweep axis '" + std::string(name) + "' (expected h, r, m or d)");
}

ModelParams with_axis_value(const ModelParams& base, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::H: return base.with_h(value);
    case SweepAxis::R: return base.with_r(value);
    case SweepAxis::D: return base.with_d(value);
    case SweepAxis::M:
      if (base.growth().family() != GrowthFamily::Logistic) {
        throw DomainError("an m sweep needs a logistic growth function");
      }
      return base.with_growth(GrowthFunction::logistic(base.growth().k(), value));
  }
  throw DomainError("unknown sweep axis");
}

std::vector<SweepEntry> sweep(const ModelParams& base, SweepAxis axis,
                              std::span<const double> values,
                              const SweepOptions& options) {
  const double lambda1 =
      options.lambda1.value_or(principal_eigen_analytic(base.grid()).lambda1);

  auto evaluate = [&base, axis, lambda1, attach = options.attach_steady](double value) {
    SweepEntry entry;
    entry.value = value;
    try {
      const ModelParams p = with_axis_value(base, axis, value);
      entry.report = classify(p, lambda1);
      if (attach && entry.report->regime == Regime::Persistence) {
        const SteadyResult s = solve_steady(p);
        entry.max_vstar = sup_norm(s.field);
      }
    } catch (const Error& e) {
      entry.error = e.what();
    }
    return entry;
  };

  std::vector<std::future<SweepEntry>> pending;
  pending.reserve(values.size());
  for (double value : values) pending.push_back(std::async(std::launch::async, evaluate, value));
  std::vector<SweepEntry> entries;
  entries.reserve(values.size());
  for (auto& f : pending) entries.push_back(f.get());
  return entries;
}

void write_sweep_csv(std::ostream& os, SweepAxis axis, const std::vector<SweepEntry>& entries) {
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  os << axis_name(axis) << ",threshold,regime,margin,critical_harvest,max_vstar,note\n";
  // Largest steady maximum seen so far, for flagging harvest-driven decline.
  double peak = 0.0;
  for (const SweepEntry& e : entries) {
    os << num(e.value) << ',';
    if (!e.report) {
      std::string msg = e.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      os << ",error,,,," << msg << '\n';
      continue;
    }
    const RegimeReport& r = *e.report;
    os << num(r.threshold) << ',' << regime_name(r.regime) << ',' << num(r.margin) << ','
       << num(r.critical_harvest) << ',';
    std::string note;
    if (e.max_vstar) {
      os << num(*e.max_vstar);
      if (axis == SweepAxis::H && *e.max_vstar < peak) note = "persists at reduced amplitude";
      peak = std::max(peak, *e.max_vstar);
    }
    os << ',' << note << '\n';
  }
}

}  // namespace growdom
