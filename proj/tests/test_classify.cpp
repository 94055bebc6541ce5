#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "growdom/classify.hpp"
#include "growdom/error.hpp"
#include "growdom/model.hpp"
#include "growdom/solver.hpp"
#include "growdom/steady.hpp"

using namespace growdom;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double lambda1 = pi * pi;
const GrowthFunction kLogistic = GrowthFunction::logistic(1.0, 2.0);

ModelParams d01(std::size_t n = 199) { return {0.9, 2.0, 4.0, 0.5, kLogistic, Grid::interval(1.0, n)}; }
ModelParams d02(std::size_t n = 199) { return {0.9, 4.0, 4.0, 0.5, kLogistic, Grid::interval(1.0, n)}; }

// 0.9 pi^2 / 4 + 0.5, 4 - 0.9 pi^2 / 4 and sqrt(0.9 pi^2 / 1.5), 30-digit arithmetic.
constexpr double kThreshold = 2.72066099024510574402;
constexpr double kCritical = 1.77933900975489425597;
constexpr double kCriticalM = 2.43346720558416716819;

}  // namespace

TEST_CASE("d01 and d02 thresholds") {
  const RegimeReport a = classify(d01(), lambda1);
  CHECK(a.threshold == doctest::Approx(kThreshold).epsilon(1e-15));
  CHECK(std::abs(a.threshold - 2.7207) < 1e-4);
  CHECK(a.regime == Regime::Extinction);
  CHECK(a.margin < 0.0);

  const RegimeReport b = classify(d02(), lambda1);
  CHECK(b.regime == Regime::Persistence);
  CHECK(std::abs(b.margin - 1.2793) < 1e-4);
  CHECK(b.critical_harvest == doctest::Approx(kCritical).epsilon(1e-15));
  CHECK(std::abs(b.threshold - (4.0 - b.margin)) < 1e-15);
  CHECK(regime_name(b.regime) == "Persistence");
}

TEST_CASE("boundary case is extinction") {
  const double d = 0.9;
  const ModelParams p{d, d * lambda1, 4.0, 0.0, GrowthFunction::constant(), Grid::interval(1.0, 49)};
  const RegimeReport rep = classify(p, lambda1);
  CHECK(rep.margin == 0.0);
  CHECK(rep.regime == Regime::Extinction);

  const ModelParams q = d02().with_h(0.0).with_r(0.9 * lambda1 / 4.0);
  CHECK(critical_harvest(q, lambda1) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("critical harvest separates the regimes") {
  const ModelParams p = d02();
  const double hs = critical_harvest(p, lambda1);
  CHECK(classify(p.with_h(hs + 0.01), lambda1).regime == Regime::Extinction);
  CHECK(classify(p.with_h(hs - 0.01), lambda1).regime == Regime::Persistence);
  CHECK(critical_harvest(d01(), lambda1) == doctest::Approx(2.0 - 0.9 * lambda1 / 4.0));
  CHECK_THROWS_AS(classify(p, 0.0), DomainError);
  CHECK_THROWS_AS(critical_harvest(p, -1.0), DomainError);
}

TEST_CASE("threshold monotonicity and K independence") {
  const ModelParams base = d01();
  double prev = 1e300;
  for (double m : {1.1, 1.5, 2.0, 3.0, 8.0}) {
    const double t = classify(base.with_growth(GrowthFunction::logistic(1.0, m)), lambda1).threshold;
    CHECK(t < prev);
    prev = t;
  }
  prev = -1.0;
  for (double d : {0.1, 0.5, 0.9, 2.0}) {
    const double t = classify(base.with_d(d), lambda1).threshold;
    CHECK(t > prev);
    prev = t;
  }
  prev = -1.0;
  for (double h : {0.0, 0.5, 1.0, 3.0}) {
    const double t = classify(base.with_h(h), lambda1).threshold;
    CHECK(t > prev);
    prev = t;
  }
  const ModelParams other{0.9, 2.0, 50.0, 0.5, kLogistic, base.grid()};
  CHECK(classify(other, lambda1).threshold == classify(base, lambda1).threshold);
}

TEST_CASE("harvest sweep at d02") {
  const std::vector<double> hs{0.5, 1.0, 1.5, 1.8, 2.0};
  SweepOptions opt;
  opt.attach_steady = true;
  const auto entries = sweep(d02(), SweepAxis::H, hs, opt);
  REQUIRE(entries.size() == hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    CHECK(entries[i].value == hs[i]);
    REQUIRE(entries[i].report);
    CHECK(entries[i].error.empty());
  }
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(entries[i].report->regime == Regime::Persistence);
    REQUIRE(entries[i].max_vstar);
  }
  CHECK(*entries[0].max_vstar > *entries[1].max_vstar);
  CHECK(*entries[1].max_vstar > *entries[2].max_vstar);
  for (std::size_t i = 3; i < 5; ++i) {
    CHECK(entries[i].report->regime == Regime::Extinction);
    CHECK_FALSE(entries[i].max_vstar);
  }

  std::ostringstream os;
  write_sweep_csv(os, SweepAxis::H, entries);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "h,threshold,regime,margin,critical_harvest,max_vstar,note");
  std::vector<std::string> rows;
  while (std::getline(is, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].find(",Persistence,") != std::string::npos);
  CHECK(rows[1].find("persists at reduced amplitude") != std::string::npos);
  CHECK(rows[4].find(",Extinction,") != std::string::npos);
}

TEST_CASE("m sweep flips to persistence above the critical size") {
  const std::vector<double> ms{1.2, 2.0, 2.43, 2.44, 5.0};
  const auto entries = sweep(d01(), SweepAxis::M, ms);
  CHECK(entries[0].report->threshold > entries[1].report->threshold);
  CHECK(entries[1].report->threshold > entries[4].report->threshold);
  CHECK(entries[0].report->regime == Regime::Extinction);
  CHECK(entries[1].report->regime == Regime::Extinction);
  CHECK(entries[2].report->regime == Regime::Extinction);
  CHECK(entries[3].report->regime == Regime::Persistence);
  CHECK(entries[4].report->regime == Regime::Persistence);
  const auto at = sweep(d01(), SweepAxis::M, std::vector<double>{kCriticalM * (1.0 + 1e-12)});
  CHECK(at[0].report->regime == Regime::Persistence);
  CHECK(std::abs(at[0].report->margin) < 1e-10);
}

TEST_CASE("invalid sweep entries do not stop the sweep") {
  const std::vector<double> values{0.5, -1.0, std::nan(""), 1.0};
  const auto entries = sweep(d02(49), SweepAxis::H, values);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].report);
  CHECK_FALSE(entries[1].report);
  CHECK_FALSE(entries[1].error.empty());
  CHECK_FALSE(entries[2].report);
  CHECK(entries[3].report);

  const auto ms = sweep(d02(49), SweepAxis::M, std::vector<double>{0.5, 3.0});
  CHECK(ms[0].error == "m must exceed 1 for logistic growth");
  CHECK(ms[1].report);
  const ModelParams fixed = d02(49).with_growth(GrowthFunction::constant());
  CHECK_FALSE(sweep(fixed, SweepAxis::M, std::vector<double>{2.0})[0].report);
  CHECK(parse_axis("d") == SweepAxis::D);
  CHECK_THROWS_AS(parse_axis("K"), DomainError);
}

TEST_CASE("classification agrees with the steady solver on swept points") {
  const std::vector<double> rs{1.0, 2.0, 2.7, 2.75, 3.0, 4.0, 6.0};
  const auto entries = sweep(d01(99), SweepAxis::R, rs);
  for (const SweepEntry& e : entries) {
    const SteadyRegime s = solve_steady(d01(99).with_r(e.value)).regime;
    CHECK((e.report->regime == Regime::Persistence) == (s == SteadyRegime::Positive));
  }
  const auto ds = sweep(d02(99), SweepAxis::D, std::vector<double>{0.5, 1.0, 1.4, 1.5, 3.0});
  for (const SweepEntry& e : ds) {
    const SteadyRegime s = solve_steady(d02(99).with_d(e.value)).regime;
    CHECK((e.report->regime == Regime::Persistence) == (s == SteadyRegime::Positive));
  }
}

TEST_CASE("classification agrees with long-time integration on the corner cases") {
  for (const ModelParams& base : {d01(99), d02(99)}) {
    for (double h : {0.5, 1.9}) {
      const ModelParams p = base.with_h(h);
      const Regime regime = classify(p, lambda1).regime;
      const Field v0 = initial_condition(p.grid(), InitialShape::SinPi, 1.0);
      const double final = sup_norm(integrate(v0, 80.0, stable_dt(p), p).final_field());
      if (regime == Regime::Persistence) {
        CHECK(final > 0.1);
      } else {
        CHECK(final < 1e-3);
      }
    }
  }
}
