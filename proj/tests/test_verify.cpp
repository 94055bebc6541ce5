#include <doctest.h>

#include <cmath>
#include <sstream>

#include "growdom/eigenpair.hpp"
#include "growdom/error.hpp"
#include "growdom/model.hpp"
#include "growdom/solver.hpp"
#include "growdom/steady.hpp"
#include "growdom/verify.hpp"

using namespace growdom;

namespace {

const GrowthFunction kLogistic = GrowthFunction::logistic(1.0, 2.0);

ModelParams d01(std::size_t n = 199) { return {0.9, 2.0, 4.0, 0.5, kLogistic, Grid::interval(1.0, n)}; }
ModelParams d02(std::size_t n = 199) { return {0.9, 4.0, 4.0, 0.5, kLogistic, Grid::interval(1.0, n)}; }

CheckSettings short_run(double t_end = 5.0) {
  CheckSettings s;
  s.t_end = t_end;
  s.snapshot_every = 10;
  return s;
}

}  // namespace

TEST_CASE("envelopes of multiples of phi") {
  const EigenPair e = principal_eigen_analytic(Grid::interval(1.0, 49));
  const EnvelopePair one = make_envelopes(e.phi, e);
  CHECK(one.raw_upper == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.raw_lower == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.upper_amplitude == doctest::Approx(1.01));
  CHECK(one.lower_amplitude == doctest::Approx(0.99));

  const EnvelopePair two = make_envelopes(2.0 * e.phi, e);
  CHECK(two.raw_upper == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(two.raw_lower == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("envelopes bracket the datum") {
  const Grid g = Grid::interval(1.0, 99);
  const EigenPair e = principal_eigen_analytic(g);
  for (InitialShape shape : {InitialShape::SinPi, InitialShape::Bump, InitialShape::PaperSin}) {
    const Field v0 = initial_condition(g, shape, 1.7);
    const EnvelopePair env = make_envelopes(v0, e);
    const Field up = env.upper();
    const Field lo = env.lower();
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(up[i] >= v0[i]);
      CHECK(lo[i] <= v0[i]);
    }
  }
  const EnvelopePair bump = make_envelopes(initial_condition(g, InitialShape::Bump, 1.0), e);
  CHECK(bump.lower_amplitude == 0.0);
  CHECK(std::isfinite(bump.upper_amplitude));
  CHECK(bump.upper_amplitude > 0.0);

  Field neg = e.phi;
  neg[4] = -1e-3;
  CHECK_THROWS_AS(make_envelopes(neg, e), DomainError);
}

TEST_CASE("comparison examples") {
  const ModelParams p = d01();
  const Field high = initial_condition(p.grid(), InitialShape::SinPi, 1.0);
  const ComparisonReport half = check_comparison(0.5 * high, high, p, short_run());
  CHECK(half.pass);
  CHECK(half.max_violation == 0.0);

  const ComparisonReport zero = check_comparison(Field(p.grid()), high, p, short_run());
  CHECK(zero.pass);

  const ComparisonReport same = check_comparison(high, high, p, short_run());
  CHECK(same.pass);
  CHECK(same.max_violation == 0.0);
  CHECK(same.series.size() > 2);

  CHECK_THROWS_AS(check_comparison(high, 0.5 * high, p, short_run()), DomainError);
}

TEST_CASE("comparison on random pairs in both regimes") {
  for (const ModelParams& p : {d01(99), d02(99)}) {
    for (const auto& [low, high] : random_ordered_pairs(p.grid(), 8, 2024, 8.0)) {
      const ComparisonReport rep = check_comparison(low, high, p, short_run(3.0));
      CHECK(rep.pass);
      CHECK(rep.max_violation <= 1e-10);
    }
  }
}

TEST_CASE("random pairs are ordered, nonnegative and reproducible") {
  const Grid g = Grid::interval(1.0, 33);
  const auto a = random_ordered_pairs(g, 5, 7, 2.0);
  const auto b = random_ordered_pairs(g, 5, 7, 2.0);
  REQUIRE(a.size() == 5);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].first == b[k].first);
    CHECK(a[k].second == b[k].second);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(a[k].first[i] >= 0.0);
      CHECK(a[k].first[i] <= a[k].second[i]);
      CHECK(a[k].second[i] <= 2.0);
    }
  }
  CHECK_FALSE(random_ordered_pairs(g, 1, 8, 2.0)[0].first == a[0].first);
}

TEST_CASE("a forced Crank-Nicolson step breaks the ordering") {
  const ModelParams p = d02(199);
  Field low(p.grid());
  Field high(p.grid());
  high[100] = 1.0;
  CheckSettings s = short_run(0.02);
  s.dt = 0.02;
  s.snapshot_every = 1;
  s.scheme = DiffusionScheme::CrankNicolson;
  // A single spike under CN with c dt / dy^2 >> 1 overshoots below zero.
  CHECK_THROWS_AS(check_comparison(low, high, p, s), NumericalError);
}

TEST_CASE("laplacian sign is preserved from the eigenfunction") {
  for (const ModelParams& p : {d01(), d02()}) {
    const Field v0 = initial_condition(p.grid(), InitialShape::Eigen, 1.0);
    const LaplacianSignReport rep = check_laplacian_sign(v0, p, short_run(10.0));
    CHECK(rep.pass);
    CHECK(rep.max_ratio <= 1e-8);
    CHECK(rep.max_ratio_interior <= 1e-8);
    CHECK(rep.max_ratio_boundary <= 1e-8);
    CHECK(rep.max_ratio == doctest::Approx(std::max(rep.max_ratio_interior, rep.max_ratio_boundary)));
  }
}

TEST_CASE("laplacian sign preconditions") {
  const ModelParams p = d01();
  CHECK_THROWS_AS(check_laplacian_sign(initial_condition(p.grid(), InitialShape::Bump, 1.0), p, short_run()),
                  DomainError);
  const LaplacianSignReport zero = check_laplacian_sign(Field(p.grid()), p, short_run());
  CHECK(zero.pass);
}

TEST_CASE("sandwich on d02") {
  const ModelParams p = d02();
  CheckSettings s = short_run(60.0);
  s.snapshot_every = 100;
  const Field v0 = initial_condition(p.grid(), InitialShape::SinPi, 1.0);
  const SandwichReport rep = sandwich_run(v0, p, s);
  CHECK(rep.pass);
  CHECK(rep.ordered);
  CHECK(rep.max_order_violation <= 1e-10);
  CHECK(rep.lower_start == 0.0);
  CHECK(sup_distance(rep.upper_final, rep.lower_final) < 5e-3);
  CHECK(rep.distance_to_steady < 5e-3);
  CHECK(sup_distance(rep.middle_final, solve_steady(p).field) < 5e-3);
  REQUIRE(rep.spread.size() >= 11);
  for (std::size_t k = rep.spread.size() - 10; k < rep.spread.size(); ++k) {
    // Strictly decreasing until the trajectories coincide to roundoff.
    CHECK(rep.spread[k].value <= rep.spread[k - 1].value);
    if (rep.spread[k - 1].value > 1e-13) CHECK(rep.spread[k].value < rep.spread[k - 1].value);
  }
}

TEST_CASE("sandwich from the upper envelope itself") {
  const ModelParams p = d02(49);
  const EigenPair e = principal_eigen_analytic(p.grid());
  const Field v0 = 1.5 * e.phi;
  const EnvelopePair env = make_envelopes(v0, e, 0.0);
  CheckSettings s = short_run(20.0);
  const SandwichReport rep = sandwich_run(env.upper(), p, s);
  CHECK(sup_distance(rep.upper_final, rep.middle_final) <= 0.011 * 1.5);
  CHECK(rep.ordered);
}

TEST_CASE("sandwich with a compactly supported datum starts the lower envelope later") {
  const ModelParams p = d02(99);
  CheckSettings s = short_run(60.0);
  s.snapshot_every = 20;
  const SandwichReport rep = sandwich_run(initial_condition(p.grid(), InitialShape::Bump, 1.0), p, s);
  CHECK(rep.lower_start > 0.0);
  CHECK(rep.envelopes.lower_amplitude > 0.0);
  CHECK(rep.pass);
}

TEST_CASE("sandwich preconditions") {
  const Field v0 = initial_condition(d01().grid(), InitialShape::SinPi, 1.0);
  CHECK_THROWS_AS(sandwich_run(v0, d01(), short_run()), DomainError);
  CHECK_THROWS_AS(sandwich_run(Field(d02().grid()), d02(), short_run()), DomainError);
}

TEST_CASE("report formats") {
  const ModelParams p = d01(49);
  const Field high = initial_condition(p.grid(), InitialShape::SinPi, 1.0);
  const ComparisonReport rep = check_comparison(0.5 * high, high, p, short_run(1.0));
  std::ostringstream text;
  write_report(text, rep);
  CHECK(text.str().find("PASS") != std::string::npos);
  std::ostringstream csv;
  write_series_csv(csv, rep.series, "max_violation");
  CHECK(csv.str().rfind("t,max_violation\n", 0) == 0);
}
