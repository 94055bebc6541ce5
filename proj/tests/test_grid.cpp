#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "growdom/error.hpp"
#include "growdom/grid.hpp"

using namespace growdom;

namespace {

constexpr double pi = std::numbers::pi;

Field sin_field(std::size_t n) {
  return Field::sample(Grid::interval(1.0, n), [](double y, double) { return std::sin(pi * y); });
}

double laplacian_error(std::size_t n) {
  const Field v = sin_field(n);
  const Field lap = laplacian(v);
  double err = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    err = std::max(err, std::abs(lap[i] + pi * pi * v[i]));
  }
  return err;
}

Field random_field(const Grid& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Field f(g);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = u(rng);
  return f;
}

}  // namespace

TEST_CASE("build_grid") {
  const double e1[] = {1.0};
  const std::size_t n99[] = {99};
  const Grid g = build_grid(1, e1, n99);
  CHECK(g.spacing(0) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(g.size() == 99);

  const double e2[] = {1.0, 1.0};
  const std::size_t n49[] = {49, 49};
  CHECK(build_grid(2, e2, n49).size() == 2401);

  const std::size_t n2[] = {2};
  CHECK_THROWS_AS(build_grid(1, e1, n2), DomainError);
  const double bad[] = {0.0};
  CHECK_THROWS_AS(build_grid(1, bad, n99), DomainError);
  CHECK_THROWS_AS(build_grid(2, e1, n99), DomainError);
  const double e3[] = {1.0, 1.0, 1.0};
  const std::size_t n3[] = {5, 5, 5};
  CHECK_THROWS_AS(build_grid(3, e3, n3), DomainError);
}

TEST_CASE("spacing times (N + 1) reproduces the extent") {
  for (std::size_t n : {3u, 7u, 49u, 99u, 199u, 398u}) {
    for (double L : {0.3, 1.0, 2.0, 7.5}) {
      const Grid g = Grid::interval(L, n);
      CHECK(g.spacing(0) * static_cast<double>(n + 1) == doctest::Approx(L).epsilon(1e-15));
    }
  }
}

TEST_CASE("laplacian of a linear function vanishes away from the boundary") {
  const Field v = Field::sample(Grid::interval(1.0, 21), [](double y, double) { return 3.0 * y + 2.0; });
  const Field lap = laplacian(v);
  for (std::size_t i = 1; i + 1 < v.size(); ++i) CHECK(std::abs(lap[i]) < 1e-9);
  // Zero ghosts make the boundary-adjacent entries nonzero.
  CHECK(std::abs(lap[0]) > 1.0);
  CHECK(sup_norm(laplacian(Field(Grid::interval(1.0, 9)))) == 0.0);
}

TEST_CASE("laplacian of sin(pi y) approximates -pi^2 sin(pi y)") {
  const Field v = sin_field(199);
  const Field lap = laplacian(v);
  double rel = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    rel = std::max(rel, std::abs(lap[i] + pi * pi * v[i]) / (pi * pi * sup_norm(v)));
  }
  CHECK(rel < 1e-3);
}

TEST_CASE("laplacian converges at second order") {
  const double ratio1 = laplacian_error(49) / laplacian_error(99);
  const double ratio2 = laplacian_error(99) / laplacian_error(199);
  CHECK(ratio1 == doctest::Approx(4.0).epsilon(0.2));
  CHECK(ratio2 == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("2D laplacian of a product of sines") {
  const Grid g = Grid::rectangle(1.0, 2.0, 39, 79);
  const Field v = Field::sample(g, [](double a, double b) { return std::sin(pi * a) * std::sin(pi * b / 2.0); });
  const Field lap = laplacian(v);
  const double lambda = pi * pi * (1.0 + 0.25);
  double err = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) err = std::max(err, std::abs(lap[i] + lambda * v[i]));
  CHECK(err / lambda < 1e-3);
}

TEST_CASE("laplacian is symmetric and negative semidefinite") {
  std::mt19937_64 rng(42);
  for (const Grid& g : {Grid::interval(1.0, 31), Grid::rectangle(1.0, 0.5, 9, 13)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Field a = random_field(g, rng);
      const Field b = random_field(g, rng);
      CHECK(std::abs(inner_product(laplacian(a), b) - inner_product(a, laplacian(b))) < 1e-10);
      CHECK(inner_product(laplacian(a), a) <= 0.0);
    }
  }
}

TEST_CASE("sup_norm and mass") {
  const Field zero(Grid::interval(1.0, 9));
  CHECK(sup_norm(zero) == 0.0);
  CHECK(mass(zero) == 0.0);

  const Field v = sin_field(199);
  CHECK(std::abs(mass(v) - 2.0 / pi) < 1e-4);
  // N odd puts y = 0.5 on the grid.
  CHECK(sup_norm(v) == doctest::Approx(1.0).epsilon(1e-15));
  const Field even = sin_field(200);
  CHECK(sup_norm(even) <= 1.0);
  CHECK(sup_norm(even) > std::cos(pi * even.grid().spacing(0)));

  const Grid sq = Grid::rectangle(1.0, 1.0, 99, 99);
  const Field s2 = Field::sample(sq, [](double a, double b) { return std::sin(pi * a) * std::sin(pi * b); });
  CHECK(std::abs(mass(s2) - 4.0 / (pi * pi)) < 1e-3);
}

TEST_CASE("fields reject bad values") {
  const Grid g = Grid::interval(1.0, 3);
  CHECK_THROWS_AS(Field(g, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(Field(g, {1.0, std::nan(""), 0.0}), DomainError);
  CHECK_THROWS_AS(sup_distance(Field(g), Field(Grid::interval(1.0, 4))), DomainError);
  CHECK(Grid().size() == 3);
}

TEST_CASE("boundary adjacency") {
  const Grid g = Grid::rectangle(1.0, 1.0, 4, 3);
  CHECK(g.adjacent_to_boundary(g.node(0, 1)));
  CHECK(g.adjacent_to_boundary(g.node(2, 2)));
  CHECK_FALSE(g.adjacent_to_boundary(g.node(1, 1)));
  CHECK_FALSE(g.adjacent_to_boundary(g.node(2, 1)));
}

TEST_CASE("field CSV format and round trip") {
  const Field v = Field::sample(Grid::interval(1.0, 3), [](double y, double) { return y / 3.0; });
  std::ostringstream os;
  write_field_csv(os, v);
  CHECK(os.str() ==
        "y1,value\n"
        "0.25,0.083333333333333329\n"
        "0.5,0.16666666666666666\n"
        "0.75,0.25\n");

  std::mt19937_64 rng(7);
  for (const Grid& g : {Grid::interval(2.0, 17), Grid::rectangle(1.0, 3.0, 5, 6)}) {
    const Field f = random_field(g, rng);
    std::stringstream ss;
    write_field_csv(ss, f);
    const Field back = read_field_csv(ss);
    CHECK(back.grid().dim() == g.dim());
    CHECK(sup_distance(back, f) == 0.0);
  }
  std::istringstream bad("x,value\n1,2\n");
  CHECK_THROWS_AS(read_field_csv(bad), DomainError);
}
