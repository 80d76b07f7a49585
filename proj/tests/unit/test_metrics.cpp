#include <doctest.h>

#include <cmath>
#include <random>

#include "moranlab/error.hpp"
#include "moranlab/metrics.hpp"

using namespace moranlab;

TEST_CASE("snowflake distance") {
  const auto line = MetricSpace::euclidean(1);
  CHECK(snowflake_distance(line, 0.5, {0.0}, {4.0}) == doctest::Approx(2.0));
  CHECK(snowflake_distance(line, 0.5, {3.0}, {3.0}) == 0.0);
  CHECK(snowflake_distance(line, 0.5, {1.0}, {2.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(MetricSpace::snowflake(line, 1.5), DomainError);
  CHECK_THROWS_AS(MetricSpace::snowflake(line, 0.0), DomainError);
}

TEST_CASE("Heisenberg group law") {
  const HeisenbergPoint p{1.5, -2.0, 0.25}, e{};
  CHECK(heisenberg_multiply(p, e) == p);
  const auto q = heisenberg_multiply({1, 0, 0}, {0, 1, 0});
  CHECK(q.x == 1.0);
  CHECK(q.y == 1.0);
  CHECK(q.t == doctest::Approx(0.5));
  const auto id = heisenberg_multiply(p, heisenberg_inverse(p));
  CHECK(id.x == 0.0);
  CHECK(id.y == 0.0);
  CHECK(id.t == doctest::Approx(0.0));
}

TEST_CASE("Heisenberg gauge") {
  CHECK(heisenberg_gauge({1, 0, 0}) == doctest::Approx(1.0));
  CHECK(heisenberg_gauge({0, 0, 1}) == doctest::Approx(1.0));
  CHECK(heisenberg_gauge(heisenberg_dilate({1, 0, 0}, 2.0)) == doctest::Approx(2.0));
}

TEST_CASE("Heisenberg distance is homogeneous and left invariant") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int k = 0; k < 2000; ++k) {
    const HeisenbergPoint p{U(rng), U(rng), U(rng)}, q{U(rng), U(rng), U(rng)}, g{U(rng), U(rng), U(rng)};
    const double r = std::abs(U(rng)) + 0.1;
    const double d = heisenberg_distance(p, q);
    CHECK(std::abs(heisenberg_distance(heisenberg_dilate(p, r), heisenberg_dilate(q, r)) - r * d) <= 1e-12 * (1 + r * d));
    CHECK(heisenberg_distance(heisenberg_multiply(g, p), heisenberg_multiply(g, q)) == doctest::Approx(d).epsilon(1e-10));
  }
}

namespace {

void check_metric_axioms(const MetricSpace& space, const std::function<Point()>& sample, int n) {
  int bad_sym = 0, bad_diag = 0, bad_tri = 0;
  for (int k = 0; k < n; ++k) {
    const Point x = sample(), y = sample(), z = sample();
    const double dxy = space.distance(x, y);
    if (std::abs(dxy - space.distance(y, x)) > 1e-12) ++bad_sym;
    if (space.distance(x, x) != 0.0) ++bad_diag;
    if (dxy > space.distance(x, z) + space.distance(z, y) + 1e-12) ++bad_tri;
  }
  CHECK(bad_sym == 0);
  CHECK(bad_diag == 0);
  CHECK(bad_tri == 0);
}

}  // namespace

TEST_CASE("shipped spaces satisfy the metric axioms on random triples") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  std::uniform_int_distribution<int> sym(0, 2);
  check_metric_axioms(MetricSpace::euclidean(2), [&] { return Point{U(rng), U(rng)}; }, 10000);
  check_metric_axioms(MetricSpace::euclidean(3), [&] { return Point{U(rng), U(rng), U(rng)}; }, 10000);
  check_metric_axioms(MetricSpace::snowflake(MetricSpace::euclidean(2), 0.6), [&] { return Point{U(rng), U(rng)}; }, 10000);
  check_metric_axioms(MetricSpace::heisenberg(), [&] { return Point{U(rng), U(rng), U(rng)}; }, 10000);
  check_metric_axioms(MetricSpace::symbol_space(Alphabet(3)), [&] {
    Point p(8);
    for (auto& s : p) s = sym(rng);
    return p;
  }, 10000);
}

TEST_CASE("snowflake of an ultrametric is an ultrametric") {
  const auto sym = MetricSpace::symbol_space(Alphabet(2));
  const auto snow = MetricSpace::snowflake(sym, 0.5);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> bit(0, 1);
  auto w = [&] {
    Point p(10);
    for (auto& s : p) s = bit(rng);
    return p;
  };
  for (int k = 0; k < 5000; ++k) {
    const Point x = w(), y = w(), z = w();
    CHECK(snow.distance(x, y) <= std::max(snow.distance(x, z), snow.distance(z, y)) + 1e-15);
  }
}

TEST_CASE("comb membership") {
  CHECK(comb_membership(0.7, {0.5, 0.0}, 6));
  CHECK(comb_membership(0.7, {0.0, 0.5}, 6));
  for (double r : {0.55, 0.7, 0.9}) CHECK(comb_membership(r, {1.0, r}, 6));
  CHECK_FALSE(comb_membership(0.7, {0.5, 0.5}, 6));
  CHECK_FALSE(comb_membership(0.7, {4.0, 0.0}, 6));
  CHECK(comb_anchor(0.5 + 0.1, {1, 0, 1}) == doctest::Approx(1.0 + 0.36));
}

TEST_CASE("overlap radius") {
  CHECK(MetricSpace::euclidean(2).overlap_radius(0.3) == doctest::Approx(0.6));
  CHECK(MetricSpace::symbol_space(Alphabet(2)).overlap_radius(0.25) == 0.25);
}
