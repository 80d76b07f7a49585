#include <doctest.h>

#include <cmath>
#include <random>

#include "moranlab/diameter_model.hpp"
#include "moranlab/error.hpp"
#include "moranlab/pressure.hpp"

using namespace moranlab;

namespace {
const double kS = std::log(2.0) / std::log(3.0);
}

TEST_CASE("pressure closed forms") {
  CHECK(pressure_at(DiameterModel::quadratic_exponent(), 0.1, 20) == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  const double h30 = harmonic(30);
  CHECK(pressure_at(DiameterModel::super_cantor(), 0.5, 30) ==
        doctest::Approx((30.0 - 0.5 * (60.0 - h30)) * std::log(2.0) / 30.0).epsilon(1e-12));
  CHECK(std::abs(pressure_at(DiameterModel::ternary_cantor(), kS, 17)) <= 1e-14);
  CHECK(pressure_at(DiameterModel::ternary_cantor(), 0.0, 9) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("multiplicative pressure does not depend on depth") {
  const auto m = DiameterModel::multiplicative({0.2, 0.45, 0.3});
  for (double t : {0.0, 0.4, 1.1}) {
    const double p1 = pressure_at(m, t, 1);
    for (int n : {2, 7, 30}) CHECK(std::abs(pressure_at(m, t, n) - p1) <= 1e-12);
  }
}

TEST_CASE("pressure is strictly decreasing in t") {
  const auto m = DiameterModel::super_cantor();
  double prev = INFINITY;
  for (int k = 0; k <= 20; ++k) {
    const double p = pressure_at(m, 0.1 * k, 15);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("pressure zeros") {
  CHECK(pressure_zero(DiameterModel::ternary_cantor(), 10).t == doctest::Approx(kS).epsilon(1e-10));
  const auto sc = pressure_zero(DiameterModel::super_cantor(), 30);
  CHECK(sc.t == doctest::Approx(30.0 / (60.0 - harmonic(30))).epsilon(1e-10));
  CHECK_FALSE(sc.stable);
  CHECK(sc.diagnostic.rfind("drifting toward 0.5", 0) == 0);
  const auto q = pressure_zero(DiameterModel::quadratic_exponent(), 20);
  CHECK(q.t == doctest::Approx(0.05).epsilon(1e-10));
  CHECK_FALSE(q.stable);
  CHECK(q.t_half == doctest::Approx(0.1).epsilon(1e-10));
}

TEST_CASE("stable zero for multiplicative models") {
  const auto z = pressure_zero(DiameterModel::multiplicative({0.5, 0.25}), 12);
  CHECK(z.stable);
  CHECK(z.diagnostic.rfind("stable", 0) == 0);
}

TEST_CASE("pressure zero over a subtree") {
  // J with two branches then one: sum at level 2 is 2 * 9^-t
  const SubTree j{{2, 1}};
  const auto z = pressure_zero(DiameterModel::ternary_cantor(), 2, 1e-13, j);
  CHECK(z.t == doctest::Approx(std::log(2.0) / std::log(9.0)).epsilon(1e-10));
}

TEST_CASE("moran dimension") {
  CHECK(moran_dimension({1.0 / 3.0, 1.0 / 3.0}) == doctest::Approx(kS).epsilon(1e-12));
  CHECK(moran_dimension({0.6, 0.6}) == doctest::Approx(std::log(2.0) / std::log(1.0 / 0.6)).epsilon(1e-12));
  CHECK(moran_dimension({0.5, 0.5}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(moran_dimension({0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(moran_dimension({0.0, 0.5}), DomainError);
}

TEST_CASE("moran dimension matches the pressure zero of the constant-ratio model") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(0.05, 0.6);
  std::uniform_int_distribution<int> len(2, 5);
  for (int k = 0; k < 100; ++k) {
    std::vector<double> r(static_cast<std::size_t>(len(rng)));
    for (auto& x : r) x = U(rng);
    CHECK(std::abs(moran_dimension(r) - pressure_zero(DiameterModel::multiplicative(r), 3).t) <= 1e-9);
  }
}

TEST_CASE("self-affine pressure") {
  CHECK(std::abs(self_affine_pressure(1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3, kS)) <= 1e-14);
  CHECK(std::abs(self_affine_pressure(0.5, 0.5, 0.25, 0.25, 1.0)) <= 1e-14);
  CHECK(self_affine_pressure(0.5, 0.3, 0.2, 0.1, 0.0) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(self_affine_pressure(0.7, 0.6, 0.2, 0.2, 1.0), DomainError);
}

TEST_CASE("self-affine zero is close to the rectangle model zero at depth 14") {
  const RectangleParams p{0.5, 0.3, 0.4, 0.4};
  const double z = self_affine_zero(p.a0, p.a1, p.b0, p.b1);
  CHECK(std::abs(pressure_zero(DiameterModel::rectangles(p), 14).t - z) <= 0.02 + std::log(2.0) / (14 * std::log(1 / 0.5)));
}

TEST_CASE("pressure curve CSV") {
  const auto c = pressure_curve(DiameterModel::ternary_cantor(), 4, 0.0, 1.0, 3);
  CHECK(c.to_csv() == "t,P,depth\n0,0.69314718056,4\n0.5,0.143841036226,4\n1,-0.405465108108,4\n");
}
