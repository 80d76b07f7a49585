#include <doctest.h>

#include <cmath>

#include "moranlab/diameter_model.hpp"
#include "moranlab/error.hpp"
#include "moranlab/subconstruction.hpp"

using namespace moranlab;

TEST_CASE("Heisenberg stratification") {
  const auto h = StratificationData::heisenberg();
  CHECK(h.topological_dimension() == 3);
  CHECK(h.homogeneous_dimension() == 4);
  CHECK(h.layer_index(1.3) == 0);
  CHECK(h.layer_index(2.0) == 0);
  CHECK(h.layer_index(2.5) == 1);
  CHECK_THROWS_AS(h.layer_index(3.5), DomainError);
  CHECK_THROWS_AS(StratificationData({}), DomainError);
}

TEST_CASE("beta bounds") {
  const auto h = StratificationData::heisenberg();
  CHECK(beta_minus(h, 1.3) == doctest::Approx(1.3));
  CHECK(beta_plus(h, 0.5) == doctest::Approx(1.0));
  CHECK(beta_minus(h, 2.5) == doctest::Approx(3.0));
  CHECK(beta_plus(h, 2.5) == doctest::Approx(3.5));
  CHECK(beta_minus(h, 3.0) == doctest::Approx(4.0));
  CHECK(beta_plus(h, 3.0) == doctest::Approx(4.0));
  for (const auto& s : {StratificationData::heisenberg(), StratificationData({2, 1, 1}), StratificationData({3, 2})})
    for (double a = 0.1; a <= s.topological_dimension(); a += 0.1) {
      CHECK(beta_minus(s, a) <= beta_plus(s, a) + 1e-12);
      CHECK(beta_minus(s, a) >= a - 1e-12);
      CHECK(beta_plus(s, a) <= s.homogeneous_dimension() + 1e-12);
    }
}

TEST_CASE("Cantor branch sequences") {
  CHECK(cantor_branch_sequence(0.4, 5).branch_counts == std::vector<int>{2, 1, 2, 1, 2});
  const auto low = cantor_branch_sequence(0.01, 6).branch_counts;
  CHECK(low.front() == 2);
  for (std::size_t i = 1; i < low.size(); ++i) CHECK(low[i] == 1);
  CHECK_THROWS_AS(cantor_branch_sequence(0.7, 5), DomainError);
}

TEST_CASE("Cantor sub-construction holds at t") {
  for (double t : {0.2, 0.4, 0.6}) {
    const auto j = cantor_branch_sequence(t, 18);
    const auto rep = verify_cmsc(DiameterModel::ternary_cantor(), j, t, 4.0, 18);
    CHECK(rep.holds);
    CHECK(rep.C_witnessed < 4.0);
  }
}

TEST_CASE("CMSC flags a wrong exponent") {
  const auto j = cantor_branch_sequence(0.4, 18);
  CHECK_FALSE(verify_cmsc(DiameterModel::ternary_cantor(), j, 0.1, 4.0, 18).holds);
}

TEST_CASE("Carnot branch rule") {
  const auto h = StratificationData::heisenberg();
  const auto raw = carnot_branch_sequence_raw(h, 1.3, 12);
  CHECK(raw.front() == 2);
  for (int n : raw) CHECK((n == 1 || n == 2));
  const auto top = carnot_branch_sequence(h, 3.0, 8);
  for (int n : top.sequence) CHECK(n == 2);
  CHECK_FALSE(top.note.empty());
}

TEST_CASE("Heisenberg sub-construction at alpha = 1.3, 2 and 2.5") {
  const auto h = StratificationData::heisenberg();
  for (double a : {1.3, 2.0, 2.5}) {
    const auto rep = carnot_cmsc_verify(h, a, 8);
    CHECK(rep.report.holds);
    CHECK(rep.t == doctest::Approx(beta_minus(h, a)));
  }
  const auto two = carnot_cmsc_verify(h, 2.0, 8);
  CHECK(two.layer == 0);
  CHECK(two.C == doctest::Approx(16.0));
  CHECK(two.alphabet_size == 4);
}
