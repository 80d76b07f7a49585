#include <doctest.h>

#include <cmath>
#include <random>

#include "moranlab/diameter_model.hpp"
#include "moranlab/error.hpp"
#include "moranlab/ifs.hpp"
#include "moranlab/symbolic.hpp"

using namespace moranlab;

TEST_CASE("parent drops the last symbol") {
  CHECK(parent({1, 0, 2}) == Word{1, 0});
  CHECK(parent({0}) == Word{});
  CHECK(parent({2, 2}) == Word{2});
  CHECK_THROWS_AS(parent({}), DomainError);
}

TEST_CASE("incomparable means neither word is a prefix") {
  CHECK_FALSE(incomparable({0}, {0, 1}));
  CHECK(incomparable({0, 1}, {0, 2}));
  CHECK_FALSE(incomparable({1}, {1}));
  CHECK_FALSE(incomparable({}, {1, 2}));
}

TEST_CASE("alphabet needs at least two symbols") {
  CHECK_THROWS_AS(Alphabet(1), DomainError);
  CHECK(Alphabet(3).contains({0, 2, 1}));
  CHECK_FALSE(Alphabet(3).contains({3}));
}

TEST_CASE("d2 on prefixes") {
  CHECK(d2(Word{0, 1, 1}, Word{1, 1, 1}).distance == 1.0);
  const auto same = d2(Word{0, 1, 2}, Word{0, 1, 2});
  CHECK(same.distance == 0.0);
  CHECK_FALSE(same.resolved);
  CHECK(d2(Word{0, 1, 0, 0}, Word{0, 1, 1, 0}).distance == 0.25);
  CHECK(d2(std::vector<double>{2, 0}, std::vector<double>{2, 1}).distance == 0.5);
}

TEST_CASE("d2 is an ultrametric on random prefixes") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> sym(0, 2);
  auto rand_word = [&] {
    Word w(10);
    for (auto& s : w) s = sym(rng);
    return w;
  };
  for (int k = 0; k < 10000; ++k) {
    const Word x = rand_word(), y = rand_word(), z = rand_word();
    CHECK(d2(x, y).distance <= std::max(d2(x, z).distance, d2(z, y).distance));
    CHECK(d2(x, y).distance == d2(y, x).distance);
  }
}

TEST_CASE("words_of_length enumerates in lexicographic order") {
  const auto w = words_of_length(Alphabet(2), 2);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == Word{0, 0});
  CHECK(w[3] == Word{1, 1});
  const auto j = words_of_length(SubTree{{2, 1, 2}}, 3);
  CHECK(j.size() == 4);
  for (const auto& x : j) CHECK(x[1] == 0);
}

TEST_CASE("subtree levels past the stored depth are rejected") {
  SubTree j{{2, 1}};
  CHECK(j.at_level(2) == 1);
  CHECK_THROWS_AS(j.at_level(3), DomainError);
  CHECK(j.contains({1, 0}));
  CHECK_FALSE(j.contains({1, 1}));
}

TEST_CASE("stopping set of the ternary model") {
  const auto m = DiameterModel::ternary_cantor();
  const auto z = stopping_set(m, 0.2);
  CHECK(z.size() == 4);
  for (const auto& w : z) CHECK(w.size() == 2);
  // diam <= r is inclusive: r equal to the level-1 diameter stops at level 1
  const auto z1 = stopping_set(m, 1.0 / 3.0);
  CHECK(z1.size() == 2);
  CHECK_THROWS_AS(stopping_set(m, 1.0), DomainError);
  CHECK_THROWS_AS(stopping_set(m, 0.0), DomainError);
}

TEST_CASE("stopping set of the super-Cantor model at r = 1/4 is the whole second level") {
  const auto z = stopping_set(DiameterModel::super_cantor(), 0.25);
  CHECK(z.size() == 4);
  for (const auto& w : z) CHECK(w.size() == 2);
}

TEST_CASE("local stopping set with a strict ball") {
  const auto sys = cantor_system();
  const auto cloud = attractor_cloud(sys, 8, 2);
  const auto m = induced_model(sys);
  // level-2 pieces within distance < 0.3 of 0: [0,1/9] and [2/9,1/3]
  const auto z = local_stopping_set(m, cloud, {0.0}, 0.3);
  REQUIRE(z.words.size() == 2);
  CHECK(z.words[0] == Word{0, 0});
  CHECK(z.words[1] == Word{0, 1});
  // at r = 1/3 the stopping level is 1, and [2/3,1] is at distance 2/3
  const auto z3 = local_stopping_set(m, cloud, {0.0}, 1.0 / 3.0);
  REQUIRE(z3.words.size() == 1);
  CHECK(z3.words[0] == Word{0});
  CHECK(local_stopping_set(m, cloud, {5.0}, 0.3).words.empty());
  // isolated piece: a small ball around 0 meets only the piece containing it
  const auto tiny = local_stopping_set(m, cloud, {0.0}, 0.005);
  CHECK(tiny.words.size() == 1);
}

TEST_CASE("local stopping set refuses clouds shallower than Z(r)") {
  const auto sys = cantor_system();
  const auto cloud = attractor_cloud(sys, 3, 2);
  CHECK_THROWS_AS(local_stopping_set(induced_model(sys), cloud, {0.0}, 1e-4), DomainError);
}

TEST_CASE("antichain cover cost") {
  const double s = std::log(2.0) / std::log(3.0);
  const auto at_s = antichain_cover_cost([&](const Word& w) { return std::pow(3.0, -s * double(w.size())); }, Alphabet(2), 1, 10);
  CHECK(at_s.value == doctest::Approx(1.0).epsilon(1e-12));
  const auto at_1 = antichain_cover_cost([](const Word& w) { return std::pow(3.0, -double(w.size())); }, Alphabet(2), 1, 5);
  CHECK(at_1.value == doctest::Approx(std::pow(2.0 / 3.0, 5)).epsilon(1e-12));
  CHECK(at_1.previous_depth == doctest::Approx(std::pow(2.0 / 3.0, 4)).epsilon(1e-12));
  const auto ones = antichain_cover_cost([](const Word&) { return 1.0; }, Alphabet(2), 1, 3);
  CHECK(ones.value == 2.0);
  CHECK_THROWS_AS(antichain_cover_cost([](const Word&) { return 1.0; }, Alphabet(2), 4, 3), DomainError);
}
