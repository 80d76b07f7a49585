#include "moranlab/diameter_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moranlab/error.hpp"

namespace moranlab {

double harmonic(int n) {
  double h = 0.0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}

DiameterModel DiameterModel::multiplicative(std::vector<double> ratios, double seed_diameter) {
  if (!(seed_diameter > 0.0)) throw DomainError("seed diameter must be positive");
  for (double r : ratios)
    if (!(r > 0.0 && r < 1.0)) throw DomainError("ratios must lie in (0, 1)");
  DiameterModel m(Alphabet(static_cast<int>(ratios.size())), seed_diameter);
  m.structure_ = ModelStructure::Multiplicative;
  m.log_ratios_.reserve(ratios.size());
  for (double r : ratios) m.log_ratios_.push_back(std::log(r));
  m.ratios_ = std::move(ratios);
  m.name = "multiplicative";
  return m;
}

DiameterModel DiameterModel::level_homogeneous(const Alphabet& a, LevelFn log_diam) {
  DiameterModel m(a, std::exp(log_diam(0)));
  m.structure_ = ModelStructure::LevelHomogeneous;
  m.level_fn_ = std::move(log_diam);
  m.name = "level_homogeneous";
  return m;
}

DiameterModel DiameterModel::word_dependent(const Alphabet& a, double seed_diameter, WordFn log_diam) {
  if (!(seed_diameter > 0.0)) throw DomainError("seed diameter must be positive");
  DiameterModel m(a, seed_diameter);
  m.structure_ = ModelStructure::WordDependent;
  m.word_fn_ = std::move(log_diam);
  m.name = "word_dependent";
  return m;
}

DiameterModel DiameterModel::ternary_cantor(double seed_diameter) {
  auto m = multiplicative({1.0 / 3.0, 1.0 / 3.0}, seed_diameter);
  m.name = "ternary_cantor";
  return m;
}

DiameterModel DiameterModel::super_cantor() {
  auto m = level_homogeneous(Alphabet(2), [](int n) {
    return (-2.0 * n + harmonic(n)) * std::numbers::ln2;
  });
  m.name = "super_cantor";
  return m;
}

DiameterModel DiameterModel::quadratic_exponent() {
  auto m = level_homogeneous(Alphabet(2), [](int n) {
    return -static_cast<double>(n) * n * std::numbers::ln2;
  });
  m.name = "quadratic_exponent";
  return m;
}

DiameterModel DiameterModel::dyadic(int alphabet_size) {
  auto m = level_homogeneous(Alphabet(alphabet_size), [](int n) {
    return -static_cast<double>(n) * std::numbers::ln2;
  });
  m.name = "dyadic";
  return m;
}

DiameterModel DiameterModel::rectangles(const RectangleParams& p) {
  for (double v : {p.a0, p.a1, p.b0, p.b1})
    if (!(v > 0.0 && v < 1.0)) throw DomainError("rectangle ratios must lie in (0, 1)");
  if (p.a0 + p.a1 > 1.0 || p.b0 + p.b1 > 1.0)
    throw DomainError("rectangle ratios must satisfy a0 + a1 <= 1 and b0 + b1 <= 1");
  const double la[2] = {std::log(p.a0), std::log(p.a1)};
  const double lb[2] = {std::log(p.b0), std::log(p.b1)};
  auto m = word_dependent(Alphabet(2), std::sqrt(2.0), [la, lb](const Word& w) {
    double a = 0.0, b = 0.0;
    for (int s : w) {
      a += la[s];
      b += lb[s];
    }
    // log sqrt(e^{2a} + e^{2b}), stable for tiny sides
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + 0.5 * std::log1p(std::exp(2.0 * (lo - hi)));
  });
  m.name = "rectangles";
  return m;
}

bool DiameterModel::level_structured() const noexcept {
  if (structure_ == ModelStructure::LevelHomogeneous) return true;
  if (structure_ == ModelStructure::Multiplicative)
    return std::all_of(ratios_.begin(), ratios_.end(),
                       [&](double r) { return r == ratios_.front(); });
  return false;
}

double DiameterModel::log_diam(const Word& w) const {
  if (w.empty()) return std::log(seed_);
  switch (structure_) {
    case ModelStructure::Multiplicative: {
      double s = std::log(seed_);
      for (int k : w) s += log_ratios_.at(static_cast<std::size_t>(k));
      return s;
    }
    case ModelStructure::LevelHomogeneous:
      return level_fn_(static_cast<int>(w.size()));
    case ModelStructure::WordDependent:
      return word_fn_(w);
  }
  return 0.0;
}

double DiameterModel::diam(const Word& w) const { return std::exp(log_diam(w)); }

double DiameterModel::level_log_diam(int n) const {
  if (!level_structured()) throw DomainError("model diameters depend on more than the level");
  if (n == 0) return std::log(seed_);
  if (structure_ == ModelStructure::LevelHomogeneous) return level_fn_(n);
  return std::log(seed_) + n * log_ratios_.front();
}

const std::vector<double>& DiameterModel::ratios() const {
  if (structure_ != ModelStructure::Multiplicative) throw DomainError("model is not multiplicative");
  return ratios_;
}

double DiameterModel::max_level_diam(int n) const {
  if (n == 0) return seed_;
  if (structure_ == ModelStructure::LevelHomogeneous) return std::exp(level_fn_(n));
  if (structure_ == ModelStructure::Multiplicative) {
    const double rmax = *std::max_element(ratios_.begin(), ratios_.end());
    return seed_ * std::pow(rmax, n);
  }
  require_enumerable(std::pow(alphabet_.size(), n), "max_level_diam");
  double best = -INFINITY;
  for (const Word& w : words_of_length(alphabet_, n)) best = std::max(best, word_fn_(w));
  return std::exp(best);
}

}  // namespace moranlab
