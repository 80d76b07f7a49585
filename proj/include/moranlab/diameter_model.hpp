#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "moranlab/symbolic.hpp"

namespace moranlab {

class ContractionSystem;

/// How diam(X_i) depends on the word. Level-structured models get O(depth)
/// closed forms everywhere; word-dependent ones are enumerated.
enum class ModelStructure {
  Multiplicative,    // diam(i) = seed * prod r_{i_k}
  LevelHomogeneous,  // diam(i) depends only on |i|
  WordDependent,
};

struct RectangleParams {
  double a0 = 0.5, a1 = 0.5;  // horizontal ratios
  double b0 = 0.5, b1 = 0.5;  // vertical ratios
};

/// Assignment i -> diam(X_i) with diam of the empty word equal to the seed diameter.
class DiameterModel {
 public:
  using LevelFn = std::function<double(int)>;
  using WordFn = std::function<double(const Word&)>;

  static DiameterModel multiplicative(std::vector<double> ratios, double seed_diameter = 1.0);
  /// `log_diam(n)` gives log diam of any level-n word; log_diam(0) is log seed.
  static DiameterModel level_homogeneous(const Alphabet& a, LevelFn log_diam);
  /// `log_diam(w)` for |w| >= 1; the empty word uses the seed.
  static DiameterModel word_dependent(const Alphabet& a, double seed_diameter, WordFn log_diam);

  static DiameterModel ternary_cantor(double seed_diameter = 1.0);
  /// Two branches, level-n ratio 2^(-2+1/n), so diam = 2^(-2n + H_n).
  static DiameterModel super_cantor();
  /// Two branches, diam = 2^(-n^2).
  static DiameterModel quadratic_exponent();
  /// Rectangles a_i x b_i inside the unit square; diam = sqrt(a_i^2 + b_i^2).
  static DiameterModel rectangles(const RectangleParams& p);
  /// Constant level diameters diam = 2^(-n) on an alphabet of the given size.
  static DiameterModel dyadic(int alphabet_size);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  double seed_diameter() const noexcept { return seed_; }
  ModelStructure structure() const noexcept { return structure_; }
  bool level_structured() const noexcept;

  double log_diam(const Word& w) const;
  double diam(const Word& w) const;
  /// Only for level-structured models.
  double level_log_diam(int n) const;
  /// Only for multiplicative models.
  const std::vector<double>& ratios() const;

  /// Largest diameter over I^n (closed form or enumeration).
  double max_level_diam(int n) const;

  std::optional<double> declared_D;
  std::string name = "model";
  /// Set for IFS-induced models so W1 can be checked on the generating maps.
  std::shared_ptr<const ContractionSystem> source;

 private:
  DiameterModel(const Alphabet& a, double seed) : alphabet_(a), seed_(seed) {}

  Alphabet alphabet_;
  double seed_;
  ModelStructure structure_ = ModelStructure::WordDependent;
  std::vector<double> ratios_;
  std::vector<double> log_ratios_;
  LevelFn level_fn_;
  WordFn word_fn_;
};

/// Partial harmonic number H_n.
double harmonic(int n);

}  // namespace moranlab
