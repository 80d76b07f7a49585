#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "moranlab/metrics.hpp"
#include "moranlab/symbolic.hpp"

namespace moranlab {

enum class MapKind { Affine2d, Similitude, Comb, Symbol, Carnot };

/// One contraction phi_i. The optional bounds are exact when known.
struct ContractionMap {
  MapKind kind = MapKind::Similitude;
  std::array<double, 4> matrix{};     // affine2d, row-major
  std::array<double, 2> translation{};
  double ratio = 0.0;                 // similitude, comb, carnot
  Point fixed_point;                  // similitude
  int comb_index = 0;
  std::vector<Word> rule_table;       // symbol map: h -> rule_table[h_1] h
  HeisenbergPoint anchor;             // carnot
  std::optional<double> lip_lower;
  std::optional<double> lip_upper;

  static ContractionMap similitude(double ratio, Point fixed_point);
  static ContractionMap affine2d(const std::array<double, 4>& m, const std::array<double, 2>& b);
  static ContractionMap comb_map(double r, int index);
  static ContractionMap symbol_map(std::vector<Word> rule_table);
  static ContractionMap carnot(const HeisenbergPoint& anchor);

  Point apply(const Point& x) const;
};

/// F_a(p) = p_a * delta_{1/2}(p_a^-1 * p) with p_a = (a_1, ..., a_k, 0, ...).
/// `anchor[j]` holds the layer-(j+1) coordinates, each in {0, ..., 2^(j+1) - 1}.
ContractionMap heisenberg_F_map(const std::vector<std::vector<int>>& anchor);

class ContractionSystem {
 public:
  /// `seeds` sample the seed set X. Its diameter becomes diam(X_empty) unless
  /// `seed_diameter` is given.
  ContractionSystem(MetricSpace space, std::vector<ContractionMap> maps, std::vector<Point> seeds,
                    std::optional<double> seed_diameter = std::nullopt);

  const MetricSpace& space() const noexcept { return space_; }
  const std::vector<ContractionMap>& maps() const noexcept { return maps_; }
  const std::vector<Point>& seeds() const noexcept { return seeds_; }
  Alphabet alphabet() const { return Alphabet(static_cast<int>(maps_.size())); }
  double seed_diameter() const noexcept { return seed_diameter_; }
  double max_lip_upper() const noexcept { return max_lip_; }
  /// Covering radius of the seed samples inside the seed set; defaults to the
  /// seed diameter. A cloud using every seed resolves E to lip^depth times this.
  double seed_cover_radius() const noexcept { return seed_cover_; }
  void set_seed_cover_radius(double rho);
  bool all_similitudes() const noexcept;

  /// phi_{i1} o ... o phi_{in} (x): the last symbol acts first.
  Point apply(const Word& w, const Point& x) const;

 private:
  MetricSpace space_;
  std::vector<ContractionMap> maps_;
  std::vector<Point> seeds_;
  double seed_diameter_ = 1.0;
  double max_lip_ = 0.0;
  double seed_cover_ = 1.0;
};

/// Word-labelled finite sample of the attractor.
struct PointCloud {
  MetricSpace space = MetricSpace::euclidean(1);
  int depth = 0;
  std::vector<Word> labels;
  std::vector<Point> points;
  /// Hausdorff-distance bound between the cloud and the attractor.
  double resolution = 0.0;

  std::size_t size() const noexcept { return points.size(); }
  double diameter() const;
};

/// Emits phi_i(seed) for every i in I^depth and the first `samples_per_leaf`
/// seeds. Deterministic; throws ResourceError beyond the enumeration cap.
PointCloud attractor_cloud(const ContractionSystem& system, int depth, int samples_per_leaf = 1);

/// Unit-square style cloud for plain sets: the n x n grid of cell centres.
PointCloud grid_cloud(int dim, int per_axis);

struct SemiconformalBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;   // false when sampled (lower over-estimates, upper under-estimates)
  int pairs_used = 0;
};

SemiconformalBounds semiconformal_bounds(const ContractionSystem& system, const Word& word,
                                         int pair_samples = 64);

class DiameterModel;

/// Diameter model of the pieces phi_i(X). Similitude systems give a
/// multiplicative model; affine and symbol systems use exact image diameters
/// of the seed samples.
DiameterModel induced_model(const ContractionSystem& system);

// Shipped systems.
ContractionSystem cantor_system(double ratio = 1.0 / 3.0);
ContractionSystem comb_system(double r, int seed_points = 64);
ContractionSystem rectangle_system(double a0, double a1, double b0, double b1);
/// The two prefix-rule maps on {0,1,2}^inf; symbol 0 of the IFS is phi_1.
ContractionSystem symbol_example_system(int seed_length = 2);
/// Heisenberg F-maps with all anchors (a, 0) for a in {0,1}^2.
ContractionSystem heisenberg_system();

}  // namespace moranlab
