#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moranlab/diameter_model.hpp"
#include "moranlab/ifs.hpp"

namespace moranlab {

struct Collision {
  Word first;   // lexicographically larger word of the pair
  Word second;
  double gap = 0.0;
  bool exact = false;  // confirmed by exact polynomial arithmetic
};

struct OscScanResult {
  std::vector<Collision> collisions;
  double min_nonzero_gap = 0.0;  // smallest anchor gap above the tolerance
  int candidates_rejected = 0;   // exact mode: near misses that are not roots
};

/// Comb parameter given exactly: a rational p/q, or an algebraic number by
/// its integer minimal polynomial (coefficients from constant term up) plus
/// a numeric approximation selecting the root.
struct AlgebraicNumber {
  std::vector<long long> min_poly;
  double approx = 0.0;

  static AlgebraicNumber rational(long long p, long long q);
  static AlgebraicNumber golden_ratio_conjugate();  // root of x^2 + x - 1 in (0, 1)
};

/// Incomparable pairs of {0,1}-words with |x_i - x_j| < 1e-9, where
/// x_i = sum i_k r^(k-1). Words are padded to `depth` with trailing zeros and
/// each pair is reported once with common leading and trailing symbols removed.
OscScanResult osc_collision_scan(double r, int depth);

/// Same scan, but every candidate is decided exactly: r is a root of the
/// difference polynomial iff its minimal polynomial divides it.
OscScanResult osc_collision_scan_exact(const AlgebraicNumber& r, int depth);

/// min over incomparable pairs with 1 <= |i|, |j| <= depth of
/// d(phi_i x, phi_j x) / (lower_i + lower_j). Values below 1e-12 snap to 0.
double separation_epsilon(const ContractionSystem& system, const Point& x, int depth);

struct ClusteringReport {
  int sup = 0;                              // max #Z(x, r) seen
  std::vector<std::pair<double, int>> per_r;  // (r, max count over sampled x)
  std::vector<double> skipped_r;            // radii too coarse or too fine for the cloud
  int x_samples = 0;
};

/// Lower bound for sup_x #Z(x, r) over `x_samples` cloud points (evenly
/// strided) and the given radii.
ClusteringReport finite_clustering_sup(const DiameterModel& model, const PointCloud& cloud, int x_samples,
                                       const std::vector<double>& r_grid);

struct BallConditionResult {
  double delta = 0.0;  // largest grid value that worked, 0 if none
  int pieces = 0;      // #Z(x, r)
  std::vector<Point> centers;
};

/// Largest delta in the grid for which greedy first-fit (pieces by decreasing
/// diameter, candidates from each piece's sample) places centres whose
/// delta*r balls are pairwise disjoint.
BallConditionResult ball_condition_probe(const DiameterModel& model, const PointCloud& cloud, const Point& x,
                                         double r, const std::vector<double>& delta_grid);

struct ProperSemiconformalReport {
  bool cylinders_ok = true;
  int cylinders_checked = 0;
  bool distance_identity_ok = true;
  int distance_checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return cylinders_ok && distance_identity_ok; }
};

/// For symbol-space systems: phi_s([i]) for single maps and 1 <= |i| <= depth,
/// and phi_w([a]) for |w| <= depth, must be cylinders, and
/// dist(h, I^inf \ [j]) = 2 diam([j]) must hold for h in [j].
ProperSemiconformalReport proper_semiconformality_check_symbolic(const ContractionSystem& system, int depth);

}  // namespace moranlab
