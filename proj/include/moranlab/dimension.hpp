#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "moranlab/diameter_model.hpp"
#include "moranlab/ifs.hpp"

namespace moranlab {

enum class CountMethod { Greedy, Grid };

/// Greedy cover count with open r-balls: scan points in order, each point not
/// yet within distance < r of a centre becomes a centre. Grid counts occupied
/// axis-aligned cells of side r (Euclidean clouds only).
std::size_t box_count(const PointCloud& cloud, double r, CountMethod method = CountMethod::Greedy);

struct MinkowskiRow {
  double r = 0.0;
  std::size_t count = 0;
  double residual = 0.0;  // log N minus the fitted line
};

struct MinkowskiEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<MinkowskiRow> rows;

  std::string to_csv() const;
};

/// Least-squares slope of log N(r) against -log r over geometric scales.
/// Throws DomainError when r_min is below ten times the cloud resolution.
MinkowskiEstimate minkowski_estimate(const PointCloud& cloud, double r_min, double r_max, int n_scales,
                                     CountMethod method = CountMethod::Greedy);

/// sum over level-depth words (or J_depth) of diam^t.
double hausdorff_upper_sum(const DiameterModel& model, double t, int depth,
                           const std::optional<SubTree>& subtree = std::nullopt);

struct RectangleCoverSum {
  double sum = 0.0;    // sum over I^n of (a_i + b_i)^s
  double bound = 0.0;  // (a0^s + a1^s)^n + (b0^s + b1^s)^n
};

RectangleCoverSum self_affine_cover_sum(const RectangleParams& p, double s, int depth);

/// Greedy r-packing of B(center, R) from the candidates: accept a candidate
/// when its r-ball misses every accepted ball. R may be infinite.
std::vector<Point> maximal_packing(const MetricSpace& space, const Point& center, double R, double r,
                                   const std::vector<Point>& candidates);

struct PackingGrowth {
  double alpha_lo = 0.0;  // slope of the minimal counts (lower exponent)
  double alpha_hi = 0.0;  // slope of the maximal counts (upper exponent)
  double c_fit = 1.0;     // smallest c with c^-1 (R/r)^alpha_lo <= #H <= c (R/r)^alpha_hi
  std::vector<std::pair<double, std::size_t>> samples;  // (R/r, #H)
};

PackingGrowth packing_growth_check(const MetricSpace& space, const std::vector<Point>& candidates,
                                   const std::vector<Point>& trial_centers, const std::vector<double>& R_grid,
                                   const std::vector<double>& r_grid);

}  // namespace moranlab
