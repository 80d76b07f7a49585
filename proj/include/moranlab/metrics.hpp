#pragma once

#include <memory>
#include <string>
#include <vector>

#include "moranlab/symbolic.hpp"

namespace moranlab {

using Point = std::vector<double>;

enum class SpaceKind { Euclidean, Snowflake, SymbolSpace, Comb, Heisenberg };

/// A metric space from the shipped family. Points are coordinate vectors;
/// symbol-space points store their (truncated) symbols as doubles.
class MetricSpace {
 public:
  static MetricSpace euclidean(int dim);
  static MetricSpace snowflake(const MetricSpace& base, double p);
  static MetricSpace symbol_space(const Alphabet& alphabet);
  static MetricSpace comb(double r);
  static MetricSpace heisenberg();

  SpaceKind kind() const noexcept { return kind_; }
  std::string name() const;
  /// Coordinate count for Euclidean-embedded spaces, 0 otherwise.
  int dim() const noexcept { return dim_; }
  double snowflake_exponent() const noexcept { return p_; }
  double comb_ratio() const noexcept { return r_; }
  int alphabet_size() const noexcept { return alphabet_; }
  const MetricSpace& base() const;

  double distance(const Point& x, const Point& y) const;

  /// Smallest separation that guarantees B(x, r) and B(y, r) are disjoint.
  /// 2r in length spaces, r in ultrametrics.
  double overlap_radius(double r) const;

  /// True when points are Euclidean coordinates and distance is a monotone
  /// function of Euclidean distance, so grid hashing applies.
  bool euclidean_embedded() const noexcept;
  /// Euclidean radius of a metric r-ball (only for euclidean_embedded spaces).
  double euclidean_radius(double r) const;

 private:
  SpaceKind kind_ = SpaceKind::Euclidean;
  int dim_ = 0;
  double p_ = 1.0;
  double r_ = 0.0;
  int alphabet_ = 0;
  std::shared_ptr<const MetricSpace> base_;
};

double euclidean_distance(const Point& x, const Point& y);
double snowflake_distance(const MetricSpace& base, double p, const Point& x, const Point& y);

struct HeisenbergPoint {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
  friend bool operator==(const HeisenbergPoint&, const HeisenbergPoint&) = default;
};

HeisenbergPoint heisenberg_multiply(const HeisenbergPoint& p, const HeisenbergPoint& q);
HeisenbergPoint heisenberg_inverse(const HeisenbergPoint& p);
HeisenbergPoint heisenberg_dilate(const HeisenbergPoint& p, double r);
/// Koranyi-type gauge ((x^2+y^2)^2 + t^2)^(1/4).
double heisenberg_gauge(const HeisenbergPoint& p);
/// Left-invariant gauge distance |p^-1 q|.
double heisenberg_distance(const HeisenbergPoint& p, const HeisenbergPoint& q);
HeisenbergPoint to_heisenberg(const Point& p);
Point from_heisenberg(const HeisenbergPoint& p);

/// Root of the tooth of word i: sum_k i_k r^(k-1).
double comb_anchor(double r, const Word& w);

/// Membership in the comb space, with teeth enumerated to the given depth.
/// Tolerance 1e-12 on the x-coordinate.
bool comb_membership(double r, const Point& q, int depth);

}  // namespace moranlab
