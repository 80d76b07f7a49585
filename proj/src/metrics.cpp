#include "moranlab/metrics.hpp"

#include <cmath>
#include <sstream>

#include "moranlab/error.hpp"

namespace moranlab {

MetricSpace MetricSpace::euclidean(int dim) {
  if (dim < 1 || dim > 3) throw DomainError("euclidean space dimension must be 1, 2 or 3");
  MetricSpace s;
  s.kind_ = SpaceKind::Euclidean;
  s.dim_ = dim;
  return s;
}

MetricSpace MetricSpace::snowflake(const MetricSpace& base, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("snowflake exponent must lie in (0, 1)");
  MetricSpace s;
  s.kind_ = SpaceKind::Snowflake;
  s.dim_ = base.dim_;
  s.p_ = p;
  s.alphabet_ = base.alphabet_;
  s.base_ = std::make_shared<const MetricSpace>(base);
  return s;
}

MetricSpace MetricSpace::symbol_space(const Alphabet& alphabet) {
  MetricSpace s;
  s.kind_ = SpaceKind::SymbolSpace;
  s.alphabet_ = alphabet.size();
  return s;
}

MetricSpace MetricSpace::comb(double r) {
  if (!(r > 0.5 && r < 1.0)) throw DomainError("comb ratio must lie in (1/2, 1)");
  MetricSpace s;
  s.kind_ = SpaceKind::Comb;
  s.dim_ = 2;
  s.r_ = r;
  return s;
}

MetricSpace MetricSpace::heisenberg() {
  MetricSpace s;
  s.kind_ = SpaceKind::Heisenberg;
  s.dim_ = 3;
  return s;
}

const MetricSpace& MetricSpace::base() const {
  if (!base_) throw DomainError("only snowflake spaces have a base space");
  return *base_;
}

std::string MetricSpace::name() const {
  std::ostringstream out;
  switch (kind_) {
    case SpaceKind::Euclidean: out << "euclidean(" << dim_ << ")"; break;
    case SpaceKind::Snowflake: out << "snowflake(" << base_->name() << ", " << p_ << ")"; break;
    case SpaceKind::SymbolSpace: out << "symbol_space(" << alphabet_ << ")"; break;
    case SpaceKind::Comb: out << "comb(" << r_ << ")"; break;
    case SpaceKind::Heisenberg: out << "heisenberg"; break;
  }
  return out.str();
}

double MetricSpace::distance(const Point& x, const Point& y) const {
  switch (kind_) {
    case SpaceKind::Euclidean:
    case SpaceKind::Comb:
      return euclidean_distance(x, y);
    case SpaceKind::Snowflake:
      return std::pow(base_->distance(x, y), p_);
    case SpaceKind::SymbolSpace:
      return d2(x, y).distance;
    case SpaceKind::Heisenberg:
      return heisenberg_distance(to_heisenberg(x), to_heisenberg(y));
  }
  return 0.0;
}

double MetricSpace::overlap_radius(double r) const {
  switch (kind_) {
    case SpaceKind::SymbolSpace:
      return r;
    case SpaceKind::Snowflake:
      return std::pow(base_->overlap_radius(std::pow(r, 1.0 / p_)), p_);
    default:
      return 2.0 * r;
  }
}

bool MetricSpace::euclidean_embedded() const noexcept {
  if (kind_ == SpaceKind::Euclidean || kind_ == SpaceKind::Comb) return true;
  if (kind_ == SpaceKind::Snowflake) return base_->euclidean_embedded();
  return false;
}

double MetricSpace::euclidean_radius(double r) const {
  if (kind_ == SpaceKind::Snowflake) return base_->euclidean_radius(std::pow(r, 1.0 / p_));
  if (!euclidean_embedded()) throw DomainError("space has no Euclidean embedding");
  return r;
}

double euclidean_distance(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw DomainError("points have different dimensions");
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double snowflake_distance(const MetricSpace& base, double p, const Point& x, const Point& y) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("snowflake exponent must lie in (0, 1)");
  return std::pow(base.distance(x, y), p);
}

HeisenbergPoint heisenberg_multiply(const HeisenbergPoint& p, const HeisenbergPoint& q) {
  return {p.x + q.x, p.y + q.y, p.t + q.t + 0.5 * (p.x * q.y - p.y * q.x)};
}

HeisenbergPoint heisenberg_inverse(const HeisenbergPoint& p) { return {-p.x, -p.y, -p.t}; }

HeisenbergPoint heisenberg_dilate(const HeisenbergPoint& p, double r) {
  return {r * p.x, r * p.y, r * r * p.t};
}

double heisenberg_gauge(const HeisenbergPoint& p) {
  const double h = p.x * p.x + p.y * p.y;
  return std::pow(h * h + p.t * p.t, 0.25);
}

double heisenberg_distance(const HeisenbergPoint& p, const HeisenbergPoint& q) {
  return heisenberg_gauge(heisenberg_multiply(heisenberg_inverse(p), q));
}

HeisenbergPoint to_heisenberg(const Point& p) {
  if (p.size() != 3) throw DomainError("Heisenberg points have three coordinates");
  return {p[0], p[1], p[2]};
}

Point from_heisenberg(const HeisenbergPoint& p) { return {p.x, p.y, p.t}; }

double comb_anchor(double r, const Word& w) {
  double x = 0.0;
  double scale = 1.0;
  for (int s : w) {
    x += s * scale;
    scale *= r;
  }
  return x;
}

namespace {

bool on_tooth(double r, const Point& q, Word& w, int depth) {
  constexpr double kTol = 1e-12;
  const double height = std::pow(r, static_cast<double>(w.size()));
  if (std::abs(q[0] - comb_anchor(r, w)) <= kTol && q[1] >= -kTol && q[1] <= height + kTol)
    return true;
  if (static_cast<int>(w.size()) == depth) return false;
  for (int s = 0; s < 2; ++s) {
    w.push_back(s);
    const bool hit = on_tooth(r, q, w, depth);
    w.pop_back();
    if (hit) return true;
  }
  return false;
}

}  // namespace

bool comb_membership(double r, const Point& q, int depth) {
  if (!(r > 0.5 && r < 1.0)) throw DomainError("comb ratio must lie in (1/2, 1)");
  if (q.size() != 2) throw DomainError("comb points have two coordinates");
  constexpr double kTol = 1e-12;
  if (std::abs(q[1]) <= kTol && q[0] >= -kTol && q[0] <= 1.0 / (1.0 - r) + kTol) return true;
  require_enumerable(std::ldexp(1.0, depth + 1), "comb_membership");
  // The empty word's tooth is J = {0} x [0, 1].
  Word w;
  return on_tooth(r, q, w, depth);
}

}  // namespace moranlab
