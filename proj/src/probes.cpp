#include "moranlab/probes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "moranlab/error.hpp"
#include "moranlab/metrics.hpp"

namespace moranlab {

namespace bmp = boost::multiprecision;

AlgebraicNumber AlgebraicNumber::rational(long long p, long long q) {
  if (q == 0) throw DomainError("rational with zero denominator");
  return {{-p, q}, static_cast<double>(p) / static_cast<double>(q)};
}

AlgebraicNumber AlgebraicNumber::golden_ratio_conjugate() {
  return {{-1, 1, 1}, (std::sqrt(5.0) - 1.0) / 2.0};
}

namespace {

constexpr double kCollisionTol = 1e-9;
constexpr double kCandidateTol = 1e-6;

std::pair<Word, Word> canonical_pair(Word a, Word b) {
  std::size_t lead = 0;
  while (lead < a.size() && a[lead] == b[lead]) ++lead;
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(lead));
  b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!a.empty() && a.back() == b.back()) {
    a.pop_back();
    b.pop_back();
  }
  if (a < b) std::swap(a, b);
  return {a, b};
}

// Anchors of every padded word, sorted, with a sweep for close pairs.
struct AnchorSweep {
  std::vector<Word> words;
  std::vector<double> x;
  std::vector<std::size_t> order;

  AnchorSweep(double r, int depth) {
    require_enumerable(std::ldexp(1.0, depth), "osc_collision_scan");
    words = words_of_length(Alphabet(2), depth);
    x.reserve(words.size());
    for (const auto& w : words) x.push_back(comb_anchor(r, w));
    order.resize(words.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  }

  template <class F>
  void pairs_within(double tol, F&& f) const {
    for (std::size_t p = 0; p < order.size(); ++p)
      for (std::size_t q = p + 1; q < order.size() && x[order[q]] - x[order[p]] < tol; ++q) f(order[p], order[q]);
  }

  double min_gap(double tol) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p + 1 < order.size(); ++p) {
      const double g = x[order[p + 1]] - x[order[p]];
      if (g >= tol) best = std::min(best, g);
    }
    return best;
  }
};

void check_ratio(double r) {
  if (!(r > 0.5 && r < 1.0)) throw DomainError("comb ratio must lie in (1/2, 1)");
  // 2^depth words are enumerated; depth is capped separately by the caller's budget
}

OscScanResult collect(const AnchorSweep& sweep, double r, double tol, const std::function<bool(const Word&, const Word&)>& confirm,
                      bool exact) {
  OscScanResult out;
  std::set<std::pair<Word, Word>> seen;
  sweep.pairs_within(tol, [&](std::size_t a, std::size_t b) {
    auto key = canonical_pair(sweep.words[a], sweep.words[b]);
    if (!seen.insert(key).second) return;
    if (!confirm(key.first, key.second)) {
      ++out.candidates_rejected;
      return;
    }
    Collision c;
    c.gap = std::abs(comb_anchor(r, key.first) - comb_anchor(r, key.second));
    c.first = std::move(key.first);
    c.second = std::move(key.second);
    c.exact = exact;
    if (exact) c.gap = 0.0;
    out.collisions.push_back(std::move(c));
  });
  std::sort(out.collisions.begin(), out.collisions.end(), [](const Collision& p, const Collision& q) {
    if (p.first.size() != q.first.size()) return p.first.size() < q.first.size();
    return std::tie(p.first, p.second) > std::tie(q.first, q.second);
  });
  out.min_nonzero_gap = sweep.min_gap(kCollisionTol);
  return out;
}

// Remainder of `num` modulo `den` over the rationals; coefficients low to high.
std::vector<bmp::cpp_rational> poly_rem(std::vector<bmp::cpp_rational> num, const std::vector<bmp::cpp_rational>& den) {
  const std::size_t dn = den.size() - 1;
  while (num.size() > dn && !num.empty()) {
    const bmp::cpp_rational lead = num.back() / den.back();
    const std::size_t shift = num.size() - 1 - dn;
    if (lead != 0)
      for (std::size_t k = 0; k <= dn; ++k) num[shift + k] -= lead * den[k];
    num.pop_back();
  }
  return num;
}

}  // namespace

OscScanResult osc_collision_scan(double r, int depth) {
  check_ratio(r);
  if (depth < 1) throw DomainError("collision scan depth must be at least 1");
  const AnchorSweep sweep(r, depth);
  return collect(sweep, r, kCollisionTol, [](const Word&, const Word&) { return true; }, false);
}

OscScanResult osc_collision_scan_exact(const AlgebraicNumber& r, int depth) {
  check_ratio(r.approx);
  if (depth < 1) throw DomainError("collision scan depth must be at least 1");
  auto mp = r.min_poly;
  while (!mp.empty() && mp.back() == 0) mp.pop_back();
  if (mp.size() < 2) throw DomainError("minimal polynomial must have degree at least 1");
  // The approximation must actually be a root.
  double val = 0.0;
  for (auto it = mp.rbegin(); it != mp.rend(); ++it) val = val * r.approx + static_cast<double>(*it);
  if (std::abs(val) > 1e-9) throw DomainError("approximation is not a root of the minimal polynomial");

  std::vector<bmp::cpp_rational> den(mp.begin(), mp.end());
  const AnchorSweep sweep(r.approx, depth);
  auto confirm = [&](const Word& a, const Word& b) {
    std::vector<bmp::cpp_rational> diff(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
    const auto rem = poly_rem(diff, den);
    return std::all_of(rem.begin(), rem.end(), [](const bmp::cpp_rational& c) { return c == 0; });
  };
  return collect(sweep, r.approx, kCandidateTol, confirm, true);
}

double separation_epsilon(const ContractionSystem& system, const Point& x, int depth) {
  if (depth < 1) throw DomainError("separation depth must be at least 1");
  const auto a = system.alphabet();
  std::vector<Word> words;
  std::vector<Point> images;
  std::vector<double> lower;
  for (int n = 1; n <= depth; ++n)
    for (auto& w : words_of_length(a, n)) {
      images.push_back(system.apply(w, x));
      lower.push_back(semiconformal_bounds(system, w).lower);
      words.push_back(std::move(w));
    }
  require_enumerable(0.5 * static_cast<double>(words.size()) * static_cast<double>(words.size()), "separation_epsilon");
  double best = std::numeric_limits<double>::infinity();
  const auto& space = system.space();
  for (std::size_t p = 0; p < words.size(); ++p)
    for (std::size_t q = p + 1; q < words.size(); ++q) {
      if (!incomparable(words[p], words[q])) continue;
      const double v = space.distance(images[p], images[q]) / (lower[p] + lower[q]);
      best = std::min(best, v);
    }
  return best < 1e-12 ? 0.0 : best;
}

ClusteringReport finite_clustering_sup(const DiameterModel& model, const PointCloud& cloud, int x_samples,
                                       const std::vector<double>& r_grid) {
  ClusteringReport rep;
  if (cloud.points.empty() || x_samples < 1) return rep;
  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(x_samples), cloud.points.size());
  std::vector<std::size_t> xs;
  for (std::size_t k = 0; k < n; ++k) xs.push_back(k * cloud.points.size() / n);
  rep.x_samples = static_cast<int>(xs.size());
  for (double r : r_grid) {
    int worst = 0;
    try {
      for (std::size_t idx : xs) {
        const auto z = local_stopping_set(model, cloud, cloud.points[idx], r);
        worst = std::max(worst, static_cast<int>(z.words.size()));
      }
    } catch (const DomainError&) {
      rep.skipped_r.push_back(r);
      continue;
    }
    rep.per_r.emplace_back(r, worst);
    rep.sup = std::max(rep.sup, worst);
  }
  return rep;
}

BallConditionResult ball_condition_probe(const DiameterModel& model, const PointCloud& cloud, const Point& x,
                                         double r, const std::vector<double>& delta_grid) {
  const auto z = local_stopping_set(model, cloud, x, r).words;
  BallConditionResult res;
  res.pieces = static_cast<int>(z.size());
  if (z.empty()) return res;

  // candidates: the sampled points of each piece
  std::vector<std::vector<std::size_t>> cand(z.size());
  for (std::size_t p = 0; p < cloud.points.size(); ++p)
    for (std::size_t w = 0; w < z.size(); ++w)
      if (is_prefix(z[w], cloud.labels[p])) {
        cand[w].push_back(p);
        break;
      }
  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return model.diam(z[a]) > model.diam(z[b]); });

  std::vector<double> grid = delta_grid;
  std::sort(grid.rbegin(), grid.rend());
  for (double delta : grid) {
    if (!(delta > 0.0)) continue;
    const double sep = cloud.space.overlap_radius(delta * r);
    std::vector<Point> chosen;
    bool ok = true;
    for (std::size_t w : order) {
      bool placed = false;
      for (std::size_t p : cand[w]) {
        const Point& c = cloud.points[p];
        if (std::all_of(chosen.begin(), chosen.end(), [&](const Point& q) { return cloud.space.distance(c, q) >= sep; })) {
          chosen.push_back(c);
          placed = true;
          break;
        }
      }
      if (!placed) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.delta = delta;
      res.centers = std::move(chosen);
      return res;
    }
  }
  return res;
}

namespace {

// True when the set {images} of finite prefixes looks like a full cylinder:
// their longest common prefix c has all k^2 two-symbol extensions present.
bool images_form_cylinder(const std::vector<Point>& images, int k, std::string& why) {
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  for (const auto& im : images) shortest = std::min(shortest, im.size());
  std::size_t lcp = 0;
  while (lcp < shortest &&
         std::all_of(images.begin(), images.end(), [&](const Point& im) { return im[lcp] == images.front()[lcp]; }))
    ++lcp;
  if (lcp + 2 > shortest) {
    why = "images too short to resolve";
    return false;
  }
  std::set<std::pair<int, int>> ext;
  for (const auto& im : images) ext.insert({static_cast<int>(im[lcp]), static_cast<int>(im[lcp + 1])});
  if (static_cast<int>(ext.size()) != k * k) {
    why = "image misses " + std::to_string(k * k - static_cast<int>(ext.size())) + " of the " +
          std::to_string(k * k) + " two-symbol extensions of its common prefix";
    return false;
  }
  return true;
}

}  // namespace

ProperSemiconformalReport proper_semiconformality_check_symbolic(const ContractionSystem& system, int depth) {
  if (system.space().kind() != SpaceKind::SymbolSpace) throw DomainError("system must act on the symbol space");
  if (depth < 1) throw DomainError("check depth must be at least 1");
  const int k = system.space().alphabet_size();
  const Alphabet space_alphabet(k);
  ProperSemiconformalReport rep;
  constexpr int kExtra = 4;
  const auto tails = words_of_length(space_alphabet, kExtra);

  auto image_of_cylinder = [&](const Word& map_word, const Word& cyl) {
    std::vector<Point> images;
    for (const auto& t : tails) {
      const Word h = concat(cyl, t);
      images.push_back(system.apply(map_word, Point(h.begin(), h.end())));
    }
    return images;
  };

  // single maps on every cylinder [i], 1 <= |i| <= depth
  for (std::size_t s = 0; s < system.maps().size(); ++s)
    for (int n = 1; n <= depth; ++n)
      for (const auto& cyl : words_of_length(space_alphabet, n)) {
        ++rep.cylinders_checked;
        std::string why;
        if (!images_form_cylinder(image_of_cylinder(Word{static_cast<int>(s)}, cyl), k, why)) {
          rep.cylinders_ok = false;
          if (rep.violations.size() < 20)
            rep.violations.push_back("map " + std::to_string(s) + " on [" + word_to_string(cyl, ',') + "]: " + why);
        }
      }
  // composed maps on the first-level cylinders
  for (int n = 1; n <= depth; ++n)
    for (const auto& w : words_of_length(system.alphabet(), n))
      for (int a = 0; a < k; ++a) {
        ++rep.cylinders_checked;
        std::string why;
        if (!images_form_cylinder(image_of_cylinder(w, Word{a}), k, why)) {
          rep.cylinders_ok = false;
          if (rep.violations.size() < 20)
            rep.violations.push_back("phi_" + word_to_string(w, ',') + "([" + std::to_string(a) + "]): " + why);
        }
      }

  // dist(h, I^inf \ [j]) = 2 diam([j]) by brute force over words of length depth + 1
  const auto all = words_of_length(space_alphabet, depth + 1);
  for (int n = 1; n <= depth; ++n)
    for (const auto& j : words_of_length(space_alphabet, n)) {
      double diam = 0.0;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          Word ja = j, jb = j;
          ja.push_back(a);
          jb.push_back(b);
          diam = std::max(diam, d2(ja, jb).distance);
        }
      for (const auto& h : all) {
        if (!is_prefix(j, h)) continue;
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& y : all)
          if (!is_prefix(j, y)) dist = std::min(dist, d2(h, y).distance);
        ++rep.distance_checks;
        if (dist != 2.0 * diam) {
          rep.distance_identity_ok = false;
          if (rep.violations.size() < 20)
            rep.violations.push_back("distance identity fails at [" + word_to_string(j, ',') + "]");
        }
      }
    }
  return rep;
}

}  // namespace moranlab
