#include "moranlab/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "moranlab/diameter_model.hpp"
#include "moranlab/error.hpp"

namespace moranlab {

ContractionMap ContractionMap::similitude(double ratio, Point fixed_point) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw DomainError("similitude ratio must lie in (0, 1)");
  ContractionMap m;
  m.kind = MapKind::Similitude;
  m.ratio = ratio;
  m.fixed_point = std::move(fixed_point);
  m.lip_lower = m.lip_upper = ratio;
  return m;
}

ContractionMap ContractionMap::affine2d(const std::array<double, 4>& a, const std::array<double, 2>& b) {
  ContractionMap m;
  m.kind = MapKind::Affine2d;
  m.matrix = a;
  m.translation = b;
  // singular values of the 2x2 linear part
  const double p = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
  const double det = std::abs(a[0] * a[3] - a[1] * a[2]);
  const double disc = std::sqrt(std::max(0.0, p * p / 4.0 - det * det));
  m.lip_upper = std::sqrt(p / 2.0 + disc);
  m.lip_lower = std::sqrt(std::max(0.0, p / 2.0 - disc));
  if (!(*m.lip_upper < 1.0)) throw DomainError("affine map is not a contraction");
  return m;
}

ContractionMap ContractionMap::comb_map(double r, int index) {
  if (!(r > 0.5 && r < 1.0)) throw DomainError("comb ratio must lie in (1/2, 1)");
  if (index != 0 && index != 1) throw DomainError("comb map index must be 0 or 1");
  ContractionMap m;
  m.kind = MapKind::Comb;
  m.ratio = r;
  m.comb_index = index;
  m.lip_lower = m.lip_upper = r;
  return m;
}

ContractionMap ContractionMap::symbol_map(std::vector<Word> rule_table) {
  if (rule_table.size() < 2) throw DomainError("symbol map needs a rule for every symbol");
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  for (const auto& p : rule_table) {
    if (p.empty()) throw DomainError("symbol map rules must prepend at least one symbol");
    shortest = std::min(shortest, p.size());
  }
  ContractionMap m;
  m.kind = MapKind::Symbol;
  m.rule_table = std::move(rule_table);
  m.lip_upper = std::ldexp(1.0, -static_cast<int>(shortest));
  return m;
}

ContractionMap ContractionMap::carnot(const HeisenbergPoint& anchor) {
  ContractionMap m;
  m.kind = MapKind::Carnot;
  m.anchor = anchor;
  m.ratio = 0.5;
  m.lip_lower = m.lip_upper = 0.5;
  return m;
}

Point ContractionMap::apply(const Point& x) const {
  switch (kind) {
    case MapKind::Similitude: {
      if (x.size() != fixed_point.size()) throw DomainError("point dimension mismatch");
      Point y(x.size());
      for (std::size_t k = 0; k < x.size(); ++k)
        y[k] = fixed_point[k] + ratio * (x[k] - fixed_point[k]);
      return y;
    }
    case MapKind::Affine2d:
      if (x.size() != 2) throw DomainError("affine2d maps act on planar points");
      return {matrix[0] * x[0] + matrix[1] * x[1] + translation[0],
              matrix[2] * x[0] + matrix[3] * x[1] + translation[1]};
    case MapKind::Comb:
      if (x.size() != 2) throw DomainError("comb maps act on planar points");
      return {ratio * x[0] + comb_index, ratio * x[1]};
    case MapKind::Symbol: {
      if (x.empty()) throw DomainError("symbol maps need a nonempty prefix");
      const auto first = static_cast<std::size_t>(x.front());
      if (first >= rule_table.size()) throw DomainError("symbol outside the rule table");
      const Word& pre = rule_table[first];
      Point y(pre.begin(), pre.end());
      y.insert(y.end(), x.begin(), x.end());
      return y;
    }
    case MapKind::Carnot: {
      const auto p = to_heisenberg(x);
      const auto q = heisenberg_multiply(
          anchor, heisenberg_dilate(heisenberg_multiply(heisenberg_inverse(anchor), p), 0.5));
      return from_heisenberg(q);
    }
  }
  return x;
}

ContractionMap heisenberg_F_map(const std::vector<std::vector<int>>& anchor) {
  // Heisenberg layers: m1 = 2, m2 = 1.
  const std::size_t dims[2] = {2, 1};
  if (anchor.size() > 2) throw DomainError("the Heisenberg group has two layers");
  double coords[3] = {0.0, 0.0, 0.0};
  std::size_t offset = 0;
  for (std::size_t j = 0; j < 2; ++j) {
    if (j < anchor.size()) {
      if (anchor[j].size() != dims[j]) throw DomainError("anchor layer has the wrong dimension");
      const int top = (1 << (j + 1)) - 1;
      for (std::size_t c = 0; c < dims[j]; ++c) {
        const int a = anchor[j][c];
        if (a < 0 || a > top)
          throw DomainError("anchor coordinate outside {0, ..., " + std::to_string(top) + "}");
        coords[offset + c] = a;
      }
    }
    offset += dims[j];
  }
  return ContractionMap::carnot({coords[0], coords[1], coords[2]});
}

namespace {

double set_diameter(const MetricSpace& space, const std::vector<Point>& pts) {
  double d = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) d = std::max(d, space.distance(pts[a], pts[b]));
  return d;
}

bool similitude_like(MapKind k) {
  return k == MapKind::Similitude || k == MapKind::Comb || k == MapKind::Carnot;
}

// Exhaustive distance ratios of a composed symbol map over all pairs of
// length-L words. Prefix-rule maps only look at the first symbol, so the
// ratio set is already complete at L = 3.
SemiconformalBounds symbol_ratios(const ContractionSystem& sys, const Word& word) {
  const Alphabet a(sys.space().alphabet_size());
  const auto hs = words_of_length(a, 3);
  SemiconformalBounds out;
  out.lower = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < hs.size(); ++p) {
    const Point hp(hs[p].begin(), hs[p].end());
    const Point ip = sys.apply(word, hp);
    for (std::size_t q = p + 1; q < hs.size(); ++q) {
      const Point hq(hs[q].begin(), hs[q].end());
      const double d = d2(hp, hq).distance;
      const double di = d2(ip, sys.apply(word, hq)).distance;
      out.lower = std::min(out.lower, di / d);
      out.upper = std::max(out.upper, di / d);
      ++out.pairs_used;
    }
  }
  out.exact = true;
  return out;
}

}  // namespace

ContractionSystem::ContractionSystem(MetricSpace space, std::vector<ContractionMap> maps,
                                     std::vector<Point> seeds, std::optional<double> seed_diameter)
    : space_(std::move(space)), maps_(std::move(maps)), seeds_(std::move(seeds)) {
  (void)Alphabet(static_cast<int>(maps_.size()));
  if (seeds_.empty()) throw DomainError("contraction system needs at least one seed point");
  for (auto& m : maps_) {
    if (m.kind == MapKind::Symbol && space_.kind() != SpaceKind::SymbolSpace)
      throw DomainError("symbol maps act on the symbol space");
    if (m.kind == MapKind::Carnot && space_.kind() != SpaceKind::Heisenberg)
      throw DomainError("carnot maps act on the Heisenberg group");
  }
  // Exact Lipschitz bounds for symbol maps by exhaustive pair scan.
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].kind != MapKind::Symbol) continue;
    const auto b = symbol_ratios(*this, Word{static_cast<int>(i)});
    maps_[i].lip_lower = b.lower;
    maps_[i].lip_upper = b.upper;
  }
  for (const auto& m : maps_) {
    if (!m.lip_upper) throw DomainError("contraction map without a Lipschitz bound");
    if (!(*m.lip_upper < 1.0)) throw DomainError("map is not a contraction");
    max_lip_ = std::max(max_lip_, *m.lip_upper);
  }
  if (seed_diameter) {
    if (!(*seed_diameter > 0.0)) throw DomainError("seed diameter must be positive");
    seed_diameter_ = *seed_diameter;
  } else {
    const double d = set_diameter(space_, seeds_);
    seed_diameter_ = d > 0.0 ? d : 1.0;
  }
  seed_cover_ = seed_diameter_;
}

void ContractionSystem::set_seed_cover_radius(double rho) {
  if (!(rho > 0.0)) throw DomainError("seed covering radius must be positive");
  seed_cover_ = rho;
}

bool ContractionSystem::all_similitudes() const noexcept {
  return std::all_of(maps_.begin(), maps_.end(), [](const ContractionMap& m) { return similitude_like(m.kind); });
}

Point ContractionSystem::apply(const Word& w, const Point& x) const {
  Point y = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = maps_.at(static_cast<std::size_t>(*it)).apply(y);
  return y;
}

double PointCloud::diameter() const {
  if (space.euclidean_embedded() && space.kind() != SpaceKind::Snowflake) {
    // bounding-box diagonal bounds the diameter; exact pairwise scan when small
    if (points.size() > 4000) {
      const std::size_t dim = points.front().size();
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        double lo = INFINITY, hi = -INFINITY;
        for (const auto& p : points) {
          lo = std::min(lo, p[k]);
          hi = std::max(hi, p[k]);
        }
        s += (hi - lo) * (hi - lo);
      }
      return std::sqrt(s);
    }
  }
  return set_diameter(space, points);
}

PointCloud attractor_cloud(const ContractionSystem& system, int depth, int samples_per_leaf) {
  if (depth < 1) throw DomainError("attractor depth must be at least 1");
  if (samples_per_leaf < 1) throw DomainError("samples_per_leaf must be at least 1");
  const int k = system.alphabet().size();
  const int spl = std::min<int>(samples_per_leaf, static_cast<int>(system.seeds().size()));
  require_enumerable(std::pow(k, depth) * spl, "attractor_cloud");
  PointCloud cloud;
  cloud.space = system.space();
  cloud.depth = depth;
  const bool all_seeds = spl == static_cast<int>(system.seeds().size());
  cloud.resolution = std::pow(system.max_lip_upper(), depth) *
                     (all_seeds ? system.seed_cover_radius() : system.seed_diameter());
  for (const Word& w : words_of_length(system.alphabet(), depth)) {
    for (int s = 0; s < spl; ++s) {
      cloud.labels.push_back(w);
      cloud.points.push_back(system.apply(w, system.seeds()[static_cast<std::size_t>(s)]));
    }
  }
  return cloud;
}

PointCloud grid_cloud(int dim, int per_axis) {
  if (per_axis < 1) throw DomainError("grid needs at least one point per axis");
  require_enumerable(std::pow(per_axis, dim), "grid_cloud");
  PointCloud cloud;
  cloud.space = MetricSpace::euclidean(dim);
  cloud.resolution = 0.5 * std::sqrt(static_cast<double>(dim)) / per_axis;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  while (true) {
    Point p(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) p[static_cast<std::size_t>(c)] = (idx[static_cast<std::size_t>(c)] + 0.5) / per_axis;
    cloud.points.push_back(std::move(p));
    cloud.labels.emplace_back();
    int c = dim - 1;
    while (c >= 0 && ++idx[static_cast<std::size_t>(c)] == per_axis) idx[static_cast<std::size_t>(c--)] = 0;
    if (c < 0) break;
  }
  return cloud;
}

SemiconformalBounds semiconformal_bounds(const ContractionSystem& system, const Word& word,
                                         int pair_samples) {
  if (pair_samples < 2) throw DomainError("pair_samples must be at least 2");
  if (!system.alphabet().contains(word)) throw DomainError("word uses symbols outside the alphabet");
  const auto& maps = system.maps();
  if (std::all_of(word.begin(), word.end(), [&](int s) { return similitude_like(maps[static_cast<std::size_t>(s)].kind); })) {
    double r = 1.0;
    for (int s : word) r *= maps[static_cast<std::size_t>(s)].ratio;
    return {r, r, true, 0};
  }
  if (std::all_of(word.begin(), word.end(), [&](int s) { return maps[static_cast<std::size_t>(s)].kind == MapKind::Affine2d; })) {
    // composed linear part, applied right to left
    std::array<double, 4> a{1.0, 0.0, 0.0, 1.0};
    for (int s : word) {
      const auto& b = maps[static_cast<std::size_t>(s)].matrix;
      a = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
           a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    }
    const double p = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
    const double det = std::abs(a[0] * a[3] - a[1] * a[2]);
    const double disc = std::sqrt(std::max(0.0, p * p / 4.0 - det * det));
    return {std::sqrt(std::max(0.0, p / 2.0 - disc)), std::sqrt(p / 2.0 + disc), true, 0};
  }
  if (std::all_of(word.begin(), word.end(), [&](int s) { return maps[static_cast<std::size_t>(s)].kind == MapKind::Symbol; }))
    return symbol_ratios(system, word);

  // Mixed kinds: sampled pairs drawn around the seed set.
  std::mt19937_64 rng(0x5eed);
  const auto& seeds = system.seeds();
  std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
  std::uniform_real_distribution<double> mix(0.0, 1.0);
  SemiconformalBounds out;
  out.lower = std::numeric_limits<double>::infinity();
  for (int n = 0; n < pair_samples; ++n) {
    Point x = seeds[pick(rng)], y = seeds[pick(rng)];
    const Point& z = seeds[pick(rng)];
    const double t = mix(rng);
    for (std::size_t c = 0; c < y.size() && c < z.size(); ++c) y[c] = t * y[c] + (1.0 - t) * z[c];
    const double d = system.space().distance(x, y);
    if (!(d > 0.0)) continue;
    const double ratio = system.space().distance(system.apply(word, x), system.apply(word, y)) / d;
    out.lower = std::min(out.lower, ratio);
    out.upper = std::max(out.upper, ratio);
    ++out.pairs_used;
  }
  if (out.pairs_used == 0) throw DomainError("all sampled pairs were degenerate");
  return out;
}

DiameterModel induced_model(const ContractionSystem& system) {
  auto shared = std::make_shared<const ContractionSystem>(system);
  if (system.all_similitudes()) {
    std::vector<double> ratios;
    for (const auto& m : system.maps()) ratios.push_back(m.ratio);
    auto model = DiameterModel::multiplicative(ratios, system.seed_diameter());
    model.name = "induced";
    model.source = shared;
    return model;
  }
  auto model = DiameterModel::word_dependent(system.alphabet(), system.seed_diameter(), [shared](const Word& w) {
    std::vector<Point> image;
    image.reserve(shared->seeds().size());
    for (const auto& s : shared->seeds()) image.push_back(shared->apply(w, s));
    return std::log(set_diameter(shared->space(), image));
  });
  model.name = "induced";
  model.source = shared;
  return model;
}

ContractionSystem cantor_system(double ratio) {
  ContractionSystem sys(MetricSpace::euclidean(1),
                        {ContractionMap::similitude(ratio, {0.0}), ContractionMap::similitude(ratio, {1.0})},
                        {{0.0}, {1.0}});
  sys.set_seed_cover_radius(0.5);
  return sys;
}

ContractionSystem comb_system(double r, int seed_points) {
  if (seed_points < 2) throw DomainError("comb system needs at least two seed points");
  const double len = 1.0 / (1.0 - r);
  std::vector<Point> seeds;
  for (int k = 0; k < seed_points; ++k) seeds.push_back({len * k / (seed_points - 1), 0.0});
  ContractionSystem sys(MetricSpace::comb(r), {ContractionMap::comb_map(r, 0), ContractionMap::comb_map(r, 1)},
                        std::move(seeds));
  sys.set_seed_cover_radius(0.5 * len / (seed_points - 1));
  return sys;
}

ContractionSystem rectangle_system(double a0, double a1, double b0, double b1) {
  if (a0 + a1 > 1.0 || b0 + b1 > 1.0)
    throw DomainError("rectangle ratios must satisfy a0 + a1 <= 1 and b0 + b1 <= 1");
  ContractionSystem sys(MetricSpace::euclidean(2),
                        {ContractionMap::affine2d({a0, 0.0, 0.0, b0}, {0.0, 0.0}),
                         ContractionMap::affine2d({a1, 0.0, 0.0, b1}, {1.0 - a1, 1.0 - b1})},
                        {{0.0, 0.0}, {1.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}});
  sys.set_seed_cover_radius(std::sqrt(0.5));
  return sys;
}

ContractionSystem symbol_example_system(int seed_length) {
  const Alphabet space_alphabet(3);
  std::vector<Point> seeds;
  for (const auto& w : words_of_length(space_alphabet, seed_length)) seeds.emplace_back(w.begin(), w.end());
  // diam(I^inf) = 1
  ContractionSystem sys(MetricSpace::symbol_space(space_alphabet),
                        {ContractionMap::symbol_map({{1, 0}, {1}, {1}}),
                         ContractionMap::symbol_map({{2, 0}, {2}, {2}})},
                        std::move(seeds), 1.0);
  // every infinite word shares its first seed_length symbols with some seed
  sys.set_seed_cover_radius(std::ldexp(1.0, -seed_length));
  return sys;
}

ContractionSystem heisenberg_system() {
  std::vector<ContractionMap> maps;
  std::vector<Point> seeds;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      maps.push_back(heisenberg_F_map({{a, b}}));
      seeds.push_back({double(a), double(b), 0.0});
    }
  return ContractionSystem(MetricSpace::heisenberg(), std::move(maps), std::move(seeds));
}

}  // namespace moranlab
