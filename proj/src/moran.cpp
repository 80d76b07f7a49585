#include "moranlab/moran.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "moranlab/error.hpp"

namespace moranlab {

std::string to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Holds: return "holds";
    case AxiomStatus::Violated: return "violated";
    case AxiomStatus::NotCheckable: return "not_checkable";
  }
  return "unknown";
}

bool AxiomReport::all_hold() const {
  return std::none_of(axioms.begin(), axioms.end(),
                      [](const AxiomEntry& e) { return e.status == AxiomStatus::Violated; });
}

const AxiomEntry& AxiomReport::entry(const std::string& axiom) const {
  for (const auto& e : axioms)
    if (e.axiom == axiom) return e;
  throw DomainError("report has no entry for " + axiom);
}

namespace {

constexpr double kRelTol = 1e-9;

// Log diameters of every word up to `depth`, level by level, indexed in
// base-k lexicographic order.
struct LevelTable {
  int k = 2;
  std::vector<std::vector<double>> log_diam;  // log_diam[n][index]

  LevelTable(const DiameterModel& m, int depth) : k(m.alphabet().size()) {
    double total = 0.0;
    for (int n = 0; n <= depth; ++n) total += std::pow(k, n);
    require_enumerable(total, "axiom scan");
    log_diam.resize(static_cast<std::size_t>(depth) + 1);
    for (int n = 0; n <= depth; ++n) {
      auto words = words_of_length(m.alphabet(), n);
      auto& row = log_diam[static_cast<std::size_t>(n)];
      row.reserve(words.size());
      for (const auto& w : words) row.push_back(m.log_diam(w));
    }
  }
};

Word word_from_index(std::size_t idx, int n, int k) {
  Word w(static_cast<std::size_t>(n));
  for (int p = n - 1; p >= 0; --p) {
    w[static_cast<std::size_t>(p)] = static_cast<int>(idx % static_cast<std::size_t>(k));
    idx /= static_cast<std::size_t>(k);
  }
  return w;
}

// One extreme value of a log ratio, tracked per level with its witness.
struct Extreme {
  double value;
  Word word;
  int split = -1;
};

// Per-level scan results for the split ratio diam(ij)/(diam(i)diam(j))
// and the parent ratio diam(i)/diam(i-).
struct Scan {
  std::vector<Extreme> split_max, split_min;  // index = |ij|
  std::vector<Extreme> parent_min;            // index = |i|
};

Scan scan_model(const DiameterModel& m, int depth) {
  Scan s;
  const double inf = std::numeric_limits<double>::infinity();
  s.split_max.assign(static_cast<std::size_t>(depth) + 1, {-inf, {}, -1});
  s.split_min.assign(static_cast<std::size_t>(depth) + 1, {inf, {}, -1});
  s.parent_min.assign(static_cast<std::size_t>(depth) + 1, {inf, {}, -1});
  const int k = m.alphabet().size();

  if (m.structure() == ModelStructure::Multiplicative) {
    const double lseed = std::log(m.seed_diameter());
    const auto& r = m.ratios();
    const auto it = std::min_element(r.begin(), r.end());
    const int smallest = static_cast<int>(it - r.begin());
    for (int n = 1; n <= depth; ++n) {
      Word w(static_cast<std::size_t>(n), smallest);
      s.parent_min[static_cast<std::size_t>(n)] = {std::log(*it), w, -1};
      if (n >= 2) {
        s.split_max[static_cast<std::size_t>(n)] = {-lseed, w, 1};
        s.split_min[static_cast<std::size_t>(n)] = {-lseed, w, 1};
      }
    }
    return s;
  }
  if (m.level_structured()) {
    for (int n = 1; n <= depth; ++n) {
      Word w(static_cast<std::size_t>(n), 0);
      s.parent_min[static_cast<std::size_t>(n)] = {m.level_log_diam(n) - m.level_log_diam(n - 1), w, -1};
      for (int a = 1; a < n; ++a) {
        const double v = m.level_log_diam(n) - m.level_log_diam(a) - m.level_log_diam(n - a);
        auto& hi = s.split_max[static_cast<std::size_t>(n)];
        auto& lo = s.split_min[static_cast<std::size_t>(n)];
        if (v > hi.value) hi = {v, w, a};
        if (v < lo.value) lo = {v, w, a};
      }
    }
    return s;
  }
  const LevelTable t(m, depth);
  for (int n = 1; n <= depth; ++n) {
    const auto& row = t.log_diam[static_cast<std::size_t>(n)];
    const auto& up = t.log_diam[static_cast<std::size_t>(n - 1)];
    for (std::size_t idx = 0; idx < row.size(); ++idx) {
      const double pv = row[idx] - up[idx / static_cast<std::size_t>(k)];
      if (pv < s.parent_min[static_cast<std::size_t>(n)].value)
        s.parent_min[static_cast<std::size_t>(n)] = {pv, word_from_index(idx, n, k), -1};
      std::size_t tail = 1;
      for (int b = 1; b < n; ++b) {
        tail *= static_cast<std::size_t>(k);
        const int a = n - b;
        const double v = row[idx] - t.log_diam[static_cast<std::size_t>(a)][idx / tail] -
                         t.log_diam[static_cast<std::size_t>(b)][idx % tail];
        auto& hi = s.split_max[static_cast<std::size_t>(n)];
        auto& lo = s.split_min[static_cast<std::size_t>(n)];
        if (v > hi.value) hi = {v, word_from_index(idx, n, k), a};
        if (v < lo.value) lo = {v, word_from_index(idx, n, k), a};
      }
    }
  }
  return s;
}

// Running log-constant per depth: g[d] = max over levels <= d of the
// per-level log constant, floored at 0 (D >= 1).
template <class F>
std::vector<double> running(int depth, F level_value) {
  std::vector<double> g(static_cast<std::size_t>(depth) + 1, 0.0);
  for (int d = 1; d <= depth; ++d)
    g[static_cast<std::size_t>(d)] = std::max(g[static_cast<std::size_t>(d - 1)], level_value(d));
  return g;
}

// Decide a verdict from the running constant.
void judge(AxiomEntry& e, const std::vector<double>& g, int depth, const std::optional<double>& declared) {
  const double top = g[static_cast<std::size_t>(depth)];
  const double half = g[static_cast<std::size_t>((depth + 1) / 2)];
  e.constant = std::exp(top);
  std::ostringstream note;
  if (declared && e.constant > *declared * (1.0 + kRelTol)) {
    e.status = AxiomStatus::Violated;
    note << "constant " << e.constant << " exceeds declared D " << *declared;
  } else if (top - half >= std::log(2.0) - 1e-12) {
    e.status = AxiomStatus::Violated;
    note << "constant grows from " << std::exp(half) << " at depth " << (depth + 1) / 2 << " to "
         << e.constant << " at depth " << depth;
  } else {
    e.status = AxiomStatus::Holds;
    note << "holds up to depth " << depth;
  }
  e.note = note.str();
}

void check_w1(const DiameterModel& m, AxiomReport& rep) {
  AxiomEntry e;
  e.axiom = "W1";
  if (!m.source) {
    e.status = AxiomStatus::NotCheckable;
    e.note = "closed-form model carries no sets";
    rep.axioms.push_back(e);
    return;
  }
  const auto& sys = *m.source;
  const auto& space = sys.space();
  if (space.kind() == SpaceKind::SymbolSpace) {
    e.status = AxiomStatus::Holds;
    e.note = "seed set is the whole symbol space";
    rep.axioms.push_back(e);
    return;
  }
  if (!space.euclidean_embedded() || space.kind() == SpaceKind::Snowflake) {
    e.status = AxiomStatus::NotCheckable;
    e.note = "containment check needs Euclidean coordinates";
    rep.axioms.push_back(e);
    return;
  }
  // Bounding box of the seed samples; every map must send every seed back
  // into it, which gives nested pieces by induction.
  const std::size_t dim = sys.seeds().front().size();
  std::vector<double> lo(dim, INFINITY), hi(dim, -INFINITY);
  for (const auto& s : sys.seeds())
    for (std::size_t c = 0; c < dim; ++c) {
      lo[c] = std::min(lo[c], s[c]);
      hi[c] = std::max(hi[c], s[c]);
    }
  constexpr double kTol = 1e-9;
  e.status = AxiomStatus::Holds;
  e.note = "images of all seed samples stay in the seed bounding box";
  for (std::size_t i = 0; i < sys.maps().size(); ++i) {
    for (const auto& s : sys.seeds()) {
      const Point y = sys.maps()[i].apply(s);
      for (std::size_t c = 0; c < dim; ++c)
        if (y[c] < lo[c] - kTol || y[c] > hi[c] + kTol) {
          e.status = AxiomStatus::Violated;
          e.witness_word = Word{static_cast<int>(i)};
          e.note = "image of a seed sample leaves the seed bounding box";
        }
    }
  }
  rep.axioms.push_back(e);
}

AxiomReport validate(const DiameterModel& m, int depth, bool two_sided) {
  if (depth < 2) throw DomainError("axiom validation needs depth >= 2");
  const Scan s = scan_model(m, depth);
  AxiomReport rep;
  rep.depth = depth;

  check_w1(m, rep);

  // W3: diam(ij) <= D diam(i) diam(j)
  AxiomEntry w3;
  w3.axiom = "W3";
  const auto g3 = running(depth, [&](int d) { return d >= 2 ? s.split_max[static_cast<std::size_t>(d)].value : 0.0; });
  judge(w3, g3, depth, m.declared_D);
  {
    const Extreme* best = nullptr;
    for (int d = 2; d <= depth; ++d)
      if (!best || s.split_max[static_cast<std::size_t>(d)].value > best->value) best = &s.split_max[static_cast<std::size_t>(d)];
    if (best) {
      w3.witness_word = best->word;
      w3.witness_split = best->split;
      w3.witness_ratio = std::exp(best->value);
    }
  }
  rep.D_W3 = w3.constant;

  // W4: diam(i) >= D^-1 diam(i-)
  AxiomEntry w4;
  w4.axiom = "W4";
  const auto g4 = running(depth, [&](int d) { return -s.parent_min[static_cast<std::size_t>(d)].value; });
  judge(w4, g4, depth, m.declared_D);
  {
    const Extreme* best = nullptr;
    for (int d = 1; d <= depth; ++d)
      if (!best || s.parent_min[static_cast<std::size_t>(d)].value < best->value) best = &s.parent_min[static_cast<std::size_t>(d)];
    w4.witness_word = best->word;
    w4.witness_ratio = std::exp(best->value);
  }
  rep.D_W4 = w4.constant;

  // W2: some level has max diam below 1/D
  AxiomEntry w2;
  w2.axiom = "W2";
  const double D = std::max({rep.D_W3, rep.D_W4, m.declared_D.value_or(1.0)});
  w2.constant = D;
  w2.status = AxiomStatus::Violated;
  w2.note = "no level up to the checked depth has max diameter below 1/D";
  for (int n = 1; n <= depth; ++n) {
    const double md = m.max_level_diam(n);
    if (md < 1.0 / D) {
      w2.status = AxiomStatus::Holds;
      w2.witness_word = Word(static_cast<std::size_t>(n), 0);
      w2.witness_ratio = md;
      w2.note = "level " + std::to_string(n) + " has max diameter below 1/D";
      break;
    }
  }

  rep.axioms.push_back(w2);
  rep.axioms.push_back(w3);
  rep.axioms.push_back(w4);

  if (two_sided) {
    AxiomEntry c1;
    c1.axiom = "C1";
    const auto g1 = running(depth, [&](int d) {
      if (d < 2) return 0.0;
      return std::max(s.split_max[static_cast<std::size_t>(d)].value, -s.split_min[static_cast<std::size_t>(d)].value);
    });
    judge(c1, g1, depth, m.declared_D);
    const Extreme* best = nullptr;
    bool best_is_min = false;
    for (int d = 2; d <= depth; ++d) {
      const auto& hi = s.split_max[static_cast<std::size_t>(d)];
      const auto& lo = s.split_min[static_cast<std::size_t>(d)];
      const double cur = best ? (best_is_min ? -best->value : best->value) : -INFINITY;
      if (hi.value > cur) { best = &hi; best_is_min = false; }
      if (-lo.value > std::max(cur, hi.value)) { best = &lo; best_is_min = true; }
    }
    if (best) {
      c1.witness_word = best->word;
      c1.witness_split = best->split;
      c1.witness_ratio = std::exp(best->value);
    }
    rep.C_C1 = c1.constant;
    rep.axioms.push_back(c1);
  }

  rep.decay = decay_constants(m, depth);
  return rep;
}

}  // namespace

AxiomReport validate_wcmc(const DiameterModel& model, int depth) { return validate(model, depth, false); }

AxiomReport validate_cmc(const DiameterModel& model, int depth) { return validate(model, depth, true); }

DecayConstants decay_constants(const DiameterModel& model, int depth) {
  if (depth < 1) throw DomainError("decay fit needs depth >= 1");
  std::vector<double> md;
  for (int n = 0; n <= depth; ++n) md.push_back(model.max_level_diam(n));
  DecayConstants out;
  if (depth == 1) {
    out.rho = md[1] / md[0];
  } else {
    for (int n = 2; n <= depth; ++n) out.rho = std::max(out.rho, md[static_cast<std::size_t>(n)] / md[static_cast<std::size_t>(n - 1)]);
  }
  out.conclusive = out.rho < 1.0;
  for (int n = 0; n <= depth; ++n)
    out.c = std::max(out.c, md[static_cast<std::size_t>(n)] / std::pow(out.rho, n));
  return out;
}

TractabilityReport tractability_probe(const ContractionSystem& system, const PointCloud& cloud,
                                      const std::vector<double>& r_grid, int depth) {
  if (depth < 0) throw DomainError("tractability depth must be nonnegative");
  const auto model = induced_model(system);
  const auto& space = system.space();

  // Stand-in for E: at most 64 cloud points, evenly strided.
  std::vector<Point> base;
  const std::size_t stride = std::max<std::size_t>(1, cloud.points.size() / 64);
  for (std::size_t p = 0; p < cloud.points.size(); p += stride) base.push_back(cloud.points[p]);
  if (base.empty()) throw DomainError("tractability probe needs a nonempty cloud");

  auto piece = [&](const Word& w) {
    std::vector<Point> out;
    out.reserve(base.size());
    for (const auto& b : base) out.push_back(system.apply(w, b));
    return out;
  };
  auto set_dist = [&](const std::vector<Point>& a, const std::vector<Point>& b) {
    double d = INFINITY;
    for (const auto& x : a)
      for (const auto& y : b) d = std::min(d, space.distance(x, y));
    return d;
  };

  std::vector<Word> hs;
  for (int n = 0; n <= depth; ++n)
    for (auto& h : words_of_length(system.alphabet(), n)) hs.push_back(std::move(h));

  TractabilityReport rep;
  for (double r : r_grid) {
    if (!(r > 0.0) || r >= model.seed_diameter()) continue;
    const auto z = stopping_set(model, r);
    std::vector<std::vector<Point>> pieces;
    for (const auto& w : z) pieces.push_back(piece(w));
    for (std::size_t a = 0; a < z.size(); ++a)
      for (std::size_t b = a + 1; b < z.size(); ++b) {
        if (set_dist(pieces[a], pieces[b]) > r) continue;
        for (const auto& h : hs) {
          const double d = set_dist(piece(concat(h, z[a])), piece(concat(h, z[b])));
          const double c = d / (model.diam(h) * r);
          ++rep.triples;
          if (c > rep.C) {
            rep.C = c;
            rep.worst_h = h;
            rep.worst_i = z[a];
            rep.worst_j = z[b];
            rep.worst_r = r;
          }
        }
      }
  }
  return rep;
}

}  // namespace moranlab
