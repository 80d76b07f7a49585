#include "moranlab/subconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "moranlab/error.hpp"

namespace moranlab {

StratificationData::StratificationData(std::vector<int> layer_dims) : dims_(std::move(layer_dims)) {
  if (dims_.empty()) throw DomainError("stratification needs at least one layer");
  for (int m : dims_)
    if (m < 1) throw DomainError("layer dimensions must be positive");
}

int StratificationData::topological_dimension() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), 0);
}

int StratificationData::homogeneous_dimension() const noexcept {
  int q = 0;
  for (int j = 1; j <= step(); ++j) q += j * m(j);
  return q;
}

int StratificationData::layer_index(double alpha) const {
  if (!(alpha > 0.0) || alpha > topological_dimension())
    throw DomainError("alpha must lie in (0, " + std::to_string(topological_dimension()) + "]");
  int below = 0;
  for (int l = 0; l < step(); ++l) {
    if (below < alpha && alpha <= below + m(l + 1)) return l;
    below += m(l + 1);
  }
  throw DomainError("alpha outside every layer");
}

double beta_minus(const StratificationData& strat, double alpha) {
  const int l = strat.layer_index(alpha);
  double weighted = 0.0, plain = 0.0;
  for (int j = 1; j <= l; ++j) {
    weighted += j * strat.m(j);
    plain += strat.m(j);
  }
  return weighted + (1 + l) * (alpha - plain);
}

double beta_plus(const StratificationData& strat, double alpha) {
  const int s = strat.step();
  if (!(alpha > 0.0) || alpha > strat.topological_dimension())
    throw DomainError("alpha must lie in (0, " + std::to_string(strat.topological_dimension()) + "]");
  // l+ in {2, ..., s+1} with sum_{j>=l+} m_j < alpha <= sum_{j>=l+ - 1} m_j
  for (int lp = s + 1; lp >= 2; --lp) {
    double tail = 0.0, weighted = 0.0;
    for (int j = lp; j <= s; ++j) {
      tail += strat.m(j);
      weighted += j * strat.m(j);
    }
    const double wider = tail + strat.m(lp - 1);
    if (tail < alpha && alpha <= wider) return weighted + (lp - 1) * (alpha - tail);
  }
  throw DomainError("alpha outside every layer");
}

SubTree cantor_branch_sequence(double t, int length) {
  const double s = std::numbers::ln2 / std::log(3.0);
  if (!(t > 0.0 && t < s)) throw DomainError("t must lie in (0, log2/log3)");
  if (length < 1) throw DomainError("sequence length must be at least 1");
  SubTree j;
  j.branch_counts.push_back(2);
  double log_prod = std::numbers::ln2;  // log of prod j_l
  for (int i = 1; i < length; ++i) {
    const int next = log_prod - t * i * std::log(3.0) > 0.0 ? 1 : 2;
    j.branch_counts.push_back(next);
    log_prod += std::log(static_cast<double>(next));
  }
  return j;
}

namespace {

void record(CmscReport& rep, const Word& i, int n, double log_ratio, double logC) {
  const double ratio = std::exp(log_ratio);
  rep.ratio_min = std::min(rep.ratio_min, ratio);
  rep.ratio_max = std::max(rep.ratio_max, ratio);
  rep.C_witnessed = std::max({rep.C_witnessed, ratio, 1.0 / ratio});
  auto& lvl = rep.per_n[static_cast<std::size_t>(n - 1)];
  lvl.min = std::min(lvl.min, ratio);
  lvl.max = std::max(lvl.max, ratio);
  if (rep.holds && !(log_ratio < logC && log_ratio > -logC)) {
    rep.holds = false;
    rep.failing_word = i;
    rep.failing_n = n;
  }
}

// Sum over extensions of i in J, level by level: out[n-1] = sum_{ij in J_{|i|+n}} (diam(ij)/diam(i))^t.
void extension_sums(const DiameterModel& m, const SubTree& j, double t, Word& w, double base_log, int depth,
                    std::vector<double>& out, std::size_t a) {
  if (static_cast<int>(w.size()) == depth) return;
  const int b = j.at_level(static_cast<int>(w.size()) + 1);
  for (int s = 0; s < b; ++s) {
    w.push_back(s);
    out[w.size() - a - 1] += std::exp(t * (m.log_diam(w) - base_log));
    extension_sums(m, j, t, w, base_log, depth, out, a);
    w.pop_back();
  }
}

}  // namespace

CmscReport verify_cmsc(const DiameterModel& model, const SubTree& subtree, double t, double C, int depth) {
  if (depth < 2) throw DomainError("CMSC verification needs depth >= 2");
  if (subtree.depth() < depth) throw DomainError("subtree is shorter than the verification depth");
  if (!(C > 1.0)) throw DomainError("CMSC constant must exceed 1");
  if (!(t > 0.0)) throw DomainError("CMSC exponent must be positive");
  const int k = model.alphabet().size();
  for (int n = 1; n <= depth; ++n)
    if (subtree.at_level(n) < 1 || subtree.at_level(n) > k) throw DomainError("subtree branch count out of range");

  CmscReport rep;
  rep.depth = depth;
  rep.t = t;
  rep.C_declared = C;
  rep.ratio_min = INFINITY;
  rep.ratio_max = 0.0;
  for (int n = 1; n < depth; ++n) rep.per_n.push_back({n, INFINITY, 0.0});
  const double logC = std::log(C);

  if (model.structure() == ModelStructure::Multiplicative) {
    // sum over J-extensions factorises level by level and does not depend on i
    const auto& r = model.ratios();
    std::vector<double> step(static_cast<std::size_t>(depth) + 1, 0.0);
    for (int lvl = 1; lvl <= depth; ++lvl) {
      double s = 0.0;
      for (int c = 0; c < subtree.at_level(lvl); ++c) s += std::pow(r[static_cast<std::size_t>(c)], t);
      step[static_cast<std::size_t>(lvl)] = std::log(s);
    }
    for (int a = 1; a < depth; ++a) {
      double acc = 0.0;
      for (int n = 1; a + n <= depth; ++n) {
        acc += step[static_cast<std::size_t>(a + n)];
        record(rep, Word(static_cast<std::size_t>(a), 0), n, acc, logC);
      }
    }
    rep.note = "multiplicative closed form";
  } else if (model.level_structured()) {
    for (int a = 1; a < depth; ++a) {
      double count = 0.0;
      for (int n = 1; a + n <= depth; ++n) {
        count += std::log(static_cast<double>(subtree.at_level(a + n)));
        const double lr = t * (model.level_log_diam(a + n) - model.level_log_diam(a)) + count;
        record(rep, Word(static_cast<std::size_t>(a), 0), n, lr, logC);
      }
    }
    rep.note = "level-homogeneous closed form";
  } else {
    double total = 0.0;
    for (int n = 1; n <= depth; ++n) {
      double level = 1.0;
      for (int q = 1; q <= n; ++q) level *= subtree.at_level(q);
      total += level * (depth - n + 1);
    }
    require_enumerable(total, "verify_cmsc");
    for (int a = 1; a < depth; ++a)
      for (const Word& i : words_of_length(subtree, a)) {
        std::vector<double> sums(static_cast<std::size_t>(depth - a), 0.0);
        Word w = i;
        extension_sums(model, subtree, t, w, model.log_diam(i), depth, sums, i.size());
        for (int n = 1; a + n <= depth; ++n) record(rep, i, n, std::log(sums[static_cast<std::size_t>(n - 1)]), logC);
      }
    rep.note = "exhaustive word scan";
  }
  return rep;
}

std::vector<int> carnot_branch_sequence_raw(const StratificationData& strat, double alpha, int length) {
  if (length < 1) throw DomainError("sequence length must be at least 1");
  const int l = strat.layer_index(alpha);
  double below = 0.0;
  for (int j = 1; j <= l; ++j) below += strat.m(j);
  const double gamma = alpha - below;
  const double m_next = strat.m(l + 1);
  // prod n_i^((l+1) m) < 2^(k (l+1) gamma)  <=>  count2 * m < k * gamma
  std::vector<int> seq{2};
  int count2 = 1;
  for (int kk = 1; kk < length; ++kk) {
    const double lhs = count2 * m_next, rhs = kk * gamma;
    const int next = lhs < rhs - 1e-12 * std::max(1.0, std::abs(rhs)) ? 2 : 1;
    seq.push_back(next);
    if (next == 2) ++count2;
  }
  return seq;
}

CarnotSequence carnot_branch_sequence(const StratificationData& strat, double alpha, int length) {
  CarnotSequence out;
  if (alpha == static_cast<double>(strat.topological_dimension())) {
    if (length < 1) throw DomainError("sequence length must be at least 1");
    out.sequence.assign(static_cast<std::size_t>(length), 2);
    out.note = "alpha equals the topological dimension: full tree, no thinning";
    return out;
  }
  out.sequence = carnot_branch_sequence_raw(strat, alpha, length);
  out.note = "branch rule";
  return out;
}

CarnotCmscReport carnot_cmsc_verify(const StratificationData& strat, double alpha, int depth) {
  CarnotCmscReport out;
  out.layer = strat.layer_index(alpha);
  const int l = out.layer;
  int lower_weight = 0;
  for (int j = 1; j <= l; ++j) lower_weight += j * strat.m(j);
  const int top_weight = lower_weight + (l + 1) * strat.m(l + 1);
  if (top_weight > 30) throw ResourceError("alphabet 2^" + std::to_string(top_weight) + " is too large");
  out.alphabet_size = 1 << top_weight;
  const auto seq = carnot_branch_sequence(strat, alpha, depth);
  out.sequence = seq.sequence;
  const int exponent = (l + 1) * strat.m(l + 1);
  for (int n : out.sequence) {
    const int thick = n == 2 ? (1 << exponent) : 1;
    out.subtree.branch_counts.push_back(thick << lower_weight);
  }
  out.t = beta_minus(strat, alpha);
  out.C = std::ldexp(1.0, 2 * exponent);
  const auto model = DiameterModel::dyadic(out.alphabet_size);
  out.report = verify_cmsc(model, out.subtree, out.t, out.C, depth);
  out.report.note = seq.note + "; " + out.report.note;
  return out;
}

}  // namespace moranlab
