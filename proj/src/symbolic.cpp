#include "moranlab/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "moranlab/diameter_model.hpp"
#include "moranlab/error.hpp"
#include "moranlab/ifs.hpp"

namespace moranlab {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int s : w) {
    h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h ^ w.size();
}

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 2) throw DomainError("alphabet needs at least two symbols");
}

bool Alphabet::contains(const Word& w) const noexcept {
  return std::all_of(w.begin(), w.end(), [&](int s) { return s >= 0 && s < size_; });
}

int SubTree::at_level(int n) const {
  if (n < 1 || n > depth())
    throw DomainError("subtree branch counts stop at level " + std::to_string(depth()));
  return branch_counts[static_cast<std::size_t>(n - 1)];
}

bool SubTree::contains(const Word& w) const {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] < 0 || w[k] >= at_level(static_cast<int>(k) + 1)) return false;
  return true;
}

SubTree SubTree::full(const Alphabet& a, int depth) {
  return SubTree{std::vector<int>(static_cast<std::size_t>(std::max(depth, 0)), a.size())};
}

Word parent(const Word& w) {
  if (w.empty()) throw DomainError("the empty word has no parent");
  return Word(w.begin(), w.end() - 1);
}

Word concat(const Word& u, const Word& v) {
  Word w;
  w.reserve(u.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

bool is_prefix(const Word& prefix, const Word& w) noexcept {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool incomparable(const Word& u, const Word& v) noexcept {
  return !is_prefix(u, v) && !is_prefix(v, u);
}

std::string word_to_string(const Word& w, char sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out << sep;
    out << w[k];
  }
  return out.str();
}

namespace {

std::vector<Word> product_words(const std::vector<int>& counts) {
  double total = 1.0;
  for (int c : counts) total *= c;
  require_enumerable(total, "word enumeration");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));
  Word w(counts.size(), 0);
  while (true) {
    out.push_back(w);
    int k = static_cast<int>(w.size()) - 1;
    while (k >= 0 && ++w[static_cast<std::size_t>(k)] == counts[static_cast<std::size_t>(k)]) {
      w[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

template <class Seq>
D2Result d2_impl(const Seq& u, const Seq& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t k = 0; k < n; ++k)
    if (u[k] != v[k]) return {std::ldexp(1.0, -static_cast<int>(k)), true};
  return {0.0, false};
}

}  // namespace

std::vector<Word> words_of_length(const Alphabet& a, int n) {
  if (n < 0) throw DomainError("word length must be nonnegative");
  return product_words(std::vector<int>(static_cast<std::size_t>(n), a.size()));
}

std::vector<Word> words_of_length(const SubTree& j, int n) {
  std::vector<int> counts;
  for (int k = 1; k <= n; ++k) counts.push_back(j.at_level(k));
  return product_words(counts);
}

D2Result d2(const Word& u, const Word& v) { return d2_impl(u, v); }

D2Result d2(const std::vector<double>& u, const std::vector<double>& v) { return d2_impl(u, v); }

std::vector<Word> stopping_set(const DiameterModel& model, double r) {
  if (!(r > 0.0)) throw DomainError("stopping radius must be positive");
  if (r >= model.seed_diameter())
    throw DomainError("stopping radius must be smaller than the seed diameter");
  const int k = model.alphabet().size();
  const double cap = static_cast<double>(enumeration_cap());
  std::vector<Word> out;
  std::vector<Word> stack;
  for (int s = k - 1; s >= 0; --s) stack.push_back(Word{s});
  double visited = 0.0;
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    if (++visited > cap) throw ResourceError("stopping_set: enumeration cap exceeded");
    if (model.diam(w) <= r) {
      out.push_back(std::move(w));
      continue;
    }
    for (int s = k - 1; s >= 0; --s) {
      Word c = w;
      c.push_back(s);
      stack.push_back(std::move(c));
    }
  }
  return out;
}

LocalStoppingReport local_stopping_set(const DiameterModel& model, const PointCloud& cloud,
                                       const Point& x, double r) {
  const auto z = stopping_set(model, r);
  std::unordered_set<Word, WordHash> members(z.begin(), z.end());
  std::size_t longest = 0;
  for (const auto& w : z) longest = std::max(longest, w.size());
  if (static_cast<int>(longest) > cloud.depth)
    throw DomainError("cloud depth " + std::to_string(cloud.depth) +
                      " does not resolve Z(r), which needs depth " + std::to_string(longest));

  std::unordered_map<Word, std::size_t, WordHash> per_piece;
  std::unordered_set<Word, WordHash> hit;
  for (std::size_t p = 0; p < cloud.points.size(); ++p) {
    const Word& label = cloud.labels[p];
    Word prefix;
    for (std::size_t len = 1; len <= label.size(); ++len) {
      prefix.assign(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(len));
      if (members.count(prefix)) break;
    }
    ++per_piece[prefix];
    if (cloud.space.distance(x, cloud.points[p]) < r) hit.insert(prefix);
  }
  LocalStoppingReport rep;
  rep.samples_used = cloud.points.size();
  double min_count = std::numeric_limits<double>::infinity();
  for (const auto& w : z) {
    auto it = per_piece.find(w);
    min_count = std::min(min_count, it == per_piece.end() ? 0.0 : static_cast<double>(it->second));
    if (hit.count(w)) rep.words.push_back(w);
  }
  rep.min_samples_per_piece = z.empty() ? 0.0 : min_count;
  return rep;
}

namespace {

struct CoverDp {
  const WeightFunction& psi;
  int k, n, max_depth;
  Word w;

  double cost() {
    const int len = static_cast<int>(w.size());
    if (len == max_depth) return psi(w);
    double children = 0.0;
    for (int s = 0; s < k; ++s) {
      w.push_back(s);
      children += cost();
      w.pop_back();
    }
    if (len >= n) return std::min(psi(w), children);
    return children;
  }
};

}  // namespace

CoverCost antichain_cover_cost(const WeightFunction& psi, const Alphabet& a, int n, int max_depth) {
  if (n < 0) throw DomainError("cover level must be nonnegative");
  if (n > max_depth) throw DomainError("cover level exceeds max_depth");
  require_enumerable(std::pow(a.size(), max_depth) * 2.0, "antichain_cover_cost");
  CoverCost out;
  CoverDp dp{psi, a.size(), n, max_depth, {}};
  out.value = dp.cost();
  if (max_depth - 1 >= n) {
    CoverDp prev{psi, a.size(), n, max_depth - 1, {}};
    out.previous_depth = prev.cost();
  } else {
    out.previous_depth = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace moranlab
