#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace moranlab {

/// Finite word over {0, ..., k-1}. The empty word is the root of the tree.
using Word = std::vector<int>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Index set I with 2 <= #I.
class Alphabet {
 public:
  explicit Alphabet(int size);
  int size() const noexcept { return size_; }
  bool contains(const Word& w) const noexcept;
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

/// Level-wise product subtree: (i1..in) is in J_n iff i_k < branch_counts[k-1].
struct SubTree {
  std::vector<int> branch_counts;

  int depth() const noexcept { return static_cast<int>(branch_counts.size()); }
  /// Branch count at level n (1-based). Throws DomainError past the stored depth.
  int at_level(int n) const;
  bool contains(const Word& w) const;
  static SubTree full(const Alphabet& a, int depth);
};

using WeightFunction = std::function<double(const Word&)>;

Word parent(const Word& w);
Word concat(const Word& u, const Word& v);
bool is_prefix(const Word& prefix, const Word& w) noexcept;
/// Neither word is a prefix of the other, i.e. the cylinders are disjoint.
bool incomparable(const Word& u, const Word& v) noexcept;
std::string word_to_string(const Word& w, char sep = ':');

/// All words of length n, in lexicographic order.
std::vector<Word> words_of_length(const Alphabet& a, int n);
/// Words of length n inside a subtree.
std::vector<Word> words_of_length(const SubTree& j, int n);

struct D2Result {
  double distance = 0.0;
  bool resolved = true;  // false when the prefixes agree on the whole compared range
};

/// Symbol-space metric 2^(1-k) with k the first disagreeing index, on finite
/// prefixes. Prefixes of unequal length are compared on the common range.
D2Result d2(const Word& u, const Word& v);
/// Same metric on symbols stored as doubles (symbol-space points).
D2Result d2(const std::vector<double>& u, const std::vector<double>& v);

class DiameterModel;
struct PointCloud;
using Point = std::vector<double>;

/// Z(r) = { i : diam(X_i) <= r < diam(X_{i-}) }. Throws DomainError if
/// r >= seed diameter or r <= 0, ResourceError if Z(r) is too deep to enumerate.
std::vector<Word> stopping_set(const DiameterModel& model, double r);

struct LocalStoppingReport {
  std::vector<Word> words;        // members of Z(r) whose sample meets B(x, r)
  std::size_t samples_used = 0;   // cloud points inspected
  double min_samples_per_piece = 0.0;
};

/// Z(x, r) using the word-labelled cloud as a stand-in for the pieces.
/// The open ball B(x, r) uses strict d < r. Throws DomainError if some word
/// of Z(r) is deeper than the cloud labels.
LocalStoppingReport local_stopping_set(const DiameterModel& model, const PointCloud& cloud,
                                       const Point& x, double r);

struct CoverCost {
  double value = 0.0;           // cost with covers truncated at max_depth
  double previous_depth = 0.0;  // same quantity at max_depth - 1 (convergence check)
};

/// Minimal sum of psi over antichain covers of I^inf drawn from levels
/// n..max_depth, by tree dynamic programming.
CoverCost antichain_cover_cost(const WeightFunction& psi, const Alphabet& a, int n,
                               int max_depth);

}  // namespace moranlab
