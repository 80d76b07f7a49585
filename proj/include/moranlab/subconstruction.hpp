#pragma once

#include <string>
#include <vector>

#include "moranlab/diameter_model.hpp"
#include "moranlab/symbolic.hpp"

namespace moranlab {

/// Layer dimensions (m_1, ..., m_s) of a stratified Lie algebra.
class StratificationData {
 public:
  explicit StratificationData(std::vector<int> layer_dims);
  static StratificationData heisenberg() { return StratificationData({2, 1}); }

  const std::vector<int>& layer_dims() const noexcept { return dims_; }
  int step() const noexcept { return static_cast<int>(dims_.size()); }
  /// m_j for 1 <= j <= s.
  int m(int j) const { return dims_.at(static_cast<std::size_t>(j - 1)); }
  /// Topological dimension sum m_j.
  int topological_dimension() const noexcept;
  /// Homogeneous dimension Q = sum j m_j.
  int homogeneous_dimension() const noexcept;
  /// The layer index l in {0, ..., s-1} with sum_{j<=l} m_j < alpha <= sum_{j<=l+1} m_j.
  int layer_index(double alpha) const;

 private:
  std::vector<int> dims_;
};

double beta_minus(const StratificationData& strat, double alpha);
double beta_plus(const StratificationData& strat, double alpha);

/// j_1 = 2, j_{i+1} = 1 when (prod_{l<=i} j_l) 3^(-t i) > 1 and 2 otherwise.
SubTree cantor_branch_sequence(double t, int length);

struct CmscReport {
  int depth = 0;
  double t = 0.0;
  double C_declared = 0.0;
  double C_witnessed = 1.0;  // smallest C that the strict bounds need
  double ratio_min = 1.0;    // extremes of sum diam(ij)^t / diam(i)^t
  double ratio_max = 1.0;
  bool holds = true;         // all ratios strictly inside (1/C, C)
  Word failing_word;         // first (i, n) outside the window
  int failing_n = 0;
  struct Level {
    int n = 0;
    double min = 1.0, max = 1.0;
  };
  std::vector<Level> per_n;  // extremes for each extension length n
  std::string note;
};

/// Checks C^-1 diam(i)^t < sum_{ij in J} diam(ij)^t < C diam(i)^t for all
/// i in J_* (|i| >= 1) and n >= 1 with |i| + n <= depth.
CmscReport verify_cmsc(const DiameterModel& model, const SubTree& subtree, double t, double C, int depth);

/// The branch rule n_1 = 2, n_{k+1} = 2 iff prod n_i^((l+1) m_{l+1}) < 2^(k (l+1) gamma),
/// gamma = alpha - sum_{j<=l} m_j, evaluated in log space.
std::vector<int> carnot_branch_sequence_raw(const StratificationData& strat, double alpha, int length);

struct CarnotSequence {
  std::vector<int> sequence;
  std::string note;
};

/// The rule above, except at alpha = sum m_j where the full tree (all 2) is returned.
CarnotSequence carnot_branch_sequence(const StratificationData& strat, double alpha, int length);

struct CarnotCmscReport {
  int layer = 0;             // l
  int alphabet_size = 0;     // 2^(sum_{j<=l+1} j m_j)
  std::vector<int> sequence; // n_i
  SubTree subtree;           // branch counts n_i^((l+1) m_{l+1}) 2^(sum_{j<=l} j m_j)
  double t = 0.0;            // beta_minus(alpha)
  double C = 0.0;            // 2^(2 (l+1) m_{l+1})
  CmscReport report;
};

/// Builds diam = 2^(-n) with the branch counts above and verifies the
/// sub-construction condition at t = beta_minus(alpha).
CarnotCmscReport carnot_cmsc_verify(const StratificationData& strat, double alpha, int depth);

}  // namespace moranlab
