#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moranlab/diameter_model.hpp"
#include "moranlab/ifs.hpp"

namespace moranlab {

enum class AxiomStatus { Holds, Violated, NotCheckable };

std::string to_string(AxiomStatus s);

struct AxiomEntry {
  std::string axiom;  // "W1".."W4", "C1"
  AxiomStatus status = AxiomStatus::Holds;
  double constant = 1.0;       // minimal witnessed constant D
  Word witness_word;           // word attaining the extreme ratio
  int witness_split = -1;      // split point |i| for W3 / C1
  double witness_ratio = 1.0;  // the extreme ratio itself
  std::string note;
};

struct DecayConstants {
  double c = 0.0;
  double rho = 0.0;
  bool conclusive = true;
};

/// Outcome of an axiom scan over all words up to `depth`.
struct AxiomReport {
  int depth = 0;
  std::vector<AxiomEntry> axioms;
  double D_W3 = 1.0;
  double D_W4 = 1.0;
  std::optional<double> C_C1;
  DecayConstants decay;

  bool all_hold() const;
  const AxiomEntry& entry(const std::string& axiom) const;
};

/// Checks W1 (IFS-induced models only), W2, W3 and W4 up to `depth`.
/// A constant is reported violated when it exceeds the declared D, or when
/// it at least doubles between depth/2 and depth (unbounded growth).
AxiomReport validate_wcmc(const DiameterModel& model, int depth);

/// As validate_wcmc, plus the two-sided C1 constant.
AxiomReport validate_cmc(const DiameterModel& model, int depth);

/// (c, rho) with diam(i) <= c rho^|i| on every checked word. rho is the
/// largest level-to-level ratio of maximal diameters over levels 2..depth.
DecayConstants decay_constants(const DiameterModel& model, int depth);

struct TractabilityReport {
  double C = 0.0;          // lower bound for the tractability constant
  int triples = 0;         // (h, i, j, r) combinations inspected
  Word worst_h, worst_i, worst_j;
  double worst_r = 0.0;
};

/// Witnessed ratio dist(X_hi, X_hj) / (diam(X_h) r) over i, j in Z(r) with
/// dist(X_i, X_j) <= r and |h| <= depth. Pieces are the images of the cloud
/// points, so the estimate is one-sided.
TractabilityReport tractability_probe(const ContractionSystem& system, const PointCloud& cloud,
                                      const std::vector<double>& r_grid, int depth);

}  // namespace moranlab
