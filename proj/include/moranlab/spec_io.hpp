#pragma once

#include <memory>
#include <optional>
#include <string>

#include "moranlab/diameter_model.hpp"
#include "moranlab/ifs.hpp"
#include "moranlab/metrics.hpp"

namespace moranlab {

/// A parsed model spec file (JSON).
///
/// Top-level keys: "name", "space", "system", "model", "declared_D",
/// "subtree", "cmsc", "depth". Numbers may be written as "p/q" strings.
/// Malformed input throws InputError naming the offending key path.
struct ModelSpec {
  std::string name;
  std::shared_ptr<const ContractionSystem> system;  // null for pure diameter models
  std::shared_ptr<const DiameterModel> model;
  std::optional<MetricSpace> space;
  std::optional<SubTree> subtree;
  std::optional<double> cmsc_t;
  std::optional<double> cmsc_C;
  int depth = 10;  // default analysis depth
};

ModelSpec parse_spec(const std::string& json_text);
ModelSpec load_spec(const std::string& path);

/// {"kind":"euclidean","dim":2}, {"kind":"snowflake","base":{...},"p":0.5},
/// {"kind":"symbol_space","alphabet":3}, {"kind":"comb","r":0.7854}, {"kind":"heisenberg"}.
MetricSpace parse_space(const std::string& json_text);

}  // namespace moranlab
