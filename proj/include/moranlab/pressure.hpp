#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moranlab/diameter_model.hpp"

namespace moranlab {

/// P_n(t) = (1/n) log sum_{|i| = n} diam(i)^t, summed over J_n when a subtree
/// is given. Evaluated in log space.
double pressure_at(const DiameterModel& model, double t, int depth,
                   const std::optional<SubTree>& subtree = std::nullopt);

struct PressureCurve {
  int depth = 0;
  std::vector<std::pair<double, double>> samples;  // (t, P_depth(t))

  std::string to_csv() const;
};

PressureCurve pressure_curve(const DiameterModel& model, int depth, double t_min, double t_max,
                             int n_points, const std::optional<SubTree>& subtree = std::nullopt);

struct PressureZero {
  double t = 0.0;          // zero of P_depth
  int depth = 0;
  double t_half = 0.0;     // zero of P at depth ceil(depth/2)
  double drift = 0.0;      // t - t_half
  bool stable = true;      // |drift| <= 1e-6
  double extrapolated = 0.0;  // limit guess: a + b/n + c log(n)/n through three depths, else 2 t - t_half
  std::string diagnostic;
};

/// Bisection zero of P_depth. The bracket [0, T] doubles T until P_depth(T) < 0.
/// Throws DomainError("no zero at this depth") when P stays positive.
PressureZero pressure_zero(const DiameterModel& model, int depth, double tol = 1e-12,
                           const std::optional<SubTree>& subtree = std::nullopt);

/// Unique t >= 0 with sum r_i^t = 1. A single ratio gives 0.
double moran_dimension(const std::vector<double>& ratios);

/// max{ log(a0^t + a1^t), log(b0^t + b1^t) }.
double self_affine_pressure(double a0, double a1, double b0, double b1, double t);
/// Zero of self_affine_pressure, in (0, 1].
double self_affine_zero(double a0, double a1, double b0, double b1);

}  // namespace moranlab
