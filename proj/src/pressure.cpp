#include "moranlab/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "moranlab/error.hpp"
#include "moranlab/format.hpp"

namespace moranlab {

namespace {

double log_sum_exp(const std::vector<double>& v) {
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// log sum diam^t over level n (or J_n).
double level_log_sum(const DiameterModel& model, double t, int n, const std::optional<SubTree>& j) {
  const int k = model.alphabet().size();
  auto count_at = [&](int level) { return j ? j->at_level(level) : k; };
  for (int level = 1; level <= n; ++level)
    if (count_at(level) < 1 || count_at(level) > k) throw DomainError("subtree branch count out of range");

  switch (model.structure()) {
    case ModelStructure::Multiplicative: {
      const auto& r = model.ratios();
      double s = t * std::log(model.seed_diameter());
      for (int level = 1; level <= n; ++level) {
        std::vector<double> terms;
        for (int c = 0; c < count_at(level); ++c) terms.push_back(t * std::log(r[static_cast<std::size_t>(c)]));
        s += log_sum_exp(terms);
      }
      return s;
    }
    case ModelStructure::LevelHomogeneous: {
      double s = t * model.level_log_diam(n);
      for (int level = 1; level <= n; ++level) s += std::log(static_cast<double>(count_at(level)));
      return s;
    }
    case ModelStructure::WordDependent: {
      const auto words = j ? words_of_length(*j, n) : words_of_length(model.alphabet(), n);
      std::vector<double> terms;
      terms.reserve(words.size());
      for (const auto& w : words) terms.push_back(t * model.log_diam(w));
      return log_sum_exp(terms);
    }
  }
  return 0.0;
}

double bisect_decreasing(const std::function<double(double)>& f, double tol) {
  if (f(0.0) <= 0.0) return 0.0;
  double hi = 1.0;
  while (f(hi) >= 0.0) {
    hi *= 2.0;
    if (hi > 1e6) throw DomainError("no zero at this depth");
  }
  double lo = 0.0;
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double pressure_at(const DiameterModel& model, double t, int depth, const std::optional<SubTree>& subtree) {
  if (!(t >= 0.0)) throw DomainError("pressure needs t >= 0");
  if (depth < 1) throw DomainError("pressure needs depth >= 1");
  return level_log_sum(model, t, depth, subtree) / depth;
}

std::string PressureCurve::to_csv() const {
  std::ostringstream out;
  out << "t,P,depth\n";
  for (const auto& [t, p] : samples) out << fmt_num(t) << ',' << fmt_num(p) << ',' << depth << '\n';
  return out.str();
}

PressureCurve pressure_curve(const DiameterModel& model, int depth, double t_min, double t_max, int n_points,
                             const std::optional<SubTree>& subtree) {
  if (n_points < 1) throw DomainError("pressure curve needs at least one point");
  if (!(t_min >= 0.0) || t_max < t_min) throw DomainError("pressure curve needs 0 <= t_min <= t_max");
  PressureCurve c;
  c.depth = depth;
  for (int k = 0; k < n_points; ++k) {
    const double t = n_points == 1 ? t_min : t_min + (t_max - t_min) * k / (n_points - 1);
    c.samples.emplace_back(t, pressure_at(model, t, depth, subtree));
  }
  return c;
}

PressureZero pressure_zero(const DiameterModel& model, int depth, double tol, const std::optional<SubTree>& subtree) {
  if (depth < 1) throw DomainError("pressure needs depth >= 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  auto zero_at = [&](int n) {
    return bisect_decreasing([&](double t) { return level_log_sum(model, t, n, subtree); }, tol);
  };
  PressureZero z;
  z.depth = depth;
  z.t = zero_at(depth);
  const int half = (depth + 1) / 2;
  auto try_zero = [&](int n) -> std::optional<double> {
    try {
      return zero_at(n);
    } catch (const DomainError&) {
      return std::nullopt;  // shallow levels can stay above zero when the seed is large
    }
  };
  const auto th = half == depth ? std::optional<double>(z.t) : try_zero(half);
  if (!th) {
    z.t_half = NAN;
    z.drift = NAN;
    z.stable = false;
    z.extrapolated = z.t;
    z.diagnostic = "undetermined: no zero at depth " + std::to_string(half) + ", drift cannot be judged";
    return z;
  }
  z.t_half = *th;
  z.drift = z.t - z.t_half;
  z.stable = std::abs(z.drift) <= 1e-6;
  // an estimate is trusted only on the side the zeros are moving to
  auto plausible = [&](double e) { return std::isfinite(e) && e >= -1e-9 && (e - z.t) * (z.t - z.t_half) >= 0.0; };
  z.extrapolated = NAN;
  if (plausible(2.0 * z.t - z.t_half)) z.extrapolated = std::max(0.0, 2.0 * z.t - z.t_half);
  const int quarter = (depth + 3) / 4;
  const auto t4 = quarter < half && half < depth && !z.stable ? try_zero(quarter) : std::nullopt;
  if (t4) {
    // fit t(n) = a + b/n + c log(n)/n through depths n/4, n/2, n
    const double n[3] = {double(quarter), double(half), double(depth)};
    const double y[3] = {*t4, z.t_half, z.t};
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
      m[i][0] = 1.0;
      m[i][1] = 1.0 / n[i];
      m[i][2] = std::log(n[i]) / n[i];
      m[i][3] = y[i];
    }
    for (int c = 0; c < 3; ++c)
      for (int r = c + 1; r < 3; ++r) {
        const double f = m[r][c] / m[c][c];
        for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
      }
    double x[3];
    for (int r = 2; r >= 0; --r) {
      double acc = m[r][3];
      for (int k = r + 1; k < 3; ++k) acc -= m[r][k] * x[k];
      x[r] = acc / m[r][r];
    }
    const bool monotone = (*t4 - z.t_half) * (z.t_half - z.t) > 0.0;
    if (monotone && plausible(x[0])) z.extrapolated = std::max(0.0, x[0]);
  }
  std::ostringstream d;
  if (z.stable) {
    d << "stable: zeros at depths " << half << " and " << depth << " agree";
  } else if (std::isnan(z.extrapolated)) {
    d << "unsettled: zero moves by " << fmt_num(z.drift) << " between depths " << half << " and " << depth
      << "; increase the depth";
  } else {
    d << "drifting toward " << fmt_num(z.extrapolated, 3) << ": zero moves by " << fmt_num(z.drift)
      << " between depths " << half << " and " << depth;
  }
  z.diagnostic = d.str();
  return z;
}

double moran_dimension(const std::vector<double>& ratios) {
  if (ratios.empty()) throw DomainError("moran_dimension needs at least one ratio");
  for (double r : ratios)
    if (!(r > 0.0 && r < 1.0)) throw DomainError("ratios must lie in (0, 1)");
  if (ratios.size() == 1) return 0.0;
  std::vector<double> logs;
  for (double r : ratios) logs.push_back(std::log(r));
  return bisect_decreasing(
      [&](double t) {
        std::vector<double> terms;
        for (double l : logs) terms.push_back(t * l);
        return log_sum_exp(terms);
      },
      1e-13);
}

namespace {

void check_rectangle(double a0, double a1, double b0, double b1) {
  for (double v : {a0, a1, b0, b1})
    if (!(v > 0.0 && v < 1.0)) throw DomainError("self-affine ratios must lie in (0, 1)");
  if (a0 + a1 > 1.0 || b0 + b1 > 1.0)
    throw DomainError("self-affine ratios must satisfy a0 + a1 <= 1 and b0 + b1 <= 1");
}

}  // namespace

double self_affine_pressure(double a0, double a1, double b0, double b1, double t) {
  check_rectangle(a0, a1, b0, b1);
  return std::max(std::log(std::pow(a0, t) + std::pow(a1, t)), std::log(std::pow(b0, t) + std::pow(b1, t)));
}

double self_affine_zero(double a0, double a1, double b0, double b1) {
  check_rectangle(a0, a1, b0, b1);
  // The max of two decreasing functions vanishes at the larger of their zeros.
  const double s = std::max(moran_dimension({a0, a1}), moran_dimension({b0, b1}));
  if (!(s > 0.0 && s <= 1.0 + 1e-12)) throw DomainError("self-affine zero outside (0, 1]");
  return s;
}

}  // namespace moranlab
