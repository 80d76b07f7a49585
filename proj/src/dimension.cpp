#include "moranlab/dimension.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "moranlab/error.hpp"
#include "moranlab/format.hpp"
#include "moranlab/pressure.hpp"

namespace moranlab {

namespace {

using CellKey = std::array<long long, 3>;

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::size_t h = 0;
    for (long long v : k) h = h * 1000003u ^ std::hash<long long>{}(v);
    return h;
  }
};

// Greedy selection: a point is accepted when every accepted point is at
// distance >= threshold from it. Returns indices into `pts`.
std::vector<std::size_t> greedy_select(const MetricSpace& space, const std::vector<Point>& pts,
                                       const std::vector<std::size_t>& order, double threshold) {
  std::vector<std::size_t> chosen;
  if (space.euclidean_embedded() && !pts.empty()) {
    const double cell = space.euclidean_radius(threshold);
    const std::size_t dim = pts.front().size();
    std::unordered_map<CellKey, std::vector<std::size_t>, CellHash> grid;
    auto key_of = [&](const Point& p) {
      CellKey k{0, 0, 0};
      for (std::size_t c = 0; c < dim && c < 3; ++c) k[c] = static_cast<long long>(std::floor(p[c] / cell));
      return k;
    };
    for (std::size_t idx : order) {
      const Point& p = pts[idx];
      const CellKey k = key_of(p);
      bool covered = false;
      CellKey n{0, 0, 0};
      const long long span[3] = {1, dim > 1 ? 1 : 0, dim > 2 ? 1 : 0};
      for (long long a = -span[0]; a <= span[0] && !covered; ++a)
        for (long long b = -span[1]; b <= span[1] && !covered; ++b)
          for (long long c = -span[2]; c <= span[2] && !covered; ++c) {
            n = {k[0] + a, k[1] + b, k[2] + c};
            auto it = grid.find(n);
            if (it == grid.end()) continue;
            for (std::size_t q : it->second)
              if (space.distance(p, pts[q]) < threshold) {
                covered = true;
                break;
              }
          }
      if (!covered) {
        chosen.push_back(idx);
        grid[k].push_back(idx);
      }
    }
    return chosen;
  }
  for (std::size_t idx : order) {
    const Point& p = pts[idx];
    if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t q) { return space.distance(p, pts[q]) >= threshold; }))
      chosen.push_back(idx);
  }
  return chosen;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  for (std::size_t k = 0; k < n; ++k) o[k] = k;
  return o;
}

struct LineFit {
  double slope = 0.0, intercept = 0.0, r2 = 1.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
    syy += (y[k] - my) * (y[k] - my);
  }
  LineFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  f.r2 = (sxx > 0 && syy > 0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

}  // namespace

std::size_t box_count(const PointCloud& cloud, double r, CountMethod method) {
  if (!(r > 0.0)) throw DomainError("box_count radius must be positive");
  if (cloud.points.empty()) return 0;
  if (method == CountMethod::Grid) {
    if (cloud.space.kind() != SpaceKind::Euclidean && cloud.space.kind() != SpaceKind::Comb)
      throw DomainError("grid counting needs a Euclidean cloud");
    std::set<std::vector<long long>> cells;
    for (const auto& p : cloud.points) {
      std::vector<long long> k;
      for (double c : p) k.push_back(static_cast<long long>(std::floor(c / r + 1e-9)));
      cells.insert(std::move(k));
    }
    return cells.size();
  }
  return greedy_select(cloud.space, cloud.points, identity_order(cloud.points.size()), r).size();
}

std::string MinkowskiEstimate::to_csv() const {
  std::ostringstream out;
  out << "r,N,residual\n";
  for (const auto& row : rows) out << fmt_num(row.r) << ',' << row.count << ',' << fmt_num(row.residual) << '\n';
  return out.str();
}

MinkowskiEstimate minkowski_estimate(const PointCloud& cloud, double r_min, double r_max, int n_scales,
                                     CountMethod method) {
  if (!(r_min > 0.0) || !(r_min < r_max)) throw DomainError("minkowski_estimate needs 0 < r_min < r_max");
  if (n_scales < 2) throw DomainError("minkowski_estimate needs at least two scales");
  if (cloud.points.empty()) throw DomainError("minkowski_estimate needs a nonempty cloud");
  const double diam = cloud.diameter();
  if (r_max > diam * (1.0 + 1e-9)) throw DomainError("r_max exceeds the cloud diameter");
  if (r_min < 10.0 * cloud.resolution) {
    std::ostringstream msg;
    msg << "r_min = " << r_min << " is not resolved: the depth-" << cloud.depth << " cloud has resolution "
        << cloud.resolution << " and needs r_min >= " << 10.0 * cloud.resolution << "; increase the depth";
    throw DomainError(msg.str());
  }
  MinkowskiEstimate est;
  std::vector<double> x, y;
  for (int k = 0; k < n_scales; ++k) {
    const double r = r_max * std::pow(r_min / r_max, static_cast<double>(k) / (n_scales - 1));
    const std::size_t n = box_count(cloud, r, method);
    est.rows.push_back({r, n, 0.0});
    x.push_back(-std::log(r));
    y.push_back(std::log(static_cast<double>(n)));
  }
  const auto fit = least_squares(x, y);
  est.slope = fit.slope;
  est.intercept = fit.intercept;
  est.r_squared = fit.r2;
  for (std::size_t k = 0; k < est.rows.size(); ++k) est.rows[k].residual = y[k] - (fit.intercept + fit.slope * x[k]);
  return est;
}

double hausdorff_upper_sum(const DiameterModel& model, double t, int depth, const std::optional<SubTree>& subtree) {
  return std::exp(depth * pressure_at(model, t, depth, subtree));
}

RectangleCoverSum self_affine_cover_sum(const RectangleParams& p, double s, int depth) {
  if (depth < 1) throw DomainError("cover sum depth must be at least 1");
  require_enumerable(std::ldexp(1.0, depth), "self_affine_cover_sum");
  RectangleCoverSum out;
  for (const auto& w : words_of_length(Alphabet(2), depth)) {
    double a = 1.0, b = 1.0;
    for (int c : w) {
      a *= c ? p.a1 : p.a0;
      b *= c ? p.b1 : p.b0;
    }
    out.sum += std::pow(a + b, s);
  }
  out.bound = std::pow(std::pow(p.a0, s) + std::pow(p.a1, s), depth) + std::pow(std::pow(p.b0, s) + std::pow(p.b1, s), depth);
  return out;
}

std::vector<Point> maximal_packing(const MetricSpace& space, const Point& center, double R, double r,
                                   const std::vector<Point>& candidates) {
  if (!(r > 0.0) || !(R > 0.0)) throw DomainError("packing radii must be positive");
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (std::isinf(R) || space.distance(center, candidates[k]) < R) order.push_back(k);
  const auto idx = greedy_select(space, candidates, order, space.overlap_radius(r));
  std::vector<Point> out;
  out.reserve(idx.size());
  for (std::size_t k : idx) out.push_back(candidates[k]);
  return out;
}

PackingGrowth packing_growth_check(const MetricSpace& space, const std::vector<Point>& candidates,
                                   const std::vector<Point>& trial_centers, const std::vector<double>& R_grid,
                                   const std::vector<double>& r_grid) {
  if (trial_centers.empty() || R_grid.empty() || r_grid.empty()) throw DomainError("packing grids must be nonempty");
  PackingGrowth out;
  std::map<double, std::pair<std::size_t, std::size_t>> by_ratio;  // ratio -> (min, max)
  for (const auto& c : trial_centers)
    for (double R : R_grid)
      for (double r : r_grid) {
        if (!(r < R)) continue;
        const std::size_t n = maximal_packing(space, c, R, r, candidates).size();
        if (n == 0) continue;
        const double ratio = round_sig(R / r, 9);
        out.samples.emplace_back(ratio, n);
        auto [it, fresh] = by_ratio.try_emplace(ratio, n, n);
        if (!fresh) {
          it->second.first = std::min(it->second.first, n);
          it->second.second = std::max(it->second.second, n);
        }
      }
  if (by_ratio.size() < 2) throw DomainError("packing growth needs at least two distinct R/r ratios");
  std::vector<double> x, ylo, yhi;
  for (const auto& [ratio, mm] : by_ratio) {
    x.push_back(std::log(ratio));
    ylo.push_back(std::log(static_cast<double>(mm.first)));
    yhi.push_back(std::log(static_cast<double>(mm.second)));
  }
  const double s_lo = least_squares(x, ylo).slope, s_hi = least_squares(x, yhi).slope;
  out.alpha_lo = std::min(s_lo, s_hi);
  out.alpha_hi = std::max(s_lo, s_hi);
  for (const auto& [ratio, n] : out.samples) {
    const double cnt = static_cast<double>(n);
    out.c_fit = std::max({out.c_fit, cnt / std::pow(ratio, out.alpha_hi), std::pow(ratio, out.alpha_lo) / cnt});
  }
  return out;
}

}  // namespace moranlab
