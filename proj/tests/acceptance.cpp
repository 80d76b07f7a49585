// Acceptance checks: one PASS/FAIL line per criterion.
//
// usage: moranlab_acceptance [cli_path source_root golden_dir]
// Criterion 13 needs the three paths; without them it reports FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "moranlab/dimension.hpp"
#include "moranlab/error.hpp"
#include "moranlab/format.hpp"
#include "moranlab/ifs.hpp"
#include "moranlab/metrics.hpp"
#include "moranlab/moran.hpp"
#include "moranlab/pressure.hpp"
#include "moranlab/probes.hpp"
#include "moranlab/subconstruction.hpp"
#include "moranlab/symbolic.hpp"

using namespace moranlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[fail] " << what << "; ";
    }
  }
};

int failures = 0;

void run(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << title << ": " << o.detail.str() << std::endl;
}

// Independent zero of a decreasing function by plain bisection.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void criterion1(Outcome& o) {
  const double cantor = moran_dimension({1.0 / 3.0, 1.0 / 3.0});
  o.require(std::abs(cantor - std::log(2.0) / std::log(3.0)) <= 1e-9, "ternary value");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(0.5, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    double r = U(rng);
    if (r <= 0.5) r = 0.5000001;
    worst = std::max(worst, std::abs(moran_dimension({r, r}) - std::log(2.0) / std::log(1.0 / r)));
  }
  o.require(worst <= 1e-9, "random r");
  o.detail << "cantor=" << fmt_num(cantor) << " max_err(50 r)=" << worst;
}

void criterion2(Outcome& o) {
  const auto model = DiameterModel::super_cantor();
  double prev = INFINITY, worst = 0.0;
  for (int n : {10, 20, 30}) {
    const double t = pressure_zero(model, n).t;
    const double closed = n / (2.0 * n - harmonic(n));
    o.require(t < prev, "strict decrease at depth " + std::to_string(n));
    worst = std::max(worst, std::abs(t - closed));
    prev = t;
    o.detail << "t" << n << "=" << fmt_num(t) << " ";
  }
  o.require(std::abs(prev - 0.5) <= 0.05, "depth-30 zero within 0.05 of 1/2");
  o.require(worst <= 1e-9, "closed form n/(2n-H_n)");
  o.detail << "max_err=" << worst;
}

void criterion3(Outcome& o) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.05, 0.95);
  double worst = 0.0, worst_cover = 0.0;
  int made = 0;
  while (made < 100) {
    const double a0 = U(rng), a1 = U(rng), b0 = U(rng), b1 = U(rng);
    if (a0 + a1 > 1.0 || b0 + b1 > 1.0) continue;
    ++made;
    const double z = self_affine_zero(a0, a1, b0, b1);
    const double oracle = bisect(
        [&](double t) {
          return std::max(std::log(std::pow(a0, t) + std::pow(a1, t)), std::log(std::pow(b0, t) + std::pow(b1, t)));
        },
        0.0, 1.0);
    worst = std::max(worst, std::abs(z - oracle));
    if (made <= 10) {
      const auto cs = self_affine_cover_sum({a0, a1, b0, b1}, z, 12);
      worst_cover = std::max(worst_cover, cs.sum);
      o.require(cs.sum <= cs.bound * (1 + 1e-12), "cover sum below the product bound");
    }
  }
  o.require(worst <= 1e-10, "zero matches bisection");
  o.require(worst_cover <= 2.0, "cover sum <= 2 at depth 12");
  o.detail << "max_err(100)=" << worst << " max_cover_sum(depth 12)=" << fmt_num(worst_cover);
}

void criterion4(Outcome& o) {
  const auto model = DiameterModel::quadratic_exponent();
  const auto rep = validate_wcmc(model, 20);
  const auto& w4 = rep.entry("W4");
  o.require(w4.status == AxiomStatus::Violated, "W4 violated");
  o.require(!rep.all_hold(), "report fails");
  const double expect = std::ldexp(1.0, -39);
  o.require(std::abs(w4.witness_ratio / expect - 1.0) <= 1e-9, "witnessed ratio 2^-39");
  double worst = 0.0;
  for (int n : {5, 10, 20, 30}) worst = std::max(worst, std::abs(pressure_zero(model, n).t - 1.0 / n));
  o.require(worst <= 1e-9, "pressure zero 1/n");
  o.detail << "W4=" << to_string(w4.status) << " ratio=" << w4.witness_ratio << " (2^-39=" << expect
           << ") zero_err=" << worst;
}

void criterion5(Outcome& o) {
  const double r = 0.75;
  const auto sys = comb_system(r, 64);
  const auto cloud = attractor_cloud(sys, 10, 64);
  const auto est = minkowski_estimate(cloud, 0.02, 0.5, 8);
  const double s = moran_dimension({r, r});
  o.require(est.slope >= 0.9 && est.slope <= 1.1, "comb slope in [0.9, 1.1]");
  o.require(std::abs(s - std::log(2.0) / std::log(1.0 / r)) < 1e-9 && s > 1.0, "similarity dimension > 1");
  o.detail << "slope=" << fmt_num(est.slope, 6) << " s=" << fmt_num(s, 6);
}

void criterion6(Outcome& o) {
  const auto exact = osc_collision_scan_exact(AlgebraicNumber::golden_ratio_conjugate(), 6);
  bool found = false;
  for (const auto& c : exact.collisions)
    if (c.first == Word{1, 0, 0} && c.second == Word{0, 1, 1} && c.exact) found = true;
  o.require(found, "golden ratio collision ((1,0,0),(0,1,1)) confirmed exactly");
  const auto pi4 = osc_collision_scan(std::numbers::pi / 4.0, 12);
  o.require(pi4.collisions.empty(), "no collisions for pi/4");
  o.require(pi4.min_nonzero_gap > 1e-6, "pi/4 min gap > 1e-6");
  o.detail << "golden collisions=" << exact.collisions.size() << " pi/4 collisions=" << pi4.collisions.size()
           << " min_gap=" << pi4.min_nonzero_gap;
}

void criterion7(Outcome& o) {
  const auto cantor = cantor_system(1.0 / 3.0);
  double lo = INFINITY, hi = 0.0;
  for (int d = 2; d <= 8; ++d) {
    const double e = separation_epsilon(cantor, {0.0}, d);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  o.require(lo >= 0.2, "cantor epsilon >= 0.2");
  o.require(hi - lo <= 1e-9, "cantor epsilon stable over depths 2-8");
  const auto model = induced_model(cantor);
  const auto cloud = attractor_cloud(cantor, 12, 2);
  const auto cl = finite_clustering_sup(model, cloud, 64, {0.1, 0.03, 0.01, 0.003, 0.001});
  o.require(cl.sup <= 4, "cantor clustering sup <= 4");

  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto comb = comb_system(g, 64);
  const double e2 = separation_epsilon(comb, {0.0, 0.0}, 2);
  const double e3 = separation_epsilon(comb, {0.0, 0.0}, 3);
  const double e10 = separation_epsilon(comb, {0.0, 0.0}, 10);
  o.require(e10 <= e3 / 10.0, "golden comb epsilon drops 10x from depth 3 to 10");
  o.require(e10 < e2, "golden comb epsilon strictly decays from depth 2");
  o.detail << "cantor eps in [" << fmt_num(lo, 6) << "," << fmt_num(hi, 6) << "] clustering=" << cl.sup
           << " comb eps(2)=" << fmt_num(e2, 6) << " eps(3)=" << fmt_num(e3, 6) << " eps(10)=" << fmt_num(e10, 6);
}

void criterion8(Outcome& o) {
  const auto words = words_of_length(Alphabet(2), 8);
  long long triples = 0;
  bool ultra = true;
  for (const auto& x : words)
    for (const auto& y : words) {
      const double dxy = d2(x, y).distance;
      for (const auto& z : words) {
        if (dxy > std::max(d2(x, z).distance, d2(z, y).distance)) ultra = false;
        ++triples;
      }
    }
  o.require(ultra, "d2 ultrametric on all depth-8 triples");

  const auto sys = symbol_example_system();
  bool bounds_ok = true;
  int checked = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& j : words_of_length(sys.alphabet(), n)) {
      const auto b = semiconformal_bounds(sys, j);
      const double hi = std::ldexp(1.0, -n), lo = std::ldexp(1.0, -n - 1);
      if (!b.exact || b.lower < lo || b.upper > hi || b.lower > b.upper) bounds_ok = false;
      ++checked;
    }
  o.require(bounds_ok, "semiconformal bounds within [2^-|j|-1, 2^-|j|]");
  const auto proper = proper_semiconformality_check_symbolic(sys, 6);
  o.require(proper.cylinders_ok, "cylinder-to-cylinder property");
  o.detail << "triples=" << triples << " words=" << checked << " cylinders=" << proper.cylinders_checked;
}

void criterion9(Outcome& o) {
  const double s = std::log(2.0) / std::log(3.0);
  double worst_s = 0.0, worst_1 = 0.0;
  for (int d = 4; d <= 12; ++d) {
    const auto at_s = antichain_cover_cost([&](const Word& w) { return std::pow(3.0, -s * double(w.size())); },
                                           Alphabet(2), 1, d);
    const auto at_1 = antichain_cover_cost([](const Word& w) { return std::pow(3.0, -double(w.size())); }, Alphabet(2), 1, d);
    worst_s = std::max(worst_s, std::abs(at_s.value - 1.0));
    worst_1 = std::max(worst_1, std::abs(at_1.value - std::pow(2.0 / 3.0, d)));
  }
  o.require(worst_s <= 1e-12, "cost 1 at t = log2/log3");
  o.require(worst_1 <= 1e-12, "cost (2/3)^depth at t = 1");
  o.detail << "err(t=s)=" << worst_s << " err(t=1)=" << worst_1;
}

void criterion10(Outcome& o) {
  const auto model = DiameterModel::ternary_cantor();
  std::mt19937_64 rng(10);
  const double s = std::log(2.0) / std::log(3.0);
  std::uniform_real_distribution<double> U(0.0, s);
  double worst_C = 1.0;
  int passed = 0;
  for (int k = 0; k < 20; ++k) {
    double t = U(rng);
    if (t <= 0.0) t = 1e-3;
    const auto j = cantor_branch_sequence(t, 20);
    const auto rep = verify_cmsc(model, j, t, 4.0, 20);
    if (rep.holds) ++passed;
    worst_C = std::max(worst_C, rep.C_witnessed);
  }
  o.require(passed == 20, "all 20 random t pass with C = 4");
  const SubTree ones{std::vector<int>(20, 1)};
  const auto bad = verify_cmsc(model, ones, 0.4, 4.0, 20);
  o.require(!bad.holds && !bad.failing_word.empty() && bad.failing_n >= 1, "all-1 subtree fails with a witness");
  o.detail << "passed=" << passed << "/20 max_C_witnessed=" << fmt_num(worst_C, 6) << " all-1 witness=("
           << word_to_string(bad.failing_word) << ", n=" << bad.failing_n << ")";
}

void criterion11(Outcome& o) {
  const auto h = StratificationData::heisenberg();
  struct Row {
    double a, bm, bp;
  };
  for (const Row& r : {Row{2.5, 3.0, 3.5}, Row{1.5, 1.5, 2.5}, Row{3.0, 4.0, 4.0}}) {
    const double bm = beta_minus(h, r.a), bp = beta_plus(h, r.a);
    o.require(bm == r.bm && bp == r.bp, "beta values at alpha=" + fmt_num(r.a));
  }
  for (double alpha : {1.3, 2.5}) {
    const auto rep = carnot_cmsc_verify(h, alpha, 15);
    const int l = rep.layer;
    o.require(rep.C == std::ldexp(1.0, 2 * (l + 1) * h.m(l + 1)), "C = 2^(2(l+1)m_{l+1})");
    o.require(rep.report.holds, "Carnot CMSC at alpha=" + fmt_num(alpha));
    o.detail << "alpha=" << fmt_num(alpha) << " C=" << fmt_num(rep.C) << " witnessed=" << fmt_num(rep.report.C_witnessed, 6)
             << "; ";
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  std::uniform_int_distribution<int> bit(0, 1), quad(0, 3);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const auto F = heisenberg_F_map({{bit(rng), bit(rng)}, {quad(rng)}});
    const HeisenbergPoint p{U(rng), U(rng), U(rng)}, q{U(rng), U(rng), U(rng)};
    const double d = heisenberg_distance(p, q);
    const double dF = heisenberg_distance(to_heisenberg(F.apply(from_heisenberg(p))), to_heisenberg(F.apply(from_heisenberg(q))));
    worst = std::max(worst, std::abs(dF - 0.5 * d));
  }
  o.require(worst <= 1e-10, "F-map contracts by 1/2");
  o.detail << "F-map max_err=" << worst;
}

void criterion12(Outcome& o) {
  struct Case {
    std::string name;
    PointCloud cloud;
  };
  std::vector<Case> cases;
  cases.push_back({"cantor", attractor_cloud(cantor_system(), 10, 2)});
  cases.push_back({"comb", attractor_cloud(comb_system(0.75, 64), 7, 64)});
  cases.push_back({"rectangles", attractor_cloud(rectangle_system(0.5, 0.3, 0.4, 0.4), 9, 4)});
  cases.push_back({"symbol", attractor_cloud(symbol_example_system(), 8, 9)});
  cases.push_back({"heisenberg", attractor_cloud(heisenberg_system(), 4, 4)});
  cases.push_back({"plane", grid_cloud(2, 40)});
  int checks = 0;
  for (const auto& c : cases) {
    const double diam = c.cloud.diameter();
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
      const double r = diam * std::pow(2.0, -1.0 - 7.0 * k / 19.0);
      const auto packing = maximal_packing(c.cloud.space, c.cloud.points.front(), INFINITY, r, c.cloud.points).size();
      const auto coarse = box_count(c.cloud, 2.0 * r), fine = box_count(c.cloud, 0.5 * r);
      if (!(coarse <= packing && packing <= fine)) {
        ok = false;
        o.detail << c.name << " r=" << fmt_num(r, 4) << ": " << coarse << "," << packing << "," << fine << " ";
      }
      ++checks;
    }
    o.require(ok, "duality on " + c.name);
  }
  const auto grid = grid_cloud(2, 160);
  std::vector<Point> centers{{0.5, 0.5}, {0.45, 0.55}, {0.55, 0.5}};
  const auto g = packing_growth_check(grid.space, grid.points, centers, {0.4, 0.3, 0.2}, {0.1, 0.05, 0.025, 0.0125});
  o.require(g.alpha_lo <= 2.0 + 0.2 && g.alpha_hi >= 2.0 - 0.2 && std::abs(g.alpha_lo - 2.0) <= 0.2 &&
                std::abs(g.alpha_hi - 2.0) <= 0.2,
            "plane growth window contains 2 +- 0.2");
  o.detail << "checks=" << checks << " plane window=[" << fmt_num(g.alpha_lo, 4) << "," << fmt_num(g.alpha_hi, 4) << "]";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

void criterion13(Outcome& o, int argc, char** argv) {
  if (argc < 4) {
    o.require(false, "needs cli, source root and golden paths");
    return;
  }
  const fs::path cli = argv[1], root = argv[2], golden = argv[3];
  const fs::path tmp = fs::temp_directory_path() / ("moranlab_accept_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  // one golden per (spec, command); the command list lives next to the goldens
  std::ifstream list(golden / "commands.txt");
  std::string line;
  int compared = 0;
  while (std::getline(list, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('|');
    const std::string name = line.substr(0, tab), args = line.substr(tab + 1);
    std::string cmdline = args;
    for (std::string::size_type at; (at = cmdline.find("@root/")) != std::string::npos;)
      cmdline.replace(at, 6, root.string() + "/");
    std::string outs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = tmp / (name + "." + std::to_string(run));
      const std::string cmd = shell_quote(cli.string()) + " " + cmdline + " > " + shell_quote(out.string()) + " 2>&1";
      const int rc = std::system(cmd.c_str());
      (void)rc;
      outs[run] = slurp(out);
    }
    o.require(outs[0] == outs[1], name + " differs between runs");
    o.require(fs::exists(golden / name) && outs[0] == slurp(golden / name), name + " differs from golden");
    ++compared;
  }
  fs::remove_all(tmp);
  o.require(compared > 0, "no golden commands listed");
  o.detail << "compared=" << compared;
}

}  // namespace

int main(int argc, char** argv) {
  run(1, "moran dimension", criterion1);
  run(2, "super-Cantor pressure zeros", criterion2);
  run(3, "self-affine closed form", criterion3);
  run(4, "W4 necessity", criterion4);
  run(5, "dimension gap on the comb", criterion5);
  run(6, "OSC collision arithmetic", criterion6);
  run(7, "separation probes", criterion7);
  run(8, "symbol space", criterion8);
  run(9, "antichain cover cost", criterion9);
  run(10, "Cantor CMSC", criterion10);
  run(11, "Carnot sub-constructions", criterion11);
  run(12, "packing and covering", criterion12);
  run(13, "CLI determinism", [&](Outcome& o) { criterion13(o, argc, argv); });
  return failures == 0 ? 0 : 1;
}
