// moranlab: command-line frontend for model spec files.
//
// Exit codes: 0 ok, 1 condition violated, 2 input error, 3 domain/resource error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moranlab/dimension.hpp"
#include "moranlab/error.hpp"
#include "moranlab/format.hpp"
#include "moranlab/ifs.hpp"
#include "moranlab/moran.hpp"
#include "moranlab/pressure.hpp"
#include "moranlab/probes.hpp"
#include "moranlab/spec_io.hpp"
#include "moranlab/subconstruction.hpp"

using namespace moranlab;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kViolated = 1, kInput = 2, kDomain = 3;

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_sig(v, 12);
}

ordered_json word_json(const Word& w) { return ordered_json(w); }

ordered_json nums(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

// Writes to the -o file, or stdout when none is given.
void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

int depth_or(const ModelSpec& spec, int flag) { return flag > 0 ? flag : spec.depth; }

// ---------------------------------------------------------------- pressure

struct PressureOpts {
  std::string spec;
  int depth = 0;
  bool zero = false;
  double t_min = 0.0, t_max = 2.0;
  int points = 21;
  bool subtree = false;
  std::string out = "csv";
  std::string file;
};

int cmd_pressure(const PressureOpts& o) {
  const auto spec = load_spec(o.spec);
  const int depth = depth_or(spec, o.depth);
  const auto sub = o.subtree ? spec.subtree : std::nullopt;
  if (o.subtree && !spec.subtree) throw InputError("spec key 'subtree': missing (needed by --subtree)");
  if (o.zero) {
    const auto z = pressure_zero(*spec.model, depth, 1e-12, sub);
    ordered_json j;
    j["model"] = spec.model->name;
    j["depth"] = z.depth;
    j["zero"] = num(z.t);
    j["zero_half_depth"] = num(z.t_half);
    j["drift"] = num(z.drift);
    j["stable"] = z.stable;
    j["extrapolated"] = num(z.extrapolated);
    j["diagnostic"] = z.diagnostic;
    emit(j);
    return kOk;
  }
  const auto curve = pressure_curve(*spec.model, depth, o.t_min, o.t_max, o.points, sub);
  if (o.out == "json") {
    ordered_json j;
    j["depth"] = curve.depth;
    ordered_json rows = ordered_json::array();
    for (const auto& [t, p] : curve.samples) rows.push_back({{"t", num(t)}, {"P", num(p)}});
    j["samples"] = rows;
    write_text(o.file, j.dump(2) + "\n");
  } else {
    write_text(o.file, curve.to_csv());
  }
  return kOk;
}

// ---------------------------------------------------------------- validate

ordered_json axiom_json(const AxiomReport& r) {
  ordered_json j;
  j["depth"] = r.depth;
  ordered_json ax = ordered_json::array();
  for (const auto& e : r.axioms) {
    ordered_json a;
    a["axiom"] = e.axiom;
    a["status"] = to_string(e.status);
    a["constant"] = num(e.constant);
    a["witness_word"] = word_json(e.witness_word);
    if (e.witness_split >= 0) a["witness_split"] = e.witness_split;
    a["witness_ratio"] = num(e.witness_ratio);
    a["note"] = e.note;
    ax.push_back(a);
  }
  j["axioms"] = ax;
  j["D_W3"] = num(r.D_W3);
  j["D_W4"] = num(r.D_W4);
  if (r.C_C1) j["C_C1"] = num(*r.C_C1);
  j["decay"] = {{"c", num(r.decay.c)}, {"rho", num(r.decay.rho)}, {"conclusive", r.decay.conclusive}};
  j["all_hold"] = r.all_hold();
  return j;
}

ordered_json cmsc_json(const CmscReport& r) {
  ordered_json j;
  j["depth"] = r.depth;
  j["t"] = num(r.t);
  j["C_declared"] = num(r.C_declared);
  j["C_witnessed"] = num(r.C_witnessed);
  j["ratio_min"] = num(r.ratio_min);
  j["ratio_max"] = num(r.ratio_max);
  j["holds"] = r.holds;
  if (!r.holds) {
    j["failing_word"] = word_json(r.failing_word);
    j["failing_n"] = r.failing_n;
  }
  ordered_json lv = ordered_json::array();
  for (const auto& l : r.per_n) lv.push_back({{"n", l.n}, {"min", num(l.min)}, {"max", num(l.max)}});
  j["per_n"] = lv;
  j["note"] = r.note;
  return j;
}

struct ValidateOpts {
  std::string spec;
  int depth = 0;
  std::string axioms = "wcmc";
  double t = 0.0, C = 0.0;
};

int cmd_validate(const ValidateOpts& o) {
  const auto spec = load_spec(o.spec);
  const int depth = depth_or(spec, o.depth);
  if (o.axioms == "cmsc") {
    if (!spec.subtree) throw InputError("spec key 'subtree': missing (needed by --axioms cmsc)");
    const double t = o.t > 0.0 ? o.t : spec.cmsc_t.value_or(0.0);
    const double C = o.C > 0.0 ? o.C : spec.cmsc_C.value_or(4.0);
    if (!(t > 0.0)) throw InputError("spec key 'cmsc.t': missing (or pass --t)");
    const auto rep = verify_cmsc(*spec.model, *spec.subtree, t, C, depth);
    emit(cmsc_json(rep));
    return rep.holds ? kOk : kViolated;
  }
  const auto rep = o.axioms == "cmc" ? validate_cmc(*spec.model, depth) : validate_wcmc(*spec.model, depth);
  emit(axiom_json(rep));
  return rep.all_hold() ? kOk : kViolated;
}

// ---------------------------------------------------------------- generate

const ContractionSystem& need_system(const ModelSpec& spec) {
  if (!spec.system) throw InputError("spec key 'system': missing (the command needs generating maps)");
  return *spec.system;
}

// 2-D drawing coordinates of a cloud point.
std::pair<double, double> planar(const PointCloud& c, const Point& p) {
  switch (c.space.kind()) {
    case SpaceKind::SymbolSpace: {
      const double k = c.space.alphabet_size();
      double x = 0.0, scale = 1.0;
      for (double s : p) {
        scale /= k;
        x += s * scale;
      }
      return {x, 0.0};
    }
    default:
      return {p.empty() ? 0.0 : p[0], p.size() > 1 ? p[1] : 0.0};
  }
}

struct Viewport {
  double x0 = 0.0, y0 = 0.0, w = 1.0, h = 1.0;
};

Viewport viewport(const std::vector<std::pair<double, double>>& xy) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& [x, y] : xy) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double pad = 0.05 * span;
  Viewport v;
  v.x0 = xmin - pad;
  v.y0 = ymin - pad;
  v.w = std::max(xmax - xmin, 1e-9) + 2 * pad;
  v.h = std::max(ymax - ymin, 1e-9) + 2 * pad;
  return v;
}

std::string render_svg(const std::vector<std::pair<double, double>>& xy, int size) {
  const auto v = viewport(xy);
  const double scale = size / std::max(v.w, v.h);
  const int W = std::max(1, static_cast<int>(std::lround(v.w * scale)));
  const int H = std::max(1, static_cast<int>(std::lround(v.h * scale)));
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << ' ' << H << "\">\n";
  s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  for (const auto& [x, y] : xy) {
    const double px = (x - v.x0) * scale, py = H - (y - v.y0) * scale;
    s << "<circle cx=\"" << fmt_num(px, 7) << "\" cy=\"" << fmt_num(py, 7) << "\" r=\"1\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string render_ppm(const std::vector<std::pair<double, double>>& xy, int size) {
  const auto v = viewport(xy);
  const double scale = size / std::max(v.w, v.h);
  const int W = std::max(1, static_cast<int>(std::lround(v.w * scale)));
  const int H = std::max(1, static_cast<int>(std::lround(v.h * scale)));
  std::string px(static_cast<std::size_t>(W) * H * 3, static_cast<char>(255));
  for (const auto& [x, y] : xy) {
    const int i = std::clamp(static_cast<int>((x - v.x0) * scale), 0, W - 1);
    const int j = std::clamp(H - 1 - static_cast<int>((y - v.y0) * scale), 0, H - 1);
    const std::size_t at = (static_cast<std::size_t>(j) * W + i) * 3;
    px[at] = px[at + 1] = px[at + 2] = 0;
  }
  return "P6\n" + std::to_string(W) + " " + std::to_string(H) + "\n255\n" + px;
}

struct GenerateOpts {
  std::string spec;
  int depth = 0;
  int samples = 0;
  std::string out = "csv";
  std::string file;
  int size = 512;
};

int cmd_generate(const GenerateOpts& o) {
  const auto spec = load_spec(o.spec);
  const auto& sys = need_system(spec);
  const int depth = depth_or(spec, o.depth);
  const int spl = o.samples > 0 ? o.samples : static_cast<int>(sys.seeds().size());
  const auto cloud = attractor_cloud(sys, depth, spl);
  if (o.out == "csv") {
    std::ostringstream s;
    s << "word";
    const std::size_t dim = cloud.points.empty() ? 0 : cloud.points.front().size();
    static const char* names[] = {"x", "y", "t"};
    for (std::size_t c = 0; c < dim; ++c) s << ',' << (c < 3 && cloud.space.kind() != SpaceKind::SymbolSpace ? names[c] : "s" + std::to_string(c));
    s << '\n';
    for (std::size_t p = 0; p < cloud.size(); ++p) {
      s << word_to_string(cloud.labels[p]);
      for (double v : cloud.points[p]) s << ',' << fmt_num(v);
      s << '\n';
    }
    write_text(o.file, s.str());
    return kOk;
  }
  std::vector<std::pair<double, double>> xy;
  xy.reserve(cloud.size());
  for (const auto& p : cloud.points) xy.push_back(planar(cloud, p));
  if (o.out == "svg") {
    write_text(o.file, render_svg(xy, o.size));
  } else if (o.out == "ppm") {
    write_text(o.file, render_ppm(xy, o.size));
  } else {
    throw InputError("--out must be csv, svg or ppm");
  }
  return kOk;
}

// ---------------------------------------------------------------- dimension

struct DimensionOpts {
  std::string spec;
  int depth = 0;
  int scales = 10;
  double r_min = 0.0, r_max = 0.0;
  std::string method = "greedy";
  int samples = 0;
  bool csv = false;
};

int cmd_dimension(const DimensionOpts& o) {
  const auto spec = load_spec(o.spec);
  const auto& sys = need_system(spec);
  const int depth = depth_or(spec, o.depth);
  const int spl = o.samples > 0 ? o.samples : static_cast<int>(sys.seeds().size());
  const auto cloud = attractor_cloud(sys, depth, spl);
  const double diam = cloud.diameter();
  const double r_max = o.r_max > 0.0 ? o.r_max : 0.25 * diam;
  const double r_min = o.r_min > 0.0 ? o.r_min : std::max(20.0 * cloud.resolution, r_max / 256.0);
  const auto method = o.method == "grid" ? CountMethod::Grid : CountMethod::Greedy;
  const auto est = minkowski_estimate(cloud, r_min, r_max, o.scales, method);
  if (o.csv) {
    std::cout << est.to_csv();
    return kOk;
  }
  ordered_json j;
  j["depth"] = depth;
  j["points"] = cloud.size();
  j["resolution"] = num(cloud.resolution);
  j["slope"] = num(est.slope);
  j["intercept"] = num(est.intercept);
  j["r_squared"] = num(est.r_squared);
  ordered_json rows = ordered_json::array();
  for (const auto& r : est.rows) rows.push_back({{"r", num(r.r)}, {"N", r.count}, {"residual", num(r.residual)}});
  j["rows"] = rows;
  if (sys.all_similitudes()) {
    std::vector<double> ratios;
    for (const auto& m : sys.maps()) ratios.push_back(m.ratio);
    j["similarity_dimension"] = num(moran_dimension(ratios));
  }
  emit(j);
  return kOk;
}

// ---------------------------------------------------------------- probe

struct ProbeOpts {
  std::string spec;
  std::string probe;
  int depth = 0;
  std::string r;
  std::vector<double> x;
  int x_samples = 32;
  bool exact = false;
};

std::vector<double> default_radii(const PointCloud& cloud, double seed) {
  std::vector<double> out;
  for (double r = 0.25 * std::min(seed, cloud.diameter()); r >= 10.0 * cloud.resolution && out.size() < 12; r *= 0.5)
    out.push_back(r);
  return out;
}

double parse_double(const std::string& s, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(flag + ": expected a number, got '" + s + "'");
}

int cmd_probe(const ProbeOpts& o) {
  const auto spec = load_spec(o.spec);
  const int depth = depth_or(spec, o.depth);
  ordered_json j;
  j["probe"] = o.probe;
  j["depth"] = depth;

  if (o.probe == "osc-collisions") {
    OscScanResult res;
    if (o.exact) {
      AlgebraicNumber alg;
      if (o.r == "golden") {
        alg = AlgebraicNumber::golden_ratio_conjugate();
      } else if (auto slash = o.r.find('/'); slash != std::string::npos) {
        try {
          alg = AlgebraicNumber::rational(std::stoll(o.r.substr(0, slash)), std::stoll(o.r.substr(slash + 1)));
        } catch (const std::logic_error&) {
          throw InputError("--r: expected 'golden' or 'p/q' with --exact");
        }
      } else {
        throw InputError("--r: expected 'golden' or 'p/q' with --exact");
      }
      res = osc_collision_scan_exact(alg, depth);
      j["r"] = num(alg.approx);
    } else {
      double r = 0.0;
      if (!o.r.empty()) {
        r = parse_double(o.r, "--r");
      } else if (spec.space && spec.space->kind() == SpaceKind::Comb) {
        r = spec.space->comb_ratio();
      } else {
        throw InputError("--r: required unless the spec is a comb");
      }
      res = osc_collision_scan(r, depth);
      j["r"] = num(r);
    }
    j["exact"] = o.exact;
    ordered_json cs = ordered_json::array();
    for (const auto& c : res.collisions)
      cs.push_back({{"first", word_json(c.first)}, {"second", word_json(c.second)}, {"gap", num(c.gap)}, {"exact", c.exact}});
    j["collisions"] = cs;
    j["min_nonzero_gap"] = num(res.min_nonzero_gap);
    if (o.exact) j["candidates_rejected"] = res.candidates_rejected;
    emit(j);
    return res.collisions.empty() ? kOk : kViolated;
  }

  const auto& sys = need_system(spec);
  if (o.probe == "epsilon") {
    const Point x = o.x.empty() ? sys.seeds().front() : o.x;
    ordered_json per = ordered_json::array();
    for (int d = 1; d <= depth; ++d) per.push_back({{"depth", d}, {"epsilon", num(separation_epsilon(sys, x, d))}});
    j["x"] = nums(x);
    j["per_depth"] = per;
    emit(j);
    return kOk;
  }

  const auto cloud = attractor_cloud(sys, depth, static_cast<int>(sys.seeds().size()));
  const auto& model = *spec.model;
  std::vector<double> radii;
  if (!o.r.empty()) {
    std::stringstream ss(o.r);
    for (std::string tok; std::getline(ss, tok, ',');) radii.push_back(parse_double(tok, "--r"));
  } else {
    radii = default_radii(cloud, model.seed_diameter());
  }
  if (o.probe == "clustering") {
    const auto rep = finite_clustering_sup(model, cloud, o.x_samples, radii);
    j["sup"] = rep.sup;
    j["x_samples"] = rep.x_samples;
    ordered_json per = ordered_json::array();
    for (const auto& [r, n] : rep.per_r) per.push_back({{"r", num(r)}, {"max_count", n}});
    j["per_r"] = per;
    j["skipped_r"] = nums(rep.skipped_r);
    emit(j);
    return kOk;
  }
  if (o.probe == "ball") {
    const Point x = o.x.empty() ? cloud.points.front() : o.x;
    ordered_json per = ordered_json::array();
    int code = kOk;
    for (double r : radii) {
      const auto res = ball_condition_probe(model, cloud, x, r, {0.5, 0.25, 0.125, 0.0625, 0.03125});
      per.push_back({{"r", num(r)}, {"pieces", res.pieces}, {"delta", num(res.delta)}});
      if (res.delta == 0.0) code = kViolated;
    }
    j["x"] = nums(x);
    j["per_r"] = per;
    emit(j);
    return code;
  }
  if (o.probe == "tractability") {
    const auto rep = tractability_probe(sys, cloud, radii, std::min(depth, 2));
    j["C"] = num(rep.C);
    j["triples"] = rep.triples;
    j["worst"] = {{"h", word_json(rep.worst_h)}, {"i", word_json(rep.worst_i)}, {"j", word_json(rep.worst_j)},
                  {"r", num(rep.worst_r)}};
    emit(j);
    return kOk;
  }
  throw InputError("--probe must be clustering, ball, epsilon, osc-collisions or tractability");
}

// ---------------------------------------------------------------- beta / sequence

std::vector<int> parse_layers(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError("--layers: expected comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

int cmd_beta(const std::string& layers, double alpha) {
  const StratificationData strat(parse_layers(layers));
  ordered_json j;
  j["beta_minus"] = num(beta_minus(strat, alpha));
  j["beta_plus"] = num(beta_plus(strat, alpha));
  std::cout << j.dump() << '\n';
  return kOk;
}

struct SequenceOpts {
  std::string layers;
  double alpha = 0.0;
  double cantor_t = 0.0;
  int length = 20;
  bool verify = false;
};

int cmd_sequence(const SequenceOpts& o) {
  ordered_json j;
  if (o.cantor_t > 0.0) {
    const auto sub = cantor_branch_sequence(o.cantor_t, o.length);
    j["t"] = num(o.cantor_t);
    j["sequence"] = sub.branch_counts;
    if (o.verify) {
      const auto rep = verify_cmsc(DiameterModel::ternary_cantor(), sub, o.cantor_t, 4.0, o.length);
      j["cmsc"] = cmsc_json(rep);
      emit(j);
      return rep.holds ? kOk : kViolated;
    }
    emit(j);
    return kOk;
  }
  if (o.layers.empty()) throw InputError("sequence needs --cantor-t or --layers with --alpha");
  const StratificationData strat(parse_layers(o.layers));
  if (o.verify) {
    const auto rep = carnot_cmsc_verify(strat, o.alpha, o.length);
    j["layer"] = rep.layer;
    j["alphabet_size"] = rep.alphabet_size;
    j["sequence"] = rep.sequence;
    j["branch_counts"] = rep.subtree.branch_counts;
    j["t"] = num(rep.t);
    j["C"] = num(rep.C);
    j["cmsc"] = cmsc_json(rep.report);
    emit(j);
    return rep.report.holds ? kOk : kViolated;
  }
  const auto seq = carnot_branch_sequence(strat, o.alpha, o.length);
  j["sequence"] = seq.sequence;
  j["note"] = seq.note;
  emit(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moranlab: Moran constructions, pressure and dimension"};
  app.require_subcommand(1);

  PressureOpts po;
  auto* pressure = app.add_subcommand("pressure", "pressure curve (CSV) or its zero (JSON)");
  pressure->add_option("spec", po.spec, "model spec file")->required();
  pressure->add_option("--depth", po.depth, "level n (default: spec depth)");
  pressure->add_flag("--zero", po.zero, "print the zero with a stability diagnostic");
  pressure->add_option("--t-min", po.t_min, "curve start");
  pressure->add_option("--t-max", po.t_max, "curve end");
  pressure->add_option("--t-points", po.points, "curve sample count");
  pressure->add_flag("--subtree", po.subtree, "sum over the spec subtree J");
  pressure->add_option("--out", po.out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  pressure->add_option("-o,--output", po.file, "output file (default stdout)");

  ValidateOpts vo;
  auto* validate = app.add_subcommand("validate", "axiom report as JSON; exit 1 on violation");
  validate->add_option("spec", vo.spec, "model spec file")->required();
  validate->add_option("--depth", vo.depth, "scan depth (default: spec depth)");
  validate->add_option("--axioms", vo.axioms, "wcmc, cmc or cmsc")->check(CLI::IsMember({"wcmc", "cmc", "cmsc"}));
  validate->add_option("--t", vo.t, "CMSC exponent (default: spec)");
  validate->add_option("--C", vo.C, "CMSC constant (default: spec or 4)");

  GenerateOpts go;
  auto* generate = app.add_subcommand("generate", "attractor cloud as CSV, SVG or PPM");
  generate->add_option("spec", go.spec, "model spec file")->required();
  generate->add_option("--depth", go.depth, "word length (default: spec depth)");
  generate->add_option("--samples", go.samples, "seed samples per leaf (default: all)");
  generate->add_option("--out", go.out, "csv, svg or ppm")->check(CLI::IsMember({"csv", "svg", "ppm"}));
  generate->add_option("-o,--output", go.file, "output file (default stdout)");
  generate->add_option("--size", go.size, "longest image side in pixels")->check(CLI::Range(8, 8192));

  DimensionOpts dop;
  auto* dimension = app.add_subcommand("dimension", "Minkowski slope of the attractor cloud");
  dimension->add_option("spec", dop.spec, "model spec file")->required();
  dimension->add_option("--depth", dop.depth, "cloud depth (default: spec depth)");
  dimension->add_option("--scales", dop.scales, "number of radii");
  dimension->add_option("--r-min", dop.r_min, "smallest radius");
  dimension->add_option("--r-max", dop.r_max, "largest radius");
  dimension->add_option("--method", dop.method, "greedy or grid")->check(CLI::IsMember({"greedy", "grid"}));
  dimension->add_option("--samples", dop.samples, "seed samples per leaf (default: all)");
  dimension->add_flag("--csv", dop.csv, "print the r,N,residual table only");

  ProbeOpts pro;
  auto* probe = app.add_subcommand("probe", "separation probes");
  probe->add_option("spec", pro.spec, "model spec file")->required();
  probe->add_option("--probe", pro.probe, "clustering, ball, epsilon, osc-collisions or tractability")
      ->required()
      ->check(CLI::IsMember({"clustering", "ball", "epsilon", "osc-collisions", "tractability"}));
  probe->add_option("--depth", pro.depth, "word depth (default: spec depth)");
  probe->add_option("--r", pro.r, "comb ratio for osc-collisions ('golden' or p/q with --exact); radii list otherwise");
  probe->add_option("--x", pro.x, "base point")->delimiter(',');
  probe->add_option("--x-samples", pro.x_samples, "clustering sample points");
  probe->add_flag("--exact", pro.exact, "exact arithmetic for osc-collisions");

  std::string layers;
  double alpha = 0.0;
  auto* beta = app.add_subcommand("beta", "beta_minus and beta_plus of a stratification");
  beta->add_option("--layers", layers, "layer dimensions, e.g. 2,1")->required();
  beta->add_option("--alpha", alpha, "Euclidean dimension")->required();

  SequenceOpts so;
  auto* sequence = app.add_subcommand("sequence", "Cantor or Carnot branch sequences");
  sequence->add_option("--cantor-t", so.cantor_t, "Cantor sub-construction exponent");
  sequence->add_option("--layers", so.layers, "layer dimensions for the Carnot rule");
  sequence->add_option("--alpha", so.alpha, "Euclidean dimension for the Carnot rule");
  sequence->add_option("--length", so.length, "sequence length / verification depth");
  sequence->add_flag("--verify", so.verify, "also verify the sub-construction condition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*pressure) return cmd_pressure(po);
    if (*validate) return cmd_validate(vo);
    if (*generate) return cmd_generate(go);
    if (*dimension) return cmd_dimension(dop);
    if (*probe) return cmd_probe(pro);
    if (*beta) return cmd_beta(layers, alpha);
    if (*sequence) return cmd_sequence(so);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kInput;
}
