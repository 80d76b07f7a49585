#include "moranlab/spec_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "moranlab/error.hpp"
#include "moranlab/subconstruction.hpp"

namespace moranlab {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& what) {
  throw InputError("spec key '" + key + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

double number(const json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const auto slash = s.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const double x = std::stod(s, &used);
        if (used == s.size()) return x;
      } else {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        std::size_t u2 = 0;
        const double p = std::stod(num, &used), q = std::stod(den, &u2);
        if (used == num.size() && u2 == den.size() && q != 0.0) return p / q;
      }
    } catch (const std::exception&) {
    }
  }
  bad(key, "expected a number or a \"p/q\" string");
}

double number_at(const json& obj, const std::string& k, const std::string& path) {
  return number(require(obj, k, path), join(path, k));
}

double number_or(const json& obj, const std::string& k, const std::string& path, double fallback) {
  return obj.contains(k) ? number(obj.at(k), join(path, k)) : fallback;
}

int integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) bad(key, "expected an integer");
  return v.get<int>();
}

int integer_or(const json& obj, const std::string& k, const std::string& path, int fallback) {
  return obj.contains(k) ? integer(obj.at(k), join(path, k)) : fallback;
}

std::string kind_of(const json& obj, const std::string& path) {
  const auto& k = require(obj, "kind", path);
  if (!k.is_string()) bad(join(path, "kind"), "expected a string");
  return k.get<std::string>();
}

std::vector<double> numbers(const json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) bad(key, "expected a nonempty array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> integers(const json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) bad(key, "expected a nonempty array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

// Rethrows library DomainErrors as input errors tied to a key.
template <class F>
auto keyed(const std::string& key, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    bad(key, e.what());
  }
}

MetricSpace space_from(const json& obj, const std::string& path) {
  const auto kind = kind_of(obj, path);
  return keyed(path, [&]() -> MetricSpace {
    if (kind == "euclidean") return MetricSpace::euclidean(integer_or(obj, "dim", path, 1));
    if (kind == "snowflake")
      return MetricSpace::snowflake(space_from(require(obj, "base", path), join(path, "base")), number_at(obj, "p", path));
    if (kind == "symbol_space") return MetricSpace::symbol_space(Alphabet(integer(require(obj, "alphabet", path), join(path, "alphabet"))));
    if (kind == "comb") return MetricSpace::comb(number_at(obj, "r", path));
    if (kind == "heisenberg") return MetricSpace::heisenberg();
    bad(join(path, "kind"), "unknown space kind '" + kind + "'");
  });
}

ContractionSystem system_from(const json& obj, const std::string& path) {
  const auto kind = kind_of(obj, path);
  return keyed(path, [&]() -> ContractionSystem {
    if (kind == "cantor") return cantor_system(number_or(obj, "ratio", path, 1.0 / 3.0));
    if (kind == "comb") return comb_system(number_at(obj, "r", path), integer_or(obj, "seed_points", path, 64));
    if (kind == "rectangles")
      return rectangle_system(number_at(obj, "a0", path), number_at(obj, "a1", path), number_at(obj, "b0", path),
                              number_at(obj, "b1", path));
    if (kind == "symbol_example") return symbol_example_system(integer_or(obj, "seed_length", path, 2));
    if (kind == "heisenberg") return heisenberg_system();
    if (kind == "similitudes") {
      const int dim = integer_or(obj, "dim", path, 1);
      const auto& maps = require(obj, "maps", path);
      const auto mpath = join(path, "maps");
      if (!maps.is_array() || maps.size() < 2) bad(mpath, "expected at least two maps");
      std::vector<ContractionMap> out;
      for (std::size_t i = 0; i < maps.size(); ++i) {
        const auto p = mpath + "[" + std::to_string(i) + "]";
        auto fp = numbers(require(maps[i], "fixed_point", p), join(p, "fixed_point"));
        if (static_cast<int>(fp.size()) != dim) bad(join(p, "fixed_point"), "expected " + std::to_string(dim) + " coordinates");
        out.push_back(ContractionMap::similitude(number_at(maps[i], "ratio", p), std::move(fp)));
      }
      std::vector<Point> seeds;
      const auto spath = join(path, "seeds");
      const auto& sj = require(obj, "seeds", path);
      if (!sj.is_array() || sj.empty()) bad(spath, "expected a nonempty array of points");
      for (std::size_t i = 0; i < sj.size(); ++i) {
        auto s = numbers(sj[i], spath + "[" + std::to_string(i) + "]");
        if (static_cast<int>(s.size()) != dim) bad(spath + "[" + std::to_string(i) + "]", "wrong dimension");
        seeds.push_back(std::move(s));
      }
      return ContractionSystem(MetricSpace::euclidean(dim), std::move(out), std::move(seeds));
    }
    bad(join(path, "kind"), "unknown system kind '" + kind + "'");
  });
}

DiameterModel model_from(const json& obj, const std::string& path, const ContractionSystem* sys) {
  const auto kind = kind_of(obj, path);
  return keyed(path, [&]() -> DiameterModel {
    if (kind == "induced") {
      if (!sys) bad(join(path, "kind"), "'induced' needs a 'system'");
      return induced_model(*sys);
    }
    if (kind == "multiplicative")
      return DiameterModel::multiplicative(numbers(require(obj, "ratios", path), join(path, "ratios")),
                                           number_or(obj, "seed", path, 1.0));
    if (kind == "ternary_cantor") return DiameterModel::ternary_cantor(number_or(obj, "seed", path, 1.0));
    if (kind == "super_cantor") return DiameterModel::super_cantor();
    if (kind == "quadratic_exponent") return DiameterModel::quadratic_exponent();
    if (kind == "rectangles")
      return DiameterModel::rectangles({number_at(obj, "a0", path), number_at(obj, "a1", path), number_at(obj, "b0", path),
                                        number_at(obj, "b1", path)});
    if (kind == "dyadic") return DiameterModel::dyadic(integer(require(obj, "alphabet", path), join(path, "alphabet")));
    bad(join(path, "kind"), "unknown model kind '" + kind + "'");
  });
}

}  // namespace

MetricSpace parse_space(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("space: JSON parse error: ") + e.what());
  }
  return space_from(doc, "space");
}

ModelSpec parse_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) bad("<root>", "expected an object");
  static const char* known[] = {"name", "space", "system", "model", "declared_D", "subtree", "cmsc", "depth", "comment"};
  for (const auto& [k, v] : doc.items()) {
    (void)v;
    if (std::find(std::begin(known), std::end(known), k) == std::end(known)) bad(k, "unknown key");
  }

  ModelSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) bad("name", "expected a string");
    spec.name = doc["name"].get<std::string>();
  }
  if (doc.contains("system")) spec.system = std::make_shared<const ContractionSystem>(system_from(doc["system"], "system"));
  if (doc.contains("space")) {
    spec.space = space_from(doc["space"], "space");
  } else if (spec.system) {
    spec.space = spec.system->space();
  }

  if (doc.contains("model")) {
    auto m = model_from(doc["model"], "model", spec.system.get());
    if (spec.system && !m.source) {
      // closed form for an IFS: W1 stays checkable through the maps
      if (m.alphabet().size() != spec.system->alphabet().size()) bad("model", "alphabet size differs from the system's");
      m.source = spec.system;
    }
    spec.model = std::make_shared<const DiameterModel>(std::move(m));
  } else if (spec.system) {
    spec.model = std::make_shared<const DiameterModel>(induced_model(*spec.system));
  } else {
    bad("model", "missing (give 'model' or 'system')");
  }

  if (doc.contains("declared_D")) {
    const double D = number(doc["declared_D"], "declared_D");
    if (!(D >= 1.0)) bad("declared_D", "must be at least 1");
    auto copy = *spec.model;
    copy.declared_D = D;
    spec.model = std::make_shared<const DiameterModel>(std::move(copy));
  }
  if (!spec.name.empty()) {
    auto copy = *spec.model;
    copy.name = spec.name;
    spec.model = std::make_shared<const DiameterModel>(std::move(copy));
  }

  spec.depth = integer_or(doc, "depth", "", 10);
  if (spec.depth < 1) bad("depth", "must be positive");

  if (doc.contains("cmsc")) {
    const auto& c = doc["cmsc"];
    if (!c.is_object()) bad("cmsc", "expected an object");
    if (c.contains("t")) spec.cmsc_t = number(c["t"], "cmsc.t");
    spec.cmsc_C = number_or(c, "C", "cmsc", 4.0);
  }
  if (doc.contains("subtree")) {
    const auto& s = doc["subtree"];
    if (!s.is_object()) bad("subtree", "expected an object");
    if (s.contains("branch_counts")) {
      spec.subtree = SubTree{integers(s["branch_counts"], "subtree.branch_counts")};
    } else if (s.contains("cantor_t")) {
      const double t = number(s["cantor_t"], "subtree.cantor_t");
      const int len = integer_or(s, "length", "subtree", std::max(spec.depth, 1));
      spec.subtree = keyed("subtree.cantor_t", [&] { return cantor_branch_sequence(t, len); });
      if (!spec.cmsc_t) spec.cmsc_t = t;
    } else {
      bad("subtree", "expected 'branch_counts' or 'cantor_t'");
    }
    const int k = spec.model->alphabet().size();
    for (int b : spec.subtree->branch_counts)
      if (b < 1 || b > k) bad("subtree.branch_counts", "counts must lie in 1.." + std::to_string(k));
  }
  return spec;
}

ModelSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace moranlab
