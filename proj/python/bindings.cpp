#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moranlab/diameter_model.hpp"
#include "moranlab/dimension.hpp"
#include "moranlab/error.hpp"
#include "moranlab/ifs.hpp"
#include "moranlab/metrics.hpp"
#include "moranlab/moran.hpp"
#include "moranlab/pressure.hpp"
#include "moranlab/probes.hpp"
#include "moranlab/spec_io.hpp"
#include "moranlab/subconstruction.hpp"
#include "moranlab/symbolic.hpp"

namespace py = pybind11;
using namespace moranlab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of moranlab";
  m.attr("__version__") = "0.1.0";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  (void)domain;

  // words and the symbol space
  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<int>(), py::arg("size"))
      .def_property_readonly("size", &Alphabet::size)
      .def("contains", &Alphabet::contains)
      .def("__repr__", [](const Alphabet& a) { return "Alphabet(" + std::to_string(a.size()) + ")"; });

  py::class_<SubTree>(m, "SubTree")
      .def(py::init([](std::vector<int> counts) { return SubTree{std::move(counts)}; }), py::arg("branch_counts"))
      .def_readwrite("branch_counts", &SubTree::branch_counts)
      .def_property_readonly("depth", &SubTree::depth)
      .def("at_level", &SubTree::at_level)
      .def("contains", &SubTree::contains)
      .def_static("full", &SubTree::full);

  m.def("parent", &parent);
  m.def("incomparable", &incomparable);
  m.def("words_of_length", py::overload_cast<const Alphabet&, int>(&words_of_length));
  m.def("words_of_length", py::overload_cast<const SubTree&, int>(&words_of_length));
  m.def("d2", [](const Word& u, const Word& v) { return d2(u, v).distance; },
        "Symbol-space distance 2^(1-k), k the first disagreeing index");

  // metric spaces
  py::enum_<SpaceKind>(m, "SpaceKind")
      .value("Euclidean", SpaceKind::Euclidean)
      .value("Snowflake", SpaceKind::Snowflake)
      .value("SymbolSpace", SpaceKind::SymbolSpace)
      .value("Comb", SpaceKind::Comb)
      .value("Heisenberg", SpaceKind::Heisenberg);

  py::class_<MetricSpace>(m, "MetricSpace")
      .def_static("euclidean", &MetricSpace::euclidean)
      .def_static("snowflake", &MetricSpace::snowflake, py::arg("base"), py::arg("p"))
      .def_static("symbol_space", &MetricSpace::symbol_space)
      .def_static("comb", &MetricSpace::comb)
      .def_static("heisenberg", &MetricSpace::heisenberg)
      .def_property_readonly("kind", &MetricSpace::kind)
      .def_property_readonly("name", &MetricSpace::name)
      .def("distance", &MetricSpace::distance)
      .def("__repr__", [](const MetricSpace& s) { return "MetricSpace(" + s.name() + ")"; });

  m.def("heisenberg_multiply", [](const Point& p, const Point& q) {
    return from_heisenberg(heisenberg_multiply(to_heisenberg(p), to_heisenberg(q)));
  });
  m.def("heisenberg_gauge", [](const Point& p) { return heisenberg_gauge(to_heisenberg(p)); });
  m.def("comb_membership", &comb_membership, py::arg("r"), py::arg("q"), py::arg("depth") = 12);

  // diameter models
  py::enum_<ModelStructure>(m, "ModelStructure")
      .value("Multiplicative", ModelStructure::Multiplicative)
      .value("LevelHomogeneous", ModelStructure::LevelHomogeneous)
      .value("WordDependent", ModelStructure::WordDependent);

  py::class_<RectangleParams>(m, "RectangleParams")
      .def(py::init([](double a0, double a1, double b0, double b1) { return RectangleParams{a0, a1, b0, b1}; }),
           py::arg("a0"), py::arg("a1"), py::arg("b0"), py::arg("b1"))
      .def_readwrite("a0", &RectangleParams::a0)
      .def_readwrite("a1", &RectangleParams::a1)
      .def_readwrite("b0", &RectangleParams::b0)
      .def_readwrite("b1", &RectangleParams::b1);

  py::class_<DiameterModel>(m, "DiameterModel")
      .def_static("multiplicative", &DiameterModel::multiplicative, py::arg("ratios"), py::arg("seed_diameter") = 1.0)
      .def_static("level_homogeneous", &DiameterModel::level_homogeneous, py::arg("alphabet"), py::arg("log_diam"))
      .def_static("word_dependent", &DiameterModel::word_dependent, py::arg("alphabet"), py::arg("seed_diameter"),
                  py::arg("log_diam"))
      .def_static("ternary_cantor", &DiameterModel::ternary_cantor, py::arg("seed_diameter") = 1.0)
      .def_static("super_cantor", &DiameterModel::super_cantor)
      .def_static("quadratic_exponent", &DiameterModel::quadratic_exponent)
      .def_static("rectangles", &DiameterModel::rectangles)
      .def_static("dyadic", &DiameterModel::dyadic)
      .def_property_readonly("alphabet", &DiameterModel::alphabet)
      .def_property_readonly("structure", &DiameterModel::structure)
      .def_property_readonly("seed_diameter", &DiameterModel::seed_diameter)
      .def("diam", &DiameterModel::diam)
      .def("log_diam", &DiameterModel::log_diam)
      .def_readwrite("declared_D", &DiameterModel::declared_D)
      .def_readwrite("name", &DiameterModel::name);

  // contraction systems
  py::class_<ContractionSystem, std::shared_ptr<ContractionSystem>>(m, "ContractionSystem")
      .def_property_readonly("space", &ContractionSystem::space)
      .def_property_readonly("alphabet", &ContractionSystem::alphabet)
      .def_property_readonly("seed_diameter", &ContractionSystem::seed_diameter)
      .def("apply", &ContractionSystem::apply, py::arg("word"), py::arg("x"));

  m.def("cantor_system", &cantor_system, py::arg("ratio") = 1.0 / 3.0);
  m.def("comb_system", &comb_system, py::arg("r"), py::arg("seed_points") = 64);
  m.def("rectangle_system", &rectangle_system);
  m.def("symbol_example_system", &symbol_example_system, py::arg("seed_length") = 2);
  m.def("heisenberg_system", &heisenberg_system);
  m.def("induced_model", [](std::shared_ptr<ContractionSystem> s) {
    auto model = induced_model(*s);
    model.source = s;
    return model;
  });

  py::class_<PointCloud>(m, "PointCloud")
      .def_readonly("depth", &PointCloud::depth)
      .def_readonly("labels", &PointCloud::labels)
      .def_readonly("points", &PointCloud::points)
      .def_readonly("resolution", &PointCloud::resolution)
      .def("diameter", &PointCloud::diameter)
      .def("__len__", &PointCloud::size);
  m.def("attractor_cloud", &attractor_cloud, py::arg("system"), py::arg("depth"), py::arg("samples_per_leaf") = 1);
  m.def("grid_cloud", &grid_cloud);
  m.def("stopping_set", &stopping_set);

  // axioms
  py::enum_<AxiomStatus>(m, "AxiomStatus")
      .value("Holds", AxiomStatus::Holds)
      .value("Violated", AxiomStatus::Violated)
      .value("NotCheckable", AxiomStatus::NotCheckable);

  py::class_<AxiomEntry>(m, "AxiomEntry")
      .def_readonly("axiom", &AxiomEntry::axiom)
      .def_readonly("status", &AxiomEntry::status)
      .def_readonly("constant", &AxiomEntry::constant)
      .def_readonly("witness_word", &AxiomEntry::witness_word)
      .def_readonly("witness_ratio", &AxiomEntry::witness_ratio)
      .def_readonly("note", &AxiomEntry::note);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("depth", &AxiomReport::depth)
      .def_readonly("axioms", &AxiomReport::axioms)
      .def_readonly("D_W3", &AxiomReport::D_W3)
      .def_readonly("D_W4", &AxiomReport::D_W4)
      .def_readonly("C_C1", &AxiomReport::C_C1)
      .def("all_hold", &AxiomReport::all_hold)
      .def("entry", &AxiomReport::entry, py::return_value_policy::reference_internal);

  m.def("validate_wcmc", &validate_wcmc, py::arg("model"), py::arg("depth"));
  m.def("validate_cmc", &validate_cmc, py::arg("model"), py::arg("depth"));
  m.def("decay_constants", [](const DiameterModel& model, int depth) {
    const auto d = decay_constants(model, depth);
    return py::make_tuple(d.c, d.rho);
  });

  // pressure
  py::class_<PressureZero>(m, "PressureZero")
      .def_readonly("t", &PressureZero::t)
      .def_readonly("depth", &PressureZero::depth)
      .def_readonly("t_half", &PressureZero::t_half)
      .def_readonly("drift", &PressureZero::drift)
      .def_readonly("stable", &PressureZero::stable)
      .def_readonly("extrapolated", &PressureZero::extrapolated)
      .def_readonly("diagnostic", &PressureZero::diagnostic);

  m.def("pressure_at", &pressure_at, py::arg("model"), py::arg("t"), py::arg("depth"),
        py::arg("subtree") = std::nullopt);
  m.def("pressure_curve",
        [](const DiameterModel& model, int depth, double t_min, double t_max, int n_points,
           const std::optional<SubTree>& j) { return pressure_curve(model, depth, t_min, t_max, n_points, j).samples; },
        py::arg("model"), py::arg("depth"), py::arg("t_min"), py::arg("t_max"), py::arg("n_points"),
        py::arg("subtree") = std::nullopt);
  m.def("pressure_zero", &pressure_zero, py::arg("model"), py::arg("depth"), py::arg("tol") = 1e-12,
        py::arg("subtree") = std::nullopt);
  m.def("moran_dimension", &moran_dimension);
  m.def("self_affine_pressure", &self_affine_pressure);
  m.def("self_affine_zero", &self_affine_zero);

  // dimension estimates
  py::enum_<CountMethod>(m, "CountMethod").value("Greedy", CountMethod::Greedy).value("Grid", CountMethod::Grid);
  py::class_<MinkowskiEstimate>(m, "MinkowskiEstimate")
      .def_readonly("slope", &MinkowskiEstimate::slope)
      .def_readonly("intercept", &MinkowskiEstimate::intercept)
      .def_readonly("r_squared", &MinkowskiEstimate::r_squared)
      .def("to_csv", &MinkowskiEstimate::to_csv);
  m.def("box_count", &box_count, py::arg("cloud"), py::arg("r"), py::arg("method") = CountMethod::Greedy);
  m.def("minkowski_estimate", &minkowski_estimate, py::arg("cloud"), py::arg("r_min"), py::arg("r_max"),
        py::arg("n_scales"), py::arg("method") = CountMethod::Greedy);
  m.def("hausdorff_upper_sum", &hausdorff_upper_sum, py::arg("model"), py::arg("t"), py::arg("depth"),
        py::arg("subtree") = std::nullopt);

  // probes
  py::class_<Collision>(m, "Collision")
      .def_readonly("first", &Collision::first)
      .def_readonly("second", &Collision::second)
      .def_readonly("gap", &Collision::gap)
      .def_readonly("exact", &Collision::exact);
  py::class_<OscScanResult>(m, "OscScanResult")
      .def_readonly("collisions", &OscScanResult::collisions)
      .def_readonly("min_nonzero_gap", &OscScanResult::min_nonzero_gap)
      .def_readonly("candidates_rejected", &OscScanResult::candidates_rejected);
  m.def("osc_collision_scan", &osc_collision_scan, py::arg("r"), py::arg("depth"));
  m.def("osc_collision_scan_golden", [](int depth) {
    return osc_collision_scan_exact(AlgebraicNumber::golden_ratio_conjugate(), depth);
  });
  m.def("osc_collision_scan_rational", [](long long p, long long q, int depth) {
    return osc_collision_scan_exact(AlgebraicNumber::rational(p, q), depth);
  });
  m.def("separation_epsilon", &separation_epsilon, py::arg("system"), py::arg("x"), py::arg("depth"));
  m.def("finite_clustering_sup", [](const DiameterModel& model, const PointCloud& cloud, int x_samples,
                                    const std::vector<double>& r_grid) {
    return finite_clustering_sup(model, cloud, x_samples, r_grid).sup;
  });
  m.def("proper_semiconformality_ok", [](const ContractionSystem& s, int depth) {
    return proper_semiconformality_check_symbolic(s, depth).ok();
  });

  // sub-constructions
  py::class_<StratificationData>(m, "StratificationData")
      .def(py::init<std::vector<int>>(), py::arg("layer_dims"))
      .def_static("heisenberg", &StratificationData::heisenberg)
      .def_property_readonly("layer_dims", &StratificationData::layer_dims)
      .def_property_readonly("homogeneous_dimension", &StratificationData::homogeneous_dimension)
      .def("layer_index", &StratificationData::layer_index);
  m.def("beta_minus", &beta_minus);
  m.def("beta_plus", &beta_plus);
  m.def("cantor_branch_sequence", [](double t, int length) { return cantor_branch_sequence(t, length).branch_counts; });
  m.def("carnot_branch_sequence", [](const StratificationData& s, double alpha, int length) {
    return carnot_branch_sequence(s, alpha, length).sequence;
  });

  py::class_<CmscReport>(m, "CmscReport")
      .def_readonly("holds", &CmscReport::holds)
      .def_readonly("C_witnessed", &CmscReport::C_witnessed)
      .def_readonly("ratio_min", &CmscReport::ratio_min)
      .def_readonly("ratio_max", &CmscReport::ratio_max)
      .def_readonly("note", &CmscReport::note);
  m.def("verify_cmsc", &verify_cmsc, py::arg("model"), py::arg("subtree"), py::arg("t"), py::arg("C"),
        py::arg("depth"));
  m.def("carnot_cmsc_verify", [](const StratificationData& s, double alpha, int depth) {
    return carnot_cmsc_verify(s, alpha, depth).report;
  });

  // spec files
  m.def("load_model", [](const std::string& path) { return *load_spec(path).model; },
        "Diameter model described by a JSON spec file");
}
