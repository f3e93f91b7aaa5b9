#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groverian/errors.hpp"
#include "groverian/grover.hpp"
#include "groverian/measure.hpp"
#include "groverian/oracles.hpp"
#include "groverian/state_io.hpp"

namespace py = pybind11;
using namespace groverian;

namespace {

py::array_t<Complex> to_numpy(std::span<const Complex> v) {
    py::array_t<Complex> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

PureState state_from_array(int n, py::array_t<Complex, py::array::c_style | py::array::forcecast> a,
                           bool normalize) {
    if (a.ndim() != 1) throw DomainError("amplitudes must be one-dimensional");
    Amplitudes amps(a.data(), a.data() + a.size());
    return normalize ? PureState::normalized(n, std::move(amps)) : PureState(n, std::move(amps));
}

WPartitionKind w_kind_from(const std::string& kind, int param) {
    if (kind == "full") return w_kind::Full{};
    if (kind == "k_vs_rest") return w_kind::KVsRest{param};
    if (kind == "one_qubit_parties") return w_kind::OneQubitParties{param};
    throw DomainError("unknown W partition kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_groverian, m) {
    m.doc() = "Generalized Groverian entanglement measure of pure multi-qubit states";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    (void)domain_error;

    py::enum_<StateFamily>(m, "StateFamily")
        .value("generic", StateFamily::generic)
        .value("ghz", StateFamily::ghz)
        .value("w", StateFamily::w);

    py::class_<PureState>(m, "PureState")
        .def(py::init(&state_from_array), py::arg("n"), py::arg("amplitudes"), py::arg("normalize") = false)
        .def_property_readonly("n", &PureState::n)
        .def_property_readonly("family", &PureState::family)
        .def_property_readonly("amplitudes", [](const PureState& s) { return to_numpy(s.amplitudes()); })
        .def("__len__", &PureState::dim);

    m.def("make_basis", &make_basis, py::arg("n"), py::arg("index"));
    m.def("make_ghz", &make_ghz, py::arg("n"), py::arg("a0"), py::arg("a1"));
    m.def("make_w", &make_w, py::arg("n"));
    m.def("make_eta", &make_eta, py::arg("n"));
    m.def("make_random_state", &make_random_state, py::arg("n"), py::arg("seed"));
    m.def("parse_state", &parse_state, py::arg("text"), py::arg("normalize") = false);
    m.def("format_state", &format_state, py::arg("state"));

    py::class_<Partition>(m, "Partition")
        .def(py::init<int, std::vector<Block>>(), py::arg("n"), py::arg("blocks"))
        .def_static("parse", &Partition::parse, py::arg("text"), py::arg("n"))
        .def_static("full", &Partition::full, py::arg("n"))
        .def_property_readonly("n", &Partition::n)
        .def_property_readonly("parties", &Partition::parties)
        .def_property_readonly("blocks", &Partition::blocks)
        .def("canonical", &Partition::canonical)
        .def("__str__", &Partition::to_string)
        .def("__repr__", [](const Partition& p) { return "Partition('" + p.to_string() + "')"; })
        .def(py::self == py::self);

    m.def("stirling2", &stirling2, py::arg("n"), py::arg("m"));
    m.def("enumerate_partitions", &enumerate_partitions, py::arg("n"), py::arg("m"));
    m.def("single_qubit_plus_rest_partition", &single_qubit_plus_rest_partition, py::arg("n"), py::arg("m"));

    py::enum_<UpdateMode>(m, "UpdateMode")
        .value("coordinate", UpdateMode::coordinate)
        .value("party", UpdateMode::party)
        .value("hybrid", UpdateMode::hybrid);

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init([](int restarts, int max_sweeps, double tol, std::uint64_t seed, UpdateMode mode, bool cyclic) {
                 OptimizerConfig c{restarts, max_sweeps, tol, seed, mode, cyclic, false};
                 validate(c);
                 return c;
             }),
             py::arg("restarts") = 20, py::arg("max_sweeps") = 10000, py::arg("tol") = 1e-12,
             py::arg("seed") = 1, py::arg("mode") = UpdateMode::coordinate, py::arg("cyclic") = false)
        .def_readwrite("restarts", &OptimizerConfig::restarts)
        .def_readwrite("max_sweeps", &OptimizerConfig::max_sweeps)
        .def_readwrite("tol", &OptimizerConfig::tol)
        .def_readwrite("seed", &OptimizerConfig::seed)
        .def_readwrite("mode", &OptimizerConfig::mode)
        .def_readwrite("cyclic", &OptimizerConfig::cyclic);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("pmax", &OptResult::pmax)
        .def_readonly("sweeps_used", &OptResult::sweeps_used)
        .def_readonly("restart_values", &OptResult::restart_values)
        .def_readonly("converged", &OptResult::converged)
        .def_property_readonly("product_state",
                               [](const OptResult& r) { return to_numpy(r.argmax.product_amplitudes()); });

    m.def("optimize", &optimize, py::arg("state"), py::arg("partition"), py::arg("config") = OptimizerConfig{});

    py::enum_<Method>(m, "Method")
        .value("optimizer", Method::optimizer)
        .value("spectral", Method::spectral)
        .value("analytic", Method::analytic);
    py::enum_<Routing>(m, "Routing")
        .value("cheapest", Routing::cheapest)
        .value("optimizer_only", Routing::optimizer_only);

    py::class_<MeasureResult>(m, "MeasureResult")
        .def_readonly("pmax", &MeasureResult::pmax)
        .def_readonly("g", &MeasureResult::g)
        .def_readonly("partition", &MeasureResult::partition)
        .def_readonly("method", &MeasureResult::method)
        .def_readonly("trace", &MeasureResult::trace);

    m.def("groverian", &groverian::measure, py::arg("state"), py::arg("partition"),
          py::arg("config") = OptimizerConfig{}, py::arg("routing") = Routing::cheapest);
    m.attr("measure") = m.attr("groverian");

    py::class_<GmValue>(m, "GmValue")
        .def_readonly("g", &GmValue::g)
        .def_readonly("best", &GmValue::best);
    m.def("g_m", &g_m, py::arg("state"), py::arg("m"), py::arg("config") = OptimizerConfig{},
          py::arg("budget") = kDefaultEnumerationBudget, py::arg("routing") = Routing::cheapest);

    py::class_<GmProfile>(m, "GmProfile")
        .def_readonly("n", &GmProfile::n)
        .def_readonly("values", &GmProfile::values)
        .def_readonly("warnings", &GmProfile::warnings)
        .def("monotone", &GmProfile::monotone, py::arg("tol") = 1e-6)
        .def_property_readonly("g", [](const GmProfile& p) {
            std::vector<double> g;
            for (const auto& v : p.values) g.push_back(v.g);
            return g;
        });
    m.def("gm_profile", &gm_profile, py::arg("state"), py::arg("config") = OptimizerConfig{},
          py::arg("budget") = kDefaultEnumerationBudget, py::arg("routing") = Routing::cheapest);

    m.def("bipartite_pmax", &bipartite_pmax, py::arg("state"), py::arg("partition"));
    m.def("grid_search_pmax", &grid_search_pmax, py::arg("state"), py::arg("partition"), py::arg("steps"));
    m.def("ghz_pmax", &ghz_pmax, py::arg("a0"), py::arg("a1"));
    m.def(
        "w_pmax", [](int n, const std::string& kind, int param) { return w_pmax(n, w_kind_from(kind, param)); },
        py::arg("n"), py::arg("kind") = "full", py::arg("param") = 0,
        "kind is 'full', 'k_vs_rest' (param = k) or 'one_qubit_parties' (param = m)");

    py::class_<GroverRun>(m, "GroverRun")
        .def_readonly("n", &GroverRun::n)
        .def_readonly("iterations", &GroverRun::iterations)
        .def_readonly("success_probability", &GroverRun::success_probability)
        .def_property_readonly("marked", [](const GroverRun& r) { return r.marked.index; })
        .def_property_readonly("final_state", [](const GroverRun& r) { return to_numpy(r.final_state); });
    m.def(
        "grover_run",
        [](const PureState& s, std::uint64_t marked, int iterations) {
            return grover_run(s, MarkedElement{marked}, iterations);
        },
        py::arg("initial"), py::arg("marked"), py::arg("iterations"));
    m.def("optimal_iterations", &optimal_iterations, py::arg("n"));

    py::class_<OverlapLawReport>(m, "OverlapLawReport")
        .def_readonly("n", &OverlapLawReport::n)
        .def_readonly("trials", &OverlapLawReport::trials)
        .def_readonly("max_deviation", &OverlapLawReport::max_deviation)
        .def_readonly("coefficient", &OverlapLawReport::coefficient);
    m.def(
        "validate_overlap_law",
        [](int n, std::uint64_t marked, int trials, std::uint64_t seed) {
            return validate_overlap_law(n, MarkedElement{marked}, trials, seed);
        },
        py::arg("n"), py::arg("marked"), py::arg("trials"), py::arg("seed"));
    m.def(
        "log_log_slope", [](const std::vector<OverlapLawReport>& r) { return log_log_slope(r); },
        py::arg("reports"));
}
