// Python bindings. Integers cross the boundary as Python ints (arbitrary
// precision both sides, bridged through decimal strings), rationals as
// fractions.Fraction, matrices as lists of rows.

#include <chipfire/critical.hpp>
#include <chipfire/energy.hpp>
#include <chipfire/graphio.hpp>
#include <chipfire/io.hpp>
#include <chipfire/stability.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<chipfire::Int> {
    PYBIND11_TYPE_CASTER(chipfire::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        const std::string s = str(src);
        try {
            value = chipfire::Int(s);
        } catch (const std::exception&) {
            return false;
        }
        return true;
    }

    static handle cast(const chipfire::Int& x, return_value_policy, handle) {
        return PyLong_FromString(chipfire::to_string(x).c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<chipfire::Rat> {
    PYBIND11_TYPE_CASTER(chipfire::Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        object num, den;
        if (PyLong_Check(src.ptr())) {
            num = reinterpret_borrow<object>(src);
            den = int_(1);
        } else if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
            num = src.attr("numerator");
            den = src.attr("denominator");
        } else {
            return false;
        }
        try {
            chipfire::Int n{std::string(str(num))};
            chipfire::Int d{std::string(str(den))};
            if (d == 0) return false;
            value = chipfire::Rat(n) / chipfire::Rat(d);
        } catch (const std::exception&) {
            return false;
        }
        return true;
    }

    static handle cast(const chipfire::Rat& q, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(chipfire::to_string(q)).release();
    }
};

} // namespace pybind11::detail

namespace {

using namespace chipfire;

IntMatrix matrix_from_rows(const std::vector<IntVec>& rows) { return IntMatrix(rows); }

std::vector<IntVec> rows_of(const IntMatrix& m) {
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m.row(i));
    return rows;
}

std::vector<RatVec> rows_of(const RatMatrix& m) {
    std::vector<RatVec> rows(m.size(), RatVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
    return rows;
}

EnergySpec spec_from_obj(const py::object& obj) {
    std::string text;
    if (py::isinstance<py::str>(obj))
        text = obj.cast<std::string>();
    else
        text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in energy spec");
    return EnergySpec::from_json(j);
}

StabilizeOptions options_from_args(const std::string& policy, std::uint64_t seed,
                                   const std::optional<Int>& cap, bool record_sequence) {
    StabilizeOptions opt;
    if (policy == "random")
        opt.policy = FirePolicy::random_order;
    else if (policy != "smallest")
        throw py::value_error("policy must be 'smallest' or 'random'");
    opt.seed = seed;
    opt.cap = cap;
    opt.record_sequence = record_sequence;
    return opt;
}

DirectedMultigraph graph_from_args(std::size_t vertices,
                                   const std::vector<std::tuple<std::size_t, std::size_t, Int>>& edges,
                                   std::optional<std::size_t> sink) {
    std::vector<DirectedMultigraph::Edge> es;
    for (const auto& [u, v, m] : edges) es.push_back({u, v, m});
    return DirectedMultigraph(vertices, std::move(es), sink);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact chip-firing dynamics for M-matrices";

    static py::exception<Error> base_exc(m, "ChipfireError");
    py::register_exception<NotMMatrixError>(m, "NotMMatrixError", base_exc);
    py::register_exception<SingularError>(m, "SingularError", base_exc);
    py::register_exception<SearchTooLargeError>(m, "SearchTooLargeError", base_exc);
    py::register_exception<DimensionTooLargeError>(m, "DimensionTooLargeError", base_exc);
    py::register_exception<CapExceededError>(m, "CapExceededError", base_exc);
    py::register_exception<NegativeInputError>(m, "NegativeInputError", base_exc);
    py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", base_exc);
    py::register_exception<IndexError>(m, "StateIndexError", base_exc);
    py::register_exception<NoGlobalSinkError>(m, "NoGlobalSinkError", base_exc);
    py::register_exception<ParseError>(m, "InputParseError", base_exc);

    py::class_<FiringRecord>(m, "FiringRecord")
        .def_readonly("odometer", &FiringRecord::odometer)
        .def_readonly("sequence", &FiringRecord::sequence)
        .def_readonly("result", &FiringRecord::result);

    py::class_<EnergyValue>(m, "EnergyValue")
        .def_property_readonly("polynomial_part", &EnergyValue::polynomial_part)
        .def_property_readonly("log_argument", &EnergyValue::log_argument)
        .def("is_exact", &EnergyValue::is_exact)
        .def("exact", &EnergyValue::exact)
        .def("compare", &EnergyValue::compare)
        .def("approx_decimal",
             [](const EnergyValue& v, unsigned digits) {
                 std::string bound;
                 std::string mid = v.approx_decimal(digits, &bound);
                 return py::make_tuple(mid, bound);
             },
             py::arg("digits") = 30)
        .def("__eq__", [](const EnergyValue& a, const EnergyValue& b) { return a == b; })
        .def("__lt__", [](const EnergyValue& a, const EnergyValue& b) { return a < b; })
        .def("__le__", [](const EnergyValue& a, const EnergyValue& b) { return a <= b; });

    py::class_<DirectedMultigraph>(m, "Graph")
        .def(py::init(&graph_from_args), py::arg("vertices"), py::arg("edges"),
             py::arg("sink") = std::nullopt,
             "Directed multigraph; vertices are 0-based, edges are (source, target, "
             "multiplicity) triples.")
        .def_readonly("vertices", &DirectedMultigraph::vertex_count)
        .def_readonly("sink", &DirectedMultigraph::sink)
        .def_property_readonly("edges", [](const DirectedMultigraph& g) {
            std::vector<std::tuple<std::size_t, std::size_t, Int>> out;
            for (const auto& e : g.edges) out.emplace_back(e.source, e.target, e.multiplicity);
            return out;
        });

    py::class_<Engine>(m, "Engine")
        .def(py::init([](const std::vector<IntVec>& delta_rows) {
                 return Engine(matrix_from_rows(delta_rows));
             }),
             py::arg("delta"),
             "Build an engine from the delta matrix (firing state i subtracts row i); "
             "raises NotMMatrixError unless delta is a non-singular M-matrix.")
        .def_property_readonly("size", &Engine::size)
        .def_property_readonly("delta", [](const Engine& e) { return rows_of(e.delta()); })
        .def_property_readonly("l_matrix", [](const Engine& e) { return rows_of(e.l_matrix()); })
        .def_property_readonly("l_inverse", [](const Engine& e) { return rows_of(e.l_inverse()); })
        .def_property_readonly("determinant", &Engine::determinant)
        .def("d_vector", &Engine::d_vector)
        .def("eligible", &Engine::eligible, py::arg("config"), py::arg("state"))
        .def("fire", &Engine::fire, py::arg("config"), py::arg("state"))
        .def(
            "stabilize",
            [](const Engine& e, const IntVec& config, const std::string& policy,
               std::uint64_t seed, const std::optional<Int>& cap, bool record_sequence) {
                return e.stabilize(config, options_from_args(policy, seed, cap, record_sequence));
            },
            py::arg("config"), py::arg("policy") = "smallest", py::arg("seed") = 0,
            py::arg("cap") = std::nullopt, py::arg("record_sequence") = true)
        .def("equivalence_witness", &Engine::equivalence_witness, py::arg("f"), py::arg("g"),
             "Integer z with g - f = L z, or None.");

    m.def("is_z_matrix",
          [](const std::vector<IntVec>& rows) { return is_z_matrix(matrix_from_rows(rows)); });
    m.def("determinant",
          [](const std::vector<IntVec>& rows) { return determinant(matrix_from_rows(rows)); });
    m.def("invert_exact",
          [](const std::vector<IntVec>& rows) { return rows_of(invert_exact(matrix_from_rows(rows))); });
    m.def("m_verdict", [](const std::vector<IntVec>& rows) {
        MVerdict v = m_verdict(matrix_from_rows(rows));
        py::dict d;
        d["is_z"] = v.is_z;
        d["is_m"] = v.is_m;
        d["certificate"] = v.certificate ? py::cast(*v.certificate) : py::none();
        d["failure_witness"] = v.failure_witness ? py::cast(*v.failure_witness) : py::none();
        return d;
    });

    m.def("is_stable", &is_stable);
    m.def("is_chi_superstable", [](const Engine& e, const IntVec& c) {
        SuperstableResult r = is_chi_superstable(e, c);
        return py::make_tuple(r.superstable, r.violation);
    });
    m.def("is_z_superstable", [](const Engine& e, const IntVec& c) {
        SuperstableResult r = is_z_superstable(e, c);
        return py::make_tuple(r.superstable, r.violation);
    });
    m.def("enumerate_z_superstables", &enumerate_z_superstables);
    m.def("canonical_z_superstable", &canonical_z_superstable);

    m.def("lift_above_diagonal", [](const Engine& e, const IntVec& f) {
        LiftResult r = lift_above_diagonal(e, f);
        return py::make_tuple(r.lifted, r.multiplier);
    });
    m.def("canonical_critical", [](const Engine& e, const IntVec& f) {
        CanonicalCritical r = canonical_critical(e, f);
        return py::make_tuple(r.configuration, r.certificate.start, r.certificate.record);
    });
    m.def("is_critical", &is_critical);
    m.def("dual", &dual);
    m.def("enumerate_criticals", &enumerate_criticals);

    m.def("energy", [](const Engine& e, const py::object& spec, const IntVec& q) {
        return energy(e, spec_from_obj(spec), q);
    });
    m.def("minimize_energy", [](const Engine& e, const py::object& spec, const IntVec& f) {
        return minimize_energy(e, spec_from_obj(spec), f);
    });
    m.def("energy_difference", &energy_difference);

    m.def("laplacian", [](const DirectedMultigraph& g) { return rows_of(laplacian(g)); });
    m.def("has_global_sink", &has_global_sink);
    m.def("reduced_laplacian",
          [](const DirectedMultigraph& g, std::size_t sink) { return rows_of(reduced_laplacian(g, sink)); });
    m.def("is_g_parking", &is_g_parking);
    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });

    m.attr("__version__") = "0.1.0";
}
