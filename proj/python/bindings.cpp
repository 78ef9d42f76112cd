#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shiftfam/core.hpp"
#include "shiftfam/family.hpp"
#include "shiftfam/oracle.hpp"

namespace py = pybind11;
using namespace shiftfam;

namespace {

Mode mode_of(bool observed) { return observed ? Mode::Observed : Mode::Strict; }

py::list entries(const std::vector<PEntry>& v) {
    py::list out;
    for (const auto& e : v) out.append(py::make_tuple(e.i, e.m));
    return out;
}

}  // namespace

PYBIND11_MODULE(_shiftfam, m) {
    m.doc() = "Numerical semigroups and shifted families M_n = <n, n + r_1, ..., n + r_k>";

    static PyObject* error_type = PyErr_NewException("shiftfam.ShiftfamError", PyExc_ValueError, nullptr);
    m.attr("ShiftfamError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type, exc.ptr());
        }
    });

    // core
    py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
        .def(py::init([](const std::vector<Int>& gens) { return build_semigroup(gens); }), py::arg("gens"))
        .def_property_readonly("generators", [](const NumericalSemigroup& h) { return h.generators().values(); })
        .def_property_readonly("minimal_generators",
                               [](const NumericalSemigroup& h) { return h.minimal_generators().values(); })
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
        .def_property_readonly("pseudo_frobenius", &NumericalSemigroup::pseudo_frobenius)
        .def_property_readonly("type", &NumericalSemigroup::type)
        .def_property_readonly("embedding_dimension", &NumericalSemigroup::embedding_dimension)
        .def("__contains__", &NumericalSemigroup::contains)
        .def("apery", [](const NumericalSemigroup& h, Int base) { return apery_set(h, base).elements(); })
        .def("trace", [](const NumericalSemigroup& h) {
            const auto t = trace(h);
            return py::dict(py::arg("holes") = t.holes, py::arg("residue") = t.residue);
        })
        .def("ng_certificate", [](const NumericalSemigroup& h) {
            const auto c = ng_certificate(h);
            return py::dict(py::arg("candidates") = c.candidates, py::arg("vector") = c.vector);
        })
        .def("is_symmetric", [](const NumericalSemigroup& h) { return is_symmetric(h); })
        .def("is_almost_symmetric", [](const NumericalSemigroup& h) { return is_almost_symmetric(h); })
        .def("has_canonical_reduction", [](const NumericalSemigroup& h) { return has_canonical_reduction(h); })
        .def("reduced_type", [](const NumericalSemigroup& h) { return reduced_type(h); });

    m.def("minimal_generators",
          [](const std::vector<Int>& gens) { return minimal_generators(normalize_generators(gens)).values(); });
    m.def("submonoid_frobenius",
          [](const std::vector<Int>& gens) { return Submonoid(normalize_generators(gens)).frobenius(); });
    m.def("min_fact_length",
          [](Int x, const std::vector<Int>& coins) { return min_fact_length(x, normalize_generators(coins)); },
          py::arg("x"), py::arg("coins"));

    // family
    py::class_<ShiftSpec>(m, "ShiftSpec")
        .def(py::init([](const std::vector<Int>& r) { return make_spec(r); }), py::arg("shifts"))
        .def_property_readonly("shifts", [](const ShiftSpec& s) { return s.r.values(); })
        .def_readonly("d", &ShiftSpec::d)
        .def_readonly("frobenius_s", &ShiftSpec::fs)
        .def_readonly("n0", &ShiftSpec::n0)
        .def_property_readonly("r_k", &ShiftSpec::rk)
        .def("member", [](const ShiftSpec& s, Int n) { return member_semigroup(s, n); })
        .def("p_profile",
             [](const ShiftSpec& s, Int n) {
                 const auto p = p_profile(s, n);
                 py::list pf;
                 for (const auto& e : p.pf)
                     pf.append(py::dict(py::arg("f") = e.f, py::arg("class") = std::string(to_string(e.cls)),
                                        py::arg("i") = e.i, py::arg("m") = e.m));
                 return py::dict(py::arg("p_prime") = entries(p.p_prime), py::arg("p_double") = entries(p.p_double),
                                 py::arg("pf") = pf);
             })
        .def("psi", [](const ShiftSpec& s, Int n, Int i, Int lambda) { return psi_lambda(s, n, i, lambda); },
             py::arg("n"), py::arg("i"), py::arg("lam") = 1)
        .def("psi_wrong", [](const ShiftSpec& s, Int n, Int i) { return psi_wrong(s, n, i); })
        .def("phi", [](const ShiftSpec& s, Int n, Int f, Int lambda) { return phi_lambda(s, n, f, lambda); },
             py::arg("n"), py::arg("f"), py::arg("lam") = 1)
        .def("m_shift", [](const ShiftSpec& s, Int n, Int i, Int lambda) { return m_shift(s, n, i, lambda); })
        .def(
            "bound_n",
            [](const ShiftSpec& s, std::optional<Int> n) {
                const auto b = n ? bound_n_for(s, *n) : bound_n(s);
                return py::dict(py::arg("n_star") = b.n_star, py::arg("N1") = b.n1, py::arg("N2") = b.n2,
                                py::arg("N3") = b.n3, py::arg("N") = b.n);
            },
            py::arg("n") = py::none())
        .def(
            "frobenius_closed_form",
            [](const ShiftSpec& s, Int n, Int lambda, bool observed) {
                return frobenius_closed_form(s, n, lambda, mode_of(observed)).value;
            },
            py::arg("n"), py::arg("lam"), py::arg("observed") = false)
        .def(
            "ng_transport",
            [](const ShiftSpec& s, Int n, Int lambda, bool observed) {
                return ng_transport(s, n, lambda, mode_of(observed)).vector;
            },
            py::arg("n"), py::arg("lam"), py::arg("observed") = false)
        .def(
            "reduced_type_formula",
            [](const ShiftSpec& s, Int n, std::optional<Int> p, bool observed) {
                return p ? reduced_type_formula(s, n, *p, mode_of(observed)).value
                         : reduced_type_formula(s, n, mode_of(observed)).value;
            },
            py::arg("n"), py::arg("p") = py::none(), py::arg("observed") = false)
        .def("residue_scan", [](const ShiftSpec& s, Int n, Int lo, Int hi) {
            py::list rows;
            for (const auto& r : residue_scan(s, n, lo, hi).rows) rows.append(py::make_tuple(r.lambda, r.n, r.residue));
            return rows;
        });

    // oracle
    m.def("brute_pf", [](const std::vector<Int>& gens) { return oracle::brute_pf(gens); });
    m.def("brute_trace_holes", [](const std::vector<Int>& gens) { return oracle::brute_trace(gens).holes; });
    m.def(
        "brute_shift_check",
        [](const ShiftSpec& s, Int n, Int lambda_max, bool wrong) {
            py::list out;
            for (const auto& r : oracle::brute_shift_check(s, n, lambda_max, {oracle::kDefaultCap, wrong}))
                out.append(py::dict(py::arg("subject") = r.subject, py::arg("instance") = r.instance,
                                    py::arg("expected") = r.expected, py::arg("actual") = r.actual,
                                    py::arg("match") = r.match));
            return out;
        },
        py::arg("spec"), py::arg("n"), py::arg("lambda_max"), py::arg("wrong_bijection") = false);
    m.def("random_family", [](std::uint64_t seed, Int rk_max) { return oracle::random_family(seed, rk_max); });
}
