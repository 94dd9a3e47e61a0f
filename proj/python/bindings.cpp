#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pp4q/analytic.hpp"
#include "pp4q/pyramid.hpp"
#include "pp4q/sequences.hpp"
#include "pp4q/verify.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace pp4q;

namespace {

// exact big integers cross the boundary as python ints, never doubles
py::int_ to_py(const Int& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py(const std::vector<Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::dict count_dict(const CountVector& v) {
    py::dict d;
    d["n"] = v.n;
    d["a"] = to_py(v.a);
    d["b"] = to_py(v.b);
    d["c"] = to_py(v.c);
    d["d"] = to_py(v.d);
    d["e"] = to_py(v.e);
    d["s"] = to_py(v.s);
    return d;
}

py::dict sum_dict(const SumVector& v) {
    py::dict d;
    d["n"] = v.n;
    d["a"] = to_py(v.a);
    d["b"] = to_py(v.b);
    d["c"] = to_py(v.c);
    d["d"] = to_py(v.d);
    d["e"] = to_py(v.e);
    d["v"] = to_py(v.v);
    d["s"] = to_py(v.s);
    return d;
}

py::list count_rows(const std::vector<CountVector>& rows) {
    py::list out;
    for (const auto& r : rows) out.append(count_dict(r));
    return out;
}

py::list sum_rows(const std::vector<SumVector>& rows) {
    py::list out;
    for (const auto& r : rows) out.append(sum_dict(r));
    return out;
}

std::size_t checked(const LevelGraph& g, std::size_t i) {
    if (i >= g.size()) throw py::index_error("vertex index out of range");
    return i;
}

RationalGF pick_gf(int q, const std::string& which) {
    if (which == "s") return s_gf(q);
    if (which == "shat") return shat_gf(q);
    throw py::value_error("which must be 's' or 'shat'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "counts, label sums and structure of the {4,q} Pascal pyramid";

    m.def(
        "counts",
        [](int q, unsigned n_max) { return count_rows(counts_by_recurrence(q, n_max)); },
        py::arg("q"), py::arg("n_max"),
        "Per-level vertex counts by type, levels 0..n_max.");

    m.def(
        "sums",
        [](int q, unsigned n_max, bool printed_d_feed) {
            const auto reading =
                printed_d_feed ? DhatReading::PrintedUnhatted : DhatReading::Hatted;
            return sum_rows(sums_by_recurrence(q, n_max, reading));
        },
        py::arg("q"), py::arg("n_max"), py::arg("printed_d_feed") = false,
        "Per-level label sums by type, levels 0..n_max.");

    m.def(
        "sums_by_matrix",
        [](int q, unsigned n_max) { return sum_rows(sums_by_matrix(q, n_max)); },
        py::arg("q"), py::arg("n_max"),
        "The same label sums via repeated application of the 6x6 step matrix.");

    m.def(
        "closed_form_counts",
        [](int q, unsigned n) { return count_dict(closed_form_counts(q, n)); },
        py::arg("q"), py::arg("n"), "Exact closed-form count vector at one level (q >= 5).");

    m.def(
        "closed_form_shat",
        [](int q, unsigned n) { return to_py(closed_form_shat(q, n)); },
        py::arg("q"), py::arg("n"), "Exact closed-form level sum s^_n (q >= 5).");

    m.def(
        "euclidean_counts",
        [](unsigned n_max) {
            py::list out;
            for (const auto& r : euclidean_counts(n_max)) {
                py::dict d;
                d["n"] = r.n;
                d["s"] = to_py(r.s);
                d["shat"] = to_py(r.shat);
                d["c"] = to_py(r.c);
                d["d"] = to_py(r.d);
                out.append(d);
            }
            return out;
        },
        py::arg("n_max"), "The q = 4 degenerate: triangular totals and powers of three.");

    m.def(
        "gf",
        [](int q, const std::string& which) {
            const RationalGF gf = pick_gf(q, which);
            py::dict d;
            d["q"] = q;
            d["which"] = which;
            d["numerator"] = to_py(gf.num.c);
            d["denominator"] = to_py(gf.den.c);
            return d;
        },
        py::arg("q"), py::arg("which") = "shat",
        "Rational generating function coefficients, ascending.");

    m.def(
        "gf_series",
        [](int q, const std::string& which, unsigned terms) {
            return to_py(gf_series(pick_gf(q, which), terms));
        },
        py::arg("q"), py::arg("which") = "shat", py::arg("terms") = 11,
        "Series prefix of a generating function, exact integers.");

    m.def(
        "char_poly_p6", [](int q) { return to_py(char_poly_p6(q).c); }, py::arg("q"),
        "Order-6 characteristic polynomial coefficients, ascending.");
    m.def(
        "char_poly_ps", [](int q) { return to_py(char_poly_ps(q).c); }, py::arg("q"),
        "Characteristic polynomial of the s^ recurrence, ascending.");

    m.def(
        "growth_ratio",
        [](int q) {
            const GrowthRatio gr = growth_ratio(q);
            py::dict d;
            d["q"] = gr.q;
            d["exact"] = gr.exact;
            d["decimal"] = gr.decimal;
            return d;
        },
        py::arg("q"), "Exact and decimal forms of lim s^_{n+1}/s^_n (q >= 5).");

    m.def("empirical_ratio", &empirical_ratio, py::arg("q"), py::arg("n"),
          py::arg("digits") = 20, "s^_{n+1}/s^_n at a finite level, as a decimal string.");

    m.def("level_size_bound",
          [](int q, unsigned n) { return to_py(level_size_bound(q, n)); }, py::arg("q"),
          py::arg("n"), "Vertex count of level n without building it.");

    m.def(
        "oracle_label",
        [](int q, unsigned m, std::uint32_t i, unsigned k) {
            HptFace face(q);
            return to_py(oracle_label(face, m, i, k));
        },
        py::arg("q"), py::arg("m"), py::arg("i"), py::arg("k"),
        "Label of vertex (m, i, k) as triangle label times binomial.");

    py::class_<LevelGraph>(m, "Level", "One fully built level of the pyramid.")
        .def_readonly("q", &LevelGraph::q)
        .def_readonly("level", &LevelGraph::level)
        .def("__len__", &LevelGraph::size)
        .def("label",
             [](const LevelGraph& g, std::size_t i) { return to_py(g.labels[checked(g, i)]); },
             py::arg("i"))
        .def("type",
             [](const LevelGraph& g, std::size_t i) {
                 return std::string(1, kind_letter(g.kinds[checked(g, i)]));
             },
             py::arg("i"))
        .def("row",
             [](const LevelGraph& g, std::size_t i) { return g.hpt_row_of(checked(g, i)); },
             py::arg("i"))
        .def("height",
             [](const LevelGraph& g, std::size_t i) { return g.height_of(checked(g, i)); },
             py::arg("i"))
        .def("index_in_row",
             [](const LevelGraph& g, std::size_t i) { return g.index_in_row(checked(g, i)); },
             py::arg("i"))
        .def("ascendants",
             [](const LevelGraph& g, std::size_t i) {
                 const auto sp = g.ascendants(checked(g, i));
                 return std::vector<std::uint32_t>(sp.begin(), sp.end());
             },
             py::arg("i"), "Canonical indices of the ascendants in the previous level.")
        .def("census", [](const LevelGraph& g) { return count_dict(level_census(g)); })
        .def("value_sums", [](const LevelGraph& g) { return sum_dict(level_value_sums(g)); });

    m.def(
        "build_level",
        [](int q, unsigned n, std::size_t cap) { return build_level(q, n, cap); },
        py::arg("q"), py::arg("n"), py::arg("cap") = kDefaultVertexCap,
        "Builds levels 0..n and returns level n.");

    m.def(
        "verify",
        [](int q, unsigned n_max, std::size_t cap, bool printed_d_feed) {
            const VerifyReport r =
                run_verify(q, n_max, cap,
                           printed_d_feed ? DhatReading::PrintedUnhatted : DhatReading::Hatted);
            py::dict d;
            d["q"] = r.q;
            d["n_max"] = r.n_max;
            d["printed_d_feed"] = r.printed_d_feed;
            d["all_passed"] = r.all_passed;
            d["error"] = r.error;
            d["elapsed_seconds"] = r.elapsed_seconds;
            d["exit_code"] = verify_exit_code(r);
            py::list checks;
            for (const auto& c : r.checks) {
                py::dict cd;
                cd["name"] = c.name;
                cd["passed"] = c.passed;
                cd["detail"] = c.detail;
                checks.append(cd);
            }
            d["checks"] = checks;
            py::list errata;
            for (const auto& e : r.errata) {
                py::dict ed;
                ed["id"] = e.id;
                ed["statement"] = e.statement;
                ed["evidence"] = e.evidence;
                ed["adopted"] = e.adopted;
                errata.append(ed);
            }
            d["errata"] = errata;
            return d;
        },
        py::arg("q"), py::arg("n_max") = 10, py::arg("cap") = kDefaultVertexCap,
        py::arg("printed_d_feed") = false,
        "Cross-checks every independent route and reports the findings.");
}
