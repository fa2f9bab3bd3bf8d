#include "cyclone/enumeration.hpp"
#include "cyclone/errors.hpp"
#include "cyclone/gkz.hpp"
#include "cyclone/parallel.hpp"
#include "cyclone/poset.hpp"
#include "cyclone/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cyclone;

namespace {

py::int_ to_py(const BigInt& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::int_ count(int n, int d, unsigned workers, std::uint64_t budget) {
    const PointConfig cfg = make_config(n, d);
    EnumerationStats stats;
    {
        py::gil_scoped_release release;
        const FlipTable table(cfg);
        stats = workers == 0 ? enumerate_serial(table) : enumerate_parallel(table, workers, budget);
    }
    return to_py(stats.triangulation_count);
}

std::vector<std::string> enumerate(int n, int d) {
    std::vector<std::string> out;
    py::gil_scoped_release release;
    enumerate_serial(make_config(n, d), [&](const Triangulation& t, std::uint64_t) { out.push_back(t.to_text()); });
    return out;
}

py::list gkz_of(int n, int d, const std::string& text) {
    const PointConfig cfg = make_config(n, d);
    const Triangulation t = parse_triangulation(text);
    for (Simplex cell : t.cells()) require_simplex(cfg, cell);
    py::list out;
    for (const auto& e : gkz(cfg, t).entries) out.append(to_py(e));
    return out;
}

std::vector<std::string> check(int n, int d, const std::string& text) {
    const auto report = check_triangulation(make_config(n, d), parse_triangulation(text).cells());
    std::vector<std::string> out;
    for (const auto& v : report.violations) out.push_back(v.message);
    return out;
}

py::dict poset_summary(int n, int d) {
    const PointConfig cfg = make_config(n, d);
    const FlipPoset poset = build_hst1(cfg);
    const auto [lo, hi] = minimal_and_maximal(poset);
    py::dict out;
    out["nodes"] = poset.nodes.size();
    out["edges"] = poset.edges.size();
    out["tree"] = poset.tree_edges.size();
    out["min"] = poset.nodes[lo].to_text();
    out["max"] = poset.nodes[hi].to_text();
    out["audit_ok"] = audit_prop1(poset, cfg).ok();
    out["dot"] = export_dot(poset);
    return out;
}

py::list ratios(int max_n) {
    const RatioReport report = compute_ratios(max_n, node_limit_from_env());
    py::list out;
    for (const auto& row : report.rows) {
        py::dict r;
        r["n"] = row.n;
        r["codim5"] = row.count_codim5 ? py::object(to_py(*row.count_codim5)) : py::object(py::none());
        r["d2"] = row.count_d2 ? py::object(to_py(*row.count_d2)) : py::object(py::none());
        r["exact"] = row.exact;
        r["decimal"] = row.decimal;
        out.append(r);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_cyclone, m) {
    m.doc() = "Triangulations of cyclic polytopes";

    py::register_exception<Error>(m, "CycloneError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);

    m.def("count", &count, py::arg("n"), py::arg("d"), py::arg("workers") = 0, py::arg("budget") = kDefaultBudget,
          "Number of triangulations of C(n,d).");
    m.def("enumerate", &enumerate, py::arg("n"), py::arg("d"), "Canonical texts in reverse-search order.");
    m.def("gkz", &gkz_of, py::arg("n"), py::arg("d"), py::arg("triangulation"));
    m.def("root", [](int n, int d) { return root(make_config(n, d)).to_text(); }, py::arg("n"), py::arg("d"));
    m.def("canonical", [](const std::string& text) { return parse_triangulation(text).to_text(); },
          py::arg("triangulation"));
    m.def("check", &check, py::arg("n"), py::arg("d"), py::arg("triangulation"),
          "Violation messages; empty when valid.");
    m.def("poset_summary", &poset_summary, py::arg("n"), py::arg("d"));
    m.def("ratios", &ratios, py::arg("max_n"));
}
