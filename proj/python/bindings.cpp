#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "untwist/engine/engine.hpp"
#include "untwist/engine/report.hpp"
#include "untwist/engine/table.hpp"
#include "untwist/forms/lens.hpp"
#include "untwist/forms/mq.hpp"
#include "untwist/knot/dataset.hpp"
#include "untwist/knot/knot_record.hpp"
#include "untwist/signature/signature.hpp"

namespace py = pybind11;
using namespace untwist;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::str(r.fraction_str()));
}

Rational to_rational(const py::handle& x) {
    if (py::isinstance<py::int_>(x)) return Rational(x.cast<std::int64_t>(), 1);
    py::object f = py::module_::import("fractions").attr("Fraction")(x);
    return Rational(f.attr("numerator").cast<std::int64_t>(), f.attr("denominator").cast<std::int64_t>());
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw std::invalid_argument("parity must be 'even' or 'odd'");
}

Definiteness parse_definite(const std::string& s) {
    if (s == "pos") return Definiteness::positive;
    if (s == "neg") return Definiteness::negative;
    if (s == "indef") return Definiteness::indefinite;
    throw std::invalid_argument("definite must be 'pos', 'neg' or 'indef'");
}

}  // namespace

PYBIND11_MODULE(_untwist, m) {
    m.doc() = "Obstructions to unknotting by a single twist";

    py::register_exception<DatasetError>(m, "DatasetError", PyExc_ValueError);
    py::register_exception<JumpPointError>(m, "JumpPointError", PyExc_ValueError);
    py::register_exception<CalibrationError>(m, "CalibrationError", PyExc_RuntimeError);

    py::class_<KnotRecord>(m, "Knot")
        .def_readonly("name", &KnotRecord::name)
        .def_readonly("signature", &KnotRecord::signature)
        .def_readonly("determinant", &KnotRecord::determinant)
        .def_readonly("genus", &KnotRecord::genus)
        .def_readonly("arf", &KnotRecord::arf)
        .def("to_json", [](const KnotRecord& k) { return json_to_py(record_to_json(k)); })
        .def("__repr__", [](const KnotRecord& k) { return "<Knot " + k.name + ">"; });

    m.def("load_dataset", &load_dataset_file, py::arg("path"));
    m.def("find_knot", [](const std::vector<KnotRecord>& d, const std::string& n) { return find_knot(d, n); },
          py::arg("dataset"), py::arg("name"));
    m.def("torus_knot", &torus_knot, py::arg("p"), py::arg("q"));
    m.def("mirror", &mirror, py::arg("knot"));

    m.def(
        "analyze",
        [](const KnotRecord& k, std::int64_t max_l, bool parallel) {
            Config c;
            c.max_l = max_l;
            c.parallel = parallel;
            return json_to_py(report_to_json(analyze(k, c)));
        },
        py::arg("knot"), py::arg("max_l") = Config{}.max_l, py::arg("parallel") = false,
        "Analysis report as a dict with 'known', 'possible' and per-index 'verdicts'.");
    m.def(
        "candidates",
        [](const KnotRecord& k) {
            std::vector<std::string> out;
            for (const auto& t : candidates(k)) out.push_back(t.str());
            return out;
        },
        py::arg("knot"));

    m.def(
        "torus_signature",
        [](std::int64_t p, std::int64_t q, const py::object& x) { return torus_signature(p, q, to_rational(x)); },
        py::arg("p"), py::arg("q"), py::arg("x"));
    m.def(
        "torsion_v", [](std::int64_t p, std::int64_t q) { return torsion_v(p, q).values(); }, py::arg("p"),
        py::arg("q"));

    m.def(
        "lens_d", [](std::int64_t p, std::int64_t q, std::int64_t i) { return fraction(lens_d(p, q, i)); },
        py::arg("p"), py::arg("q"), py::arg("i"));
    m.def(
        "lens_spectrum",
        [](std::int64_t p, std::int64_t q) {
            py::list out;
            for (const auto& v : lens_spectrum(p, q).values) out.append(py::make_tuple(fraction(v.d), v.order));
            return out;
        },
        py::arg("p"), py::arg("q"), "List of (d, order) indexed by the spin^c label.");

    m.def(
        "m_q",
        [](std::int64_t a, std::int64_t b) {
            py::dict out;
            for (const auto& c : m_q(Form2{a, b}).cosets)
                out[py::make_tuple(c.label[0], c.label[1])] = fraction(c.value);
            return out;
        },
        py::arg("a"), py::arg("b"), "m_Q of [[a, b], [b, a]] keyed by coset label.");
    m.def(
        "enumerate_forms",
        [](std::int64_t det, const std::string& parity, const std::string& definite) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& f : enumerate_forms(det, parse_parity(parity), parse_definite(definite)))
                out.emplace_back(f.a, f.b);
            return out;
        },
        py::arg("det"), py::arg("parity"), py::arg("definite"));

    m.def(
        "reproduce_table",
        [](const std::vector<KnotRecord>& data, const std::string& expected_path) {
            auto diff = reproduce_table(data, load_expected_table(expected_path));
            py::list mismatched;
            for (const auto& r : diff.rows)
                if (!r.match()) mismatched.append(r.knot);
            py::dict out;
            out["rows"] = diff.rows.size();
            out["mismatches"] = mismatched;
            out["diff"] = format_table_diff(diff);
            return out;
        },
        py::arg("dataset"), py::arg("expected_path"));
}
