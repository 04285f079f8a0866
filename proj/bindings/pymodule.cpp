// Python bindings for the main operations: field arithmetic, code parameter
// derivation, systematic encoding, syndrome checks, the brute-force oracle
// and the architecture model.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermenc/arch_sim.hpp"
#include "hermenc/encoder.hpp"
#include "hermenc/io.hpp"
#include "hermenc/oracle.hpp"
#include "hermenc/transforms.hpp"

namespace py = pybind11;
using namespace hermenc;

namespace {

CodeArray array_from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
    if (static_cast<int>(rows.size()) != f.q()) {
        throw std::invalid_argument("expected q rows");
    }
    CodeArray a(f);
    for (int r = 0; r < f.q(); ++r) {
        if (static_cast<int>(rows[r].size()) != f.q2()) {
            throw std::invalid_argument("expected q^2 symbols per row");
        }
        for (int c = 0; c < f.q2(); ++c) {
            int v = rows[r][c];
            if (v < 0 || v >= f.q2()) throw std::invalid_argument("symbol out of range");
            a.at(r, c) = static_cast<elem>(v);
        }
    }
    return a;
}

std::vector<std::vector<int>> rows_of(const CodeArray& a) {
    std::vector<std::vector<int>> rows(a.rows(), std::vector<int>(a.cols()));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) rows[r][c] = a.at(r, c);
    return rows;
}

std::vector<elem> info_from(const Field& f, const std::vector<int>& v) {
    std::vector<elem> out;
    out.reserve(v.size());
    for (int x : v) {
        if (x < 0 || x >= f.q2()) throw std::invalid_argument("symbol out of range");
        out.push_back(static_cast<elem>(x));
    }
    return out;
}

std::vector<std::tuple<int, int, int>> table_tuples(const SyndromeTable& t) {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(t.keys.size());
    for (std::size_t i = 0; i < t.keys.size(); ++i) {
        out.emplace_back(t.keys[i].first, t.keys[i].second, t.values[i]);
    }
    return out;
}

ScheduleConfig preset_by_name(const Field& f, const std::string& preset) {
    if (preset == "paper") return paper_schedule(f);
    if (preset == "serial") return serial_schedule(f);
    throw std::invalid_argument("preset must be 'paper' or 'serial'");
}

}  // namespace

PYBIND11_MODULE(_hermenc, m) {
    m.doc() = "systematic Hermitian-code encoder over GF(q^2)";

    py::class_<Field>(m, "Field")
        .def(py::init<int>(), py::arg("s"))
        .def_property_readonly("s", &Field::s)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("q2", &Field::q2)
        .def_property_readonly("modulus", &Field::modulus)
        .def_property_readonly("epsilon", &Field::epsilon)
        .def_property_readonly("gamma", &Field::gamma)
        .def_property_readonly("y0", &Field::y0)
        .def("add", &Field::add)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("log", &Field::log)
        .def("subfield_index", &Field::subfield_index)
        .def("__repr__", [](const Field& f) {
            return "Field(s=" + std::to_string(f.s()) + ", q^2=" + std::to_string(f.q2()) + ")";
        });

    py::class_<CodeParams>(m, "CodeParams")
        .def_readonly("field", &CodeParams::field)
        .def_readonly("m", &CodeParams::m)
        .def_readonly("n", &CodeParams::n)
        .def_readonly("g", &CodeParams::g)
        .def_readonly("k", &CodeParams::k)
        .def_readonly("basis", &CodeParams::basis)
        .def_readonly("a_hat", &CodeParams::a_hat)
        .def_readonly("info_len", &CodeParams::info_len)
        .def_readonly("b_hat", &CodeParams::b_hat)
        .def("__repr__", [](const CodeParams& p) {
            return "CodeParams(m=" + std::to_string(p.m) + ", n=" + std::to_string(p.n) +
                   ", k=" + std::to_string(p.k) + ")";
        });

    m.def("build_field", &build_field, py::arg("s"));
    m.def("solve_y0", &solve_y0);
    m.def("make_code", &make_code, py::arg("field"), py::arg("m"));
    m.def("info_positions", &info_positions);
    m.def("enumerate_points", [](const Field& f) {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto& p : enumerate_points(f)) out.emplace_back(p.alpha, p.beta, p.x, p.y);
        return out;
    });

    m.def(
        "encode",
        [](const CodeParams& p, const std::vector<int>& info) {
            EncodeResult r = encode(p, info_from(p.field, info));
            return py::make_tuple(rows_of(r.code), rows_of(r.rtilde));
        },
        py::arg("params"), py::arg("info"),
        "systematic encode; returns (code_rows, transformed_rows)");

    m.def("syndromes_direct", [](const CodeParams& p, const std::vector<std::vector<int>>& rows) {
        return table_tuples(syndromes_direct(p, array_from_rows(p.field, rows)));
    });
    m.def("syndromes_fast", [](const CodeParams& p, const std::vector<std::vector<int>>& rows) {
        return table_tuples(syndromes_fast(p, array_from_rows(p.field, rows)));
    });
    m.def("is_codeword", [](const CodeParams& p, const std::vector<std::vector<int>>& rows) {
        return is_codeword(p, array_from_rows(p.field, rows));
    });

    m.def("verify_information_set", &verify_information_set);
    m.def("complete_systematic", [](const CodeParams& p, const std::vector<int>& info) {
        return rows_of(complete_systematic(p, info_from(p.field, info)));
    });

    m.def(
        "simulate",
        [](const CodeParams& p, const std::vector<int>& info, const std::string& preset) {
            SimResult r = simulate_encode(p, info_from(p.field, info), preset_by_name(p.field, preset));
            py::dict out;
            out["code"] = rows_of(r.code);
            out["rtilde"] = rows_of(r.rtilde);
            out["total_cycles"] = r.total_cycles;
            out["notes"] = r.notes;
            std::vector<std::tuple<long long, std::string, std::string, int>> trace;
            trace.reserve(r.trace.size());
            for (const auto& ev : r.trace) trace.emplace_back(ev.cycle, ev.unit, ev.action, ev.column);
            out["trace"] = trace;
            return out;
        },
        py::arg("params"), py::arg("info"), py::arg("preset") = "paper");

    m.def("cycle_formula", [](const CodeParams& p, const std::string& preset) {
        return cycle_formula(p, preset_by_name(p.field, preset));
    });

    m.def("resource_report", [](const CodeParams& p) {
        ResourceReport r = resource_report(p);
        py::dict out;
        out["q"] = r.q;
        out["m"] = r.m;
        out["multipliers"] = r.multipliers();
        out["memory"] = r.memory();
        out["total"] = r.total();
        out["bound_constant"] = r.bound_constant;
        out["within_bound"] = r.within_bound();
        return out;
    });

    m.def("array_to_json", [](const CodeParams& p, const std::vector<std::vector<int>>& rows) {
        return array_to_json(p.field, p.m, array_from_rows(p.field, rows));
    });
    m.def("array_from_json", [](const std::string& text) {
        ArrayFile af = array_from_json(text);
        return py::make_tuple(af.s, af.m, rows_of(af.array));
    });
}
