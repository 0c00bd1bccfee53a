#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "newtrace/arith.hpp"
#include "newtrace/dimension.hpp"
#include "newtrace/eigensplit.hpp"
#include "newtrace/factored.hpp"
#include "newtrace/hecke_trace.hpp"
#include "newtrace/qexpansion.hpp"
#include "newtrace/quadratic.hpp"
#include "newtrace/tables.hpp"

namespace py = pybind11;

namespace {

using namespace newtrace;

// Exact conversion of an arbitrary-precision integer to a python int.
py::object py_int(const Int& v) {
    const std::string digits = v.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::object py_int(const Rat& v) { return py_int(to_integer(v)); }

std::vector<py::object> int_coeffs(const QSeries& f) {
    std::vector<py::object> out;
    out.reserve(f.precision() + 1);
    for (int n = 0; n <= f.precision(); ++n) out.push_back(py_int(f.coeff(n)));
    return out;
}

TableFormat parse_format(const std::string& name) {
    if (name == "text") return TableFormat::Text;
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    throw std::invalid_argument("unknown table format: " + name);
}

TableKind parse_kind(const std::string& name) {
    if (name == "dims") return TableKind::Dims;
    if (name == "trace2") return TableKind::Trace2;
    if (name == "trace3") return TableKind::Trace3;
    if (name == "traceL") return TableKind::TraceL;
    if (name == "dtables") return TableKind::DTables;
    throw std::invalid_argument("unknown table: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact traces of Hecke operators on newform spaces, newform "
              "dimensions and their eigenvalue-sign splits, and q-expansion "
              "verification.";

    m.def("factor", [](std::int64_t n) {
        std::vector<std::pair<std::int64_t, int>> out;
        const Factored nf = factor(n);
        for (const auto& f : nf.factors()) {
            out.emplace_back(f.prime, f.exponent);
        }
        return out;
    }, py::arg("n"), "Prime factorization as a list of (prime, exponent).");

    m.def("kronecker", &kronecker, py::arg("a"), py::arg("n"),
          "Kronecker symbol (a|n).");

    m.def("split_disc", [](std::int64_t D) {
        const DiscSplit s = split_disc(D);
        return std::make_pair(s.d, s.m);
    }, py::arg("D"),
          "Decomposition D = d*m^2, d fundamental (or 1 for square D).");

    m.def("class_number", &class_number, py::arg("d"),
          "Class number of Q(sqrt(d)) for negative fundamental d.");
    m.def("unit_count", &unit_count, py::arg("d"));

    m.def("nstar", [](std::int64_t N) { return nstar(factor(N)).value(); },
          py::arg("N"), "Product of the primes dividing N exactly once.");

    m.def("dim_full", py::overload_cast<int, std::int64_t>(&dim_full),
          py::arg("k"), py::arg("N"), "dim S_k(N).");
    m.def("dim_newform", py::overload_cast<int, std::int64_t>(&dim_newform),
          py::arg("k"), py::arg("N"), "dim of the newform subspace of S_k(N).");

    m.def("trace_full", [](int k, std::int64_t N, std::int64_t l) {
        return py_int(trace_full(k, N, l));
    }, py::arg("k"), py::arg("N"), py::arg("l"),
          "tr(T(l) | S_k(N)) for squarefree l.");
    m.def("trace_newform", [](int k, std::int64_t N, std::int64_t l) {
        return py_int(trace_newform(k, N, l));
    }, py::arg("k"), py::arg("N"), py::arg("l"),
          "tr(T(l) | S^0_k(N)) for squarefree l.");

    m.def("trace_split", [](int k, std::int64_t N, std::int64_t l, std::int64_t i) {
        return py_int(trace_split(k, N, l, i));
    }, py::arg("k"), py::arg("N"), py::arg("l"), py::arg("i"),
          "tr(T(l) | S^0_k(N; i)) for i | nstar(N), gcd(l, nstar(N)) = 1.");
    m.def("dim_split",
          py::overload_cast<int, std::int64_t, std::int64_t>(&dim_split),
          py::arg("k"), py::arg("N"), py::arg("i"));
    m.def("d_table",
          py::overload_cast<int, std::int64_t, std::int64_t>(&d_table),
          py::arg("k"), py::arg("N"), py::arg("i"),
          "dim S^0_k(N; i) - mu(N) [k == 2][i == 1].");

    m.def("delta14_coefficients", [](int prec) {
        return int_coeffs(delta14(prec));
    }, py::arg("prec") = 64,
          "Coefficients a_0..a_prec of the level-14 weight-2 primitive form.");

    m.def("weight4_coefficients", [](int prec) {
        const Weight4Forms forms = weight4_forms(prec);
        return std::make_pair(int_coeffs(forms.f1), int_coeffs(forms.f14));
    }, py::arg("prec") = 64,
          "Coefficients of the two level-14 weight-4 primitive forms.");

    m.def("verify_delta14", [](int prec) {
        const VerifyReport r = hecke_verify(delta14(prec), 2, 14, prec);
        return std::make_pair(r.pass, r.first_failure);
    }, py::arg("prec") = 64);

    m.def("table", [](const std::string& which, int max_level,
                      const std::vector<int>& weights, const std::string& format) {
        TableOptions opt;
        opt.which = parse_kind(which);
        opt.max_level = max_level;
        opt.weights = weights;
        opt.format = parse_format(format);
        return generate_table(opt);
    }, py::arg("which"), py::arg("max_level") = 42,
          py::arg("weights") = std::vector<int>{2, 4, 6, 8, 10, 12},
          py::arg("format") = "json");
}
