#include "alspec/baseline.hpp"
#include "alspec/bench.hpp"
#include "alspec/demo.hpp"
#include "alspec/fastpath.hpp"
#include "alspec/oracle.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace alspec;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

Samples to_samples(const ComplexArray& a)
{
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
    return Samples(a.data(), a.data() + a.size());
}

py::array_t<Complex> to_array(const Samples& s)
{
    py::array_t<Complex> out(static_cast<py::ssize_t>(s.size()));
    std::copy(s.begin(), s.end(), out.mutable_data());
    return out;
}

DenseFactor as_factor(const py::object& obj)
{
    if (py::isinstance<DenseFactor>(obj)) return obj.cast<DenseFactor>();
    if (py::isinstance<py::str>(obj)) return parse_dense_factor(obj.cast<std::string>());
    if (py::isinstance<py::int_>(obj)) return make_dense_factor(obj.cast<std::int64_t>(), 1);
    throw std::invalid_argument("alpha must be a DenseFactor, 'p/q' string or positive int");
}

}  // namespace

PYBIND11_MODULE(_alspec, m)
{
    m.doc() = "Spectra with an adjustable frequency-bin interval (dense sampling factor alpha).";

    py::register_exception<IncompatibleAlpha>(m, "IncompatibleAlpha", PyExc_ValueError);
    py::register_exception<UnsupportedSize>(m, "UnsupportedSize", PyExc_ValueError);

    py::class_<DenseFactor>(m, "DenseFactor")
        .def_property_readonly("p", &DenseFactor::p)
        .def_property_readonly("q", &DenseFactor::q)
        .def_property_readonly("value", &DenseFactor::value)
        .def("__float__", &DenseFactor::value)
        .def("__str__", &DenseFactor::to_string)
        .def("__repr__", [](const DenseFactor& a) { return "DenseFactor(" + std::to_string(a.p()) + ", " + std::to_string(a.q()) + ")"; })
        .def(py::self == py::self);

    m.def("make_dense_factor", &make_dense_factor, py::arg("p"), py::arg("q") = 1);
    m.def("parse_dense_factor", [](const std::string& s) { return parse_dense_factor(s); });
    m.def(
        "validate_pair",
        [](std::int64_t n, const py::object& alpha) {
            const auto pair = validate_pair(n, as_factor(alpha));
            return py::make_tuple(pair.n, pair.m);
        },
        py::arg("n"), py::arg("alpha"));
    m.def(
        "bin_frequency",
        [](std::int64_t bin, std::int64_t bins, const py::object& alpha, double duration) {
            return bin_frequency(bin, bins, as_factor(alpha), duration);
        },
        py::arg("m"), py::arg("bins"), py::arg("alpha"), py::arg("duration") = 1.0);

    m.def(
        "naive_forward",
        [](const ComplexArray& x, const py::object& alpha) {
            return to_array(oracle::naive_forward(Signal(to_samples(x)), as_factor(alpha)).bins());
        },
        py::arg("x"), py::arg("alpha"));
    m.def(
        "naive_inverse",
        [](const ComplexArray& spectrum, std::int64_t origin_n, const py::object& alpha) {
            const Spectrum s(to_samples(spectrum), origin_n, as_factor(alpha));
            return to_array(oracle::naive_inverse(s).samples());
        },
        py::arg("spectrum"), py::arg("origin_n"), py::arg("alpha"));
    m.def(
        "orthogonality_kernel",
        [](std::int64_t n, std::int64_t l, std::int64_t length, const py::object& alpha) {
            return oracle::orthogonality_kernel(n, l, length, as_factor(alpha));
        },
        py::arg("n"), py::arg("l"), py::arg("length"), py::arg("alpha"));

    py::class_<fastpath::Plan>(m, "Plan")
        .def_property_readonly("n", &fastpath::Plan::n)
        .def_property_readonly("m", &fastpath::Plan::m)
        .def_property_readonly("alpha", &fastpath::Plan::alpha)
        .def_property_readonly("depth", &fastpath::Plan::depth)
        .def_property_readonly("leaf", [](const fastpath::Plan& p) { return fastpath::to_string(p.leaf()); })
        .def_property_readonly("predicted_mults", &fastpath::Plan::predicted_mults)
        .def(
            "transform",
            [](const fastpath::Plan& p, const ComplexArray& x) {
                OpCounter counter;
                auto bins = fastpath::alpha_fft(Signal(to_samples(x)), p, counter).bins();
                py::dict counts;
                counts["complex_mults"] = counter.complex_mults;
                counts["complex_adds"] = counter.complex_adds;
                counts["depth"] = counter.deepest_level;
                return py::make_tuple(to_array(bins), counts);
            },
            py::arg("x"), "Returns (spectrum, operation counts).");

    m.def(
        "plan", [](std::int64_t n, const py::object& alpha) { return fastpath::plan(n, as_factor(alpha)); },
        py::arg("n"), py::arg("alpha"));
    m.def(
        "alpha_fft",
        [](const ComplexArray& x, const py::object& alpha) {
            return to_array(fastpath::alpha_fft(Signal(to_samples(x)), as_factor(alpha)).bins());
        },
        py::arg("x"), py::arg("alpha"));

    m.def(
        "zero_pad",
        [](const ComplexArray& x, const py::object& alpha) {
            return to_array(baseline::zero_pad(Signal(to_samples(x)), as_factor(alpha)).samples);
        },
        py::arg("x"), py::arg("alpha"));
    m.def(
        "standard_fft", [](const ComplexArray& x) { return to_array(baseline::standard_fft(to_samples(x)).bins()); },
        py::arg("x"));
    m.def(
        "aliased_reconstruct",
        [](const ComplexArray& x, const py::object& alpha) {
            return to_array(baseline::aliased_reconstruct(Signal(to_samples(x)), as_factor(alpha)));
        },
        py::arg("x"), py::arg("alpha"));

    m.def("analytic_sine_spectrum", &demo::analytic_sine_spectrum, py::arg("nu"));

    m.def(
        "bench_report_json",
        [](const std::vector<std::int64_t>& ns, const std::vector<std::string>& alphas,
           const std::vector<std::string>& methods, int reps) {
            std::vector<DenseFactor> factors;
            for (const auto& a : alphas) factors.push_back(parse_dense_factor(a));
            std::vector<bench::Method> ms;
            for (const auto& t : methods) ms.push_back(bench::parse_method(t));
            bench::GridOptions options;
            options.repetitions = reps;
            py::gil_scoped_release release;
            return bench::to_json(bench::make_report(bench::run_grid(ns, factors, ms, options))).dump();
        },
        py::arg("ns"), py::arg("alphas"), py::arg("methods") = std::vector<std::string>{"alpha_fft", "zeropad_fft"},
        py::arg("reps") = 3);
}
