#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "freespec/brown.hpp"
#include "freespec/errors.hpp"
#include "freespec/freeprod.hpp"
#include "freespec/io.hpp"
#include "freespec/matrixmodel.hpp"
#include "freespec/moments.hpp"
#include "freespec/spectra.hpp"
#include "freespec/transforms.hpp"
#include "freespec/verify.hpp"

namespace py = pybind11;
using namespace freespec;

namespace {

Kind parse_kind(const std::string& k) {
    if (k == "product") return Kind::product;
    if (k == "sum") return Kind::sum;
    throw py::value_error("kind must be 'product' or 'sum'");
}

py::object to_python(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict region_dict(const SpectrumRegion& r, std::size_t boundary) {
    py::dict d = to_python(io::region_to_json(r));
    if (boundary > 0) d["boundary"] = r.boundary(boundary);
    return d;
}

}  // namespace

PYBIND11_MODULE(_freespec, m) {
    m.doc() = "Brown measures and spectra in free products of 2x2 matrix algebras";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidMeasure>(m, "InvalidMeasure", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
    auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<DiracInputError>(m, "DiracInputError", pre.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    py::class_<RadialMeasure>(m, "RadialMeasure")
        .def_property_readonly("atom_at_zero", &RadialMeasure::atom_at_zero)
        .def_property_readonly("r_inner", &RadialMeasure::r_inner)
        .def_property_readonly("r_outer", &RadialMeasure::r_outer)
        .def_property_readonly("s", &RadialMeasure::s_table)
        .def_property_readonly("F", &RadialMeasure::F_table)
        .def("cdf", &RadialMeasure::cdf, py::arg("s"))
        .def("log_potential", [](const RadialMeasure& nu, cplx lam) { return log_potential(nu, lam); },
             py::arg("lam"))
        .def("summary", [](const RadialMeasure& nu) { return to_python(io::radial_summary(nu)); });

    m.def("s_transform", [](const std::string& measure, double w) { return s_transform(io::load_measure(measure), w); },
          py::arg("measure"), py::arg("w"),
          "S-transform of a named measure (arcsine01, dirac:x, atoms:x:m,...) or measure CSV file");
    m.def("haagerup_larsen", [](const std::string& measure) { return haagerup_larsen(io::load_measure(measure)); },
          py::arg("measure"), "Brown measure of U H from the law of H^2");
    m.def("brown_product", [](const Mat2& a, const Mat2& b) { return brown_product(a, b); }, py::arg("A"),
          py::arg("B"));
    m.def("brown_sum_nilpotents", &brown_sum_nilpotents, py::arg("alpha"), py::arg("beta"));
    m.def("brown_example_64",
          [](cplx alpha, cplx beta) { return to_python(io::mixture_summary(brown_example_64(alpha, beta))); },
          py::arg("alpha"), py::arg("beta"));
    m.def("brown_example_65", [](cplx alpha, cplx beta) { return brown_example_65(alpha, beta); }, py::arg("alpha"),
          py::arg("beta"));

    m.def("spectrum_product", [](const Mat2& a, const Mat2& b, std::size_t boundary) {
              return region_dict(spectrum_product_traceless(a, b), boundary);
          },
          py::arg("A"), py::arg("B"), py::arg("boundary") = 0);
    m.def("spectrum_example_66", [](cplx alpha, cplx beta, std::size_t boundary) {
              return region_dict(spectrum_example_66(alpha, beta), boundary);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("boundary") = 0);
    m.def("spectral_radius", [](const Mat2& a, const Mat2& b, const std::string& mode) {
              if (mode != "normal" && mode != "traceless") throw py::value_error("mode must be 'normal' or 'traceless'");
              return spectral_radius_product(a, b, mode == "normal" ? RadiusMode::normal : RadiusMode::traceless);
          },
          py::arg("A"), py::arg("B"), py::arg("mode") = "traceless");
    m.def("ellipse_families_equal", [](double b1, double b2, std::size_t raster) {
              const EllipseComparison c = ellipse_families_equal(b1, b2, raster);
              py::dict d;
              d["equal"] = c.equal;
              d["hausdorff"] = c.hausdorff;
              d["pixel"] = c.pixel;
              return d;
          },
          py::arg("beta1"), py::arg("beta2"), py::arg("raster") = 1024);

    m.def("moments", [](const std::string& kind, const Mat2& a, const Mat2& b, int n) {
              return moment_sequence(parse_kind(kind), a, b, n);
          },
          py::arg("kind"), py::arg("A"), py::arg("B"), py::arg("n") = 4);
    m.def("classify", [](const std::string& kind, const Mat2& a, const Mat2& b) {
              const Kind k = parse_kind(kind);
              const Classification c = classify_support(k, a, b);
              py::dict d;
              d["classification"] = to_string(c.support);
              d["reason"] = c.reason;
              py::dict cert;
              for (const auto& [name, value] : c.certificates) cert[py::str(name)] = value;
              d["certificates"] = cert;
              d["r_diagonal"] = k == Kind::product ? is_r_diagonal_product(a, b) : is_r_diagonal_sum(a, b);
              return d;
          },
          py::arg("kind"), py::arg("A"), py::arg("B"));

    m.def("decompose", [](const Mat2& b) {
              const SymbolicMat2 d = decompose(b);
              py::dict out;
              for (int i = 0; i < 2; ++i)
                  for (int j = 0; j < 2; ++j)
                      out[py::str("b" + std::to_string(i + 1) + std::to_string(j + 1))] = d(i, j).to_string();
              return out;
          },
          py::arg("B"), "Entries of B over h, u, v relative to the matrix units of the first copy");
    m.def("decomposed_power_trace", [](const Mat2& b, int k) { return symbolic_trace(power(decompose(b), k)); },
          py::arg("B"), py::arg("k"));

    m.def("simulate", [](const Mat2& a, const Mat2& b, const std::string& kind, long n, int trials, std::uint64_t seed,
                         bool singular_values) {
              ModelConfig cfg;
              cfg.N = n;
              cfg.trials = trials;
              cfg.seed = seed;
              if (singular_values) cfg.what = Observable::singular_values;
              EmpiricalSpectrum s;
              {
                  py::gil_scoped_release release;
                  s = empirical_brown(a, b, parse_kind(kind), cfg);
              }
              return Eigen::Map<const Eigen::VectorXcd>(s.samples.data(), static_cast<Eigen::Index>(s.samples.size()))
                  .eval();
          },
          py::arg("A"), py::arg("B"), py::arg("kind") = "product", py::arg("N") = 256, py::arg("trials") = 1,
          py::arg("seed") = 42, py::arg("singular_values") = false,
          "Pooled matrix-model eigenvalues (or singular values)");

    m.def("verify", [](int id, bool monte_carlo, std::uint64_t seed) {
              VerifyOptions o;
              o.monte_carlo = monte_carlo;
              o.seed = seed;
              CriterionResult r;
              {
                  py::gil_scoped_release release;
                  r = verify_criterion(id, o);
              }
              py::dict d;
              d["id"] = r.id;
              d["name"] = r.name;
              d["pass"] = r.pass();
              d["line"] = format_line(r);
              return d;
          },
          py::arg("criterion"), py::arg("monte_carlo") = false, py::arg("seed") = 7);
}
