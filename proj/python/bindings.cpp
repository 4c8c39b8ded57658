#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "charclass/classes.hpp"
#include "charclass/problem.hpp"

namespace py = pybind11;
using namespace charclass;

namespace {

py::int_ to_py(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return py::int_(static_cast<long long>(v));
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

std::vector<BigInt> from_py(const py::iterable& values) {
  std::vector<BigInt> out;
  for (const auto& v : values) {
    if (!py::isinstance<py::int_>(v)) throw py::type_error("expected a sequence of integers");
    out.emplace_back(py::str(v).cast<std::string>());
  }
  return out;
}

ChowClass chow_from_py(const py::iterable& values) {
  std::vector<BigInt> c = from_py(values);
  if (c.empty()) throw py::value_error("a class needs at least one coefficient");
  const std::size_t n = c.size() - 1;
  return ChowClass(n, std::move(c));
}

ClassOptions class_options(unsigned verify) {
  ClassOptions opts;
  opts.degrees.verify = verify;
  return opts;
}

IdealSpec ideal_from_strings(const std::vector<std::string>& variables, const std::vector<std::string>& generators,
                             std::uint32_t characteristic) {
  ProblemFile problem;
  problem.characteristic = characteristic;
  problem.variables = variables;
  for (std::size_t k = 0; k < generators.size(); ++k) problem.generators.push_back({generators[k], k + 1, 1});
  return build_ideal(problem);
}

}  // namespace

PYBIND11_MODULE(_charclass, m) {
  m.doc() = "Segre and Chern-Schwartz-MacPherson classes of projective schemes";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<GenericityError>(m, "GenericityError", error);
  py::register_exception<DimensionError>(m, "DimensionError", error);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", error);
  py::register_exception<IoError>(m, "IoError", error);
  py::register_exception<InternalError>(m, "InternalError", error);

  m.attr("DEFAULT_PRIME") = kDefaultPrime;

  py::class_<IdealSpec>(m, "Ideal")
      .def(py::init(&ideal_from_strings), py::arg("variables"), py::arg("generators"),
           py::arg("characteristic") = kDefaultPrime)
      .def_static(
          "load",
          [](const std::string& path, std::optional<std::uint32_t> characteristic) {
            return load_ideal(path, characteristic);
          },
          py::arg("path"), py::arg("characteristic") = py::none())
      .def_property_readonly("n", [](const IdealSpec& I) { return I.n; })
      .def_property_readonly("characteristic",
                             [](const IdealSpec& I) { return I.ring()->field().characteristic(); })
      .def_property_readonly("generators",
                             [](const IdealSpec& I) {
                               std::vector<std::string> out;
                               for (const auto& g : I.generators) out.push_back(g.to_string());
                               return out;
                             })
      .def("__repr__", [](const IdealSpec& I) {
        return "<Ideal in P^" + std::to_string(I.n) + " with " + std::to_string(I.generators.size()) +
               " generators>";
      });

  m.def(
      "projective_degrees",
      [](const IdealSpec& I, std::uint64_t seed, unsigned verify) {
        DegreeOptions opts;
        opts.verify = verify;
        std::vector<BigInt> g;
        {
          py::gil_scoped_release release;
          g = projective_degrees(I, RandomScalarSource(seed, 0), opts).g;
        }
        return to_py(g);
      },
      py::arg("ideal"), py::arg("seed") = 1, py::arg("verify") = 0,
      "(g_0, ..., g_n) of the rational map given by the generators.");

  m.def(
      "segre_class",
      [](const IdealSpec& I, std::uint64_t seed, unsigned verify) {
        ChowClass s(I.n);
        {
          py::gil_scoped_release release;
          s = segre_class(I, RandomScalarSource(seed, 0), class_options(verify));
        }
        return to_py(s.coeffs());
      },
      py::arg("ideal"), py::arg("seed") = 1, py::arg("verify") = 1,
      "Coefficients of s(V, P^n), constant term first.");

  m.def(
      "csm_class",
      [](const IdealSpec& I, std::uint64_t seed, unsigned verify) {
        ChowClass c(I.n);
        {
          py::gil_scoped_release release;
          c = csm_class(I, RandomScalarSource(seed, 0), class_options(verify));
        }
        return to_py(c.coeffs());
      },
      py::arg("ideal"), py::arg("seed") = 1, py::arg("verify") = 1,
      "Coefficients of c_SM(V), constant term first.");

  m.def(
      "euler_characteristic",
      [](const IdealSpec& I, std::uint64_t seed, unsigned verify) {
        BigInt chi;
        {
          py::gil_scoped_release release;
          chi = euler_characteristic(I, RandomScalarSource(seed, 0), class_options(verify));
        }
        return to_py(chi);
      },
      py::arg("ideal"), py::arg("seed") = 1, py::arg("verify") = 1);

  m.def(
      "euler_sections",
      [](const IdealSpec& I, std::uint64_t seed, unsigned verify) {
        std::vector<BigInt> out;
        {
          py::gil_scoped_release release;
          out = euler_sections(I, RandomScalarSource(seed, 0), class_options(verify));
        }
        return to_py(out);
      },
      py::arg("ideal"), py::arg("seed") = 1, py::arg("verify") = 1,
      "(chi(V), chi(V cap L_1), ...) for general linear subspaces L_k of codimension k.");

  m.def(
      "segre_from_degrees",
      [](const py::iterable& g, unsigned d) { return to_py(segre_from_degrees(ProjectiveDegrees(from_py(g)), d).coeffs()); },
      py::arg("g"), py::arg("d"));
  m.def(
      "g_from_segre",
      [](const py::iterable& s, unsigned d, std::size_t codim) {
        return to_py(g_from_segre(chow_from_py(s), d, codim).g);
      },
      py::arg("segre"), py::arg("d"), py::arg("codim"));
  m.def(
      "csm_from_polar_degrees", [](const py::iterable& g) {
        return to_py(csm_from_polar_degrees(ProjectiveDegrees(from_py(g))).coeffs());
      },
      py::arg("g"));
  m.def(
      "suwa_ci_csm", [](const std::vector<unsigned>& degrees, std::size_t n) {
        return to_py(suwa_ci_csm(degrees, n).coeffs());
      },
      py::arg("degrees"), py::arg("n"), "c_SM of a smooth complete intersection of the given degrees in P^n.");
  m.def(
      "involution_polynomial", [](const py::iterable& p) { return to_py(involution_polynomial(from_py(p))); },
      py::arg("p"), "p(t) -> (t p(-t-1) + p(0)) / (t+1) on coefficient lists.");
  m.def(
      "aluffi_involution", [](const py::iterable& csm) { return to_py(aluffi_involution(chow_from_py(csm))); },
      py::arg("csm"), "Euler characteristics of general linear sections from c_SM coefficients.");
}
