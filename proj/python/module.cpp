#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fuzzyspec/arcs.hpp"
#include "fuzzyspec/errors.hpp"
#include "fuzzyspec/io.hpp"
#include "fuzzyspec/membership.hpp"
#include "fuzzyspec/nonlinear.hpp"
#include "fuzzyspec/periodize.hpp"
#include "fuzzyspec/reconstruct.hpp"
#include "fuzzyspec/spectrum.hpp"
#include "fuzzyspec/toeplitz.hpp"

namespace py = pybind11;
using namespace fuzzyspec;

namespace {

ArcSystem to_arcs(const std::vector<std::pair<double, double>>& pairs) {
  std::vector<Arc> arcs;
  for (const auto& [xi, eta] : pairs) arcs.push_back({xi, eta});
  return ArcSystem(std::move(arcs));
}

std::vector<std::pair<double, double>> from_arcs(const ArcSystem& a) {
  std::vector<std::pair<double, double>> out;
  for (const Arc& arc : a.arcs()) out.emplace_back(arc.xi, arc.eta);
  return out;
}

QuadratureConfig quad(const std::string& rule, int panels, double tolerance) {
  QuadratureConfig q;
  if (rule == "simpson")
    q.rule = QuadratureRule::composite_simpson;
  else if (rule != "exact")
    throw ValidationError("rule must be 'exact' or 'simpson'");
  q.panels = panels;
  q.tolerance = tolerance;
  return q;
}

py::dict result_dict(const ReconstructionResult& r) {
  py::dict d;
  d["n"] = r.match_window;
  d["lambda"] = r.lambda;
  d["kind"] = r.kind == CrispKind::arcs ? "arcs" : (r.kind == CrispKind::empty ? "empty" : "full");
  d["arcs"] = from_arcs(r.arcs);
  d["residuals"] = r.residuals;
  d["max_residual"] = r.max_residual();
  d["warnings"] = r.warnings;
  d["mu"] = r.diagnostics.mu;
  return d;
}

}  // namespace

PYBIND11_MODULE(_fuzzyspec, m) {
  m.doc() = "Fourier and nonlinear Fourier spectra of fuzzy subsets of the circle";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvalidSequenceError>(m, "InvalidSequenceError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());

  py::class_<MembershipFunction>(m, "Membership")
      .def_static("piecewise_linear", [](const std::vector<std::pair<double, double>>& nodes) {
        std::vector<Node> out;
        for (const auto& [t, v] : nodes) out.push_back({t, v});
        return MembershipFunction::piecewise_linear(std::move(out));
      }, py::arg("nodes"))
      .def_static("samples", [](std::vector<double> values, const std::string& interpolation) {
        if (interpolation != "linear" && interpolation != "nearest")
          throw ValidationError("interpolation must be 'linear' or 'nearest'");
        return MembershipFunction::samples(std::move(values),
                                           interpolation == "linear" ? Interpolation::linear : Interpolation::nearest);
      }, py::arg("values"), py::arg("interpolation") = "linear")
      .def_static("arcs", [](const std::vector<std::pair<double, double>>& arcs) {
        return MembershipFunction::arcs(to_arcs(arcs));
      }, py::arg("arcs"))
      .def_static("preset", &MembershipFunction::preset, py::arg("name"), py::arg("params") = PresetParams{})
      .def_static("from_json", &io::membership_from_json, py::arg("text"))
      .def("to_json", &io::membership_to_json)
      .def("__call__", &MembershipFunction::operator(), py::arg("t"))
      .def_property_readonly("label", &MembershipFunction::label);

  m.def("fourier_coefficients", [](const MembershipFunction& f, int max_k, const std::string& rule, int panels,
                                   double tolerance) { return fourier_coefficients(f, max_k, quad(rule, panels, tolerance)).coeffs; },
        py::arg("f"), py::arg("max_k"), py::arg("rule") = "exact", py::arg("panels") = 64,
        py::arg("tolerance") = kQuadratureTolerance);
  m.def("parseval_residual", [](const MembershipFunction& f, int max_k) { return parseval_residual(f, max_k); },
        py::arg("f"), py::arg("max_k"));
  m.def("validate_fuzzy_spectrum", [](const std::vector<cplx>& c, double tol) {
    const ValidationReport r = validate_fuzzy_spectrum(HermitianSpectrum{c}, tol);
    std::vector<double> margins;
    for (const BoundCheck& b : r.entries) margins.push_back(b.margin);
    return py::make_tuple(r.pass, margins);
  }, py::arg("coeffs"), py::arg("tol") = kExactTolerance);

  m.def("crisp_spectrum", [](const std::vector<std::pair<double, double>>& arcs, int max_k) {
    return crisp_spectrum(to_arcs(arcs), max_k).coeffs;
  }, py::arg("arcs"), py::arg("max_k"));
  m.def("rational_expansion", [](const std::vector<std::pair<double, double>>& arcs, int max_k) {
    return rational_expansion(to_arcs(arcs), max_k);
  }, py::arg("arcs"), py::arg("max_k"));
  m.def("sign_polynomial", [](const std::vector<std::pair<double, double>>& arcs) {
    return sign_polynomial(to_arcs(arcs)).coeffs;
  }, py::arg("arcs"));

  m.def("c_to_s", [](const std::vector<cplx>& c, int max_k) {
    const NonlinearSpectrum ns = c_to_s(HermitianSpectrum{c}, max_k < 0 ? static_cast<int>(c.size()) - 1 : max_k);
    return py::make_tuple(ns.c0, ns.s);
  }, py::arg("coeffs"), py::arg("max_k") = -1);
  m.def("s_to_c", [](double c0, const std::vector<cplx>& s) {
    return s_to_c(NonlinearSpectrum{c0, s}, static_cast<int>(s.size()) - 1).coeffs;
  }, py::arg("c0"), py::arg("s"));
  m.def("exp_series_oracle", [](const std::vector<cplx>& c, int max_k) {
    return exp_series_oracle(hardy_series(HermitianSpectrum{c}), max_k < 0 ? static_cast<int>(c.size()) - 1 : max_k);
  }, py::arg("coeffs"), py::arg("max_k") = -1);

  m.def("classify", [](double c0, const std::vector<cplx>& s, double zero_tol) {
    const NonlinearSpectrum ns{c0, s};
    const ToeplitzAnalysis ta = determinant_sequence(ns, ns.max_k());
    const OrderVerdict v = classify_order(ta, zero_tol);
    py::dict d;
    d["finite"] = v.finite;
    d["order"] = v.order;
    d["verdict"] = v.describe();
    d["D"] = ta.d;
    std::vector<double> rel;
    for (int k = 0; k <= ta.window; ++k) rel.push_back(ta.relative(k));
    d["relative"] = rel;
    return d;
  }, py::arg("c0"), py::arg("s"), py::arg("zero_tol") = kDefaultZeroTolerance);
  m.def("unit_root_decompose", [](double c0, const std::vector<cplx>& s, int n) {
    const UnitRootDecomposition u = unit_root_decompose(NonlinearSpectrum{c0, s}, n);
    return py::make_tuple(u.alpha, u.mu);
  }, py::arg("c0"), py::arg("s"), py::arg("n"));

  m.def("defuzz", [](const MembershipFunction& f, int n, std::optional<double> lambda) {
    return result_dict(defuzz(f, n, lambda));
  }, py::arg("f"), py::arg("n"), py::arg("lambda_") = py::none());
  m.def("approximation_sequence", [](const MembershipFunction& f, int n_max) {
    py::list out;
    for (const SweepEntry& e : approximation_sequence(f, n_max)) {
      if (e.result) {
        out.append(result_dict(*e.result));
      } else {
        py::dict d;
        d["n"] = e.n;
        d["error"] = e.error;
        out.append(d);
      }
    }
    return out;
  }, py::arg("f"), py::arg("n_max"));
  m.def("verify_match", [](const MembershipFunction& f, const std::vector<std::pair<double, double>>& arcs, int n) {
    return verify_match(f, to_arcs(arcs), n).residuals;
  }, py::arg("f"), py::arg("arcs"), py::arg("n"));

  m.def("periodize_gaussian", [](double amplitude, double sigma, int terms, int grid) {
    return periodize(SchwartzFunction::gaussian(amplitude, sigma), terms, grid).samples;
  }, py::arg("amplitude"), py::arg("sigma"), py::arg("terms") = kDefaultTerms, py::arg("grid") = 1024);
  m.def("poisson_check_gaussian", [](double amplitude, double sigma, int max_k, int terms) {
    return poisson_check(SchwartzFunction::gaussian(amplitude, sigma), max_k, terms).max_residual;
  }, py::arg("amplitude"), py::arg("sigma"), py::arg("max_k"), py::arg("terms") = kDefaultTerms);
  m.def("defuzz_gaussian", [](double amplitude, double sigma, int n) {
    return result_dict(defuzz_on_line(SchwartzFunction::gaussian(amplitude, sigma), n));
  }, py::arg("amplitude"), py::arg("sigma"), py::arg("n"));
}
