#include "fuzzyspec/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fuzzyspec/errors.hpp"
#include "fuzzyspec/io.hpp"
#include "fuzzyspec/periodize.hpp"
#include "fuzzyspec/reconstruct.hpp"
#include "fuzzyspec/spectrum.hpp"
#include "fuzzyspec/toeplitz.hpp"

namespace fuzzyspec::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kPlotGrid = 1024;

struct Options {
  std::string input;
  std::string coeffs;
  std::string arcs;
  std::string output;
  std::string format;
  std::string plot_dir;
  int max_k = -1;
  int order = 0;
  int terms = kDefaultTerms;
  int grid = 1024;
  std::optional<double> lambda;
  std::optional<double> tol;
  double zero_tol = kDefaultZeroTolerance;
  std::optional<double> sigma;
  double amplitude = 1.0;
};

std::optional<double> env_tolerance() {
  const char* raw = std::getenv(kToleranceEnv);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (*end != '\0' || !(v > 0.0)) throw ValidationError(std::string(kToleranceEnv) + " must be a positive number");
  return v;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + o.output + "'");
  f << text;
}

bool structured(const Options& o, bool by_default) {
  if (o.format.empty()) return by_default;
  return o.format == "structured";
}

MembershipFunction load_membership(const Options& o) {
  if (o.input.empty()) throw ValidationError("--input is required");
  return io::membership_from_json(io::read_file(o.input));
}

SchwartzFunction load_schwartz(const Options& o) {
  if (o.sigma) return SchwartzFunction::gaussian(o.amplitude, *o.sigma);
  if (o.input.empty()) throw ValidationError("give --input (Schwartz spec) or --sigma");
  return io::schwartz_from_json(io::read_file(o.input));
}

QuadratureConfig quadrature(const Options& o) {
  QuadratureConfig q;
  if (o.tol) q.tolerance = *o.tol;
  return q;
}

void write_table(const fs::path& path, const std::string& header, const std::vector<std::pair<double, double>>& rows) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path.string() + "'");
  f << header << '\n';
  for (const auto& [a, b] : rows) f << io::format_number(a) << ',' << io::format_number(b) << '\n';
}

void emit_plot_data(const Options& o, const MembershipFunction& f, const ReconstructionResult& r) {
  const fs::path dir(o.plot_dir);
  fs::create_directories(dir);
  std::vector<std::pair<double, double>> mem, chi, res;
  for (int j = 0; j < kPlotGrid; ++j) {
    const double t = kTwoPi * j / kPlotGrid;
    mem.emplace_back(t, f(t));
    double c = r.kind == CrispKind::full ? 1.0 : 0.0;
    if (r.kind == CrispKind::arcs) c = r.arcs.contains(t) ? 1.0 : 0.0;
    chi.emplace_back(t, c);
  }
  for (std::size_t k = 0; k < r.residuals.size(); ++k) res.emplace_back(static_cast<double>(k), r.residuals[k]);
  write_table(dir / "membership.csv", "t,f", mem);
  write_table(dir / ("crisp_n" + std::to_string(r.match_window) + ".csv"), "t,chi", chi);
  write_table(dir / "residuals.csv", "k,residual", res);
}

std::string arcs_table(const ReconstructionResult& r) {
  std::ostringstream os;
  os << "# n: " << r.match_window << "\n# lambda: " << io::format_number(r.lambda) << "\n# max_residual: "
     << io::format_number(r.max_residual()) << "\nxi,eta\n";
  for (const Arc& a : r.arcs.arcs()) os << io::format_number(a.xi) << ',' << io::format_number(a.eta) << '\n';
  return os.str();
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const MembershipFunction f = load_membership(o);
  const HermitianSpectrum c = fourier_coefficients(f, o.max_k < 0 ? 8 : o.max_k, quadrature(o));
  if (structured(o, false)) {
    std::ostringstream os;
    os << "{\"convention\": \"" << io::kSpectrumConvention << "\", \"coeffs\": [";
    for (int k = 0; k <= c.max_k(); ++k)
      os << (k ? ", " : "") << '[' << k << ", " << io::format_number(c.coeffs[k].real()) << ", "
         << io::format_number(c.coeffs[k].imag()) << ']';
    os << "]}\n";
    emit(o, out, os.str());
  } else {
    std::ostringstream os;
    io::write_spectrum(os, c);
    emit(o, out, os.str());
  }
  return kExitOk;
}

HermitianSpectrum coefficients_from_options(const Options& o) {
  if (!o.coeffs.empty()) {
    std::istringstream is(io::read_file(o.coeffs));
    return io::read_spectrum(is);
  }
  return fourier_coefficients(load_membership(o), o.max_k < 0 ? 16 : o.max_k, quadrature(o));
}

int cmd_nonlinear(const Options& o, std::ostream& out) {
  const HermitianSpectrum c = coefficients_from_options(o);
  const int k = o.max_k < 0 ? c.max_k() : o.max_k;
  std::ostringstream os;
  io::write_nonlinear(os, c_to_s(c, k));
  emit(o, out, os.str());
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  NonlinearSpectrum ns;
  if (!o.coeffs.empty()) {
    const std::string text = io::read_file(o.coeffs);
    std::istringstream is(text);
    if (io::is_nonlinear_file(text)) {
      ns = io::read_nonlinear(is);
    } else {
      const HermitianSpectrum c = io::read_spectrum(is);
      ns = c_to_s(c, c.max_k());
    }
  } else {
    const HermitianSpectrum c = coefficients_from_options(o);
    ns = c_to_s(c, c.max_k());
  }
  const int window = o.max_k < 0 ? ns.max_k() : o.max_k;
  const ToeplitzAnalysis ta = determinant_sequence(ns, window);
  const OrderVerdict v = classify_order(ta, o.zero_tol);
  std::optional<UnitRootDecomposition> roots;
  if (v.finite && v.order >= 1 && v.order <= ns.max_k()) roots = unit_root_decompose(ns, v.order, o.zero_tol);
  if (structured(o, false)) {
    emit(o, out, io::analysis_to_json(ta, v, roots ? &*roots : nullptr) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << v.describe() << '\n';
  os << "k,D,relative,abs_F,arg_F\n";
  for (int k = 0; k <= ta.window; ++k) {
    os << k << ',' << io::format_number(ta.d[k]) << ',' << io::format_number(ta.relative(k)) << ',';
    if (k == 0)
      os << ",\n";
    else
      os << io::format_number(std::abs(ta.f[k])) << ',' << io::format_number(std::arg(ta.f[k])) << '\n';
  }
  if (roots) {
    os << "angle,mu\n";
    for (std::size_t r = 0; r < roots->alpha.size(); ++r)
      os << io::format_number(wrap_angle(std::arg(roots->alpha[r]))) << ',' << io::format_number(roots->mu[r]) << '\n';
  }
  emit(o, out, os.str());
  return kExitOk;
}

DefuzzConfig defuzz_config(const Options& o) {
  DefuzzConfig cfg;
  if (o.tol) cfg.match_tolerance = *o.tol;
  return cfg;
}

int cmd_defuzz(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.order < 1) throw ValidationError("--order must be at least 1");
  const DefuzzConfig cfg = defuzz_config(o);
  ReconstructionResult r;
  std::optional<MembershipFunction> f;
  if (o.sigma) {
    const SchwartzFunction g = load_schwartz(o);
    r = defuzz_on_line(g, o.order, o.lambda, cfg, o.terms);
    f = periodize(g, o.terms).membership();
  } else {
    f = load_membership(o);
    r = defuzz(*f, o.order, o.lambda, cfg);
  }
  for (const std::string& w : r.warnings) err << "warning: " << w << '\n';
  if (!o.plot_dir.empty()) emit_plot_data(o, *f, r);
  emit(o, out, structured(o, true) ? io::result_to_json(r) + "\n" : arcs_table(r));
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.order < 1) throw ValidationError("--order (n_max) must be at least 1");
  const MembershipFunction f = load_membership(o);
  const std::vector<SweepEntry> sweep = approximation_sequence(f, o.order, defuzz_config(o));
  bool all_ok = true;
  for (const SweepEntry& e : sweep) all_ok = all_ok && e.result.has_value();
  if (structured(o, true)) {
    emit(o, out, io::sweep_to_json(sweep) + "\n");
  } else {
    std::ostringstream os;
    os << "n,status,max_residual,lambda\n";
    for (const SweepEntry& e : sweep) {
      if (e.result)
        os << e.n << ",ok," << io::format_number(e.result->max_residual()) << ','
           << io::format_number(e.result->lambda) << '\n';
      else
        os << e.n << ",failed,,\n";
    }
    emit(o, out, os.str());
  }
  if (!o.plot_dir.empty() && !sweep.empty() && sweep.back().result) emit_plot_data(o, f, *sweep.back().result);
  return all_ok ? kExitOk : kExitNumeric;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.arcs.empty()) throw ValidationError("--arcs is required");
  const MembershipFunction f = load_membership(o);
  const io::LoadedArcs loaded = io::arcs_from_json(io::read_file(o.arcs));
  if (loaded.rotation != 0.0) err << "note: arcs rotated by " << io::format_number(loaded.rotation) << " to canonical form\n";
  const int n = o.order >= 1 ? o.order : std::max(loaded.arcs.size(), 1);
  const MatchReport m = verify_match(f, loaded.arcs, n, quadrature(o));
  const double tol = o.tol.value_or(kQuadratureMatchTolerance);
  const bool pass = m.max_residual < tol;
  std::ostringstream os;
  if (structured(o, false)) {
    os << "{\"n\": " << n << ", \"rotation\": " << io::format_number(loaded.rotation) << ", \"residuals\": [";
    for (std::size_t k = 0; k < m.residuals.size(); ++k) os << (k ? ", " : "") << io::format_number(m.residuals[k]);
    os << "], \"max_residual\": " << io::format_number(m.max_residual) << ", \"tolerance\": " << io::format_number(tol)
       << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
  } else {
    os << "# " << (pass ? "pass" : "fail") << ": max residual " << io::format_number(m.max_residual) << " vs tolerance "
       << io::format_number(tol) << "\nk,residual\n";
    for (std::size_t k = 0; k < m.residuals.size(); ++k) os << k << ',' << io::format_number(m.residuals[k]) << '\n';
  }
  emit(o, out, os.str());
  return kExitOk;
}

int cmd_periodize(const Options& o, std::ostream& out, std::ostream& err) {
  const Periodization p = periodize(load_schwartz(o), o.terms, o.grid);
  for (const std::string& w : p.warnings) err << "warning: " << w << '\n';
  err << "terms: " << p.terms << ", truncation bound: " << io::format_number(p.truncation_bound) << '\n';
  // Fails with a domain error when the periodization is not a fuzzy set.
  const MembershipFunction sampled = p.sampled();
  if (structured(o, true)) {
    emit(o, out, io::samples_to_json(sampled.sample_values()) + "\n");
  } else {
    std::ostringstream os;
    os << "t,value\n";
    for (int j = 0; j < o.grid; ++j)
      os << io::format_number(kTwoPi * j / o.grid) << ',' << io::format_number(sampled.sample_values()[j]) << '\n';
    emit(o, out, os.str());
  }
  return kExitOk;
}

int cmd_poisson(const Options& o, std::ostream& out) {
  const PoissonReport r = poisson_check(load_schwartz(o), o.max_k < 0 ? 16 : o.max_k, o.terms, quadrature(o));
  std::ostringstream os;
  if (structured(o, false)) {
    os << "{\"max_residual\": " << io::format_number(r.max_residual) << ", \"residuals\": [";
    for (std::size_t k = 0; k < r.residuals.size(); ++k) os << (k ? ", " : "") << io::format_number(r.residuals[k]);
    os << "]}\n";
  } else {
    os << "# max_residual: " << io::format_number(r.max_residual) << "\nk,quadrature_re,quadrature_im,closed_re,residual\n";
    for (std::size_t k = 0; k < r.residuals.size(); ++k)
      os << k << ',' << io::format_number(r.quadrature[k].real()) << ',' << io::format_number(r.quadrature[k].imag())
         << ',' << io::format_number(r.closed_form[k].real()) << ',' << io::format_number(r.residuals[k]) << '\n';
  }
  emit(o, out, os.str());
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier and nonlinear Fourier spectra of fuzzy subsets of the circle"};
  app.require_subcommand(1, 1);
  Options o;

  auto positive = CLI::PositiveNumber;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "Write results to this file instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tabular", "structured"}));
    sub->add_option("--tol", o.tol, "Tolerance (quadrature or match, per command)")->check(positive);
  };

  auto* spectrum = app.add_subcommand("spectrum", "Fourier coefficients c_0..c_K of a membership function");
  spectrum->add_option("--input", o.input, "Membership spec (JSON)")->required();
  spectrum->add_option("--max-k", o.max_k, "Highest coefficient index")->check(CLI::NonNegativeNumber);
  add_common(spectrum);

  auto* nonlinear = app.add_subcommand("nonlinear", "Nonlinear coefficients s_0..s_K");
  auto* nl_in = nonlinear->add_option("--input", o.input, "Membership spec (JSON)");
  nonlinear->add_option("--coeffs", o.coeffs, "Spectrum file (CSV)")->excludes(nl_in);
  nonlinear->add_option("--max-k", o.max_k, "Highest coefficient index")->check(CLI::NonNegativeNumber);
  add_common(nonlinear);

  auto* classify = app.add_subcommand("classify", "Toeplitz determinants and order of the nonlinear spectrum");
  auto* cl_in = classify->add_option("--input", o.input, "Membership spec (JSON)");
  classify->add_option("--coeffs", o.coeffs, "Spectrum or nonlinear spectrum file (CSV)")->excludes(cl_in);
  classify->add_option("--max-k", o.max_k, "Determinant window K")->check(CLI::NonNegativeNumber);
  classify->add_option("--zero-tol", o.zero_tol, "Relative zero threshold for D_k")->check(positive);
  add_common(classify);

  auto* defuzz_cmd = app.add_subcommand("defuzz", "Crisp set of order n matching c_0..c_{n-1}");
  auto* df_in = defuzz_cmd->add_option("--input", o.input, "Membership spec (JSON)");
  defuzz_cmd->add_option("--sigma", o.sigma, "Defuzzify the periodized gaussian of this width")->excludes(df_in)->check(positive);
  defuzz_cmd->add_option("--amplitude", o.amplitude, "Gaussian amplitude (with --sigma)");
  defuzz_cmd->add_option("--terms", o.terms, "Translates per side for --sigma")->check(positive);
  defuzz_cmd->add_option("--order", o.order, "Order n")->required()->check(positive);
  defuzz_cmd->add_option("--lambda", o.lambda, "Phase of the extension; omit for the anchored (canonical) solution");
  defuzz_cmd->add_option("--emit-plot-data", o.plot_dir, "Directory for plot tables");
  add_common(defuzz_cmd);

  auto* sweep = app.add_subcommand("sweep", "defuzz for n = 1..order");
  sweep->add_option("--input", o.input, "Membership spec (JSON)")->required();
  sweep->add_option("--order", o.order, "Largest order")->required()->check(positive);
  sweep->add_option("--emit-plot-data", o.plot_dir, "Directory for plot tables of the last order");
  add_common(sweep);

  auto* verify = app.add_subcommand("verify", "Coefficient residuals between a membership function and arcs");
  verify->add_option("--input", o.input, "Membership spec (JSON)")->required();
  verify->add_option("--arcs", o.arcs, "Arc system (JSON)")->required();
  verify->add_option("--order", o.order, "Window n (defaults to the number of arcs)")->check(positive);
  add_common(verify);

  auto* per = app.add_subcommand("periodize", "Sample the periodization of a Schwartz function");
  auto* pe_in = per->add_option("--input", o.input, "Schwartz spec (JSON)");
  per->add_option("--sigma", o.sigma, "Gaussian width")->excludes(pe_in)->check(positive);
  per->add_option("--amplitude", o.amplitude, "Gaussian amplitude (with --sigma)");
  per->add_option("--terms", o.terms, "Translates per side")->check(positive);
  per->add_option("--grid", o.grid, "Number of samples")->check(positive);
  add_common(per);

  auto* poisson = app.add_subcommand("poisson-check", "Compare periodization coefficients with the line transform");
  auto* po_in = poisson->add_option("--input", o.input, "Schwartz spec (JSON)");
  poisson->add_option("--sigma", o.sigma, "Gaussian width")->excludes(po_in)->check(positive);
  poisson->add_option("--amplitude", o.amplitude, "Gaussian amplitude (with --sigma)");
  poisson->add_option("--terms", o.terms, "Translates per side")->check(positive);
  poisson->add_option("--max-k", o.max_k, "Highest coefficient index")->check(CLI::NonNegativeNumber);
  add_common(poisson);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!o.tol) o.tol = env_tolerance();
    if (*spectrum) return cmd_spectrum(o, out);
    if (*nonlinear) return cmd_nonlinear(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*defuzz_cmd) return cmd_defuzz(o, out, err);
    if (*sweep) return cmd_sweep(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*per) return cmd_periodize(o, out, err);
    if (*poisson) return cmd_poisson(o, out);
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << " (residual " << io::format_number(e.residual()) << ")\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace fuzzyspec::cli
