#include "fuzzyspec/io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fuzzyspec/errors.hpp"

namespace fuzzyspec::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
  throw ValidationError(field + ": " + msg);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number");
  return j.get<double>();
}

const json& member(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(key, "missing field");
  return *it;
}

double number_or(const json& obj, const std::string& key, double fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : number(*it, key);
}

std::vector<Arc> arc_list(const json& arr, const std::string& field) {
  if (!arr.is_array()) field_error(field, "expected an array of [xi, eta] pairs");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) field_error(where, "expected [xi, eta]");
    arcs.push_back({number(arr[i][0], where + "[0]"), number(arr[i][1], where + "[1]")});
  }
  return arcs;
}

json arcs_json(const ArcSystem& arcs) {
  json arr = json::array();
  for (const Arc& a : arcs.arcs()) arr.push_back({a.xi, a.eta});
  return arr;
}

json result_json(const ReconstructionResult& r) {
  json j;
  j["n"] = r.match_window;
  j["lambda"] = r.lambda;
  j["kind"] = r.kind == CrispKind::arcs ? "arcs" : (r.kind == CrispKind::empty ? "empty" : "full");
  j["anchored"] = r.anchored;
  j["arcs"] = arcs_json(r.arcs);
  j["residuals"] = r.residuals;
  j["max_residual"] = r.max_residual();
  j["tolerance"] = r.tolerance;
  j["warnings"] = r.warnings;
  json d;
  d["d_relative"] = r.diagnostics.d_relative;
  d["mu"] = r.diagnostics.mu;
  d["node_radius_error"] = r.diagnostics.node_radius_error;
  d["end_radius_error"] = r.diagnostics.end_radius_error;
  d["canonical_rotation"] = r.diagnostics.canonical_rotation;
  d["saturated"] = r.diagnostics.saturated;
  j["diagnostics"] = d;
  return j;
}

struct Row {
  int k;
  cplx value;
};

// Parses "k,re,im" rows; comment lines start with '#'.
std::vector<Row> read_rows(std::istream& is, std::vector<std::string>* comments) {
  std::vector<Row> rows;
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (comments) comments->push_back(line);
      continue;
    }
    if (!header && line.rfind("k,", 0) == 0) {
      header = true;
      continue;
    }
    std::istringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c)) {
      throw ValidationError("line " + std::to_string(lineno) + ": expected k,re,im");
    }
    try {
      std::size_t used = 0;
      const int k = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      rows.push_back({k, {std::stod(b), std::stod(c)}});
    } catch (const std::exception&) {
      throw ValidationError("line " + std::to_string(lineno) + ": malformed number");
    }
    if (rows.back().k != static_cast<int>(rows.size()) - 1)
      throw ValidationError("line " + std::to_string(lineno) + ": rows must list k = 0, 1, 2, ... in order");
  }
  if (rows.empty()) throw ValidationError("coefficient file has no rows");
  return rows;
}

void write_rows(std::ostream& os, const std::vector<cplx>& values) {
  os << "k,re,im\n";
  for (std::size_t k = 0; k < values.size(); ++k)
    os << k << ',' << format_number(values[k].real()) << ',' << format_number(values[k].imag()) << '\n';
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MembershipFunction membership_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) field_error("(root)", "expected an object");
  const json& kind_field = member(j, "kind");
  if (!kind_field.is_string()) field_error("kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();
  if (kind == "piecewise_linear") {
    const json& arr = member(j, "nodes");
    if (!arr.is_array()) field_error("nodes", "expected an array of [t, v] pairs");
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "nodes[" + std::to_string(i) + "]";
      if (!arr[i].is_array() || arr[i].size() != 2) field_error(where, "expected [t, v]");
      nodes.push_back({number(arr[i][0], where + "[0]"), number(arr[i][1], where + "[1]")});
    }
    return MembershipFunction::piecewise_linear(std::move(nodes));
  }
  if (kind == "samples") {
    const json& arr = member(j, "values");
    if (!arr.is_array()) field_error("values", "expected an array of numbers");
    std::vector<double> values;
    for (std::size_t i = 0; i < arr.size(); ++i) values.push_back(number(arr[i], "values[" + std::to_string(i) + "]"));
    Interpolation interp = Interpolation::linear;
    if (auto it = j.find("interpolation"); it != j.end()) {
      if (*it == "nearest")
        interp = Interpolation::nearest;
      else if (*it != "linear")
        field_error("interpolation", "expected \"linear\" or \"nearest\"");
    }
    return MembershipFunction::samples(std::move(values), interp);
  }
  if (kind == "arcs") return MembershipFunction::arcs(ArcSystem(arc_list(member(j, "arcs"), "arcs")));
  if (kind == "preset") {
    const json& name = member(j, "name");
    if (!name.is_string()) field_error("name", "expected a string");
    PresetParams params;
    if (auto it = j.find("params"); it != j.end()) {
      if (!it->is_object()) field_error("params", "expected an object");
      for (auto p = it->begin(); p != it->end(); ++p) params[p.key()] = number(p.value(), "params." + p.key());
    }
    return MembershipFunction::preset(name.get<std::string>(), params);
  }
  field_error("kind", "unknown membership kind '" + kind + "'");
}

std::string membership_to_json(const MembershipFunction& f) {
  json j;
  switch (f.kind()) {
    case MembershipFunction::Kind::piecewise_linear: {
      j["kind"] = "piecewise_linear";
      json nodes = json::array();
      for (const Node& n : f.nodes()) nodes.push_back({n.t, n.v});
      j["nodes"] = nodes;
      break;
    }
    case MembershipFunction::Kind::samples:
      j["kind"] = "samples";
      j["values"] = f.sample_values();
      if (f.interpolation() == Interpolation::nearest) j["interpolation"] = "nearest";
      break;
    case MembershipFunction::Kind::arcs:
      j["kind"] = "arcs";
      j["arcs"] = arcs_json(*f.arc_system());
      break;
    case MembershipFunction::Kind::preset:
      j["kind"] = "preset";
      j["name"] = f.label();
      j["params"] = json::object();
      for (const auto& [k, v] : f.preset_params()) j["params"][k] = v;
      break;
    case MembershipFunction::Kind::analytic:
      throw ValidationError("analytic membership functions cannot be serialized");
  }
  return j.dump(2);
}

LoadedArcs arcs_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) field_error("(root)", "expected an object");
  const ArcSystem raw(arc_list(member(j, "arcs"), "arcs"));
  LoadedArcs out;
  out.arcs = raw.canonical();
  out.rotation = raw.empty() ? 0.0 : -raw[0].xi;
  return out;
}

SchwartzFunction schwartz_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) field_error("(root)", "expected an object");
  const json& kind_field = member(j, "kind");
  if (!kind_field.is_string()) field_error("kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();
  if (kind == "gaussian") return SchwartzFunction::gaussian(number_or(j, "amplitude", 1.0), number(member(j, "sigma"), "sigma"));
  if (kind == "bump")
    return SchwartzFunction::bump(number_or(j, "center", 0.0), number(member(j, "width"), "width"),
                                  number_or(j, "height", 1.0));
  field_error("kind", "unknown Schwartz family '" + kind + "'");
}

void write_spectrum(std::ostream& os, const HermitianSpectrum& s) {
  os << "# convention: " << kSpectrumConvention << '\n';
  write_rows(os, s.coeffs);
}

HermitianSpectrum read_spectrum(std::istream& is) {
  HermitianSpectrum s;
  for (const Row& r : read_rows(is, nullptr)) s.coeffs.push_back(r.value);
  return s;
}

void write_nonlinear(std::ostream& os, const NonlinearSpectrum& ns) {
  os << "# convention: " << kSpectrumConvention << '\n';
  os << "# nonlinear: " << kNonlinearConvention << '\n';
  os << "# c0: " << format_number(ns.c0) << '\n';
  write_rows(os, ns.s);
}

NonlinearSpectrum read_nonlinear(std::istream& is) {
  std::vector<std::string> comments;
  const std::vector<Row> rows = read_rows(is, &comments);
  NonlinearSpectrum ns;
  bool have_c0 = false;
  for (const std::string& c : comments) {
    if (c.rfind("# c0:", 0) == 0) {
      try {
        ns.c0 = std::stod(c.substr(5));
      } catch (const std::exception&) {
        throw ValidationError("malformed '# c0:' header");
      }
      have_c0 = true;
    }
  }
  if (!have_c0) throw ValidationError("nonlinear spectrum file lacks the '# c0:' header");
  for (const Row& r : rows) ns.s.push_back(r.value);
  return ns;
}

bool is_nonlinear_file(const std::string& text) {
  return text.find("\n# c0:") != std::string::npos || text.rfind("# c0:", 0) == 0;
}

std::string result_to_json(const ReconstructionResult& r, int indent) { return result_json(r).dump(indent); }

std::string sweep_to_json(const std::vector<SweepEntry>& sweep, int indent) {
  json arr = json::array();
  for (const SweepEntry& e : sweep) {
    if (e.result) {
      arr.push_back(result_json(*e.result));
    } else {
      arr.push_back({{"n", e.n}, {"error", e.error}});
    }
  }
  return arr.dump(indent);
}

std::string analysis_to_json(const ToeplitzAnalysis& ta, const OrderVerdict& v, const UnitRootDecomposition* roots,
                             int indent) {
  json j;
  j["window"] = ta.window;
  j["D"] = ta.d;
  std::vector<double> abs_f, arg_f, rel;
  for (int k = 1; k <= ta.window; ++k) {
    abs_f.push_back(std::abs(ta.f[k]));
    arg_f.push_back(std::arg(ta.f[k]));
  }
  for (int k = 0; k <= ta.window; ++k) rel.push_back(ta.relative(k));
  j["abs_F"] = abs_f;
  j["arg_F"] = arg_f;
  j["relative"] = rel;
  j["tol_scale"] = ta.tol_scale;
  j["verdict"] = v.describe();
  j["finite"] = v.finite;
  j["order"] = v.order;
  j["tail_violations"] = v.tail_violations;
  if (roots) {
    json table = json::array();
    for (std::size_t r = 0; r < roots->alpha.size(); ++r)
      table.push_back({{"angle", wrap_angle(std::arg(roots->alpha[r]))}, {"mu", roots->mu[r]}});
    j["nodes"] = table;
    j["decomposition_residual"] = roots->residual;
  }
  return j.dump(indent);
}

std::string samples_to_json(const std::vector<double>& values, int indent) {
  json j;
  j["kind"] = "samples";
  j["values"] = values;
  return j.dump(indent);
}

}  // namespace fuzzyspec::io
