#include "fuzzyspec/membership.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyspec/errors.hpp"

namespace fuzzyspec {

namespace {

void check_value(double v, const std::string& where) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    std::ostringstream os;
    os << where << ": membership value " << v << " outside [0, 1]";
    throw ValidationError(os.str());
  }
}

double lerp(const Segment& s, double t) {
  if (s.t1 <= s.t0) return s.v0;
  const double w = (t - s.t0) / (s.t1 - s.t0);
  return s.v0 + w * (s.v1 - s.v0);
}

double segment_value(const std::vector<Segment>& segs, double t) {
  auto it = std::upper_bound(segs.begin(), segs.end(), t,
                             [](double x, const Segment& s) { return x < s.t0; });
  if (it != segs.begin()) --it;
  return lerp(*it, t);
}

// Indicator of a union of closed intervals inside [0, 2pi], with zero gaps.
std::vector<Segment> indicator_segments(std::vector<std::pair<double, double>> on) {
  std::sort(on.begin(), on.end());
  std::vector<Segment> segs;
  double cursor = 0.0;
  for (auto [a, b] : on) {
    if (a > cursor) segs.push_back({cursor, a, 0.0, 0.0});
    segs.push_back({a, b, 1.0, 1.0});
    cursor = b;
  }
  if (cursor < kTwoPi) segs.push_back({cursor, kTwoPi, 0.0, 0.0});
  return segs;
}

// Arc [a, b] with a in [0, 2pi) split at the wrap.
void push_wrapped(std::vector<std::pair<double, double>>& out, double a, double b) {
  if (b <= kTwoPi) {
    out.emplace_back(a, b);
  } else {
    out.emplace_back(a, kTwoPi);
    out.emplace_back(0.0, b - kTwoPi);
  }
}

double param(const PresetParams& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void check_keys(const std::string& name, const PresetParams& p,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : p) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationError("preset " + name + ": unknown parameter '" + key + "'");
    if (!std::isfinite(value)) throw ValidationError("preset " + name + ": parameter '" + key + "' is not finite");
  }
}

int integer_param(const std::string& name, const PresetParams& p, const std::string& key) {
  const double k = param(p, key, 1.0);
  if (k < 1.0 || k != std::floor(k)) throw ValidationError("preset " + name + ": '" + key + "' must be a positive integer");
  return static_cast<int>(k);
}

}  // namespace

std::vector<Segment> periodic_linear_segments(const std::vector<Node>& nodes) {
  if (nodes.empty()) throw ValidationError("node list is empty");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& nd = nodes[i];
    std::ostringstream where;
    where << "node " << i;
    if (!std::isfinite(nd.t) || nd.t < 0.0 || nd.t >= kTwoPi)
      throw ValidationError(where.str() + ": abscissa must lie in [0, 2pi)");
    if (i > 0 && !(nd.t > nodes[i - 1].t))
      throw ValidationError(where.str() + ": abscissas must be strictly increasing");
    check_value(nd.v, where.str());
  }
  std::vector<Segment> segs;
  const Node& first = nodes.front();
  const Node& last = nodes.back();
  // Wrap piece runs from the last node to the first node shifted by 2pi.
  const double wrap_len = first.t + kTwoPi - last.t;
  const double v_at_zero = last.v + (first.v - last.v) * (kTwoPi - last.t) / wrap_len;
  if (first.t > 0.0) segs.push_back({0.0, first.t, v_at_zero, first.v});
  for (std::size_t i = 1; i < nodes.size(); ++i)
    segs.push_back({nodes[i - 1].t, nodes[i].t, nodes[i - 1].v, nodes[i].v});
  segs.push_back({last.t, kTwoPi, last.v, first.t > 0.0 ? v_at_zero : first.v});
  return segs;
}

void MembershipFunction::set_segments(std::vector<Segment> segs) {
  breakpoints_.clear();
  for (const Segment& s : segs)
    if (s.t0 > 0.0) breakpoints_.push_back(s.t0);
  segments_ = std::move(segs);
}

MembershipFunction MembershipFunction::piecewise_linear(std::vector<Node> nodes) {
  MembershipFunction f;
  f.kind_ = Kind::piecewise_linear;
  f.label_ = "piecewise_linear";
  f.set_segments(periodic_linear_segments(nodes));
  f.nodes_ = std::move(nodes);
  return f;
}

MembershipFunction MembershipFunction::samples(std::vector<double> values, Interpolation interp) {
  if (values.empty()) throw ValidationError("sample array is empty");
  for (std::size_t j = 0; j < values.size(); ++j) check_value(values[j], "sample " + std::to_string(j));
  const double h = kTwoPi / static_cast<double>(values.size());
  MembershipFunction f;
  f.kind_ = Kind::samples;
  f.label_ = "samples";
  f.interp_ = interp;
  if (interp == Interpolation::linear) {
    std::vector<Node> nodes;
    for (std::size_t j = 0; j < values.size(); ++j) nodes.push_back({h * j, values[j]});
    f.set_segments(periodic_linear_segments(nodes));
  } else {
    // Sample j owns [t_j - h/2, t_j + h/2); sample 0 straddles the origin.
    const std::size_t n = values.size();
    std::vector<Segment> segs;
    segs.push_back({0.0, 0.5 * h, values[0], values[0]});
    for (std::size_t j = 1; j < n; ++j) segs.push_back({h * (j - 0.5), h * (j + 0.5), values[j], values[j]});
    segs.push_back({h * (n - 0.5), kTwoPi, values[0], values[0]});
    f.set_segments(std::move(segs));
  }
  f.samples_ = std::move(values);
  return f;
}

MembershipFunction MembershipFunction::arcs(ArcSystem arcs) {
  MembershipFunction f;
  f.kind_ = Kind::arcs;
  f.label_ = "arcs";
  std::vector<std::pair<double, double>> on;
  for (const Arc& a : arcs.arcs()) push_wrapped(on, a.xi, a.eta);
  f.set_segments(indicator_segments(std::move(on)));
  f.arcs_ = std::move(arcs);
  return f;
}

MembershipFunction MembershipFunction::constant(double value) {
  return preset("constant", {{"value", value}});
}

MembershipFunction MembershipFunction::analytic(std::string label, std::function<double(double)> fn,
                                                std::vector<double> breakpoints) {
  if (!fn) throw ValidationError("analytic membership needs a callable");
  MembershipFunction f;
  f.kind_ = Kind::analytic;
  f.label_ = std::move(label);
  f.eval_ = std::move(fn);
  for (double b : breakpoints) {
    if (!std::isfinite(b) || b < 0.0 || b >= kTwoPi) throw ValidationError("breakpoint outside [0, 2pi)");
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  f.breakpoints_ = std::move(breakpoints);
  return f;
}

MembershipFunction MembershipFunction::preset(const std::string& name, const PresetParams& params) {
  MembershipFunction f;
  f.kind_ = Kind::preset;
  f.label_ = name;
  f.params_ = params;
  if (name == "constant") {
    check_keys(name, params, {"value"});
    const double v = param(params, "value", 0.0);
    check_value(v, "preset constant");
    f.set_segments({{0.0, kTwoPi, v, v}});
  } else if (name == "sign-cos-plus" || name == "sign-sin-plus") {
    check_keys(name, params, {"k"});
    const int k = integer_param(name, params, "k");
    const double period = kTwoPi / k;
    // cos(kt) > 0 on (-pi/2k, pi/2k) + j*period; sin(kt) > 0 on (0, pi/k) + j*period.
    const double offset = name == "sign-cos-plus" ? -0.25 * period : 0.0;
    std::vector<std::pair<double, double>> on;
    for (int j = 0; j < k; ++j) {
      const double a = wrap_angle(offset + j * period);
      push_wrapped(on, a, a + 0.5 * period);
    }
    f.set_segments(indicator_segments(std::move(on)));
    if (name == "sign-cos-plus")
      f.eval_ = [k](double t) { return std::cos(k * t) > 0.0 ? 1.0 : 0.0; };
    else
      f.eval_ = [k](double t) { return std::sin(k * t) > 0.0 ? 1.0 : 0.0; };
  } else if (name == "raised-cosine") {
    check_keys(name, params, {"center", "low", "high"});
    const double center = param(params, "center", kPi);
    const double low = param(params, "low", 0.0);
    const double high = param(params, "high", 1.0);
    check_value(low, "preset raised-cosine low");
    check_value(high, "preset raised-cosine high");
    f.eval_ = [=](double t) { return low + (high - low) * 0.5 * (1.0 + std::cos(t - center)); };
  } else if (name == "trapezoid") {
    check_keys(name, params, {"a", "b", "c", "d", "low", "high"});
    const double a = param(params, "a", 1.0);
    const double b = param(params, "b", 2.0);
    const double c = param(params, "c", 3.5);
    const double d = param(params, "d", 5.0);
    const double low = param(params, "low", 0.2);
    const double high = param(params, "high", 0.8);
    check_value(low, "preset trapezoid low");
    check_value(high, "preset trapezoid high");
    if (!(0.0 <= a && a < b && b <= c && c < d && d < kTwoPi))
      throw ValidationError("preset trapezoid: need 0 <= a < b <= c < d < 2pi");
    std::vector<Node> nodes{{a, low}, {b, high}};
    if (c > b) nodes.push_back({c, high});
    nodes.push_back({d, low});
    f.set_segments(periodic_linear_segments(nodes));
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  return f;
}

double MembershipFunction::operator()(double t) const {
  if (!std::isfinite(t) || t < 0.0 || t >= kTwoPi) {
    std::ostringstream os;
    os << "evaluation point " << t << " outside [0, 2pi)";
    throw DomainError(os.str());
  }
  if (eval_) return eval_(t);
  if (arcs_) return arcs_->contains(t) ? 1.0 : 0.0;
  if (kind_ == Kind::samples && interp_ == Interpolation::nearest) {
    const std::size_t n = samples_.size();
    const auto j = static_cast<std::size_t>(std::llround(t / (kTwoPi / n))) % n;
    return samples_[j];
  }
  return segment_value(*segments_, t);
}

double evaluate(const MembershipFunction& f, double t) { return f(t); }

}  // namespace fuzzyspec
