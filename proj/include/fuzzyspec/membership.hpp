#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyspec/arcs.hpp"
#include "fuzzyspec/types.hpp"

namespace fuzzyspec {

struct Node {
  double t;
  double v;
};

/// Linear piece of a membership function on [t0, t1] (values at both ends).
struct Segment {
  double t0;
  double t1;
  double v0;
  double v1;
};

enum class Interpolation { linear, nearest };

using PresetParams = std::map<std::string, double>;

/// A fuzzy subset of the circle: a function [0, 2pi) -> [0, 1].
///
/// Piecewise-linear, sampled, arc and most preset kinds carry an exact segment
/// representation that Fourier analysis integrates in closed form. Smooth
/// presets and analytic functions are integrated by quadrature.
///
/// Presets: "constant" {value}, "sign-cos-plus" {k}, "sign-sin-plus" {k},
/// "raised-cosine" {center, low, high}, "trapezoid" {a, b, c, d, low, high}.
class MembershipFunction {
 public:
  enum class Kind { piecewise_linear, samples, arcs, preset, analytic };

  /// Nodes (t, v) with 0 <= t_0 < t_1 < ... < 2pi; interpolates linearly and
  /// wraps from the last node back to the first.
  static MembershipFunction piecewise_linear(std::vector<Node> nodes);
  /// Values on the grid t_j = 2pi j / N.
  static MembershipFunction samples(std::vector<double> values,
                                    Interpolation interp = Interpolation::linear);
  static MembershipFunction arcs(ArcSystem arcs);
  static MembershipFunction preset(const std::string& name, const PresetParams& params = {});
  static MembershipFunction constant(double value);
  /// Caller guarantees values in [0, 1]; breakpoints mark kinks or jumps.
  static MembershipFunction analytic(std::string label, std::function<double(double)> fn,
                                     std::vector<double> breakpoints = {});

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  /// Membership value at t in [0, 2pi); throws DomainError otherwise.
  double operator()(double t) const;

  /// Exact piecewise-linear representation covering [0, 2pi), if any.
  const std::optional<std::vector<Segment>>& segments() const { return segments_; }
  /// Abscissas in [0, 2pi) where the function may be non-smooth.
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::optional<ArcSystem>& arc_system() const { return arcs_; }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<double>& sample_values() const { return samples_; }
  Interpolation interpolation() const { return interp_; }
  const PresetParams& preset_params() const { return params_; }

 private:
  MembershipFunction() = default;
  void set_segments(std::vector<Segment> segs);

  Kind kind_ = Kind::analytic;
  std::string label_;
  std::function<double(double)> eval_;
  std::optional<std::vector<Segment>> segments_;
  std::vector<double> breakpoints_;
  std::optional<ArcSystem> arcs_;
  std::vector<Node> nodes_;
  std::vector<double> samples_;
  Interpolation interp_ = Interpolation::linear;
  PresetParams params_;
};

/// Same as f(t).
double evaluate(const MembershipFunction& f, double t);

/// Segments of the periodic linear interpolant through the nodes.
std::vector<Segment> periodic_linear_segments(const std::vector<Node>& nodes);

}  // namespace fuzzyspec
