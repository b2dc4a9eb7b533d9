#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fuzzyspec/arcs.hpp"
#include "fuzzyspec/membership.hpp"
#include "fuzzyspec/nonlinear.hpp"
#include "fuzzyspec/periodize.hpp"
#include "fuzzyspec/reconstruct.hpp"
#include "fuzzyspec/toeplitz.hpp"

namespace fuzzyspec::io {

inline constexpr const char* kSpectrumConvention =
    "c_k = (1/2pi) * integral_0^{2pi} f(t) exp(+i k t) dt";
inline constexpr const char* kNonlinearConvention =
    "exp(-2 pi i h(z)) = 1 - i exp(-i pi c0) * sum_k s_k z^k, s_0 = 2 sin(pi c0)";

/// Reads a whole file; throws ValidationError when it cannot be opened.
std::string read_file(const std::string& path);

/// Membership spec: piecewise_linear / samples / arcs / preset.
MembershipFunction membership_from_json(const std::string& text);
std::string membership_to_json(const MembershipFunction& f);

struct LoadedArcs {
  ArcSystem arcs;       // canonical (first arc starts at 0)
  double rotation = 0;  // angle added to every endpoint of the input
};

/// {"arcs": [[xi, eta], ...]}, rotated to canonical form.
LoadedArcs arcs_from_json(const std::string& text);

/// {"kind": "gaussian", "amplitude", "sigma"} | {"kind": "bump", "center", "width", "height"}.
SchwartzFunction schwartz_from_json(const std::string& text);

/// CSV with a convention comment, header "k,re,im" and one row per k.
void write_spectrum(std::ostream& os, const HermitianSpectrum& s);
HermitianSpectrum read_spectrum(std::istream& is);

/// As the spectrum file, with the nonlinear convention and a "# c0:" line.
void write_nonlinear(std::ostream& os, const NonlinearSpectrum& ns);
NonlinearSpectrum read_nonlinear(std::istream& is);

/// True when the text carries the "# c0:" header of a nonlinear spectrum file.
bool is_nonlinear_file(const std::string& text);

std::string result_to_json(const ReconstructionResult& r, int indent = 2);
std::string sweep_to_json(const std::vector<SweepEntry>& sweep, int indent = 2);

/// D, |F|, arg F, relative magnitudes, verdict, and the node table when finite.
std::string analysis_to_json(const ToeplitzAnalysis& ta, const OrderVerdict& v,
                             const UnitRootDecomposition* roots, int indent = 2);

/// Sample values as a "samples" membership document.
std::string samples_to_json(const std::vector<double>& values, int indent = 2);

/// Fixed 17-significant-digit formatting used by every tabular writer.
std::string format_number(double x);

}  // namespace fuzzyspec::io
