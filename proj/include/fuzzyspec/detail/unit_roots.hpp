#pragma once

#include <vector>

#include "fuzzyspec/detail/wide.hpp"
#include "fuzzyspec/roots.hpp"

namespace fuzzyspec::detail {

/// Roots of a wide-precision polynomial: double companion-matrix roots
/// polished by wide Aberth iteration. Not projected onto the circle.
std::vector<wide_complex> wide_roots(const std::vector<wide_complex>& ascending, const RootOptions& opts);

}  // namespace fuzzyspec::detail
