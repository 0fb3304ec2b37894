#pragma once

#include <iosfwd>

#include "monospec/sampler.hpp"

namespace monospec {

/// Standalone SVG: axes, one dot per point, region curves in a fixed palette.
/// Pair datasets plot (lambda2, lambda3); complex datasets plot every eigenvalue.
void write_svg(std::ostream& os, const Dataset& ds);

}  // namespace monospec
