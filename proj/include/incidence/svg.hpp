#pragma once

#include "incidence/arrangement.hpp"

#include <string>

namespace incidence {

struct SvgOptions {
    int width = 640;
    // Only lines with at least this many points are drawn.
    std::size_t rich_min = 2;
};

/// Points as filled circles and determined lines clipped to a padded
/// bounding box, styled by richness, with an l_r legend underneath.
/// Coordinates are converted to double only here, printed with 6 decimals.
std::string render_svg(const Configuration& c, const ArrangementStats& s, const SvgOptions& options = {});

}  // namespace incidence
