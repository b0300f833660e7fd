#pragma once

#include <string>

#include "weylscope/type_geometry.hpp"

namespace weylscope {

struct SvgSummary {
    int polygons = 0;  // 2-dimensional cones
    int rays = 0;      // 1-dimensional cones (lines counted once)
    int points = 0;
};

// SVG 1.1 drawing of a rank-2 prefan in the Euclidean realization of the Cartan form.
std::string render_svg(const LabeledPrefan& f, SvgSummary* summary = nullptr);

}  // namespace weylscope
