#pragma once

// SVG 1.1 rendering of Newton polygons and tropical plane curves.
//
// All geometry stays exact: the world-to-screen map is an affine transform
// computed in Rational arithmetic, and decimal rounding happens only when a
// coordinate is finally printed (fixed two decimals, round half away from
// zero).  Output is standalone valid XML.

#include <string>
#include <vector>

#include "ptrop/newton.hpp"
#include "ptrop/tropical.hpp"

namespace ptrop {

struct SvgOptions {
  long long width = 640;    // pixel canvas width
  long long height = 480;   // pixel canvas height
  long long margin = 48;    // pixel margin on every side
};

// Lifted points (dots), the lower hull (polyline), hull vertices
// (emphasized, labeled with their exact (exponent, valuation) pairs), and
// per-edge slope labels.
std::string polygon_svg(const NewtonPolygon& P, const SvgOptions& opt = {});

// One or more curves in distinct stroke colors; rays are clipped to the
// padded world box in exact arithmetic before mapping.  When `overlay` is
// given, its isolated points are drawn as markers (filled = transversal)
// and its overlap cells as wide translucent strokes.
std::string curves_svg(const std::vector<TropCurve>& curves,
                       const IntersectionReport* overlay = nullptr,
                       const SvgOptions& opt = {});

}  // namespace ptrop
