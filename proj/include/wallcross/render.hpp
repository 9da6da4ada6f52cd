#pragma once

#include "wallcross/arrangement.hpp"
#include "wallcross/engine.hpp"

#include <string>

namespace wallcross {

struct RenderOptions {
  int canvas = 800;
  double margin = 0.05;  // fraction of the canvas on each side
};

/// SVG 1.1 drawing of a rank 1 or 2 X-ray.  Walls of dimension one are
/// segments and vertices are dots.  Top subchambers carry their value in
/// `labels` when it is not null.  Throws XrayError for d > 2.
std::string render_svg(const ChamberComplex& complex, const InvariantTable* labels,
                       const RenderOptions& opts = {});

}  // namespace wallcross
