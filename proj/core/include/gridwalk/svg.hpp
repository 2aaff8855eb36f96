#pragma once

#include <string>
#include <vector>

#include "gridwalk/walk.hpp"

namespace gridwalk {

struct RenderStyle {
    double scale = 100.0;         // output units per grid unit
    double stroke_width = 0.05;   // in grid units
    double margin = 0.05;         // fraction of the bounding box
    bool draw_vertices = false;
};

/// Deterministic SVG: one polyline per walk in input order, coordinates to
/// six decimals, y axis flipped. The viewBox is the embedded bounding box
/// expanded by the margin; a degenerate box is padded by one grid unit.
std::string render_svg(const GridSpec& grid, const std::vector<Walk>& walks,
                       const RenderStyle& style = {});

/// All edges of the grid between vertices within the given cell radius, as
/// two-point walks in deterministic order. Rendering helper for `grid show`.
std::vector<Walk> grid_patch(GridPtr grid, int radius);

}  // namespace gridwalk
