#include "gridwalk/svg.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "gridwalk/errors.hpp"
#include "gridwalk/textio.hpp"

namespace gridwalk {

std::string render_svg(const GridSpec& grid, const std::vector<Walk>& walks,
                       const RenderStyle& style) {
    if (style.scale <= 0) throw ValidationError("render scale must be positive");
    if (style.margin < 0) throw ValidationError("render margin must be non-negative");
    if (grid.dimension() != 2) throw ValidationError("SVG rendering requires a 2-dimensional grid");

    // Embed every walk up front; y is flipped so pictures read the usual way.
    std::vector<std::vector<std::pair<double, double>>> polylines;
    double min_x = std::numeric_limits<double>::max();
    double min_y = std::numeric_limits<double>::max();
    double max_x = std::numeric_limits<double>::lowest();
    double max_y = std::numeric_limits<double>::lowest();
    for (const Walk& walk : walks) {
        Walk on_grid{std::make_shared<const GridSpec>(grid), walk.start, walk.steps};
        std::vector<std::pair<double, double>> line;
        for (const Vertex& v : decode(on_grid)) {
            const std::vector<double> p = embed_vertex(grid, v);
            const double x = p[0] * style.scale;
            const double y = -p[1] * style.scale;
            min_x = std::min(min_x, x);
            min_y = std::min(min_y, y);
            max_x = std::max(max_x, x);
            max_y = std::max(max_y, y);
            line.emplace_back(x, y);
        }
        polylines.push_back(std::move(line));
    }
    if (polylines.empty() || min_x > max_x) {
        min_x = min_y = 0.0;
        max_x = max_y = 0.0;
    }

    double pad = style.margin * std::max(max_x - min_x, max_y - min_y);
    if (pad == 0.0) pad = style.scale;  // degenerate box: one grid unit
    const double view_x = min_x - pad;
    const double view_y = min_y - pad;
    const double view_w = (max_x - min_x) + 2 * pad;
    const double view_h = (max_y - min_y) + 2 * pad;
    const double stroke = style.stroke_width * style.scale;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fixed6(view_x) + " " +
           fixed6(view_y) + " " + fixed6(view_w) + " " + fixed6(view_h) + "\">\n";
    for (const auto& line : polylines) {
        out += "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"" + fixed6(stroke) +
               "\" points=\"";
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out += ' ';
            out += fixed6(line[i].first) + "," + fixed6(line[i].second);
        }
        out += "\"/>\n";
    }
    if (style.draw_vertices) {
        const double radius = 1.5 * stroke;
        for (const auto& line : polylines) {
            for (const auto& [x, y] : line) {
                out += "<circle cx=\"" + fixed6(x) + "\" cy=\"" + fixed6(y) + "\" r=\"" +
                       fixed6(radius) + "\" fill=\"#000000\"/>\n";
            }
        }
    }
    out += "</svg>\n";
    return out;
}

std::vector<Walk> grid_patch(GridPtr grid, int radius) {
    if (!grid) throw ValidationError("grid_patch needs a grid");
    if (grid->dimension() != 2) throw ValidationError("grid_patch requires a 2-dimensional grid");

    std::vector<Walk> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::int64_t i = -radius; i <= radius; ++i) {
        for (std::int64_t j = -radius; j <= radius; ++j) {
            for (int a = 0; a < static_cast<int>(grid->anchors().size()); ++a) {
                const Vertex v{a, {i, j}};
                for (const auto& [k, w] : neighbors(*grid, v)) {
                    auto key = std::minmax(v, w);
                    if (!seen.emplace(key.first, key.second).second) continue;
                    edges.push_back(Walk{grid, v, {k}});
                }
            }
        }
    }
    return edges;
}

}  // namespace gridwalk
