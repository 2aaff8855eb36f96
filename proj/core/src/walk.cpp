#include "gridwalk/walk.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "gridwalk/errors.hpp"

namespace gridwalk {

namespace {

void require_grid(const GridPtr& grid) {
    if (!grid) throw ValidationError("walk has no grid");
}

void validate_step_range(const GridSpec& grid, const std::vector<int>& steps) {
    for (const int k : steps) {
        if (k == 0 || std::abs(k) > grid.generator_count()) {
            throw ValidationError("step index out of range: " + std::to_string(k));
        }
    }
}

}  // namespace

bool Displacement::is_zero() const {
    return anchor_from == anchor_to &&
           std::all_of(lattice.begin(), lattice.end(), [](std::int64_t v) { return v == 0; });
}

Walk make_walk(GridPtr grid, std::vector<int> steps) {
    require_grid(grid);
    Vertex start = origin_vertex(*grid);
    return make_walk(std::move(grid), std::move(start), std::move(steps));
}

Walk make_walk(GridPtr grid, Vertex start, std::vector<int> steps) {
    require_grid(grid);
    validate_step_range(*grid, steps);
    if (start.anchor < 0 || start.anchor >= static_cast<int>(grid->anchors().size())) {
        throw ValidationError("invalid start anchor");
    }
    if (start.lattice.size() != static_cast<std::size_t>(grid->dimension())) {
        throw ValidationError("start lattice vector has wrong dimension");
    }
    return Walk{std::move(grid), std::move(start), std::move(steps)};
}

std::vector<Vertex> decode(const Walk& walk) {
    require_grid(walk.grid);
    validate_step_range(*walk.grid, walk.steps);
    std::vector<Vertex> out;
    out.reserve(walk.steps.size() + 1);
    out.push_back(walk.start);
    for (std::size_t i = 0; i < walk.steps.size(); ++i) {
        auto next = apply_step(*walk.grid, out.back(), walk.steps[i]);
        if (!next) {
            throw DecodeError(i, "step " + std::to_string(walk.steps[i]) +
                                     " does not apply at the current vertex");
        }
        out.push_back(std::move(*next));
    }
    return out;
}

Walk encode(GridPtr grid, const std::vector<Vertex>& vertices) {
    require_grid(grid);
    if (vertices.empty()) throw ValidationError("cannot encode an empty vertex sequence");
    std::vector<int> steps;
    steps.reserve(vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        auto k = is_edge(*grid, vertices[i], vertices[i + 1]);
        if (!k) {
            throw ValidationError("vertices at positions " + std::to_string(i) + " and " +
                                  std::to_string(i + 1) + " are not adjacent");
        }
        steps.push_back(*k);
    }
    return Walk{std::move(grid), vertices.front(), std::move(steps)};
}

Walk concat(const Walk& c, const Walk& d) {
    require_grid(c.grid);
    require_grid(d.grid);
    if (!(*c.grid == *d.grid)) throw ValidationError("cannot concatenate walks on different grids");
    std::vector<int> steps = c.steps;
    steps.insert(steps.end(), d.steps.begin(), d.steps.end());
    Walk joined{c.grid, c.start, std::move(steps)};
    decode(joined);  // surfaces an inapplicable step at the junction
    return joined;
}

Walk reverse(const Walk& walk) {
    Walk out = walk;
    std::reverse(out.steps.begin(), out.steps.end());
    return out;
}

Walk neg_reverse(const Walk& walk) {
    const std::vector<Vertex> vertices = decode(walk);
    Walk out{walk.grid, vertices.back(), {}};
    out.steps.reserve(walk.steps.size());
    for (auto it = walk.steps.rbegin(); it != walk.steps.rend(); ++it) out.steps.push_back(-*it);
    return out;
}

WalkReport classify(const Walk& walk) {
    const std::vector<Vertex> vertices = decode(walk);

    WalkReport report;
    report.is_walk = true;
    report.is_closed = vertices.front() == vertices.back();

    // Edge uniqueness is about the underlying undirected edge: traversing
    // (v,w) and later (w,v) counts as reuse.
    std::set<std::pair<Vertex, Vertex>> edges;
    report.is_eulerian = true;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        auto e = std::minmax(vertices[i], vertices[i + 1]);
        if (!edges.emplace(e.first, e.second).second) {
            report.is_eulerian = false;
            break;
        }
    }

    std::set<Vertex> distinct(vertices.begin(), vertices.end());
    report.is_curve = distinct.size() == vertices.size();

    std::set<int> directions;
    for (const int k : walk.steps) directions.insert(std::abs(k));
    report.dimension = static_cast<int>(directions.size());
    return report;
}

Displacement net_displacement(const Walk& walk) {
    const std::vector<Vertex> vertices = decode(walk);
    const Vertex& first = vertices.front();
    const Vertex& last = vertices.back();
    Displacement d;
    d.anchor_from = first.anchor;
    d.anchor_to = last.anchor;
    d.lattice.resize(first.lattice.size());
    for (std::size_t i = 0; i < first.lattice.size(); ++i) {
        d.lattice[i] = last.lattice[i] - first.lattice[i];
    }
    return d;
}

Walk random_walk(GridPtr grid, std::size_t step_count, std::uint64_t seed, bool no_backtrack) {
    require_grid(grid);
    // mt19937_64 with modulo reduction keeps the byte stream independent of
    // the standard library's distribution implementations.
    std::mt19937_64 rng(seed);
    Walk walk{grid, origin_vertex(*grid), {}};
    walk.steps.reserve(step_count);
    Vertex current = walk.start;
    int previous = 0;
    std::vector<std::pair<int, Vertex>> choices;
    for (std::size_t i = 0; i < step_count; ++i) {
        choices.clear();
        for (auto& [k, w] : neighbors(*grid, current)) {
            if (no_backtrack && previous != 0 && k == -previous) continue;
            choices.emplace_back(k, std::move(w));
        }
        if (choices.empty()) {
            throw ValidationError("random walk hit a dead end at step " + std::to_string(i));
        }
        const std::size_t pick = static_cast<std::size_t>(rng() % choices.size());
        walk.steps.push_back(choices[pick].first);
        current = std::move(choices[pick].second);
        previous = walk.steps.back();
    }
    return walk;
}

}  // namespace gridwalk
