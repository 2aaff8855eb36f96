#pragma once

#include <cstdint>
#include <vector>

#include "gridwalk/grid.hpp"

namespace gridwalk {

/// A walk in index notation: a start vertex plus signed generator indices.
/// The empty step sequence is the single-vertex walk.
struct Walk {
    GridPtr grid;
    Vertex start;
    std::vector<int> steps;
};

struct WalkReport {
    bool is_walk = false;
    bool is_eulerian = false;  // no undirected edge traversed twice
    bool is_curve = false;     // no vertex visited twice
    bool is_closed = false;
    int dimension = 0;  // number of distinct |step| values
};

/// Exact end-minus-start displacement. Zero iff the walk is closed.
struct Displacement {
    int anchor_from = 0;
    int anchor_to = 0;
    LatticeVec lattice;  // lattice(end) - lattice(start)

    bool is_zero() const;
};

/// Builds a walk from the origin, validating only step index ranges; the
/// per-vertex applicability of each step is checked by decode.
Walk make_walk(GridPtr grid, std::vector<int> steps);
Walk make_walk(GridPtr grid, Vertex start, std::vector<int> steps);

/// Vertex sequence of the walk, length steps+1. Throws DecodeError with the
/// offending position when a step's generator does not apply.
std::vector<Vertex> decode(const Walk& walk);

/// Inverse of decode: recovers the signed index sequence from adjacent
/// vertices. Throws ValidationError naming the first non-adjacent pair.
Walk encode(GridPtr grid, const std::vector<Vertex>& vertices);

/// Concatenation: D is replayed from C's endpoint (D's own start is
/// ignored). The junction is validated by decoding.
Walk concat(const Walk& c, const Walk& d);

/// Pure sequence reverse of the steps, start kept. Not the geometric
/// retrace; see neg_reverse for that.
Walk reverse(const Walk& walk);

/// Steps reversed and negated, starting from C's endpoint, so the result
/// decodes to C's vertex sequence backwards.
Walk neg_reverse(const Walk& walk);

WalkReport classify(const Walk& walk);

Displacement net_displacement(const Walk& walk);

/// Seeded uniform walk over the applicable signed steps at each vertex.
/// With no_backtrack the negation of the previous step is excluded; a dead
/// end throws ValidationError. Deterministic for fixed arguments.
Walk random_walk(GridPtr grid, std::size_t step_count, std::uint64_t seed, bool no_backtrack);

}  // namespace gridwalk
