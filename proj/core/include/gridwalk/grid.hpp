#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridwalk/rational.hpp"

namespace gridwalk {

using LatticeVec = std::vector<std::int64_t>;

/// One edge orbit: the segment from anchor class `from_anchor` to anchor
/// class `to_anchor`, displaced by `offset` cells, repeated over the whole
/// lattice. The exact displacement in basis coordinates is
/// (beta_to - beta_from) + offset.
struct EdgeGenerator {
    int from_anchor = 0;
    int to_anchor = 0;
    LatticeVec offset;

    friend bool operator==(const EdgeGenerator&, const EdgeGenerator&) = default;
};

/// A grid vertex in exact coordinates: which anchor class, plus an integer
/// cell vector. Equality is exact; no floating point is involved.
struct Vertex {
    int anchor = 0;
    LatticeVec lattice;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// An infinite periodic grid: real basis (used only for embedding), anchor
/// offsets in exact basis coordinates, and anchored edge generators.
/// Immutable after construction; all queries are pure.
class GridSpec {
public:
    int dimension() const { return dimension_; }
    const std::vector<std::vector<double>>& basis() const { return basis_; }
    const std::vector<RationalVec>& anchors() const { return anchors_; }
    const std::vector<EdgeGenerator>& generators() const { return generators_; }
    int generator_count() const { return static_cast<int>(generators_.size()); }

    /// Exact displacement of generator k (1-based) in basis coordinates.
    const RationalVec& generator_vector(int k) const { return genvecs_.at(static_cast<std::size_t>(k - 1)); }

    /// Real-space vector of generator k (1-based), embedding only.
    std::vector<double> generator_real_vector(int k) const;

    /// Exact position of a vertex in basis coordinates.
    RationalVec position(const Vertex& v) const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    friend GridSpec make_grid(int, std::vector<std::vector<double>>, std::vector<RationalVec>,
                              std::vector<EdgeGenerator>);

    int dimension_ = 0;
    std::vector<std::vector<double>> basis_;
    std::vector<RationalVec> anchors_;
    std::vector<EdgeGenerator> generators_;
    std::vector<RationalVec> genvecs_;
};

using GridPtr = std::shared_ptr<const GridSpec>;

/// Validates and builds a grid. Throws ValidationError on a dependent basis,
/// anchors outside [0,1)^d or duplicated, zero generators, duplicate
/// generators, or a generator listed together with its own negation.
GridSpec make_grid(int dimension, std::vector<std::vector<double>> basis,
                   std::vector<RationalVec> anchors, std::vector<EdgeGenerator> generators);

/// Named grids with frozen encodings: "orthogonal-<d>", "square-centered",
/// "triangular", "hexagonal", "square-octagon", "hexagonal-z2".
GridSpec builtin_grid(std::string_view name);
GridPtr builtin_grid_ptr(std::string_view name);

const std::vector<std::string>& builtin_grid_names();

Vertex origin_vertex(const GridSpec& grid);

/// Real-space embedding of a vertex: B * (lattice + beta_anchor).
std::vector<double> embed_vertex(const GridSpec& grid, const Vertex& v);

/// Inverse of embed_vertex within `tol`; nullopt if the point is not a
/// vertex of the grid.
std::optional<Vertex> unembed_point(const GridSpec& grid, const std::vector<double>& point,
                                    double tol = 1e-6);

/// Signed generator index carrying v -> w, if any. +k means generator k in
/// its listed direction, -k the reverse. A generator matches when the
/// unordered anchor pair agrees and the exact displacement equals its
/// vector (or the negation).
std::optional<int> is_edge(const GridSpec& grid, const Vertex& v, const Vertex& w);

/// Target of one signed step from v, if the generator applies there.
std::optional<Vertex> apply_step(const GridSpec& grid, const Vertex& v, int signed_index);

/// All incident edges of v as (signed index, neighbour), ordered
/// +1, -1, +2, -2, ...
std::vector<std::pair<int, Vertex>> neighbors(const GridSpec& grid, const Vertex& v);

/// Re-embeds the grid through a linear map given as a row-major matrix
/// (rows = output dimension). Anchors and generators are stored in basis
/// coordinates and carry over unchanged; only the basis moves. Throws if
/// the mapped basis is no longer independent (always the case when the
/// output dimension differs from d).
GridSpec project_grid(const GridSpec& grid, const std::vector<std::vector<double>>& linear_map);

}  // namespace gridwalk
