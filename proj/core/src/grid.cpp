#include "gridwalk/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "gridwalk/errors.hpp"

namespace gridwalk {

namespace {

// |det| of a square matrix via Gaussian elimination with partial pivoting.
double abs_determinant(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        }
        if (std::abs(m[pivot][col]) < 1e-12) return 0.0;
        if (pivot != col) std::swap(m[pivot], m[col]);
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            const double f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return std::abs(det);
}

// Solves basis^T * x = point, i.e. finds basis coordinates of a real point.
std::vector<double> basis_coordinates(const std::vector<std::vector<double>>& basis,
                                      const std::vector<double>& point) {
    const std::size_t n = basis.size();
    // Column j of the system matrix is basis vector j.
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = basis[j][i];
        m[i][n] = point[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        }
        if (std::abs(m[pivot][col]) < 1e-12) throw ValidationError("grid basis is singular");
        std::swap(m[pivot], m[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col) continue;
            const double f = m[row][col] / m[col][col];
            for (std::size_t k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

RationalVec compute_genvec(const std::vector<RationalVec>& anchors, const EdgeGenerator& g,
                           int dimension) {
    RationalVec v(static_cast<std::size_t>(dimension));
    const RationalVec& from = anchors[static_cast<std::size_t>(g.from_anchor)];
    const RationalVec& to = anchors[static_cast<std::size_t>(g.to_anchor)];
    for (int i = 0; i < dimension; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        v[ui] = to[ui] - from[ui] + Rational(g.offset[ui]);
    }
    return v;
}

bool all_zero(const RationalVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

RationalVec negated(const RationalVec& v) {
    RationalVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

bool same_pair(const EdgeGenerator& a, const EdgeGenerator& b) {
    return (a.from_anchor == b.from_anchor && a.to_anchor == b.to_anchor) ||
           (a.from_anchor == b.to_anchor && a.to_anchor == b.from_anchor);
}

Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

}  // namespace

std::vector<double> GridSpec::generator_real_vector(int k) const {
    const RationalVec& v = generator_vector(k);
    std::vector<double> out(static_cast<std::size_t>(dimension_), 0.0);
    for (int i = 0; i < dimension_; ++i) {
        const double c = to_double(v[static_cast<std::size_t>(i)]);
        for (int j = 0; j < dimension_; ++j) {
            out[static_cast<std::size_t>(j)] +=
                c * basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return out;
}

RationalVec GridSpec::position(const Vertex& v) const {
    const RationalVec& beta = anchors_.at(static_cast<std::size_t>(v.anchor));
    RationalVec pos(static_cast<std::size_t>(dimension_));
    for (int i = 0; i < dimension_; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        pos[ui] = beta[ui] + Rational(v.lattice[ui]);
    }
    return pos;
}

GridSpec make_grid(int dimension, std::vector<std::vector<double>> basis,
                   std::vector<RationalVec> anchors, std::vector<EdgeGenerator> generators) {
    if (dimension < 1) throw ValidationError("grid dimension must be positive");
    const auto d = static_cast<std::size_t>(dimension);
    if (basis.size() != d) throw ValidationError("basis must have exactly d vectors");
    for (const auto& b : basis) {
        if (b.size() != d) throw ValidationError("basis vectors must have d components");
    }
    if (abs_determinant(basis) == 0.0) throw ValidationError("dependent basis");

    if (anchors.empty()) throw ValidationError("at least one anchor is required");
    for (const auto& a : anchors) {
        if (a.size() != d) throw ValidationError("anchors must have d basis coordinates");
        for (const Rational& c : a) {
            if (c < 0 || c >= 1) throw ValidationError("anchor coordinates must lie in [0,1)");
        }
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        for (std::size_t j = i + 1; j < anchors.size(); ++j) {
            if (anchors[i] == anchors[j]) throw ValidationError("duplicate anchor");
        }
    }

    std::vector<RationalVec> genvecs;
    genvecs.reserve(generators.size());
    const int anchor_count = static_cast<int>(anchors.size());
    for (const EdgeGenerator& g : generators) {
        if (g.from_anchor < 0 || g.from_anchor >= anchor_count || g.to_anchor < 0 ||
            g.to_anchor >= anchor_count) {
            throw ValidationError("generator anchor index out of range");
        }
        if (g.offset.size() != d) throw ValidationError("generator offset must have d components");
        RationalVec v = compute_genvec(anchors, g, dimension);
        if (all_zero(v)) throw ValidationError("zero generator");
        genvecs.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (!same_pair(generators[i], generators[j])) continue;
            if (genvecs[i] == genvecs[j]) throw ValidationError("duplicate generator");
            if (genvecs[i] == negated(genvecs[j])) {
                throw ValidationError("generator listed together with its own negation");
            }
        }
    }

    GridSpec grid;
    grid.dimension_ = dimension;
    grid.basis_ = std::move(basis);
    grid.anchors_ = std::move(anchors);
    grid.generators_ = std::move(generators);
    grid.genvecs_ = std::move(genvecs);
    return grid;
}

namespace {

GridSpec orthogonal_grid(int d) {
    std::vector<std::vector<double>> basis(static_cast<std::size_t>(d),
                                           std::vector<double>(static_cast<std::size_t>(d), 0.0));
    std::vector<EdgeGenerator> gens;
    for (int i = 0; i < d; ++i) {
        basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
        EdgeGenerator g;
        g.offset.assign(static_cast<std::size_t>(d), 0);
        g.offset[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(g));
    }
    return make_grid(d, std::move(basis),
                     {RationalVec(static_cast<std::size_t>(d), Rational(0))}, std::move(gens));
}

const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

}  // namespace

GridSpec builtin_grid(std::string_view name) {
    // Orthogonal grids are parametric in the dimension suffix.
    if (name.rfind("orthogonal-", 0) == 0) {
        const std::string suffix(name.substr(11));
        char* end = nullptr;
        const long d = std::strtol(suffix.c_str(), &end, 10);
        if (suffix.empty() || *end != '\0' || d < 1 || d > 32) {
            throw ValidationError("unknown grid: " + std::string(name));
        }
        return orthogonal_grid(static_cast<int>(d));
    }
    if (name == "square-centered") {
        // Basis (0,2),(2,0); corner anchor plus cell center. The four vector
        // classes are (0,2),(2,0),(1,1),(-1,1); diagonals join the two
        // anchor classes.
        return make_grid(2, {{0, 2}, {2, 0}},
                         {{rat(0), rat(0)}, {rat(1, 2), rat(1, 2)}},
                         {{0, 0, {1, 0}}, {0, 0, {0, 1}}, {0, 1, {0, 0}}, {0, 1, {0, -1}}});
    }
    if (name == "triangular") {
        // Edge vectors (1,0), (1/2, sqrt3/2), (-1/2, sqrt3/2).
        return make_grid(2, {{1, 0}, {0.5, kHalfSqrt3}}, {{rat(0), rat(0)}},
                         {{0, 0, {1, 0}}, {0, 0, {0, 1}}, {0, 0, {-1, 1}}});
    }
    if (name == "hexagonal") {
        // Two vertex classes inside the triangular cell; edge vectors
        // (0, sqrt3/3), (-1/2, sqrt3/6), (1/2, sqrt3/6).
        return make_grid(2, {{1, 0}, {0.5, kHalfSqrt3}},
                         {{rat(1, 3), rat(1, 3)}, {rat(2, 3), rat(2, 3)}},
                         {{1, 0, {0, 1}}, {0, 1, {-1, 0}}, {0, 1, {0, 0}}});
    }
    if (name == "hexagonal-z2") {
        // The hexagonal grid re-expressed on the unit lattice; edge vectors
        // (1/3,1/3), (1/3,-2/3), (-2/3,1/3).
        return make_grid(2, {{1, 0}, {0, 1}},
                         {{rat(1, 3), rat(1, 3)}, {rat(2, 3), rat(2, 3)}},
                         {{0, 1, {0, 0}}, {0, 1, {0, -1}}, {0, 1, {-1, 0}}});
    }
    if (name == "square-octagon") {
        // Four anchors forming a diamond per cell; vector classes (0,2/3),
        // (2/3,0), (2/3,2/3), (-2/3,2/3). The two diagonal classes each
        // split into two anchor-pair orbits, giving the 3-regular
        // truncated-square lattice.
        return make_grid(2, {{0, 2}, {2, 0}},
                         {{rat(1, 6), rat(1, 2)},
                          {rat(1, 2), rat(5, 6)},
                          {rat(5, 6), rat(1, 2)},
                          {rat(1, 2), rat(1, 6)}},
                         {{2, 0, {1, 0}},
                          {1, 3, {0, 1}},
                          {0, 1, {0, 0}},
                          {3, 2, {0, 0}},
                          {1, 2, {0, 0}},
                          {0, 3, {0, 0}}});
    }
    throw ValidationError("unknown grid: " + std::string(name));
}

GridPtr builtin_grid_ptr(std::string_view name) {
    return std::make_shared<const GridSpec>(builtin_grid(name));
}

const std::vector<std::string>& builtin_grid_names() {
    static const std::vector<std::string> names = {
        "orthogonal-<d>", "square-centered", "triangular",
        "hexagonal",      "square-octagon",  "hexagonal-z2",
    };
    return names;
}

Vertex origin_vertex(const GridSpec& grid) {
    return Vertex{0, LatticeVec(static_cast<std::size_t>(grid.dimension()), 0)};
}

std::vector<double> embed_vertex(const GridSpec& grid, const Vertex& v) {
    if (v.anchor < 0 || v.anchor >= static_cast<int>(grid.anchors().size())) {
        throw ValidationError("invalid anchor index");
    }
    if (v.lattice.size() != static_cast<std::size_t>(grid.dimension())) {
        throw ValidationError("vertex lattice vector has wrong dimension");
    }
    const RationalVec pos = grid.position(v);
    const int d = grid.dimension();
    std::vector<double> out(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < d; ++i) {
        const double c = to_double(pos[static_cast<std::size_t>(i)]);
        for (int j = 0; j < d; ++j) {
            out[static_cast<std::size_t>(j)] +=
                c * grid.basis()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return out;
}

std::optional<Vertex> unembed_point(const GridSpec& grid, const std::vector<double>& point,
                                    double tol) {
    if (point.size() != static_cast<std::size_t>(grid.dimension())) return std::nullopt;
    const std::vector<double> coords = basis_coordinates(grid.basis(), point);
    for (int a = 0; a < static_cast<int>(grid.anchors().size()); ++a) {
        const RationalVec& beta = grid.anchors()[static_cast<std::size_t>(a)];
        LatticeVec lattice(coords.size());
        bool ok = true;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const double raw = coords[i] - to_double(beta[i]);
            const double rounded = std::round(raw);
            if (std::abs(raw - rounded) > tol) {
                ok = false;
                break;
            }
            lattice[i] = static_cast<std::int64_t>(rounded);
        }
        if (ok) return Vertex{a, std::move(lattice)};
    }
    return std::nullopt;
}

std::optional<int> is_edge(const GridSpec& grid, const Vertex& v, const Vertex& w) {
    const RationalVec pv = grid.position(v);
    const RationalVec pw = grid.position(w);
    RationalVec delta(pv.size());
    for (std::size_t i = 0; i < pv.size(); ++i) delta[i] = pw[i] - pv[i];

    for (int k = 1; k <= grid.generator_count(); ++k) {
        const EdgeGenerator& g = grid.generators()[static_cast<std::size_t>(k - 1)];
        const bool pair_ok = (v.anchor == g.from_anchor && w.anchor == g.to_anchor) ||
                             (v.anchor == g.to_anchor && w.anchor == g.from_anchor);
        if (!pair_ok) continue;
        const RationalVec& gv = grid.generator_vector(k);
        if (delta == gv) return k;
        if (delta == negated(gv)) return -k;
    }
    return std::nullopt;
}

std::optional<Vertex> apply_step(const GridSpec& grid, const Vertex& v, int signed_index) {
    const int k = std::abs(signed_index);
    if (signed_index == 0 || k > grid.generator_count()) {
        throw ValidationError("step index out of range: " + std::to_string(signed_index));
    }
    const EdgeGenerator& g = grid.generators()[static_cast<std::size_t>(k - 1)];
    if (v.anchor != g.from_anchor && v.anchor != g.to_anchor) return std::nullopt;
    const int other = (v.anchor == g.from_anchor) ? g.to_anchor : g.from_anchor;

    const RationalVec pos = grid.position(v);
    const RationalVec& gv = grid.generator_vector(k);
    const RationalVec& beta = grid.anchors()[static_cast<std::size_t>(other)];
    LatticeVec lattice(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        const Rational target =
            (signed_index > 0) ? pos[i] + gv[i] - beta[i] : pos[i] - gv[i] - beta[i];
        if (!is_integral(target)) return std::nullopt;
        lattice[i] = target.numerator();
    }
    Vertex w{other, std::move(lattice)};
    // Guard against a different generator claiming the same displacement;
    // validation makes (pair, +-vector) unique, so this only rejects steps
    // whose displacement belongs to another index.
    if (is_edge(grid, v, w) != std::optional<int>(signed_index)) return std::nullopt;
    return w;
}

std::vector<std::pair<int, Vertex>> neighbors(const GridSpec& grid, const Vertex& v) {
    std::vector<std::pair<int, Vertex>> out;
    for (int k = 1; k <= grid.generator_count(); ++k) {
        for (const int signed_index : {k, -k}) {
            if (auto w = apply_step(grid, v, signed_index)) {
                out.emplace_back(signed_index, std::move(*w));
            }
        }
    }
    return out;
}

GridSpec project_grid(const GridSpec& grid, const std::vector<std::vector<double>>& linear_map) {
    const auto d = static_cast<std::size_t>(grid.dimension());
    if (linear_map.empty()) throw ValidationError("empty linear map");
    const std::size_t out_dim = linear_map.size();
    for (const auto& row : linear_map) {
        if (row.size() != d) throw ValidationError("linear map must have d columns");
    }
    if (out_dim != d) {
        // d basis vectors cannot be independent in a space of different
        // dimension (and a GridSpec basis is square).
        throw ValidationError("projected basis dependent: " + std::to_string(d) +
                              " basis vectors in R^" + std::to_string(out_dim));
    }
    std::vector<std::vector<double>> new_basis(d, std::vector<double>(out_dim, 0.0));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0; r < out_dim; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < d; ++c) acc += linear_map[r][c] * grid.basis()[j][c];
            new_basis[j][r] = acc;
        }
    }
    if (abs_determinant(new_basis) == 0.0) throw ValidationError("projected basis dependent");
    return make_grid(grid.dimension(), std::move(new_basis), grid.anchors(), grid.generators());
}

}  // namespace gridwalk
