#include "gridwalk/gray.hpp"

#include <algorithm>
#include <string>

#include "gridwalk/errors.hpp"
#include "gridwalk/lsystem.hpp"

namespace gridwalk {

namespace {

LSystem brgray_system() {
    LSystem ls;
    ls.formula = "brgray";
    ls.start = {1};
    return make_lsystem(std::move(ls));
}

}  // namespace

Walk brgray(int d) {
    if (d < 0) throw ValidationError("dimension must be non-negative");
    GridPtr grid = builtin_grid_ptr("orthogonal-" + std::to_string(std::max(d, 1)));
    if (d == 0) return make_walk(std::move(grid), {});
    // Generation d-1 carries the d-dimensional code.
    return make_walk(std::move(grid), generation(brgray_system(), d - 1));
}

BinaryCode code_of_walk(const Walk& walk) {
    const std::vector<Vertex> vertices = decode(walk);
    BinaryCode code;
    code.dimension = walk.grid->dimension();
    code.vertices.reserve(vertices.size());
    for (const Vertex& v : vertices) {
        std::vector<std::uint8_t> bits(v.lattice.size());
        for (std::size_t i = 0; i < v.lattice.size(); ++i) {
            if (v.lattice[i] != 0 && v.lattice[i] != 1) {
                throw ValidationError("walk leaves the unit cube");
            }
            bits[i] = static_cast<std::uint8_t>(v.lattice[i]);
        }
        code.vertices.push_back(std::move(bits));
    }
    return code;
}

bool is_gray_code(const BinaryCode& code) {
    const auto d = static_cast<std::size_t>(code.dimension);
    for (const auto& v : code.vertices) {
        if (v.size() != d) return false;
        for (const auto bit : v) {
            if (bit > 1) return false;
        }
    }
    for (std::size_t i = 0; i + 1 < code.vertices.size(); ++i) {
        int hamming = 0;
        for (std::size_t j = 0; j < d; ++j) {
            hamming += code.vertices[i][j] != code.vertices[i + 1][j];
        }
        if (hamming != 1) return false;
    }
    auto sorted = code.vertices;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

bool is_brgray_impl(const std::vector<std::vector<std::uint8_t>>& code) {
    const std::size_t n = code.size();
    if (n == 1) return true;
    if (n % 2 == 1) return false;
    const std::size_t d = code.front().size();
    const std::size_t half = n / 2;
    for (std::size_t c = 0; c < d; ++c) {
        bool constant = true;
        for (std::size_t i = 1; i < half && constant; ++i) {
            constant = code[i][c] == code[0][c];
        }
        if (!constant) continue;
        bool mirrored = true;
        for (std::size_t i = 0; i < half && mirrored; ++i) {
            const auto& src = code[half - 1 - i];
            const auto& dst = code[half + i];
            for (std::size_t j = 0; j < d; ++j) {
                const std::uint8_t want = (j == c) ? static_cast<std::uint8_t>(1 - src[j]) : src[j];
                if (want != dst[j]) {
                    mirrored = false;
                    break;
                }
            }
        }
        if (!mirrored) continue;
        std::vector<std::vector<std::uint8_t>> reduced;
        reduced.reserve(half);
        for (std::size_t i = 0; i < half; ++i) {
            std::vector<std::uint8_t> v;
            v.reserve(d - 1);
            for (std::size_t j = 0; j < d; ++j) {
                if (j != c) v.push_back(code[i][j]);
            }
            reduced.push_back(std::move(v));
        }
        if (is_brgray_impl(reduced)) return true;
    }
    return false;
}

}  // namespace

bool is_brgray(const BinaryCode& code) {
    if (code.vertices.empty()) return false;
    return is_brgray_impl(code.vertices);
}

std::set<BinaryCode> isometry_orbit(int d) {
    if (d < 1 || d > 6) throw ValidationError("isometry orbits are built for 1 <= d <= 6");
    const BinaryCode base = code_of_walk(brgray(d));
    const auto ud = static_cast<std::size_t>(d);

    std::vector<std::size_t> perm(ud);
    for (std::size_t i = 0; i < ud; ++i) perm[i] = i;

    std::set<BinaryCode> orbit;
    do {
        for (std::uint32_t flips = 0; flips < (1u << ud); ++flips) {
            BinaryCode image;
            image.dimension = d;
            image.vertices.reserve(base.vertices.size());
            for (const auto& v : base.vertices) {
                std::vector<std::uint8_t> w(ud);
                for (std::size_t i = 0; i < ud; ++i) {
                    w[i] = static_cast<std::uint8_t>(v[perm[i]] ^ ((flips >> i) & 1u));
                }
                image.vertices.push_back(std::move(w));
            }
            orbit.insert(std::move(image));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return orbit;
}

namespace {

void enumerate_paths(std::vector<std::vector<std::uint8_t>>& path,
                     std::set<std::vector<std::uint8_t>>& used, std::size_t total, int d,
                     std::vector<BinaryCode>& out) {
    if (path.size() == total) {
        out.push_back(BinaryCode{d, path});
        return;
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(d); ++c) {
        std::vector<std::uint8_t> next = path.back();
        next[c] ^= 1u;
        if (used.count(next)) continue;
        used.insert(next);
        path.push_back(next);
        enumerate_paths(path, used, total, d, out);
        path.pop_back();
        used.erase(next);
    }
}

}  // namespace

std::vector<BinaryCode> enumerate_gray_codes(int d) {
    if (d < 1 || d > 3) throw ValidationError("exhaustive enumeration is limited to d <= 3");
    std::vector<std::vector<std::uint8_t>> path{std::vector<std::uint8_t>(static_cast<std::size_t>(d), 0)};
    std::set<std::vector<std::uint8_t>> used{path.front()};
    std::vector<BinaryCode> out;
    enumerate_paths(path, used, 1u << static_cast<std::size_t>(d), d, out);
    return out;
}

DeltaSequence to_delta(const Walk& walk) {
    code_of_walk(walk);  // validates the unit-cube precondition
    DeltaSequence delta;
    delta.dimension = walk.grid->dimension();
    delta.values.reserve(walk.steps.size());
    for (const int k : walk.steps) delta.values.push_back(std::abs(k) - 1);
    return delta;
}

Walk from_delta(int d, const std::vector<int>& deltas) {
    if (d < 1) throw ValidationError("dimension must be positive");
    GridPtr grid = builtin_grid_ptr("orthogonal-" + std::to_string(d));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(d), 0);
    std::vector<int> steps;
    steps.reserve(deltas.size());
    for (const int delta : deltas) {
        if (delta < 0 || delta >= d) {
            throw ValidationError("delta value out of range: " + std::to_string(delta));
        }
        const auto c = static_cast<std::size_t>(delta);
        // Toggle: step up from 0, down from 1; the walk cannot leave the cube.
        steps.push_back(bits[c] == 0 ? delta + 1 : -(delta + 1));
        bits[c] ^= 1u;
    }
    return make_walk(std::move(grid), std::move(steps));
}

}  // namespace gridwalk
