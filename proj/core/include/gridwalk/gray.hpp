#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "gridwalk/walk.hpp"

namespace gridwalk {

/// An ordered list of bit vectors of fixed dimension.
struct BinaryCode {
    int dimension = 0;
    std::vector<std::vector<std::uint8_t>> vertices;

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;
    friend auto operator<=>(const BinaryCode&, const BinaryCode&) = default;
};

/// Per-step coordinate indices, delta[i] + 1 = |step[i]|.
struct DeltaSequence {
    int dimension = 0;
    std::vector<int> values;  // each in 0..dimension-1
};

/// The normalized binary reflected Gray code of dimension d as a walk on
/// orthogonal-d from the origin (empty walk for d = 0). Generation d-1 of
/// the brgray rewriting system.
Walk brgray(int d);

/// Decodes a walk on an orthogonal grid into a code, checking all vertices
/// lie in {0,1}^d.
BinaryCode code_of_walk(const Walk& walk);

/// Consecutive Hamming distance one, entries in {0,1}, vertices pairwise
/// distinct.
bool is_gray_code(const BinaryCode& code);

/// Recursive reflection test: some coordinate is constant on the first
/// half, the second half is the first half reversed with that coordinate
/// flipped, and the first half without it is again reflected. Length-1
/// codes qualify.
bool is_brgray(const BinaryCode& code);

/// All images of the canonical code under coordinate permutations and
/// per-coordinate bit flips (the d!*2^d isometries). d <= 6.
std::set<BinaryCode> isometry_orbit(int d);

/// Every Hamiltonian path of the d-cube starting at the all-zeros vertex,
/// by exhaustive backtracking over coordinates in increasing order. d <= 3.
std::vector<BinaryCode> enumerate_gray_codes(int d);

/// delta[i] = |step[i]| - 1. The walk must live on the unit cube.
DeltaSequence to_delta(const Walk& walk);

/// Reconstructs the unique binary walk with the given deltas from the
/// origin: the step sign toggles the addressed coordinate.
Walk from_delta(int d, const std::vector<int>& deltas);

}  // namespace gridwalk
