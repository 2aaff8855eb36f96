#include <doctest.h>

#include <set>

#include "gridwalk/errors.hpp"
#include "gridwalk/gray.hpp"

using namespace gridwalk;

namespace {

// frozen by an exhaustive backtracking oracle run before the build:
// Hamiltonian paths of the 3-cube from a fixed start
constexpr std::size_t kHamiltonianPathsD3 = 18;
constexpr std::size_t kBrgrayPathsD3 = 6;

}  // namespace

TEST_CASE("brgray produces the normalized codes") {
    CHECK(brgray(0).steps.empty());
    CHECK(brgray(1).steps == std::vector<int>{1});
    CHECK(brgray(2).steps == std::vector<int>{1, 2, -1});
    CHECK(brgray(3).steps == std::vector<int>{1, 2, -1, 3, 1, -2, -1});
    CHECK(brgray(4).steps ==
          std::vector<int>{1, 2, -1, 3, 1, -2, -1, 4, 1, 2, -1, -3, 1, -2, -1});
    const std::vector<int> prefix32 = {1, 2, -1, 3, 1,  -2, -1, 4,  1, 2, -1, -3, 1, -2, -1, 5,
                                       1, 2, -1, 3, 1,  -2, -1, -4, 1, 2, -1, -3, 1, -2, -1, 6};
    const Walk g6 = brgray(6);
    REQUIRE(g6.steps.size() == 63);
    CHECK(std::vector<int>(g6.steps.begin(), g6.steps.begin() + 32) == prefix32);
    CHECK_THROWS_AS(brgray(-1), ValidationError);
}

TEST_CASE("brgray decodes to a Hamiltonian path of the cube") {
    for (int d = 1; d <= 10; ++d) {
        const BinaryCode code = code_of_walk(brgray(d));
        REQUIRE(code.vertices.size() == (1u << d));
        CHECK(is_gray_code(code));
        CHECK(is_brgray(code));
    }
}

TEST_CASE("is_gray_code / is_brgray") {
    auto o3 = builtin_grid_ptr("orthogonal-3");
    const BinaryCode nonreflected = code_of_walk(make_walk(o3, {1, 2, 3, -2, -1, 2, -3}));
    CHECK(is_gray_code(nonreflected));
    CHECK(!is_brgray(nonreflected));

    CHECK(is_brgray(code_of_walk(brgray(3))));

    const BinaryCode single{0, {{}}};
    CHECK(is_gray_code(single));
    CHECK(is_brgray(single));

    // revisiting a vertex disqualifies a code
    BinaryCode revisit{1, {{0}, {1}, {0}}};
    CHECK(!is_gray_code(revisit));
    // a Hamming-2 jump disqualifies a code
    BinaryCode jump{2, {{0, 0}, {1, 1}}};
    CHECK(!is_gray_code(jump));
}

TEST_CASE("isometry orbits realize the d!*2^d count") {
    std::size_t factorial = 1;
    for (int d = 1; d <= 5; ++d) {
        factorial *= static_cast<std::size_t>(d);
        const auto orbit = isometry_orbit(d);
        CHECK(orbit.size() == factorial * (1u << d));
        for (const BinaryCode& code : orbit) {
            CHECK(is_brgray(code));
        }
    }
    CHECK(isometry_orbit(1).size() == 2);
    CHECK_THROWS_AS(isometry_orbit(7), ValidationError);
}

TEST_CASE("exhaustive enumeration at desk scale") {
    CHECK(enumerate_gray_codes(1).size() == 1);
    CHECK(enumerate_gray_codes(2).size() == 2);
    const auto codes = enumerate_gray_codes(3);
    CHECK(codes.size() == kHamiltonianPathsD3);
    for (const BinaryCode& code : codes) {
        CHECK(is_gray_code(code));
    }

    std::set<BinaryCode> brgray_found;
    for (const BinaryCode& code : codes) {
        if (is_brgray(code)) brgray_found.insert(code);
    }
    CHECK(brgray_found.size() == kBrgrayPathsD3);

    // exactly the orbit members that start at the all-zeros vertex
    std::set<BinaryCode> orbit_from_origin;
    for (const BinaryCode& code : isometry_orbit(3)) {
        if (code.vertices.front() == std::vector<std::uint8_t>{0, 0, 0}) {
            orbit_from_origin.insert(code);
        }
    }
    CHECK(brgray_found == orbit_from_origin);

    CHECK_THROWS_AS(enumerate_gray_codes(4), ValidationError);
}

TEST_CASE("delta sequences") {
    CHECK(to_delta(brgray(3)).values == std::vector<int>{0, 1, 0, 2, 0, 1, 0});
    CHECK(to_delta(brgray(1)).values == std::vector<int>{0});

    for (int d = 1; d <= 8; ++d) {
        const Walk w = brgray(d);
        const DeltaSequence delta = to_delta(w);
        // positional relation delta[i] + 1 = |step[i]|
        for (std::size_t i = 0; i < w.steps.size(); ++i) {
            CHECK(delta.values[i] + 1 == std::abs(w.steps[i]));
        }
        const Walk back = from_delta(d, delta.values);
        CHECK(back.steps == w.steps);
    }

    CHECK_THROWS_AS(from_delta(2, {0, 2}), ValidationError);
    // to_delta requires a walk on the unit cube
    auto o2 = builtin_grid_ptr("orthogonal-2");
    CHECK_THROWS_AS(to_delta(make_walk(o2, {1, 1})), ValidationError);
}
