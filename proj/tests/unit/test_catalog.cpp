#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "gridwalk/catalog.hpp"
#include "gridwalk/config.hpp"
#include "gridwalk/errors.hpp"
#include "gridwalk/textio.hpp"

using namespace gridwalk;

namespace {

Symbols load_fixture(const std::string& file) {
    return parse_index_sequence(read_file(std::string(GRIDWALK_FIXTURE_DIR) + "/" + file));
}

std::vector<int> mismatch_positions(const Symbols& a, const Symbols& b) {
    std::vector<int> out;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

}  // namespace

TEST_CASE("catalog lookups") {
    CHECK(curve_names().size() == 9);
    CHECK_THROWS_AS(curve_entry("no-such-curve"), ValidationError);

    const CurveEntry& levy = curve_entry("levy-c");
    CHECK(levy.system.table.at(1) == Symbols{1, 2});
    CHECK(levy.system.table.at(2) == Symbols{2, -1});
    CHECK(levy.system.closure == Closure::Negate);

    const CurveEntry& rabbit = curve_entry("rabbit");
    CHECK(rabbit.system.table.at(0) == Symbols{1});
    CHECK(rabbit.system.table.at(1) == Symbols{1, 0});
    CHECK(rabbit.system.start == Symbols{0});

    const CurveEntry& sierpinski = curve_entry("sierpinski-triangle");
    CHECK(sierpinski.system.table.at(0) == Symbols{1, 2, 3});
    CHECK(sierpinski.system.table.at(2) == Symbols{2, 3, 2, 1, 2});
}

TEST_CASE("fixture files round-trip into the frozen catalog data") {
    CHECK(load_fixture("brgray-a164677.txt") == curve_entry("brgray").fixture);
    CHECK(load_fixture("gosper-flowsnake.txt") == curve_entry("gosper-flowsnake").fixture);
    CHECK(load_fixture("gosper-island.txt") == curve_entry("gosper-island").fixture);
    CHECK(load_fixture("levy-c.txt") == curve_entry("levy-c").fixture);
    CHECK(load_fixture("takagi.txt") == curve_entry("takagi").fixture);
    CHECK(load_fixture("takagi-half-difference.txt") ==
          curve_entry("takagi").half_difference_fixture);
    CHECK(load_fixture("gray-nonreflected-3.txt") == curve_entry("gray-nonreflected-3").fixture);
    CHECK(load_fixture("rabbit.txt") == curve_entry("rabbit").fixture);
}

TEST_CASE("fixture matching at the recommended generation") {
    for (const std::string& name : curve_names()) {
        const CurveEntry& entry = curve_entry(name);
        if (entry.fixture.empty()) continue;
        const Symbols seq = curve_sequence(name, entry.recommended_generation);
        REQUIRE(seq.size() >= entry.fixture.size());
        const Symbols prefix(seq.begin(),
                             seq.begin() + static_cast<std::ptrdiff_t>(entry.fixture.size()));
        CHECK_MESSAGE(mismatch_positions(prefix, entry.fixture) == entry.fixture_mismatches,
                      name);
    }
}

TEST_CASE("gosper-flowsnake") {
    // first 22 terms of any generation >= 2
    const Symbols expected22 = {1, 2, -1, 3, 1, 1, -3, 1, 2, 2, -1,
                                -2, 3, 2, 3, -1, -1, -3, 1, -2, -1, 3};
    for (int n = 2; n <= 4; ++n) {
        const Symbols seq = curve_sequence("gosper-flowsnake", n);
        CHECK(Symbols(seq.begin(), seq.begin() + 22) == expected22);
    }

    // the published table variant flips exactly term 23 of generation 2
    const CurveEntry& entry = curve_entry("gosper-flowsnake");
    LSystem published = entry.system;
    published.table[3] = entry.published_rule_variants.at(3);
    const Symbols variant_gen2 = generation(make_lsystem(std::move(published)), 2);
    const Symbols catalog_gen2 = curve_sequence("gosper-flowsnake", 2);
    const Symbols v28(variant_gen2.begin(), variant_gen2.begin() + 28);
    CHECK(mismatch_positions(v28, entry.fixture) == std::vector<int>{23});
    CHECK(v28[22] == 1);
    CHECK(entry.fixture[22] == -1);
    CHECK(mismatch_positions(Symbols(catalog_gen2.begin(), catalog_gen2.begin() + 28),
                             entry.fixture)
              .empty());
}

TEST_CASE("gosper-island") {
    const CurveEntry& entry = curve_entry("gosper-island");
    // the prefix is generation 4 exactly; generation 3 diverges at position
    // 10 and generation 5 at position 28
    const Symbols g3 = curve_sequence("gosper-island", 3);
    const Symbols g4 = curve_sequence("gosper-island", 4);
    const Symbols g5 = curve_sequence("gosper-island", 5);
    CHECK(Symbols(g4.begin(), g4.begin() + 31) == entry.fixture);
    CHECK(mismatch_positions(Symbols(g3.begin(), g3.begin() + 31), entry.fixture).front() == 10);
    CHECK(mismatch_positions(Symbols(g5.begin(), g5.begin() + 31), entry.fixture).front() == 28);

    // binding of the rule block to the prefix: generation 3 from start 1
    LSystem from_one = entry.system;
    from_one.start = {1};
    const Symbols bound = generation(make_lsystem(std::move(from_one)), 3);
    CHECK(bound == Symbols(entry.fixture.begin(), entry.fixture.begin() + 27));

    // the published rule variant for -1 breaks closure of generation 2
    LSystem published = entry.system;
    published.table[-1] = entry.published_rule_variants.at(-1);
    published = make_lsystem(std::move(published));
    auto tri = builtin_grid_ptr("triangular");
    const Walk broken = make_walk(tri, generation(published, 2));
    CHECK(!net_displacement(broken).is_zero());
}

TEST_CASE("island and sierpinski generations decode closed on the triangular grid") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(net_displacement(curve_walk("gosper-island", n)).is_zero());
        CHECK(net_displacement(curve_walk("sierpinski-triangle", n)).is_zero());
    }
}

TEST_CASE("self-avoidance of the decoded curves") {
    for (int n = 1; n <= 3; ++n) {
        const WalkReport r = classify(curve_walk("gosper-flowsnake", n));
        CHECK(r.is_curve);
        CHECK(r.is_eulerian);
    }
    // the C-curve substitution folds onto itself from generation 4 on
    for (int n = 1; n <= 3; ++n) {
        CHECK(classify(curve_walk("levy-c", n)).is_eulerian);
    }
    CHECK(!classify(curve_walk("levy-c", 4)).is_eulerian);
}

TEST_CASE("levy-c published prefix carries a documented transcription slip") {
    const CurveEntry& entry = curve_entry("levy-c");
    const Symbols g6 = curve_sequence("levy-c", 6);
    REQUIRE(g6.size() == 64);
    const Symbols prefix(g6.begin(), g6.begin() + 37);
    CHECK(mismatch_positions(prefix, entry.fixture) ==
          std::vector<int>{29, 30, 31, 32, 33, 34, 35, 36});
    // higher generations agree with generation 6 on the window
    const Symbols g7 = curve_sequence("levy-c", 7);
    CHECK(Symbols(g7.begin(), g7.begin() + 37) == prefix);
    // the first 28 published terms are exact
    CHECK(std::equal(entry.fixture.begin(), entry.fixture.begin() + 28, g6.begin()));
    // dropping the duplicated block at 29-32 reconciles the remainder
    Symbols repaired(entry.fixture.begin(), entry.fixture.begin() + 28);
    repaired.insert(repaired.end(), entry.fixture.begin() + 32, entry.fixture.end());
    CHECK(std::equal(repaired.begin(), repaired.end(), g6.begin()));
}

TEST_CASE("takagi") {
    const CurveEntry& entry = curve_entry("takagi");
    const Symbols g6 = curve_sequence("takagi", 6);
    REQUIRE(g6.size() == 64);
    CHECK(Symbols(g6.begin(), g6.begin() + 55) == entry.fixture);

    for (int n = 0; n <= 8; ++n) {
        const Symbols g = curve_sequence("takagi", n);
        CHECK(g.size() == (1u << n));
        CHECK(g.front() == n);
        CHECK(g.back() == -n);
    }

    const Symbols half = half_difference(g6);
    REQUIRE(half.size() == 63);
    CHECK(Symbols(half.begin(), half.begin() + 15) ==
          Symbols(entry.half_difference_fixture.begin(),
                  entry.half_difference_fixture.begin() + 15));
    // documented mismatches against the published half-difference list
    const Symbols printed = entry.half_difference_fixture;
    const Symbols window(half.begin(),
                         half.begin() + static_cast<std::ptrdiff_t>(printed.size()));
    CHECK(mismatch_positions(window, printed) == entry.half_difference_mismatches);
    CHECK(half[15] == -3);
    CHECK(printed[15] == -4);
    CHECK(half[31] == -4);
    CHECK(printed[31] == -3);
}

TEST_CASE("half_difference") {
    CHECK(half_difference({6, 4, 4, 2}) == Symbols{1, 0, 1});
    CHECK(half_difference({5, 5, 5, 5}) == Symbols{0, 0, 0});
    CHECK(half_difference({}) == Symbols{});
    CHECK(half_difference({3}) == Symbols{});
    CHECK_THROWS_AS(half_difference({1, 2}), ValidationError);
    const Symbols takagi6 = curve_sequence("takagi", 6);
    const Symbols first8(half_difference(takagi6).begin(), half_difference(takagi6).begin() + 8);
    CHECK(first8 == Symbols{1, 0, 1, -1, 1, 0, 1, -2});
}

TEST_CASE("sierpinski runs and lengths") {
    CHECK(curve_sequence("sierpinski-triangle", 1) == Symbols{1, 2, 3});
    CHECK(curve_sequence("sierpinski-triangle", 2) == Symbols{1, 1, 2, 3, 2, 1, 2, 3, 3});
    std::size_t expected = 3;
    for (int n = 1; n <= 6; ++n) {
        const Symbols g = curve_sequence("sierpinski-triangle", n);
        CHECK(g.size() == expected);
        expected *= 3;
        CHECK(sierpinski_run_check(g, n));
    }
    CHECK(!sierpinski_run_check(curve_sequence("sierpinski-triangle", 1), 2));
    CHECK(!sierpinski_run_check({2, 2}, 1));
}

TEST_CASE("symbol-to-step mapping") {
    const CurveEntry& s = curve_entry("sierpinski-triangle");
    CHECK(mapped_step(s, 1) == 1);
    CHECK(mapped_step(s, 2) == 3);
    CHECK(mapped_step(s, 3) == -2);
    CHECK(mapped_step(s, -2) == -3);
    CHECK_THROWS_AS(mapped_step(s, 5), ValidationError);
    const CurveEntry& flow = curve_entry("gosper-flowsnake");
    CHECK(mapped_step(flow, -3) == -3);
}

TEST_CASE("entries without grids refuse to decode") {
    CHECK_THROWS_AS(curve_walk("takagi", 3), ValidationError);
    CHECK_THROWS_AS(curve_walk("rabbit", 3), ValidationError);
    CHECK_NOTHROW(curve_walk("gray-nonreflected-3", 0));
    CHECK_NOTHROW(curve_walk("brgray", 3));
}

TEST_CASE("rule tables round-trip through the config format") {
    for (const std::string& name : curve_names()) {
        const CurveEntry& entry = curve_entry(name);
        if (entry.is_static) continue;
        const LSystem back = lsystem_from_json(lsystem_to_json(entry.system));
        CHECK(back.table == entry.system.table);
        CHECK(back.formula == entry.system.formula);
        CHECK(back.closure == entry.system.closure);
        CHECK(back.start == entry.system.start);
        CHECK(back.alphabet == entry.system.alphabet);
    }
}
