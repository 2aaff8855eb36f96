#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gridwalk/lsystem.hpp"
#include "gridwalk/walk.hpp"

namespace gridwalk {

/// A named curve: a rewriting system bound to a grid, with the published
/// reference prefix frozen as a fixture and any known misprints documented.
struct CurveEntry {
    std::string name;

    bool is_static = false;  // fixed index string instead of a rewriting system
    Symbols static_steps;
    LSystem system;  // valid when !is_static

    std::string grid_name;       // empty when the sequence has no geometric binding
    std::map<int, int> step_map;  // alphabet symbol -> signed generator index (odd-extended);
                                  // empty means symbols are the indices themselves

    int recommended_generation = 0;
    Symbols fixture;                       // published prefix, stored verbatim
    std::string fixture_source;            // provenance note for the fixture
    std::vector<int> fixture_mismatches;   // 1-based positions where the rules provably
                                           // disagree with the published prefix
    std::map<int, Symbols> published_rule_variants;  // rules as published where the catalog
                                                     // deviates (documented misprints)
    Symbols half_difference_fixture;       // takagi only
    std::vector<int> half_difference_mismatches;
    std::string notes;
};

const std::vector<std::string>& curve_names();

/// Frozen catalog lookup. Throws ValidationError for unknown names.
const CurveEntry& curve_entry(std::string_view name);

/// Generation n of the entry as a plain integer sequence.
Symbols curve_sequence(std::string_view name, int n);

/// Generation n decoded as a walk on the entry's grid (via the entry's
/// symbol-to-step map). Throws for entries without a grid binding.
Walk curve_walk(std::string_view name, int n);

/// Maps an alphabet symbol to its signed step index under the entry's map.
int mapped_step(const CurveEntry& entry, int symbol);

/// output[i] = (seq[i] - seq[i+1]) / 2. Throws on an odd difference.
Symbols half_difference(const Symbols& seq);

/// True iff seq starts with a run of 1s and ends with a run of 3s, each of
/// length exactly 2^(n-1).
bool sierpinski_run_check(const Symbols& seq, int n);

}  // namespace gridwalk
