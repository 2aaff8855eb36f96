#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gridwalk {

/// A string over an integer alphabet.
using Symbols = std::vector<int>;

/// How rules for negative symbols are obtained when the table lists only
/// the positive ones.
enum class Closure {
    Explicit,  // every rule is in the table
    Mirror,    // P(-k) = -R(P(k))
    Negate,    // P(-x) = -P(x)
};

struct LSystem {
    bool all_integers = false;       // alphabet is Z (formula systems)
    std::set<int> alphabet;          // finite alphabet, empty when all_integers
    std::map<int, Symbols> table;    // explicit production rules
    std::string formula;             // "" | "brgray" | "takagi"
    Closure closure = Closure::Explicit;
    Symbols start;
};

Symbols string_reverse(Symbols s);

/// -R(s): reversed and negated, the mirror image of a rule body.
Symbols neg_reverse_string(Symbols s);

/// Validates the system: closure conflicts (a negative rule listed under a
/// mirror/negate closure), missing rules for symbols reachable from the
/// start or any rule body, unknown formula names.
LSystem make_lsystem(LSystem raw);

/// Closure-resolved rule lookup. Throws ValidationError for a symbol
/// without a rule.
Symbols rule_for(const LSystem& ls, int symbol);

/// One parallel rewriting step: concatenation of the rule images in order.
Symbols apply_once(const LSystem& ls, const Symbols& s);

/// Generation n = P^n(start); generation 0 is the start itself.
Symbols generation(const LSystem& ls, int n);

/// One squaring step on an explicit rule table: v -> P(P(v)).
std::map<int, Symbols> square_rules(const std::map<int, Symbols>& rules);

/// P^(2^m)(start) via m rule squarings. Equals generation(ls, 2^m); formula
/// rules are memoized over the symbols actually reached.
Symbols generation_by_squaring(const LSystem& ls, int m);

/// Splits symbols into constants (P(x) = <x>) and variables. Finite
/// alphabets are scanned whole; all-integer systems scan [-upto, upto].
std::pair<std::vector<int>, std::vector<int>> partition_symbols(const LSystem& ls, int upto = 0);

/// True iff P(start) has the start string as a proper prefix, which makes
/// the generations nested prefixes of each other.
bool is_self_similar(const LSystem& ls);

}  // namespace gridwalk
