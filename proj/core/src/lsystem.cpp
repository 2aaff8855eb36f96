#include "gridwalk/lsystem.hpp"

#include <algorithm>
#include <stdexcept>

#include "gridwalk/errors.hpp"

namespace gridwalk {

namespace {

Symbols brgray_formula(int k) {
    if (k == 0) return {0};
    if (k == 1) return {1, 2, -1};
    if (k > 1) return {k + 1};
    return neg_reverse_string(brgray_formula(-k));
}

Symbols takagi_formula(int n) { return {n + 1, n - 1}; }

}  // namespace

Symbols string_reverse(Symbols s) {
    std::reverse(s.begin(), s.end());
    return s;
}

Symbols neg_reverse_string(Symbols s) {
    std::reverse(s.begin(), s.end());
    for (int& x : s) x = -x;
    return s;
}

Symbols rule_for(const LSystem& ls, int symbol) {
    if (!ls.formula.empty()) {
        if (ls.formula == "brgray") return brgray_formula(symbol);
        if (ls.formula == "takagi") return takagi_formula(symbol);
        throw ValidationError("unknown rule formula: " + ls.formula);
    }
    if (auto it = ls.table.find(symbol); it != ls.table.end()) return it->second;
    if (symbol < 0) {
        if (auto it = ls.table.find(-symbol); it != ls.table.end()) {
            if (ls.closure == Closure::Mirror) return neg_reverse_string(it->second);
            if (ls.closure == Closure::Negate) {
                Symbols body = it->second;
                for (int& x : body) x = -x;
                return body;
            }
        }
    }
    throw ValidationError("no production rule for symbol " + std::to_string(symbol));
}

LSystem make_lsystem(LSystem raw) {
    if (!raw.formula.empty()) {
        if (raw.formula != "brgray" && raw.formula != "takagi") {
            throw ValidationError("unknown rule formula: " + raw.formula);
        }
        if (!raw.table.empty()) {
            throw ValidationError("formula rules and an explicit table are mutually exclusive");
        }
        raw.all_integers = true;
        return raw;
    }
    if (raw.closure != Closure::Explicit) {
        for (const auto& [symbol, body] : raw.table) {
            if (symbol < 0) {
                throw ValidationError("explicit rule for symbol " + std::to_string(symbol) +
                                      " conflicts with the closure convention");
            }
        }
    }
    // Every symbol reachable from the start or any rule body needs a rule.
    auto check_symbols = [&raw](const Symbols& s) {
        for (const int x : s) {
            rule_for(raw, x);
            if (!raw.all_integers && !raw.alphabet.empty() && !raw.alphabet.count(x)) {
                throw ValidationError("symbol " + std::to_string(x) + " is not in the alphabet");
            }
        }
    };
    check_symbols(raw.start);
    for (const auto& [symbol, body] : raw.table) {
        (void)symbol;
        check_symbols(body);
    }
    return raw;
}

Symbols apply_once(const LSystem& ls, const Symbols& s) {
    Symbols out;
    out.reserve(s.size() * 2);
    for (const int x : s) {
        const Symbols body = rule_for(ls, x);
        out.insert(out.end(), body.begin(), body.end());
    }
    return out;
}

Symbols generation(const LSystem& ls, int n) {
    if (n < 0) throw ValidationError("generation index must be non-negative");
    Symbols s = ls.start;
    for (int i = 0; i < n; ++i) s = apply_once(ls, s);
    return s;
}

std::map<int, Symbols> square_rules(const std::map<int, Symbols>& rules) {
    auto body_of = [&](int symbol) -> const Symbols& {
        auto it = rules.find(symbol);
        if (it == rules.end()) {
            throw ValidationError("no production rule for symbol " + std::to_string(symbol));
        }
        return it->second;
    };
    std::map<int, Symbols> squared;
    for (const auto& [symbol, body] : rules) {
        Symbols image;
        for (const int x : body) {
            const Symbols& b = body_of(x);
            image.insert(image.end(), b.begin(), b.end());
        }
        squared.emplace(symbol, std::move(image));
    }
    return squared;
}

Symbols generation_by_squaring(const LSystem& ls, int m) {
    if (m < 0) throw ValidationError("squaring count must be non-negative");
    // levels[i] maps a symbol to its P^(2^i) image, filled lazily so formula
    // systems only expand the symbols actually reached.
    std::vector<std::map<int, Symbols>> levels(static_cast<std::size_t>(m) + 1);

    auto image = [&](auto&& self, int level, int symbol) -> const Symbols& {
        auto& memo = levels[static_cast<std::size_t>(level)];
        if (auto it = memo.find(symbol); it != memo.end()) return it->second;
        Symbols value;
        if (level == 0) {
            value = rule_for(ls, symbol);
        } else {
            for (const int x : self(self, level - 1, symbol)) {
                const Symbols& b = self(self, level - 1, x);
                value.insert(value.end(), b.begin(), b.end());
            }
        }
        return memo.emplace(symbol, std::move(value)).first->second;
    };

    // P^(2^m)(start): one application of the level-m rules to the start.
    Symbols out;
    for (const int x : ls.start) {
        const Symbols& b = image(image, m, x);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> partition_symbols(const LSystem& ls, int upto) {
    std::vector<int> domain;
    if (!ls.formula.empty() || ls.all_integers) {
        if (upto < 0) throw ValidationError("symbol bound must be non-negative");
        if (upto == 0 && ls.alphabet.empty()) {
            throw ValidationError("an explicit bound is required for an infinite alphabet");
        }
        for (int x = -upto; x <= upto; ++x) domain.push_back(x);
    } else if (!ls.alphabet.empty()) {
        domain.assign(ls.alphabet.begin(), ls.alphabet.end());
    } else {
        for (const auto& [symbol, body] : ls.table) {
            (void)body;
            domain.push_back(symbol);
        }
    }
    std::vector<int> constants;
    std::vector<int> variables;
    for (const int x : domain) {
        if (rule_for(ls, x) == Symbols{x}) {
            constants.push_back(x);
        } else {
            variables.push_back(x);
        }
    }
    return {std::move(constants), std::move(variables)};
}

bool is_self_similar(const LSystem& ls) {
    if (ls.start.empty()) return false;
    const Symbols image = apply_once(ls, ls.start);
    if (image.size() <= ls.start.size()) return false;
    return std::equal(ls.start.begin(), ls.start.end(), image.begin());
}

}  // namespace gridwalk
