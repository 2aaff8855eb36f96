#include "gridwalk/config.hpp"

#include <charconv>

#include "gridwalk/errors.hpp"
#include "gridwalk/textio.hpp"

namespace gridwalk {

namespace {

using nlohmann::json;

Rational anchor_coordinate(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("anchor coordinates must be rational strings like \"1/3\"");
}

Closure closure_from_string(const std::string& s) {
    if (s == "explicit") return Closure::Explicit;
    if (s == "mirror") return Closure::Mirror;
    if (s == "negate") return Closure::Negate;
    throw ParseError("unknown closure: " + s);
}

std::string closure_to_string(Closure c) {
    switch (c) {
        case Closure::Explicit: return "explicit";
        case Closure::Mirror: return "mirror";
        case Closure::Negate: return "negate";
    }
    throw ValidationError("bad closure value");
}

json parse_json_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto parse_int = [&](std::string_view s) {
        std::int64_t value = 0;
        const auto* begin = s.data();
        const auto* end = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end) {
            throw ParseError("not a rational: '" + std::string(text) + "'");
        }
        return value;
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

GridSpec grid_from_json(const json& j) {
    try {
        const int dimension = j.at("dimension").get<int>();
        std::vector<std::vector<double>> basis;
        for (const auto& row : j.at("basis")) basis.push_back(row.get<std::vector<double>>());
        std::vector<RationalVec> anchors;
        for (const auto& anchor : j.at("anchors")) {
            RationalVec a;
            for (const auto& c : anchor) a.push_back(anchor_coordinate(c));
            anchors.push_back(std::move(a));
        }
        std::vector<EdgeGenerator> generators;
        for (const auto& g : j.at("generators")) {
            EdgeGenerator gen;
            gen.from_anchor = g.at("from").get<int>();
            gen.to_anchor = g.at("to").get<int>();
            gen.offset = g.at("offset").get<LatticeVec>();
            generators.push_back(std::move(gen));
        }
        return make_grid(dimension, std::move(basis), std::move(anchors), std::move(generators));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad grid config: ") + e.what());
    }
}

GridSpec load_grid_config(const std::string& path) { return grid_from_json(parse_json_file(path)); }

LSystem lsystem_from_json(const json& j) {
    try {
        LSystem ls;
        const std::string alphabet = j.value("alphabet", std::string("finite"));
        if (alphabet == "integers") {
            ls.all_integers = true;
        } else if (alphabet != "finite") {
            throw ParseError("alphabet must be \"finite\" or \"integers\"");
        }
        if (j.contains("symbols")) {
            for (const auto& s : j.at("symbols")) ls.alphabet.insert(s.get<int>());
        }
        if (j.contains("formula") && j.contains("rules")) {
            throw ParseError("\"formula\" and \"rules\" are mutually exclusive");
        }
        if (j.contains("formula")) {
            ls.formula = j.at("formula").get<std::string>();
        }
        if (j.contains("rules")) {
            for (const auto& [key, body] : j.at("rules").items()) {
                int symbol = 0;
                const auto* begin = key.data();
                auto [ptr, ec] = std::from_chars(begin, begin + key.size(), symbol);
                if (ec != std::errc() || ptr != begin + key.size()) {
                    throw ParseError("rule key is not an integer: '" + key + "'");
                }
                ls.table.emplace(symbol, body.get<Symbols>());
            }
        }
        ls.closure = closure_from_string(j.value("closure", std::string("explicit")));
        ls.start = j.at("start").get<Symbols>();
        return make_lsystem(std::move(ls));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad l-system config: ") + e.what());
    }
}

nlohmann::json lsystem_to_json(const LSystem& ls) {
    json j;
    j["alphabet"] = ls.all_integers ? "integers" : "finite";
    if (!ls.alphabet.empty()) j["symbols"] = ls.alphabet;
    if (!ls.formula.empty()) {
        j["formula"] = ls.formula;
    } else {
        json rules = json::object();
        for (const auto& [symbol, body] : ls.table) rules[std::to_string(symbol)] = body;
        j["rules"] = std::move(rules);
    }
    j["closure"] = closure_to_string(ls.closure);
    j["start"] = ls.start;
    return j;
}

LSystem load_lsystem_config(const std::string& path) {
    return lsystem_from_json(parse_json_file(path));
}

}  // namespace gridwalk
