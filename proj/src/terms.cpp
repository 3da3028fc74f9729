#include "topo/terms.hpp"

#include <algorithm>
#include <array>

namespace topo {

namespace {

struct TokenEntry {
    std::string_view token;
    Generator gen;
};

// Longest tokens first so greedy matching is a plain linear scan.
constexpr std::array<TokenEntry, kGeneratorCount> kTokens{{
    {"id", Generator::Identity},
    {"bi", Generator::BoundaryInt},
    {"be", Generator::BoundaryExt},
    {"b", Generator::Boundary},
    {"c", Generator::Closure},
    {"d", Generator::Derived},
    {"e", Generator::Exterior},
    {"i", Generator::Interior},
    {"n", Generator::Complement},
}};

bool is_separator(char ch) { return ch == '.' || ch == ' ' || ch == '\t'; }

}  // namespace

std::string_view token_of(Generator g) {
    switch (g) {
        case Generator::Identity: return "id";
        case Generator::Closure: return "c";
        case Generator::Interior: return "i";
        case Generator::Complement: return "n";
        case Generator::Exterior: return "e";
        case Generator::Boundary: return "b";
        case Generator::BoundaryInt: return "bi";
        case Generator::BoundaryExt: return "be";
        case Generator::Derived: return "d";
    }
    return "?";
}

int lex_rank(Generator g) {
    switch (g) {
        case Generator::Boundary: return 0;
        case Generator::BoundaryExt: return 1;
        case Generator::BoundaryInt: return 2;
        case Generator::Closure: return 3;
        case Generator::Derived: return 4;
        case Generator::Exterior: return 5;
        case Generator::Interior: return 6;
        case Generator::Identity: return 7;
        case Generator::Complement: return 8;
    }
    return 9;
}

const std::vector<Generator>& all_generators() {
    static const std::vector<Generator> gens = [] {
        std::vector<Generator> g{
            Generator::Identity,    Generator::Closure,     Generator::Interior,
            Generator::Complement,  Generator::Exterior,    Generator::Boundary,
            Generator::BoundaryInt, Generator::BoundaryExt, Generator::Derived,
        };
        std::sort(g.begin(), g.end(),
                  [](Generator a, Generator b) { return lex_rank(a) < lex_rank(b); });
        return g;
    }();
    return gens;
}

bool lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(
        a.gens.begin(), a.gens.end(), b.gens.begin(), b.gens.end(),
        [](Generator x, Generator y) { return lex_rank(x) < lex_rank(y); });
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

Word parse_word(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (is_separator(text[pos])) {
            ++pos;
            continue;
        }
        bool matched = false;
        for (const auto& [token, gen] : kTokens) {
            if (text.substr(pos, token.size()) == token) {
                w.gens.push_back(gen);
                pos += token.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw ParseError(pos, "unknown token at offset " + std::to_string(pos) + ": '" +
                                      std::string(1, text[pos]) + "'");
        }
    }
    return w;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "id";
    std::string out;
    for (Generator g : w.gens) {
        if (!out.empty()) out += '.';
        out += token_of(g);
    }
    return out;
}

Word compose(const Word& outer, const Word& inner) {
    Word out;
    out.gens.reserve(outer.size() + inner.size());
    for (Generator g : outer.gens)
        if (g != Generator::Identity) out.gens.push_back(g);
    for (Generator g : inner.gens)
        if (g != Generator::Identity) out.gens.push_back(g);
    return out;
}

}  // namespace topo
