#include "topo/rewrite.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace topo {

namespace {

constexpr std::size_t kMaxLhsLen = 4;

std::array<bool, kGeneratorCount> symbol_set(std::vector<Generator> alphabet) {
    std::array<bool, kGeneratorCount> in{};
    in[static_cast<std::size_t>(Generator::Identity)] = true;
    for (Generator g : alphabet) in[static_cast<std::size_t>(g)] = true;
    return in;
}

bool covered(const Word& w, const std::array<bool, kGeneratorCount>& in) {
    for (Generator g : w.gens)
        if (!in[static_cast<std::size_t>(g)]) return false;
    return true;
}

template <bool WithTrace>
NormalForm run_normalize(const Word& input) {
    NormalForm nf;
    nf.word = input;
    auto& gens = nf.word.gens;
    const auto& rules = all_rules();
    const std::size_t n = input.size();
    // Exterior expansions occur at most once per symbol; everything else
    // shrinks the word or moves a complement strictly to the left.
    const std::size_t step_cap = 64 + 8 * n + 4 * n * n;
    std::size_t steps = 0;
    std::size_t low = 0;

restart:
    for (std::size_t pos = low; pos < gens.size(); ++pos) {
        for (const auto& rule : rules) {
            const auto& lhs = rule.lhs.gens;
            if (pos + lhs.size() > gens.size()) continue;
            if (!std::equal(lhs.begin(), lhs.end(), gens.begin() + pos)) continue;
            if (++steps > step_cap) throw std::logic_error("rewrite step bound exceeded");
            RewriteStep step;
            if constexpr (WithTrace) {
                step.rule = rule.name;
                step.position = pos;
                step.before = nf.word;
            }
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pos),
                       gens.begin() + static_cast<std::ptrdiff_t>(pos + lhs.size()));
            gens.insert(gens.begin() + static_cast<std::ptrdiff_t>(pos), rule.rhs.gens.begin(),
                        rule.rhs.gens.end());
            if constexpr (WithTrace) {
                step.after = nf.word;
                nf.trace.push_back(std::move(step));
            }
            // A new redex can only start inside or just before the spot we
            // rewrote; everything further left was already redex-free.
            low = pos >= kMaxLhsLen - 1 ? pos - (kMaxLhsLen - 1) : 0;
            goto restart;
        }
    }
    return nf;
}

}  // namespace

const std::vector<RewriteRule>& all_rules() {
    static const std::vector<RewriteRule> rules = {
        {"closure-idempotent", parse_word("c.c"), parse_word("c")},
        {"interior-idempotent", parse_word("i.i"), parse_word("i")},
        {"complement-involution", parse_word("n.n"), Word{}},
        {"closure-complement-swap", parse_word("c.n"), parse_word("n.i")},
        {"interior-complement-swap", parse_word("i.n"), parse_word("n.c")},
        {"cici-collapse", parse_word("c.i.c.i"), parse_word("c.i")},
        {"icic-collapse", parse_word("i.c.i.c"), parse_word("i.c")},
        {"exterior-expansion", parse_word("e"), parse_word("i.n")},
        {"boundary-absorbs-complement", parse_word("b.n"), parse_word("b")},
        {"identity-elimination", parse_word("id"), Word{}},
    };
    return rules;
}

std::vector<RewriteRule> rule_set(std::vector<Generator> alphabet) {
    auto in = symbol_set(std::move(alphabet));
    const auto& rules = all_rules();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : rules) {
            if (!covered(rule.lhs, in)) continue;
            for (Generator g : rule.rhs.gens) {
                auto idx = static_cast<std::size_t>(g);
                if (!in[idx]) {
                    in[idx] = true;
                    changed = true;
                }
            }
        }
    }
    std::vector<RewriteRule> out;
    for (const auto& rule : rules)
        if (covered(rule.lhs, in) && covered(rule.rhs, in)) out.push_back(rule);
    return out;
}

NormalForm normalize(const Word& w) { return run_normalize<true>(w); }

Word normalized_word(const Word& w) { return run_normalize<false>(w).word; }

bool syntactically_equal(const Word& a, const Word& b) {
    return normalized_word(a) == normalized_word(b);
}

}  // namespace topo
