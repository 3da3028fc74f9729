#pragma once

#include <string>
#include <vector>

#include "topo/terms.hpp"

namespace topo {

// One oriented rule rewriting a contiguous subword.
struct RewriteRule {
    std::string name;
    Word lhs;
    Word rhs;
};

// The full ordered rule list: idempotence of closure/interior, complement
// involution, the two rules that move a complement to the left past closure
// or interior, the two four-letter collapses, exterior expansion, boundary
// absorbing a complement, and identity elimination.
const std::vector<RewriteRule>& all_rules();

// Rules whose symbols lie inside the rewriting closure of `alphabet`
// (requesting the exterior pulls in the interior/closure/complement rules
// because it expands into them). The identity is always available.
std::vector<RewriteRule> rule_set(std::vector<Generator> alphabet);

struct RewriteStep {
    std::string rule;
    std::size_t position = 0;
    Word before;
    Word after;
};

struct NormalForm {
    Word word;
    std::vector<RewriteStep> trace;
};

// Repeatedly applies the applicable rule at the leftmost position (rule
// order breaks ties at equal positions) until no rule applies. Total and
// terminating on every word.
NormalForm normalize(const Word& w);

// Same fixpoint without recording a trace; cheaper for bulk sweeps.
Word normalized_word(const Word& w);

// True iff both words share the same normal form. Sound everywhere; a
// complete decision procedure on words over closure, interior, complement,
// exterior and the identity.
bool syntactically_equal(const Word& a, const Word& b);

}  // namespace topo
