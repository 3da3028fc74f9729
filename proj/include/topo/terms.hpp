#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace topo {

// The nine primitive operators acting on subsets of a topological space.
enum class Generator : std::uint8_t {
    Identity,
    Closure,
    Interior,
    Complement,
    Exterior,
    Boundary,
    BoundaryInt,
    BoundaryExt,
    Derived,
};

inline constexpr std::size_t kGeneratorCount = 9;

// Token spelling used by the word grammar; 'n' is the complement.
std::string_view token_of(Generator g);

// Rank used when comparing words lexicographically: alphabetical order of
// the token spellings (b < be < bi < c < d < e < i < id < n).
int lex_rank(Generator g);

// All nine generators in token order.
const std::vector<Generator>& all_generators();

// An operator word. The leftmost generator is the outermost operator, i.e.
// it is applied last: "c.i" maps A to closure(interior(A)). The empty word
// is the identity and prints as "id".
struct Word {
    std::vector<Generator> gens;

    Word() = default;
    explicit Word(std::vector<Generator> g) : gens(std::move(g)) {}

    std::size_t size() const { return gens.size(); }
    bool empty() const { return gens.empty(); }
    bool operator==(const Word&) const = default;
};

// Shorter words first, ties broken by token order.
bool shortlex_less(const Word& a, const Word& b);
bool lex_less(const Word& a, const Word& b);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Word grammar: tokens {id,c,i,n,e,b,bi,be,d} separated by optional '.' or
// spaces, greedy longest match ("bi" is one token, "b.i" or "b i" are two).
// The empty string parses to the identity word.
Word parse_word(std::string_view text);

// Dot-separated tokens; the empty word prints "id".
// parse_word(format_word(w)) == w for every word.
std::string format_word(const Word& w);

// Free-monoid product: outer acts after inner, so compose(c, i)(A) = c(i(A)).
// Identity generators are elided so identity words are neutral on both sides.
Word compose(const Word& outer, const Word& inner);

}  // namespace topo
