#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topo/rational.hpp"
#include "topo/terms.hpp"

namespace topo {

// Density status of an open interval cell. Bit 0: the cell contains every
// rational of the interval; bit 1: every irrational. Union is OR,
// intersection is AND, complement is XOR with Full.
enum class Density : std::uint8_t { Empty = 0, Rationals = 1, Irrationals = 2, Full = 3 };

inline std::uint8_t density_bits(Density d) { return static_cast<std::uint8_t>(d); }
inline Density density_from_bits(std::uint8_t b) { return static_cast<Density>(b & 3u); }
// Whether a rational point lying inside a cell of this status is a member.
inline bool rational_side(Density d) { return density_bits(d) & 1u; }

// A subset of the real line: finitely many exact rational breakpoints, a
// membership flag per breakpoint, and a density status per open cell
// (including the two unbounded end cells). Values are kept canonical:
// no breakpoint is removable.
struct RealLineSet {
    std::vector<Rational> breakpoints;  // strictly increasing
    std::vector<char> point_in;         // size == breakpoints.size()
    std::vector<Density> cells;         // size == breakpoints.size() + 1

    RealLineSet() : cells{Density::Empty} {}

    bool is_empty() const;
    bool operator==(const RealLineSet&) const = default;

    static RealLineSet empty_set() { return RealLineSet{}; }
    static RealLineSet whole_line() {
        RealLineSet s;
        s.cells = {Density::Full};
        return s;
    }
};

// Drops every breakpoint whose two neighbor cells share a status and whose
// membership agrees with that status (Full/Rationals want the point in,
// Empty/Irrationals want it out).
RealLineSet canonicalized(RealLineSet s);

RealLineSet complement_set(const RealLineSet& s);
RealLineSet interior_set(const RealLineSet& s);
RealLineSet closure_set(const RealLineSet& s);  // complement-interior-complement
RealLineSet derived_set(const RealLineSet& s);
RealLineSet union_sets(const RealLineSet& a, const RealLineSet& b);
RealLineSet intersect_sets(const RealLineSet& a, const RealLineSet& b);
bool subset_of(const RealLineSet& a, const RealLineSet& b);

RealLineSet apply_generator_real(Generator g, const RealLineSet& s);
// Applies generators rightmost first, matching word semantics.
RealLineSet eval_word_real(const Word& w, const RealLineSet& s);

// Set-literal grammar: '+'-separated atoms. An atom is an interval
// '('|'[' rat ',' rat ')'|']' with an optional density suffix 'Q'
// (rationals only) or 'I' (irrationals only), or a singleton '{' rat '}'.
// Rationals are integers or p/q. Bounds must satisfy lo < hi.
RealLineSet make_set(std::string_view spec);

// Rendering such as "[0,1]Q", "(0,1)+(1,2)+{3}" or "(-inf,0)+(1,+inf)".
// Bounded sets round-trip through make_set; the empty set prints "{}".
std::string format_set(const RealLineSet& s);

}  // namespace topo
