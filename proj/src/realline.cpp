#include "topo/realline.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace topo {

namespace {

void check_shape(const RealLineSet& s) {
    if (s.point_in.size() != s.breakpoints.size() ||
        s.cells.size() != s.breakpoints.size() + 1)
        throw std::logic_error("real-line set with inconsistent field sizes");
    for (std::size_t i = 1; i < s.breakpoints.size(); ++i)
        if (!(s.breakpoints[i - 1] < s.breakpoints[i]))
            throw std::logic_error("real-line breakpoints not strictly increasing");
}

// Common-refinement view of two sets: merged breakpoints plus both sets'
// cell statuses and point memberships sampled on the merged grid.
struct Refined {
    std::vector<Rational> breakpoints;
    std::vector<Density> a_cells, b_cells;
    std::vector<char> a_points, b_points;
};

Refined refine(const RealLineSet& a, const RealLineSet& b) {
    Refined r;
    std::size_t ia = 0, ib = 0;
    while (ia < a.breakpoints.size() || ib < b.breakpoints.size()) {
        const Rational* xa = ia < a.breakpoints.size() ? &a.breakpoints[ia] : nullptr;
        const Rational* xb = ib < b.breakpoints.size() ? &b.breakpoints[ib] : nullptr;
        Rational x = xa && (!xb || *xa < *xb) ? *xa : *xb;
        r.breakpoints.push_back(x);
        r.a_cells.push_back(a.cells[ia]);
        r.b_cells.push_back(b.cells[ib]);
        if (xa && *xa == x) {
            r.a_points.push_back(a.point_in[ia]);
            ++ia;
        } else {
            // A rational sitting inside a cell is a member iff the cell's
            // status contains the rationals.
            r.a_points.push_back(rational_side(a.cells[ia]));
        }
        if (xb && *xb == x) {
            r.b_points.push_back(b.point_in[ib]);
            ++ib;
        } else {
            r.b_points.push_back(rational_side(b.cells[ib]));
        }
    }
    r.a_cells.push_back(a.cells[ia]);
    r.b_cells.push_back(b.cells[ib]);
    return r;
}

RealLineSet combine(const Refined& r, std::uint8_t (*cell_op)(std::uint8_t, std::uint8_t),
                    bool (*point_op)(bool, bool)) {
    RealLineSet out;
    out.breakpoints = r.breakpoints;
    out.point_in.resize(r.breakpoints.size());
    out.cells.resize(r.breakpoints.size() + 1);
    for (std::size_t j = 0; j < out.cells.size(); ++j)
        out.cells[j] =
            density_from_bits(cell_op(density_bits(r.a_cells[j]), density_bits(r.b_cells[j])));
    for (std::size_t t = 0; t < out.point_in.size(); ++t)
        out.point_in[t] = point_op(r.a_points[t] != 0, r.b_points[t] != 0);
    return canonicalized(std::move(out));
}

}  // namespace

bool RealLineSet::is_empty() const {
    if (!breakpoints.empty()) return false;
    return cells.size() == 1 && cells[0] == Density::Empty;
}

RealLineSet canonicalized(RealLineSet s) {
    check_shape(s);
    RealLineSet out;
    out.cells = {s.cells[0]};
    for (std::size_t t = 0; t < s.breakpoints.size(); ++t) {
        bool removable = s.cells[t] == s.cells[t + 1] &&
                         (s.point_in[t] != 0) == rational_side(s.cells[t]);
        if (removable) continue;
        out.breakpoints.push_back(s.breakpoints[t]);
        out.point_in.push_back(s.point_in[t]);
        out.cells.push_back(s.cells[t + 1]);
    }
    return out;
}

RealLineSet complement_set(const RealLineSet& s) {
    RealLineSet out = s;
    for (auto& c : out.cells) c = density_from_bits(density_bits(c) ^ 3u);
    for (auto& p : out.point_in) p = p ? 0 : 1;
    return canonicalized(std::move(out));
}

RealLineSet interior_set(const RealLineSet& s) {
    RealLineSet out = s;
    for (auto& c : out.cells) c = (c == Density::Full) ? Density::Full : Density::Empty;
    for (std::size_t t = 0; t < out.point_in.size(); ++t)
        out.point_in[t] =
            s.point_in[t] && s.cells[t] == Density::Full && s.cells[t + 1] == Density::Full;
    return canonicalized(std::move(out));
}

RealLineSet closure_set(const RealLineSet& s) {
    return complement_set(interior_set(complement_set(s)));
}

RealLineSet derived_set(const RealLineSet& s) {
    // Every nonempty cell is dense in itself, so it accumulates on its whole
    // closed hull; isolated breakpoints contribute nothing.
    RealLineSet out = s;
    for (auto& c : out.cells) c = (c == Density::Empty) ? Density::Empty : Density::Full;
    for (std::size_t t = 0; t < out.point_in.size(); ++t)
        out.point_in[t] = s.cells[t] != Density::Empty || s.cells[t + 1] != Density::Empty;
    return canonicalized(std::move(out));
}

RealLineSet union_sets(const RealLineSet& a, const RealLineSet& b) {
    return combine(refine(a, b), [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x | y; },
                   [](bool x, bool y) { return x || y; });
}

RealLineSet intersect_sets(const RealLineSet& a, const RealLineSet& b) {
    return combine(refine(a, b), [](std::uint8_t x, std::uint8_t y) -> std::uint8_t { return x & y; },
                   [](bool x, bool y) { return x && y; });
}

bool subset_of(const RealLineSet& a, const RealLineSet& b) {
    Refined r = refine(a, b);
    for (std::size_t j = 0; j < r.a_cells.size(); ++j)
        if (density_bits(r.a_cells[j]) & ~density_bits(r.b_cells[j])) return false;
    for (std::size_t t = 0; t < r.a_points.size(); ++t)
        if (r.a_points[t] && !r.b_points[t]) return false;
    return true;
}

RealLineSet apply_generator_real(Generator g, const RealLineSet& s) {
    switch (g) {
        case Generator::Identity: return s;
        case Generator::Closure: return closure_set(s);
        case Generator::Interior: return interior_set(s);
        case Generator::Complement: return complement_set(s);
        case Generator::Exterior: return interior_set(complement_set(s));
        case Generator::Boundary:
            return complement_set(
                union_sets(interior_set(s), interior_set(complement_set(s))));
        case Generator::BoundaryInt:
            return intersect_sets(apply_generator_real(Generator::Boundary, s), s);
        case Generator::BoundaryExt:
            return intersect_sets(apply_generator_real(Generator::Boundary, s),
                                  complement_set(s));
        case Generator::Derived: return derived_set(s);
    }
    throw std::invalid_argument("unknown generator");
}

RealLineSet eval_word_real(const Word& w, const RealLineSet& s) {
    RealLineSet cur = s;
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it)
        cur = apply_generator_real(*it, cur);
    return cur;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= text.size()) throw ParseError(pos, "unexpected end of set literal");
        return text[pos++];
    }
    void expect(char ch) {
        std::size_t at = pos;
        if (take() != ch)
            throw ParseError(at, std::string("expected '") + ch + "' at offset " +
                                     std::to_string(at));
    }
};

long long parse_integer(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    bool neg = false;
    if (c.pos < c.text.size() && c.text[c.pos] == '-') {
        neg = true;
        ++c.pos;
    }
    if (c.pos >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
        throw ParseError(start, "expected a number at offset " + std::to_string(start));
    long long value = 0;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
        if (value > 100000000000000000LL)
            throw ParseError(start, "number too large at offset " + std::to_string(start));
        value = value * 10 + (c.text[c.pos] - '0');
        ++c.pos;
    }
    return neg ? -value : value;
}

Rational parse_rational(Cursor& c) {
    long long num = parse_integer(c);
    if (c.pos < c.text.size() && c.text[c.pos] == '/') {
        ++c.pos;
        std::size_t at = c.pos;
        long long den = parse_integer(c);
        if (den == 0) throw ParseError(at, "zero denominator at offset " + std::to_string(at));
        return Rational(num, den);
    }
    return Rational(num);
}

RealLineSet parse_atom(Cursor& c) {
    std::size_t at = c.pos;
    char open = c.take();
    if (open == '{') {
        Rational q = parse_rational(c);
        c.expect('}');
        RealLineSet s;
        s.breakpoints = {q};
        s.point_in = {1};
        s.cells = {Density::Empty, Density::Empty};
        return s;
    }
    if (open != '(' && open != '[')
        throw ParseError(at, std::string("malformed atom at offset ") + std::to_string(at) +
                                 ": expected '(', '[' or '{'");
    bool closed_left = open == '[';
    Rational lo = parse_rational(c);
    c.expect(',');
    Rational hi = parse_rational(c);
    std::size_t close_at = c.pos;
    char close = c.take();
    if (close != ')' && close != ']')
        throw ParseError(close_at, "expected ')' or ']' at offset " + std::to_string(close_at));
    bool closed_right = close == ']';
    if (!(lo < hi))
        throw ParseError(at, "interval bounds must satisfy lower < upper at offset " +
                                 std::to_string(at));
    Density dens = Density::Full;
    char suffix = c.peek();
    if (suffix == 'Q') {
        dens = Density::Rationals;
        c.take();
    } else if (suffix == 'I') {
        dens = Density::Irrationals;
        c.take();
    }
    RealLineSet s;
    s.breakpoints = {lo, hi};
    bool endpoint_member = rational_side(dens);  // rational endpoints never lie in an I-cell
    s.point_in = {static_cast<char>(closed_left && endpoint_member),
                  static_cast<char>(closed_right && endpoint_member)};
    s.cells = {Density::Empty, dens, Density::Empty};
    return canonicalized(std::move(s));
}

}  // namespace

RealLineSet make_set(std::string_view spec) {
    Cursor c{spec};
    if (c.at_end()) throw ParseError(0, "empty set literal");
    RealLineSet acc = parse_atom(c);
    while (!c.at_end()) {
        c.expect('+');
        acc = union_sets(acc, parse_atom(c));
    }
    return acc;
}

namespace {

std::string cell_suffix(Density d) {
    switch (d) {
        case Density::Rationals: return "Q";
        case Density::Irrationals: return "I";
        default: return "";
    }
}

enum class Attach { None, OpensRight, ClosesLeft, Singleton };

}  // namespace

std::string format_set(const RealLineSet& s) {
    if (s.breakpoints.empty()) {
        if (s.cells[0] == Density::Empty) return "{}";
        return "(-inf,+inf)" + cell_suffix(s.cells[0]);
    }
    const std::size_t k = s.breakpoints.size();
    std::vector<Attach> attach(k, Attach::None);
    for (std::size_t t = 0; t < k; ++t) {
        if (!s.point_in[t]) continue;
        // A closed bracket only expresses membership next to a cell whose
        // density admits rationals; otherwise the point prints on its own.
        if (rational_side(s.cells[t + 1]))
            attach[t] = Attach::OpensRight;
        else if (rational_side(s.cells[t]))
            attach[t] = Attach::ClosesLeft;
        else
            attach[t] = Attach::Singleton;
    }
    std::vector<std::string> atoms;
    for (std::size_t j = 0; j <= k; ++j) {
        if (s.cells[j] != Density::Empty) {
            std::string atom;
            if (j == 0) {
                atom += "(-inf";
            } else {
                atom += attach[j - 1] == Attach::OpensRight ? '[' : '(';
                atom += s.breakpoints[j - 1].str();
            }
            atom += ',';
            if (j == k) {
                atom += "+inf)";
            } else {
                atom += s.breakpoints[j].str();
                atom += attach[j] == Attach::ClosesLeft ? ']' : ')';
            }
            atom += cell_suffix(s.cells[j]);
            atoms.push_back(std::move(atom));
        }
        if (j < k && attach[j] == Attach::Singleton)
            atoms.push_back("{" + s.breakpoints[j].str() + "}");
    }
    std::string out;
    for (const auto& atom : atoms) {
        if (!out.empty()) out += '+';
        out += atom;
    }
    return out;
}

}  // namespace topo
