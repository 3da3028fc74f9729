#include "topo/finitetop.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "topo/parallel.hpp"

namespace topo {

namespace {

// Family-of-subsets bitmap: bit m set iff mask m belongs to the family.
// n <= 5 keeps the whole powerset-of-powerset index inside 32 bits.
std::uint32_t family_bitmap(const std::vector<std::uint32_t>& opens) {
    std::uint32_t fam = 0;
    for (std::uint32_t o : opens) fam |= 1u << o;
    return fam;
}

bool family_closed(std::uint32_t fam, std::uint32_t full) {
    if (!(fam & 1u) || !(fam >> full & 1u)) return false;
    std::uint32_t masks[32];
    int count = 0;
    for (std::uint32_t m = 0; m <= full; ++m)
        if (fam >> m & 1u) masks[count++] = m;
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) {
            if (!(fam >> (masks[a] | masks[b]) & 1u)) return false;
            if (!(fam >> (masks[a] & masks[b]) & 1u)) return false;
        }
    return true;
}

std::uint32_t close_family(std::uint32_t fam, std::uint32_t full) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::uint32_t masks[32];
        int count = 0;
        for (std::uint32_t m = 0; m <= full; ++m)
            if (fam >> m & 1u) masks[count++] = m;
        for (int a = 0; a < count; ++a)
            for (int b = a + 1; b < count; ++b) {
                std::uint32_t u = masks[a] | masks[b];
                std::uint32_t x = masks[a] & masks[b];
                if (!(fam >> u & 1u)) {
                    fam |= 1u << u;
                    changed = true;
                }
                if (!(fam >> x & 1u)) {
                    fam |= 1u << x;
                    changed = true;
                }
            }
    }
    return fam;
}

std::vector<std::uint32_t> family_to_opens(std::uint32_t fam, std::uint32_t full) {
    std::vector<std::uint32_t> opens;
    for (std::uint32_t m = 0; m <= full; ++m)
        if (fam >> m & 1u) opens.push_back(m);
    return opens;
}

std::vector<FiniteSpace> build_sorted_spaces(int n, std::vector<std::vector<std::uint32_t>> families) {
    std::sort(families.begin(), families.end());
    std::vector<FiniteSpace> spaces(families.size());
    par::parallel_for(families.size(),
                      [&](std::size_t i) { spaces[i] = make_space(n, std::move(families[i])); });
    return spaces;
}

void check_point_count(int n, int max_n, const char* strategy) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument(std::string(strategy) + " enumeration supports 1 <= n <= " +
                                    std::to_string(max_n) + ", got n=" + std::to_string(n));
}

}  // namespace

bool is_topology(int n, const std::vector<std::uint32_t>& opens) {
    if (n < 1 || n > 5) return false;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t o : opens)
        if (o > full) return false;
    return family_closed(family_bitmap(opens), full);
}

FiniteSpace make_space(int n, std::vector<std::uint32_t> opens) {
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    if (!is_topology(n, opens))
        throw std::invalid_argument("open-set family violates the topology axioms");

    FiniteSpace s;
    s.n = n;
    s.full = (1u << n) - 1;
    s.opens = std::move(opens);
    const std::size_t subsets = std::size_t{1} << n;
    s.closure_table.resize(subsets);
    s.interior_table.resize(subsets);
    s.derived_table.resize(subsets);
    s.min_open_nbhd.assign(static_cast<std::size_t>(n), s.full);

    for (int x = 0; x < n; ++x)
        for (std::uint32_t o : s.opens)
            if (o >> x & 1u) s.min_open_nbhd[static_cast<std::size_t>(x)] &= o;

    for (std::uint32_t a = 0; a < subsets; ++a) {
        std::uint32_t interior = 0;
        std::uint32_t closure = s.full;
        for (std::uint32_t o : s.opens) {
            if ((o & ~a) == 0) interior |= o;
            std::uint32_t closed = s.full & ~o;
            if ((a & ~closed) == 0) closure &= closed;
        }
        s.interior_table[a] = interior;
        s.closure_table[a] = closure;
        std::uint32_t derived = 0;
        for (int x = 0; x < n; ++x) {
            std::uint32_t bit = 1u << x;
            if (a & s.min_open_nbhd[static_cast<std::size_t>(x)] & ~bit) derived |= bit;
        }
        s.derived_table[a] = derived;
    }
    return s;
}

std::vector<FiniteSpace> enumerate_topologies_filter(int n) {
    check_point_count(n, 4, "exhaustive filter");
    const std::uint32_t full = (1u << n) - 1;
    const int propers = static_cast<int>(full) - 1;  // masks 1 .. full-1
    std::vector<std::vector<std::uint32_t>> families;
    for (std::uint32_t f = 0; f < (1u << propers); ++f) {
        std::uint32_t fam = 1u | (f << 1) | (1u << full);
        if (family_closed(fam, full)) families.push_back(family_to_opens(fam, full));
    }
    return build_sorted_spaces(n, std::move(families));
}

std::vector<FiniteSpace> enumerate_topologies_generated(int n) {
    check_point_count(n, 5, "incremental closure");
    const std::uint32_t full = (1u << n) - 1;
    const std::uint32_t indiscrete = 1u | (1u << full);
    std::unordered_set<std::uint32_t> seen{indiscrete};
    std::vector<std::uint32_t> stack{indiscrete};
    while (!stack.empty()) {
        std::uint32_t fam = stack.back();
        stack.pop_back();
        for (std::uint32_t m = 1; m < full; ++m) {
            if (fam >> m & 1u) continue;
            std::uint32_t grown = close_family(fam | (1u << m), full);
            if (seen.insert(grown).second) stack.push_back(grown);
        }
    }
    std::vector<std::vector<std::uint32_t>> families;
    families.reserve(seen.size());
    for (std::uint32_t fam : seen) families.push_back(family_to_opens(fam, full));
    return build_sorted_spaces(n, std::move(families));
}

std::vector<FiniteSpace> enumerate_topologies(int n) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("topology enumeration supports 1 <= n <= 5, got n=" +
                                    std::to_string(n));
    return n <= 4 ? enumerate_topologies_filter(n) : enumerate_topologies_generated(n);
}

std::uint32_t apply_generator(const FiniteSpace& s, Generator g, std::uint32_t mask) {
    if (mask > s.full) throw std::out_of_range("subset mask out of range for this space");
    switch (g) {
        case Generator::Identity: return mask;
        case Generator::Closure: return s.closure_table[mask];
        case Generator::Interior: return s.interior_table[mask];
        case Generator::Complement: return s.full & ~mask;
        case Generator::Exterior: return s.interior_table[s.full & ~mask];
        case Generator::Boundary: {
            std::uint32_t inner = s.interior_table[mask];
            std::uint32_t outer = s.interior_table[s.full & ~mask];
            return s.full & ~(inner | outer);
        }
        case Generator::BoundaryInt: return apply_generator(s, Generator::Boundary, mask) & mask;
        case Generator::BoundaryExt:
            return apply_generator(s, Generator::Boundary, mask) & (s.full & ~mask);
        case Generator::Derived: return s.derived_table[mask];
    }
    throw std::invalid_argument("unknown generator");
}

TransformTable identity_transform(const FiniteSpace& s) {
    TransformTable t;
    t.space = &s;
    t.table.resize(s.subset_count());
    for (std::uint32_t a = 0; a < t.table.size(); ++a) t.table[a] = a;
    return t;
}

TransformTable generator_transform(const FiniteSpace& s, Generator g) {
    TransformTable t;
    t.space = &s;
    t.table.resize(s.subset_count());
    for (std::uint32_t a = 0; a < t.table.size(); ++a) t.table[a] = apply_generator(s, g, a);
    return t;
}

TransformTable compose_transforms(const TransformTable& outer, const TransformTable& inner) {
    TransformTable t;
    t.space = inner.space;
    t.table.resize(inner.table.size());
    for (std::size_t a = 0; a < t.table.size(); ++a) t.table[a] = outer.table[inner.table[a]];
    return t;
}

TransformTable transform_of_word(const FiniteSpace& s, const Word& w) {
    TransformTable t = identity_transform(s);
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
        Generator g = *it;
        for (auto& v : t.table) v = apply_generator(s, g, v);
    }
    return t;
}

}  // namespace topo
