#pragma once

#include <cstdint>
#include <vector>

#include "topo/terms.hpp"

namespace topo {

// A labeled topology on points {0,...,n-1}. Subsets are n-bit masks; all
// operator tables are precomputed over the full powerset, so evaluating a
// word is a chain of array lookups.
struct FiniteSpace {
    int n = 0;
    std::uint32_t full = 0;
    std::vector<std::uint32_t> opens;  // sorted ascending; contains 0 and full
    std::vector<std::uint32_t> closure_table;
    std::vector<std::uint32_t> interior_table;
    std::vector<std::uint32_t> derived_table;
    std::vector<std::uint32_t> min_open_nbhd;  // smallest open set containing each point

    std::size_t subset_count() const { return closure_table.size(); }
};

// Checks that `opens` contains the empty set and the whole space and is
// closed under pairwise union and intersection.
bool is_topology(int n, const std::vector<std::uint32_t>& opens);

// Validates the axioms and precomputes all tables.
FiniteSpace make_space(int n, std::vector<std::uint32_t> opens);

// All labeled topologies on n points, sorted lexicographically by their
// sorted open-set masks. Dispatch: exhaustive axiom filter for n <= 4,
// incremental closure generation for n == 5.
std::vector<FiniteSpace> enumerate_topologies(int n);

// Tests every family of proper nonempty subsets against the axioms; n <= 4.
std::vector<FiniteSpace> enumerate_topologies_filter(int n);

// Grows topologies from the indiscrete one by inserting one subset at a
// time and closing under union/intersection; n <= 5.
std::vector<FiniteSpace> enumerate_topologies_generated(int n);

std::uint32_t apply_generator(const FiniteSpace& s, Generator g, std::uint32_t mask);

// A word's action on one space: the full map powerset -> powerset.
struct TransformTable {
    const FiniteSpace* space = nullptr;
    std::vector<std::uint32_t> table;

    friend bool operator==(const TransformTable& a, const TransformTable& b) {
        return a.table == b.table;
    }
};

TransformTable identity_transform(const FiniteSpace& s);
TransformTable generator_transform(const FiniteSpace& s, Generator g);
// outer acts after inner.
TransformTable compose_transforms(const TransformTable& outer, const TransformTable& inner);
TransformTable transform_of_word(const FiniteSpace& s, const Word& w);

}  // namespace topo
