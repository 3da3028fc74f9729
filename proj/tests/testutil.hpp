#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "topo/realline.hpp"
#include "topo/terms.hpp"

namespace testutil {

// Calls fn with every word over `alpha` of length 0..max_len, in shortlex
// order (odometer per length).
inline void for_each_word(const std::vector<topo::Generator>& alpha, int max_len,
                          const std::function<void(const topo::Word&)>& fn) {
    fn(topo::Word{});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
        while (true) {
            topo::Word w;
            w.gens.reserve(idx.size());
            for (std::size_t i : idx) w.gens.push_back(alpha[i]);
            fn(w);
            std::size_t pos = idx.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < alpha.size()) break;
                idx[pos] = 0;
                if (pos == 0) goto next_len;
            }
        }
    next_len:;
    }
}

inline std::vector<topo::Word> all_words(const std::vector<topo::Generator>& alpha, int max_len) {
    std::vector<topo::Word> out;
    for_each_word(alpha, max_len, [&](const topo::Word& w) { out.push_back(w); });
    return out;
}

inline topo::Word random_word(std::mt19937& rng, const std::vector<topo::Generator>& alpha,
                              int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> gen_dist(0, alpha.size() - 1);
    topo::Word w;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) w.gens.push_back(alpha[gen_dist(rng)]);
    return w;
}

// Random canonical real-line set over a small rational pool.
inline topo::RealLineSet random_set(std::mt19937& rng) {
    static const std::vector<topo::Rational> pool = {
        topo::Rational(-2), topo::Rational(-1), topo::Rational(-1, 2), topo::Rational(0),
        topo::Rational(1, 3), topo::Rational(1, 2), topo::Rational(1), topo::Rational(3, 2),
        topo::Rational(2), topo::Rational(3)};
    std::uniform_int_distribution<int> count_dist(0, 4);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> status(0, 3);
    int k = count_dist(rng);
    std::vector<int> picks;
    std::uniform_int_distribution<std::size_t> pos_dist(0, pool.size() - 1);
    while (static_cast<int>(picks.size()) < k) {
        int p = static_cast<int>(pos_dist(rng));
        bool dup = false;
        for (int q : picks) dup = dup || q == p;
        if (!dup) picks.push_back(p);
    }
    std::sort(picks.begin(), picks.end());
    topo::RealLineSet s;
    s.breakpoints.clear();
    s.point_in.clear();
    s.cells.clear();
    for (int p : picks) {
        s.breakpoints.push_back(pool[static_cast<std::size_t>(p)]);
        s.point_in.push_back(static_cast<char>(bit(rng)));
    }
    for (int j = 0; j <= k; ++j) s.cells.push_back(static_cast<topo::Density>(status(rng)));
    return topo::canonicalized(std::move(s));
}

// Bounded variant (outer cells empty) for format round-trip checks.
inline topo::RealLineSet random_bounded_set(std::mt19937& rng) {
    topo::RealLineSet s = random_set(rng);
    if (!s.cells.empty()) {
        s.cells.front() = topo::Density::Empty;
        s.cells.back() = topo::Density::Empty;
    }
    return topo::canonicalized(std::move(s));
}

inline const std::vector<std::string>& seven_forms() {
    static const std::vector<std::string> forms = {"id",  "c",     "i",    "c.i",
                                                   "i.c", "i.c.i", "c.i.c"};
    return forms;
}

inline const std::vector<std::string>& fourteen_forms() {
    static const std::vector<std::string> forms = [] {
        std::vector<std::string> out = seven_forms();
        out.push_back("n");
        for (std::size_t i = 1; i < seven_forms().size(); ++i)
            out.push_back("n." + seven_forms()[i]);
        return out;
    }();
    return forms;
}

// Independent cellwise closure: a nonempty cell closes onto its hull, a
// breakpoint survives iff it is in the set or touches a nonempty cell.
inline topo::RealLineSet closure_cellwise_oracle(const topo::RealLineSet& s) {
    topo::RealLineSet out = s;
    for (auto& c : out.cells)
        c = (c == topo::Density::Empty) ? topo::Density::Empty : topo::Density::Full;
    for (std::size_t t = 0; t < out.point_in.size(); ++t)
        out.point_in[t] = s.point_in[t] || s.cells[t] != topo::Density::Empty ||
                          s.cells[t + 1] != topo::Density::Empty;
    return topo::canonicalized(std::move(out));
}

}  // namespace testutil
