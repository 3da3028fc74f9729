#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "topo/finitetop.hpp"
#include "topo/realline.hpp"
#include "topo/terms.hpp"

namespace topo {

// Model family against which operator words are compared: finite spaces
// plus exact real-line sets. Two words land in the same class iff they act
// identically on every listed model.
struct ModelSet {
    std::vector<FiniteSpace> spaces;
    std::vector<RealLineSet> corpus;
};

const std::vector<std::string>& builtin_corpus_literals();
std::vector<RealLineSet> builtin_corpus();
// All finite spaces with at most three points plus the builtin corpus.
ModelSet default_models();
std::vector<FiniteSpace> spaces_up_to(int max_n);

// One equivalence class of words: its canonical representative (shortest,
// then lexicographically least among enumerated words), its transform table
// on every space, and the images of every corpus set.
struct ElementClass {
    Word representative;
    std::vector<std::vector<std::uint32_t>> tables;
    std::vector<RealLineSet> probe;
};

struct MonoidReport {
    std::vector<Generator> generators;
    int max_word_length = 0;
    ModelSet models;
    std::vector<ElementClass> classes;  // discovery (shortlex) order
    std::vector<std::size_t> growth;    // new classes per word length, from length 0
    bool saturated = false;             // the last two lengths added nothing
    bool truncated = false;             // class cap hit; report is partial
};

inline constexpr std::size_t kDefaultClassCap = 100000;

// Breadth-first closure of the generating set over the models: each level
// prepends one generator to the previous level's representatives and
// deduplicates by exact fingerprint comparison.
MonoidReport enumerate_monoid(std::vector<Generator> generators, ModelSet models, int max_len,
                              std::size_t class_cap = kDefaultClassCap);

struct Witness {
    std::string model;              // "realline" or "finite"
    std::size_t model_index = 0;    // corpus index or space index
    std::string model_detail;       // corpus literal or n/opens summary
    std::string input;              // set literal or point list
    std::uint32_t input_mask = 0;   // finite models only
    std::string left_image;
    std::string right_image;
    // Structured values, populated for real-line witnesses.
    RealLineSet input_set, left_set, right_set;
};

// First model input on which the two words act differently. Corpus sets are
// scanned before finite spaces so real-line witnesses are preferred; none
// means the words are indistinguishable on the supplied models (which is
// not a proof of equality).
std::optional<Witness> separate(const Word& w1, const Word& w2, const ModelSet& models);

struct CoverEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    Witness strictness;  // input where the smaller image is proper
};

struct IncomparablePair {
    std::size_t a = 0;
    std::size_t b = 0;
    Witness a_not_below_b;
    Witness b_not_below_a;
};

struct Poset {
    std::vector<std::string> labels;     // representative words, class order
    std::vector<std::vector<bool>> leq;  // pointwise-image order
    std::vector<CoverEdge> hasse;        // transitive reduction of leq
    std::vector<IncomparablePair> incomparable;
};

class VerificationError : public std::logic_error {
    using std::logic_error::logic_error;
};

// Pointwise-image order over every model; throws VerificationError if two
// distinct classes compare equal (deduplication failure).
Poset compute_poset(const MonoidReport& report);

std::string emit_hasse_dot(const Poset& p);

// Growth experiment over all spaces with up to max_n points: per-space
// class counts plus the aggregated count over all spaces and the builtin
// corpus. Evidence only; the disclaimer field says so.
struct ExperimentReport {
    std::vector<Generator> generators;
    int max_n = 0;
    int max_word_length = 0;
    struct PerSpace {
        int n = 0;
        std::size_t index = 0;
        std::size_t classes = 0;
    };
    std::vector<PerSpace> per_space;
    std::vector<std::size_t> aggregate_growth;
    std::size_t aggregate_classes = 0;
    bool saturated = false;
    bool truncated = false;
    std::string disclaimer;
};

ExperimentReport open_problem_experiment(int max_n, std::vector<Generator> generators,
                                         int max_len, std::size_t class_cap = kDefaultClassCap);

}  // namespace topo
