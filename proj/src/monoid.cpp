#include "topo/monoid.hpp"

#include <algorithm>
#include <unordered_map>

#include "topo/parallel.hpp"

namespace topo {

namespace {

std::string mask_to_points(std::uint32_t mask, int n) {
    std::string out = "{";
    bool first = true;
    for (int x = 0; x < n; ++x) {
        if (!(mask >> x & 1u)) continue;
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
    }
    out += '}';
    return out;
}

std::string space_detail(const FiniteSpace& s) {
    std::string out = "n=" + std::to_string(s.n) + " opens=[";
    for (std::size_t i = 0; i < s.opens.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.opens[i]);
    }
    out += ']';
    return out;
}

std::vector<Generator> sorted_unique(std::vector<Generator> gens) {
    std::sort(gens.begin(), gens.end(),
              [](Generator a, Generator b) { return lex_rank(a) < lex_rank(b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

// Exact fingerprint key: table bytes per space, then corpus image renderings.
// Hash-map lookup hashes first and falls back to exact comparison.
std::string class_key(const std::vector<std::vector<std::uint32_t>>& tables,
                      const std::vector<RealLineSet>& probe) {
    std::string key;
    for (const auto& table : tables)
        for (std::uint32_t v : table) key.push_back(static_cast<char>(v));
    for (const auto& image : probe) {
        key.push_back('\x01');
        key += format_set(image);
    }
    return key;
}

Witness realline_witness(std::size_t index, const std::string& literal,
                         const RealLineSet& input, const RealLineSet& left,
                         const RealLineSet& right) {
    Witness w;
    w.model = "realline";
    w.model_index = index;
    w.model_detail = literal;
    w.input = literal;
    w.left_image = format_set(left);
    w.right_image = format_set(right);
    w.input_set = input;
    w.left_set = left;
    w.right_set = right;
    return w;
}

Witness finite_witness(std::size_t index, const FiniteSpace& s, std::uint32_t mask,
                       std::uint32_t left, std::uint32_t right) {
    Witness w;
    w.model = "finite";
    w.model_index = index;
    w.model_detail = space_detail(s);
    w.input = mask_to_points(mask, s.n);
    w.input_mask = mask;
    w.left_image = mask_to_points(left, s.n);
    w.right_image = mask_to_points(right, s.n);
    return w;
}

// First input (corpus first, then spaces in order, masks ascending) where
// `accept` rejects the pair of images of two classes.
template <typename FiniteAccept, typename RealAccept>
std::optional<Witness> find_witness(const ModelSet& models, const ElementClass& a,
                                    const ElementClass& b,
                                    const std::vector<std::string>& corpus_literals,
                                    FiniteAccept finite_ok, RealAccept real_ok) {
    for (std::size_t j = 0; j < models.corpus.size(); ++j) {
        if (!real_ok(a.probe[j], b.probe[j]))
            return realline_witness(j, corpus_literals[j], models.corpus[j], a.probe[j],
                                    b.probe[j]);
    }
    for (std::size_t si = 0; si < models.spaces.size(); ++si) {
        const FiniteSpace& s = models.spaces[si];
        for (std::uint32_t mask = 0; mask <= s.full; ++mask) {
            std::uint32_t left = a.tables[si][mask];
            std::uint32_t right = b.tables[si][mask];
            if (!finite_ok(left, right)) return finite_witness(si, s, mask, left, right);
        }
    }
    return std::nullopt;
}

std::vector<std::string> corpus_literals_of(const ModelSet& models) {
    std::vector<std::string> out;
    out.reserve(models.corpus.size());
    for (const auto& set : models.corpus) out.push_back(format_set(set));
    return out;
}

}  // namespace

const std::vector<std::string>& builtin_corpus_literals() {
    static const std::vector<std::string> literals = {"[0,1]Q", "[0,1]", "(0,1)+(1,2)+{3}"};
    return literals;
}

std::vector<RealLineSet> builtin_corpus() {
    std::vector<RealLineSet> out;
    for (const auto& lit : builtin_corpus_literals()) out.push_back(make_set(lit));
    return out;
}

std::vector<FiniteSpace> spaces_up_to(int max_n) {
    std::vector<FiniteSpace> out;
    for (int n = 1; n <= max_n; ++n) {
        auto spaces = enumerate_topologies(n);
        out.insert(out.end(), std::make_move_iterator(spaces.begin()),
                   std::make_move_iterator(spaces.end()));
    }
    return out;
}

ModelSet default_models() { return ModelSet{spaces_up_to(3), builtin_corpus()}; }

MonoidReport enumerate_monoid(std::vector<Generator> generators, ModelSet models, int max_len,
                              std::size_t class_cap) {
    if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
    if (models.spaces.empty()) throw std::invalid_argument("at least one finite space is required");

    MonoidReport report;
    report.generators = sorted_unique(std::move(generators));
    report.max_word_length = max_len;
    report.models = std::move(models);

    const auto& spaces = report.models.spaces;
    const auto& corpus = report.models.corpus;

    // Per-generator, per-space one-step tables.
    std::vector<std::vector<std::vector<std::uint32_t>>> gen_tables(report.generators.size());
    for (std::size_t gi = 0; gi < report.generators.size(); ++gi) {
        gen_tables[gi].resize(spaces.size());
        par::parallel_for(spaces.size(), [&](std::size_t si) {
            gen_tables[gi][si] = generator_transform(spaces[si], report.generators[gi]).table;
        });
    }

    std::unordered_map<std::string, std::size_t> index;
    auto& classes = report.classes;

    ElementClass identity;
    identity.representative = Word{};
    identity.tables.reserve(spaces.size());
    for (const auto& s : spaces) identity.tables.push_back(identity_transform(s).table);
    identity.probe = corpus;
    index.emplace(class_key(identity.tables, identity.probe), 0);
    classes.push_back(std::move(identity));
    report.growth.push_back(1);

    std::vector<std::size_t> frontier{0};
    for (int len = 1; len <= max_len && !report.truncated; ++len) {
        std::vector<std::size_t> next;
        std::size_t added = 0;
        for (std::size_t gi = 0; gi < report.generators.size() && !report.truncated; ++gi) {
            Generator g = report.generators[gi];
            for (std::size_t ci : frontier) {
                const ElementClass& base = classes[ci];
                ElementClass cand;
                cand.tables.resize(spaces.size());
                par::parallel_for(spaces.size(), [&](std::size_t si) {
                    const auto& gt = gen_tables[gi][si];
                    const auto& bt = base.tables[si];
                    auto& out = cand.tables[si];
                    out.resize(bt.size());
                    for (std::size_t mask = 0; mask < bt.size(); ++mask)
                        out[mask] = gt[bt[mask]];
                });
                cand.probe.reserve(corpus.size());
                for (const auto& image : base.probe)
                    cand.probe.push_back(apply_generator_real(g, image));
                std::string key = class_key(cand.tables, cand.probe);
                auto [it, fresh] = index.emplace(std::move(key), classes.size());
                if (!fresh) continue;
                cand.representative = compose(Word{{g}}, base.representative);
                next.push_back(classes.size());
                classes.push_back(std::move(cand));
                ++added;
                if (classes.size() > class_cap) {
                    report.truncated = true;
                    break;
                }
            }
        }
        report.growth.push_back(added);
        frontier = std::move(next);
    }

    const auto& growth = report.growth;
    report.saturated = !report.truncated && growth.size() >= 3 &&
                       growth[growth.size() - 1] == 0 && growth[growth.size() - 2] == 0;
    return report;
}

std::optional<Witness> separate(const Word& w1, const Word& w2, const ModelSet& models) {
    auto literals = corpus_literals_of(models);
    for (std::size_t j = 0; j < models.corpus.size(); ++j) {
        RealLineSet left = eval_word_real(w1, models.corpus[j]);
        RealLineSet right = eval_word_real(w2, models.corpus[j]);
        if (!(left == right))
            return realline_witness(j, literals[j], models.corpus[j], left, right);
    }
    for (std::size_t si = 0; si < models.spaces.size(); ++si) {
        const FiniteSpace& s = models.spaces[si];
        TransformTable left = transform_of_word(s, w1);
        TransformTable right = transform_of_word(s, w2);
        for (std::uint32_t mask = 0; mask <= s.full; ++mask)
            if (left.table[mask] != right.table[mask])
                return finite_witness(si, s, mask, left.table[mask], right.table[mask]);
    }
    return std::nullopt;
}

Poset compute_poset(const MonoidReport& report) {
    if (report.truncated)
        throw std::invalid_argument("poset requires a complete (non-truncated) monoid report");
    const auto& classes = report.classes;
    const auto& models = report.models;
    const std::size_t k = classes.size();
    auto literals = corpus_literals_of(models);

    Poset poset;
    poset.labels.reserve(k);
    for (const auto& cls : classes) poset.labels.push_back(format_word(cls.representative));

    auto below = [&](std::size_t a, std::size_t b) {
        for (std::size_t si = 0; si < models.spaces.size(); ++si) {
            const auto& ta = classes[a].tables[si];
            const auto& tb = classes[b].tables[si];
            for (std::size_t mask = 0; mask < ta.size(); ++mask)
                if (ta[mask] & ~tb[mask]) return false;
        }
        for (std::size_t j = 0; j < models.corpus.size(); ++j)
            if (!subset_of(classes[a].probe[j], classes[b].probe[j])) return false;
        return true;
    };

    poset.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) poset.leq[a][b] = below(a, b);

    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (poset.leq[a][b] && poset.leq[b][a])
                throw VerificationError("distinct classes '" + poset.labels[a] + "' and '" +
                                        poset.labels[b] +
                                        "' compare equal; deduplication failed");

    auto strictly = [&](std::size_t a, std::size_t b) { return a != b && poset.leq[a][b]; };

    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (!strictly(a, b)) continue;
            bool cover = true;
            for (std::size_t m = 0; m < k && cover; ++m)
                if (strictly(a, m) && strictly(m, b)) cover = false;
            if (!cover) continue;
            auto witness = find_witness(
                models, classes[a], classes[b], literals,
                [](std::uint32_t l, std::uint32_t r) { return l == r; },
                [](const RealLineSet& l, const RealLineSet& r) { return l == r; });
            if (!witness)
                throw VerificationError("cover edge between '" + poset.labels[a] + "' and '" +
                                        poset.labels[b] + "' lacks a strictness witness");
            poset.hasse.push_back(CoverEdge{a, b, std::move(*witness)});
        }

    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            if (poset.leq[a][b] || poset.leq[b][a]) continue;
            auto not_below = [&](std::size_t x, std::size_t y) {
                return find_witness(
                    models, classes[x], classes[y], literals,
                    [](std::uint32_t l, std::uint32_t r) { return (l & ~r) == 0; },
                    [](const RealLineSet& l, const RealLineSet& r) { return subset_of(l, r); });
            };
            auto wa = not_below(a, b);
            auto wb = not_below(b, a);
            if (!wa || !wb)
                throw VerificationError("incomparable pair lacks witnesses: '" + poset.labels[a] +
                                        "', '" + poset.labels[b] + "'");
            poset.incomparable.push_back(IncomparablePair{a, b, std::move(*wa), std::move(*wb)});
        }

    return poset;
}

std::string emit_hasse_dot(const Poset& p) {
    std::string out = "digraph hasse {\n  rankdir=LR;\n";
    for (const auto& label : p.labels) out += "  \"" + label + "\";\n";
    for (const auto& edge : p.hasse)
        out += "  \"" + p.labels[edge.from] + "\" -> \"" + p.labels[edge.to] + "\";\n";
    out += "}\n";
    return out;
}

ExperimentReport open_problem_experiment(int max_n, std::vector<Generator> generators,
                                         int max_len, std::size_t class_cap) {
    ExperimentReport report;
    report.generators = sorted_unique(std::move(generators));
    report.max_n = max_n;
    report.max_word_length = max_len;
    report.disclaimer =
        "Class counts are observations over the finite spaces and real-line sets supplied to "
        "this run; they bound nothing beyond these models and do not decide whether the "
        "generated monoid is finite over all topological spaces.";

    std::vector<FiniteSpace> all_spaces;
    for (int n = 1; n <= max_n; ++n) {
        auto spaces = enumerate_topologies(n);
        for (std::size_t idx = 0; idx < spaces.size(); ++idx) {
            MonoidReport per =
                enumerate_monoid(report.generators, ModelSet{{spaces[idx]}, {}}, max_len, class_cap);
            report.per_space.push_back(
                ExperimentReport::PerSpace{n, idx, per.classes.size()});
            report.truncated = report.truncated || per.truncated;
        }
        all_spaces.insert(all_spaces.end(), std::make_move_iterator(spaces.begin()),
                          std::make_move_iterator(spaces.end()));
    }

    MonoidReport aggregate = enumerate_monoid(
        report.generators, ModelSet{std::move(all_spaces), builtin_corpus()}, max_len, class_cap);
    report.aggregate_growth = aggregate.growth;
    report.aggregate_classes = aggregate.classes.size();
    report.saturated = aggregate.saturated;
    report.truncated = report.truncated || aggregate.truncated;
    return report;
}

}  // namespace topo
