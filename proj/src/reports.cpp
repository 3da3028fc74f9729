#include "topo/reports.hpp"

#include <bitset>
#include <fstream>
#include <stdexcept>

namespace topo {

namespace {

const char* density_name(Density d) {
    switch (d) {
        case Density::Empty: return "empty";
        case Density::Full: return "full";
        case Density::Rationals: return "rationals";
        case Density::Irrationals: return "irrationals";
    }
    return "?";
}

// Number of distinct image subsets of one class on one space.
std::size_t image_size(const std::vector<std::uint32_t>& table) {
    std::bitset<32> seen;
    for (std::uint32_t v : table) seen.set(v);
    return seen.count();
}

nlohmann::json generators_to_json(const std::vector<Generator>& gens) {
    nlohmann::json arr = nlohmann::json::array();
    for (Generator g : gens) arr.push_back(std::string(token_of(g)));
    return arr;
}

}  // namespace

nlohmann::json realline_to_json(const RealLineSet& s) {
    nlohmann::json j;
    j["breakpoints"] = nlohmann::json::array();
    j["points"] = nlohmann::json::array();
    j["cells"] = nlohmann::json::array();
    for (const auto& x : s.breakpoints) j["breakpoints"].push_back(x.str());
    for (char p : s.point_in) j["points"].push_back(p ? "in" : "out");
    for (Density c : s.cells) j["cells"].push_back(density_name(c));
    j["literal"] = format_set(s);
    return j;
}

nlohmann::json spaces_to_json(int n, const std::vector<FiniteSpace>& spaces) {
    nlohmann::json j;
    j["n"] = n;
    j["spaces"] = nlohmann::json::array();
    for (const auto& s : spaces) {
        nlohmann::json entry;
        entry["opens"] = s.opens;
        j["spaces"].push_back(std::move(entry));
    }
    return j;
}

nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json j;
    j["model"] = w.model;
    j["model_index"] = w.model_index;
    j["model_detail"] = w.model_detail;
    j["input"] = w.input;
    j["left_image"] = w.left_image;
    j["right_image"] = w.right_image;
    if (w.model == "realline") {
        j["input_set"] = realline_to_json(w.input_set);
        j["left_set"] = realline_to_json(w.left_set);
        j["right_set"] = realline_to_json(w.right_set);
    }
    return j;
}

nlohmann::json monoid_report_to_json(const MonoidReport& report) {
    nlohmann::json j;
    j["generators"] = generators_to_json(report.generators);
    j["max_word_length"] = report.max_word_length;
    j["growth"] = report.growth;
    j["classes"] = nlohmann::json::array();
    for (const auto& cls : report.classes) {
        nlohmann::json entry;
        entry["representative"] = format_word(cls.representative);
        nlohmann::json sizes = nlohmann::json::array();
        for (const auto& table : cls.tables) sizes.push_back(image_size(table));
        entry["sizes"] = std::move(sizes);
        j["classes"].push_back(std::move(entry));
    }
    j["saturated"] = report.saturated;
    j["truncated"] = report.truncated;
    nlohmann::json models;
    models["space_count"] = report.models.spaces.size();
    nlohmann::json corpus = nlohmann::json::array();
    for (const auto& set : report.models.corpus) corpus.push_back(format_set(set));
    models["corpus"] = std::move(corpus);
    j["models"] = std::move(models);
    return j;
}

nlohmann::json poset_to_json(const Poset& poset) {
    nlohmann::json j;
    j["labels"] = poset.labels;
    j["cover_edges"] = nlohmann::json::array();
    for (const auto& edge : poset.hasse) {
        nlohmann::json e;
        e["from"] = poset.labels[edge.from];
        e["to"] = poset.labels[edge.to];
        e["witness"] = witness_to_json(edge.strictness);
        j["cover_edges"].push_back(std::move(e));
    }
    j["incomparable"] = nlohmann::json::array();
    for (const auto& pair : poset.incomparable) {
        nlohmann::json e;
        e["a"] = poset.labels[pair.a];
        e["b"] = poset.labels[pair.b];
        e["a_not_below_b"] = witness_to_json(pair.a_not_below_b);
        e["b_not_below_a"] = witness_to_json(pair.b_not_below_a);
        j["incomparable"].push_back(std::move(e));
    }
    std::size_t relations = 0;
    for (const auto& row : poset.leq)
        for (bool v : row) relations += v ? 1 : 0;
    j["relation_count"] = relations;
    return j;
}

nlohmann::json experiment_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["generators"] = generators_to_json(report.generators);
    j["max_n"] = report.max_n;
    j["max_word_length"] = report.max_word_length;
    j["per_space"] = nlohmann::json::array();
    for (const auto& entry : report.per_space) {
        nlohmann::json e;
        e["n"] = entry.n;
        e["index"] = entry.index;
        e["classes"] = entry.classes;
        j["per_space"].push_back(std::move(e));
    }
    nlohmann::json agg;
    agg["growth"] = report.aggregate_growth;
    agg["classes"] = report.aggregate_classes;
    agg["saturated"] = report.saturated;
    agg["truncated"] = report.truncated;
    j["aggregate"] = std::move(agg);
    j["disclaimer"] = report.disclaimer;
    return j;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace topo
