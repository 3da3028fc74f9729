// topolab: normalize operator words, enumerate finite topologies, search for
// separating witnesses, and run monoid growth experiments with JSON/DOT output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topo/finitetop.hpp"
#include "topo/monoid.hpp"
#include "topo/realline.hpp"
#include "topo/reports.hpp"
#include "topo/rewrite.hpp"
#include "topo/terms.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::vector<topo::Generator> parse_generator_list(const std::string& text) {
    std::vector<topo::Generator> gens;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        topo::Word w = topo::parse_word(item);
        if (w.size() != 1)
            throw topo::ParseError(0, "generator list entry '" + item +
                                          "' must name exactly one generator");
        gens.push_back(w.gens[0]);
    }
    if (gens.empty()) throw topo::ParseError(0, "empty generator list");
    return gens;
}

std::vector<topo::RealLineSet> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file '" + path + "'");
    std::vector<topo::RealLineSet> corpus;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char ch : line)
            if (ch != '\r') trimmed += ch;
        if (trimmed.empty() || trimmed[0] == '#') continue;
        corpus.push_back(topo::make_set(trimmed));
    }
    if (corpus.empty()) throw std::runtime_error("corpus file '" + path + "' holds no set literals");
    return corpus;
}

// Model selector list: "finite:K" (all spaces on at most K points),
// "realline" (builtin corpus), "realline:FILE" (one literal per line).
topo::ModelSet parse_models(const std::string& text) {
    topo::ModelSet models;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        if (item.rfind("finite:", 0) == 0) {
            int max_n = std::stoi(item.substr(7));
            auto spaces = topo::spaces_up_to(max_n);
            models.spaces.insert(models.spaces.end(), std::make_move_iterator(spaces.begin()),
                                 std::make_move_iterator(spaces.end()));
        } else if (item == "realline") {
            auto corpus = topo::builtin_corpus();
            models.corpus.insert(models.corpus.end(), corpus.begin(), corpus.end());
        } else if (item.rfind("realline:", 0) == 0) {
            auto corpus = load_corpus_file(item.substr(9));
            models.corpus.insert(models.corpus.end(), corpus.begin(), corpus.end());
        } else {
            throw std::runtime_error("unknown model selector '" + item +
                                     "' (use finite:K, realline, or realline:FILE)");
        }
    }
    if (models.spaces.empty() && models.corpus.empty())
        throw std::runtime_error("empty model list");
    return models;
}

json gens_json(const std::vector<topo::Generator>& gens) {
    json arr = json::array();
    for (auto g : gens) arr.push_back(std::string(topo::token_of(g)));
    return arr;
}

void emit(const json& report, const std::optional<std::string>& path, bool to_stdout,
          const std::string& summary) {
    std::string text = report.dump(2);
    text += '\n';
    if (path) {
        topo::write_file_atomic(*path, text);
        if (to_stdout)
            std::cout << text;
        else
            std::cout << summary << " -> " << *path << "\n";
    } else {
        std::cout << text;
    }
}

struct Options {
    bool json_output = false;
    std::uint64_t seed = 0;

    // normalize
    std::string word;
    bool trace = false;

    // spaces
    int n = 1;
    std::string out_path;

    // shared enumeration knobs
    std::string gens;
    int max_n = 3;
    int max_len = 10;
    std::size_t max_classes = topo::kDefaultClassCap;
    std::optional<std::string> report_path;
    std::optional<std::string> corpus_path;

    // separate
    std::string word_left, word_right;
    std::string models = "finite:3,realline";

    // poset
    std::optional<std::string> dot_path;
};

json base_config(const std::string& command, const Options& opt) {
    json cfg;
    cfg["command"] = command;
    cfg["seed"] = opt.seed;
    return cfg;
}

topo::ModelSet corpus_models(const Options& opt) {
    topo::ModelSet models;
    models.spaces = topo::spaces_up_to(opt.max_n);
    models.corpus = opt.corpus_path ? load_corpus_file(*opt.corpus_path) : topo::builtin_corpus();
    return models;
}

int run_normalize(const Options& opt) {
    topo::Word w = topo::parse_word(opt.word);
    topo::NormalForm nf = topo::normalize(w);
    json steps = json::array();
    for (const auto& step : nf.trace) {
        json s;
        s["rule"] = step.rule;
        s["position"] = step.position;
        s["before"] = topo::format_word(step.before);
        s["after"] = topo::format_word(step.after);
        steps.push_back(std::move(s));
    }
    if (opt.json_output) {
        json out;
        out["config"] = base_config("normalize", opt);
        out["config"]["word"] = opt.word;
        out["config"]["trace"] = opt.trace;
        out["input"] = topo::format_word(w);
        out["normal_form"] = topo::format_word(nf.word);
        if (opt.trace) out["trace"] = std::move(steps);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << topo::format_word(nf.word) << "\n";
    if (opt.trace)
        for (const auto& s : steps) std::cout << s.dump() << "\n";
    return kExitOk;
}

int run_spaces(const Options& opt) {
    auto spaces = topo::enumerate_topologies(opt.n);
    json report = topo::spaces_to_json(opt.n, spaces);
    report["config"] = base_config("spaces", opt);
    report["config"]["n"] = opt.n;
    report["config"]["out"] = opt.out_path;
    emit(report, opt.out_path, opt.json_output,
         "n=" + std::to_string(opt.n) + " spaces=" + std::to_string(spaces.size()));
    return kExitOk;
}

int run_monoid(const Options& opt) {
    auto gens = parse_generator_list(opt.gens);
    topo::MonoidReport result =
        topo::enumerate_monoid(gens, corpus_models(opt), opt.max_len, opt.max_classes);
    json report = topo::monoid_report_to_json(result);
    report["config"] = base_config("monoid", opt);
    report["config"]["gens"] = gens_json(result.generators);
    report["config"]["max_n"] = opt.max_n;
    report["config"]["max_len"] = opt.max_len;
    report["config"]["max_classes"] = opt.max_classes;
    if (opt.corpus_path) report["config"]["corpus"] = *opt.corpus_path;
    if (opt.report_path) report["config"]["report"] = *opt.report_path;
    emit(report, opt.report_path, opt.json_output,
         "classes=" + std::to_string(result.classes.size()) +
             " saturated=" + (result.saturated ? "yes" : "no") +
             " truncated=" + (result.truncated ? "yes" : "no"));
    return kExitOk;
}

int run_separate(const Options& opt) {
    topo::Word left = topo::parse_word(opt.word_left);
    topo::Word right = topo::parse_word(opt.word_right);
    topo::ModelSet models = parse_models(opt.models);
    auto witness = topo::separate(left, right, models);
    if (opt.json_output) {
        json out;
        out["config"] = base_config("separate", opt);
        out["config"]["left"] = opt.word_left;
        out["config"]["right"] = opt.word_right;
        out["config"]["models"] = opt.models;
        out["witness"] = witness ? topo::witness_to_json(*witness) : json(nullptr);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (!witness) {
        std::cout << "no separating witness on the supplied models (equality not implied)\n";
        return kExitOk;
    }
    std::cout << "witness model=" << witness->model << "[" << witness->model_index << "]"
              << " input=" << witness->input << "\n"
              << "  " << topo::format_word(left) << " -> " << witness->left_image << "\n"
              << "  " << topo::format_word(right) << " -> " << witness->right_image << "\n";
    return kExitOk;
}

int run_poset(const Options& opt) {
    auto gens = parse_generator_list(opt.gens);
    topo::MonoidReport result =
        topo::enumerate_monoid(gens, corpus_models(opt), opt.max_len, opt.max_classes);
    topo::Poset poset = topo::compute_poset(result);
    if (opt.dot_path) topo::write_file_atomic(*opt.dot_path, topo::emit_hasse_dot(poset));
    json report = topo::poset_to_json(poset);
    report["config"] = base_config("poset", opt);
    report["config"]["gens"] = gens_json(result.generators);
    report["config"]["max_n"] = opt.max_n;
    report["config"]["max_len"] = opt.max_len;
    if (opt.dot_path) report["config"]["dot"] = *opt.dot_path;
    if (opt.corpus_path) report["config"]["corpus"] = *opt.corpus_path;
    if (opt.report_path) report["config"]["report"] = *opt.report_path;
    std::string summary = "elements=" + std::to_string(poset.labels.size()) +
                          " cover_edges=" + std::to_string(poset.hasse.size()) +
                          " incomparable=" + std::to_string(poset.incomparable.size());
    if (opt.report_path) {
        emit(report, opt.report_path, opt.json_output, summary);
    } else if (opt.json_output) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << summary << (opt.dot_path ? " dot -> " + *opt.dot_path : "") << "\n";
    }
    return kExitOk;
}

int run_experiment(const Options& opt) {
    auto gens = parse_generator_list(opt.gens);
    topo::ExperimentReport result =
        topo::open_problem_experiment(opt.max_n, gens, opt.max_len, opt.max_classes);
    json report = topo::experiment_to_json(result);
    report["config"] = base_config("experiment", opt);
    report["config"]["gens"] = gens_json(result.generators);
    report["config"]["max_n"] = opt.max_n;
    report["config"]["max_len"] = opt.max_len;
    report["config"]["max_classes"] = opt.max_classes;
    if (opt.report_path) report["config"]["report"] = *opt.report_path;
    emit(report, opt.report_path, opt.json_output,
         "aggregate_classes=" + std::to_string(result.aggregate_classes) +
             " saturated=" + (result.saturated ? "yes" : "no"));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laboratory for monoids generated by topological operators"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_output, "print machine-readable JSON to stdout");
    app.add_option("--seed", opt.seed, "seed recorded in report configs");

    auto* normalize = app.add_subcommand("normalize", "rewrite a word to its normal form");
    normalize->add_option("word", opt.word, "operator word, e.g. c.i.c.i")->required();
    normalize->add_flag("--trace", opt.trace, "print one JSON line per rewrite step");

    auto* spaces = app.add_subcommand("spaces", "enumerate labeled topologies");
    spaces->add_option("--n", opt.n, "point count (1..5)")->required();
    spaces->add_option("--out", opt.out_path, "output JSON file")->required();

    std::string report_path, corpus_path, dot_path;
    auto* monoid = app.add_subcommand("monoid", "enumerate word classes over models");
    monoid->add_option("--gens", opt.gens, "comma-separated generators, e.g. c,i,n")->required();
    monoid->add_option("--max-n", opt.max_n, "use all finite spaces on at most this many points");
    monoid->add_option("--max-len", opt.max_len, "maximum word length");
    monoid->add_option("--max-classes", opt.max_classes, "class cap before truncation");
    monoid->add_option("--report", report_path, "output JSON file");
    monoid->add_option("--corpus", corpus_path, "real-line corpus file (one literal per line)");

    auto* separate = app.add_subcommand("separate", "search for a separating witness");
    separate->add_option("left", opt.word_left, "first word")->required();
    separate->add_option("right", opt.word_right, "second word")->required();
    separate->add_option("--models", opt.models, "model selectors (default finite:3,realline)");

    auto* poset = app.add_subcommand("poset", "order classes by pointwise image inclusion");
    poset->add_option("--gens", opt.gens, "comma-separated generators")->required();
    poset->add_option("--max-n", opt.max_n, "use all finite spaces on at most this many points");
    poset->add_option("--max-len", opt.max_len, "maximum word length");
    poset->add_option("--max-classes", opt.max_classes, "class cap before truncation");
    poset->add_option("--dot", dot_path, "output DOT file with cover edges");
    poset->add_option("--report", report_path, "output JSON file with edges and witnesses");
    poset->add_option("--corpus", corpus_path, "real-line corpus file");

    auto* experiment = app.add_subcommand("experiment", "per-space and aggregated growth counts");
    experiment->add_option("--gens", opt.gens, "comma-separated generators")
        ->default_val("c,i,n,b");
    experiment->add_option("--max-n", opt.max_n, "largest point count to enumerate");
    experiment->add_option("--max-len", opt.max_len, "maximum word length")->default_val(12);
    experiment->add_option("--max-classes", opt.max_classes, "class cap before truncation");
    experiment->add_option("--report", report_path, "output JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (!report_path.empty()) opt.report_path = report_path;
    if (!corpus_path.empty()) opt.corpus_path = corpus_path;
    if (!dot_path.empty()) opt.dot_path = dot_path;

    try {
        if (normalize->parsed()) return run_normalize(opt);
        if (spaces->parsed()) return run_spaces(opt);
        if (monoid->parsed()) return run_monoid(opt);
        if (separate->parsed()) return run_separate(opt);
        if (poset->parsed()) return run_poset(opt);
        if (experiment->parsed()) return run_experiment(opt);
        std::cerr << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const topo::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const topo::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
}
