#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "strongcut/formulas.hpp"
#include "strongcut/graph.hpp"
#include "strongcut/invariants.hpp"
#include "strongcut/products.hpp"
#include "strongcut/verify.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

strongcut::Graph read_graph(const std::string& path) {
    if (path == "-") return strongcut::parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return strongcut::parse_edge_list(in);
    } catch (const strongcut::ParseError& e) {
        throw strongcut::ParseError(path + ": " + e.what());
    }
}

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

nlohmann::json witness_json(const strongcut::Bipartition& w) {
    nlohmann::json edges = nlohmann::json::array();
    for (const strongcut::Edge& e : w.cut_edges) edges.push_back({e.u, e.v});
    return {{"side_x", w.side_x}, {"cut_edges", std::move(edges)}, {"cut_size", w.cut_size()}};
}

nlohmann::json tri_state(const std::optional<bool>& v) {
    if (!v) return "unknown";
    return *v;
}

// "N" or "LO..HI", inclusive.
std::vector<int> parse_n_range(const std::string& text) {
    auto fail = [&]() -> std::vector<int> {
        throw std::invalid_argument("bad n range '" + text + "' (expected N or LO..HI)");
    };
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t used = 0;
            int n = std::stoi(text, &used);
            if (used != text.size() || n < 1) return fail();
            return {n};
        }
        std::size_t used = 0;
        std::string lo_text = text.substr(0, dots);
        std::string hi_text = text.substr(dots + 2);
        int lo = std::stoi(lo_text, &used);
        if (used != lo_text.size()) return fail();
        int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size()) return fail();
        if (lo < 1 || hi < lo || hi - lo > 1000) return fail();
        std::vector<int> out;
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    } catch (const std::invalid_argument&) {
        return fail();
    } catch (const std::out_of_range&) {
        return fail();
    }
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

struct AnalyzeArgs {
    std::string input;
    int cap = strongcut::kEnumerationCap;
};

int cmd_analyze(const AnalyzeArgs& args, const std::string& command) {
    strongcut::Graph g = read_graph(args.input);
    strongcut::InvariantReport report = strongcut::classify(g, args.cap);

    std::optional<strongcut::Bipartition> witness;
    if (report.restricted_edge_connectivity) {
        strongcut::RestrictedCutResult r =
            g.order() <= args.cap ? strongcut::restricted_edge_connectivity_oracle(g, args.cap)
                                  : strongcut::restricted_edge_connectivity_flow(g);
        witness = std::move(r.witness);
    }

    nlohmann::json payload{
        {"id", strongcut::to_canonical_id(g)},
        {"order", report.order},
        {"size", report.size},
        {"min_degree", report.min_degree},
        {"min_edge_degree", report.min_edge_degree},
        {"edge_connectivity", report.edge_connectivity},
        {"restricted_edge_connectivity", nullptr},
        {"maximally_edge_connected", report.maximally_edge_connected},
        {"super_edge_connected", tri_state(report.super_edge_connected)},
        {"maximally_restricted", report.maximally_restricted},
        {"super_restricted", tri_state(report.super_restricted)},
        {"restricted_cut_witness", nullptr},
    };
    if (report.restricted_edge_connectivity)
        payload["restricted_edge_connectivity"] = *report.restricted_edge_connectivity;
    if (witness) payload["restricted_cut_witness"] = witness_json(*witness);

    nlohmann::json doc{{"tool_version", kToolVersion}, {"command", command}, {"report", payload}};
    std::cout << doc.dump(2) << '\n';
    return 0;
}

struct ProductArgs {
    std::string type;
    std::vector<std::string> inputs;
    std::string out;
};

int cmd_product(const ProductArgs& args) {
    strongcut::ProductGraph product{strongcut::Graph(1, {}), {1, 1}};
    std::string comment;
    if (args.type == "k2odot") {
        if (args.inputs.size() != 1)
            throw std::invalid_argument("product k2odot takes exactly one input file");
        strongcut::Graph h = read_graph(args.inputs[0]);
        product = strongcut::k2_odot(h);
        comment = "# product k2odot h=" + args.inputs[0] + " indexing=row-major";
    } else {
        if (args.inputs.size() != 2)
            throw std::invalid_argument("product " + args.type + " takes exactly two input files");
        strongcut::Graph g = read_graph(args.inputs[0]);
        strongcut::Graph h = read_graph(args.inputs[1]);
        if (args.type == "strong")
            product = strongcut::strong_product(g, h);
        else if (args.type == "cartesian")
            product = strongcut::cartesian_product(g, h);
        else if (args.type == "direct")
            product = strongcut::direct_product(g, h);
        else
            throw std::invalid_argument("unknown product type '" + args.type + "'");
        comment = "# product " + args.type + " g=" + args.inputs[0] + " h=" + args.inputs[1] +
                  " indexing=row-major";
    }

    std::string body = comment + '\n' + strongcut::to_edge_list(product.graph);
    if (args.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot open " + args.out);
        out << body;
    }
    return 0;
}

struct CheckArgs {
    std::string input;
    std::string family;
    int n = 0;
    std::string method = "both";
    int cap = strongcut::kEnumerationCap;
    int product_cap = 20;
};

int cmd_check(const CheckArgs& args) {
    std::optional<strongcut::Family> family = strongcut::family_from_name(args.family);
    if (!family) throw std::invalid_argument("unknown family '" + args.family + "'");
    std::optional<strongcut::ExactMethod> method = strongcut::exact_method_from_name(args.method);
    if (!method) throw std::invalid_argument("unknown method '" + args.method + "'");

    strongcut::Graph factor = read_graph(args.input);
    strongcut::CheckOptions options;
    options.method = *method;
    options.enumeration_cap = args.cap;
    options.product_order_cap = args.product_cap;
    strongcut::VerificationRecord rec = strongcut::check_theorem(factor, *family, args.n, options);

    if (rec.match == strongcut::MatchState::skipped) {
        std::cerr << "skipped: " << rec.note << '\n';
        return 2;
    }
    std::cout << "factor: " << rec.factor_id << '\n';
    std::cout << "family: " << strongcut::family_name(rec.family) << " n=" << rec.n << '\n';
    std::cout << "formula: " << rec.formula_value << '\n';
    std::cout << "exact: " << (rec.exact_value ? std::to_string(*rec.exact_value) : "absent")
              << " (" << strongcut::exact_method_name(rec.exact_method) << ")\n";
    std::cout << "match: " << strongcut::match_state_name(rec.match) << '\n';
    if (!rec.note.empty()) std::cout << "note: " << rec.note << '\n';
    return rec.match == strongcut::MatchState::matched ? 0 : 1;
}

struct SweepArgs {
    std::string corpus = "path,cycle,complete";
    std::string families = "path,cycle,complete";
    std::string n_range;
    int max_order = 5;
    int random_count = 0;
    std::uint64_t seed = 42;
    std::string method = "both";
    int cap = strongcut::kEnumerationCap;
    int product_cap = 20;
    int jobs = 1;
    int formula_offset = 0;
    std::string format;
    std::string out;
};

int cmd_sweep(const SweepArgs& args) {
    strongcut::CorpusSpec spec;
    spec.paths = spec.cycles = spec.completes = false;
    spec.max_order = args.max_order;
    spec.random_count = args.random_count;
    spec.seed = args.seed;
    for (const std::string& group : split_commas(args.corpus)) {
        if (group == "path")
            spec.paths = true;
        else if (group == "cycle")
            spec.cycles = true;
        else if (group == "complete")
            spec.completes = true;
        else if (group == "tree")
            spec.trees = true;
        else if (group == "near-regular")
            spec.near_regular = true;
        else
            throw std::invalid_argument("unknown corpus group '" + group + "'");
    }

    std::vector<strongcut::Family> families;
    for (const std::string& name : split_commas(args.families)) {
        std::optional<strongcut::Family> f = strongcut::family_from_name(name);
        if (!f) throw std::invalid_argument("unknown family '" + name + "'");
        families.push_back(*f);
    }

    std::vector<int> n_values;
    if (!args.n_range.empty()) n_values = parse_n_range(args.n_range);

    std::optional<strongcut::ExactMethod> method = strongcut::exact_method_from_name(args.method);
    if (!method) throw std::invalid_argument("unknown method '" + args.method + "'");

    if (!args.out.empty() && args.format.empty())
        throw std::invalid_argument("--out requires --format");
    if (!args.format.empty() && args.format != "json" && args.format != "csv")
        throw std::invalid_argument("unknown format '" + args.format + "' (expected json or csv)");

    strongcut::CheckOptions options;
    options.method = *method;
    options.enumeration_cap = args.cap;
    options.product_order_cap = args.product_cap;
    options.formula_offset = args.formula_offset;

    std::vector<strongcut::Graph> corpus = strongcut::generate_corpus(spec);
    strongcut::SweepResult result = strongcut::sweep(corpus, families, n_values, options, args.jobs);

    std::ostringstream summary;
    summary << "sweep: " << result.summary.total << " records, " << result.summary.matched
            << " matched, " << result.summary.mismatched << " mismatched, "
            << result.summary.skipped << " skipped";

    if (args.format.empty()) {
        std::cout << summary.str() << '\n';
    } else {
        std::string body = args.format == "json" ? strongcut::to_jsonl(result.records)
                                                 : strongcut::to_csv(result.records);
        if (args.out.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(args.out);
            if (!out) throw std::runtime_error("cannot open " + args.out);
            out << body;
        }
        std::cerr << summary.str() << '\n';
    }
    return result.summary.mismatched == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted edge-connectivity toolkit for strong product graphs"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "connectivity invariants of one graph");
    analyze->add_option("input", analyze_args.input, "edge list file, or - for stdin")->required();
    analyze->add_option("--cap", analyze_args.cap, "max order for exhaustive classification");

    ProductArgs product_args;
    CLI::App* product = app.add_subcommand("product", "build a product graph");
    product->add_option("type", product_args.type, "strong, cartesian, direct, or k2odot")
        ->required();
    product->add_option("inputs", product_args.inputs, "factor edge list files")->required();
    product->add_option("--out", product_args.out, "write the edge list here instead of stdout");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "compare a family formula with exact solvers");
    check->add_option("input", check_args.input, "factor edge list file, or - for stdin")
        ->required();
    check->add_option("--family", check_args.family, "path, cycle, or complete")->required();
    check->add_option("--n", check_args.n, "family parameter")->required();
    check->add_option("--method", check_args.method, "flow, oracle, or both");
    check->add_option("--cap", check_args.cap, "max order for the enumeration oracle");
    check->add_option("--product-cap", check_args.product_cap, "max product order to solve");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "verify formulas across a factor corpus");
    sweep->add_option("--corpus", sweep_args.corpus,
                      "groups: path, cycle, complete, tree, near-regular");
    sweep->add_option("--families", sweep_args.families, "families to check");
    sweep->add_option("--n", sweep_args.n_range, "family parameter, N or LO..HI");
    sweep->add_option("--max-order", sweep_args.max_order, "largest factor order");
    sweep->add_option("--random-count", sweep_args.random_count,
                      "random connected factors per order");
    sweep->add_option("--seed", sweep_args.seed, "random corpus seed");
    sweep->add_option("--method", sweep_args.method, "flow, oracle, or both");
    sweep->add_option("--cap", sweep_args.cap, "max order for the enumeration oracle");
    sweep->add_option("--product-cap", sweep_args.product_cap, "max product order to solve");
    sweep->add_option("--jobs", sweep_args.jobs, "worker threads");
    sweep->add_option("--formula-offset", sweep_args.formula_offset)->group("");
    sweep->add_option("--format", sweep_args.format, "machine output: json or csv");
    sweep->add_option("--out", sweep_args.out, "write machine output here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_args, join_args(argc, argv));
        if (product->parsed()) return cmd_product(product_args);
        if (check->parsed()) return cmd_check(check_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
