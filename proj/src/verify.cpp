#include "strongcut/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "strongcut/products.hpp"

namespace strongcut {

namespace {

Graph make_star(int order) {
    std::vector<Edge> edges;
    for (int v = 1; v < order; ++v) edges.push_back({0, v});
    return Graph(order, edges);
}

// Path 0..order-3 with two extra leaves hanging off vertex 0.
Graph make_broom(int order) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 <= order - 3; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, order - 2});
    edges.push_back({0, order - 1});
    return Graph(order, edges);
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, edges);
}

// Complete graph minus the perfect matching {2i, 2i+1}.
Graph make_cocktail_party(int order) {
    std::vector<Edge> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (!(u / 2 == v / 2)) edges.push_back({u, v});
    return Graph(order, edges);
}

// mt19937_64 output mapped to [0, 1). std::uniform_real_distribution is
// implementation-defined, so roll the mapping by hand to keep the corpus
// byte-identical across standard libraries.
double unit_draw(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

Graph make_random_connected(int order, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                if (unit_draw(rng) < p) edges.push_back({u, v});
        Graph g(order, edges);
        if (is_connected(g)) return g;
    }
    throw std::logic_error("make_random_connected: rejection loop did not terminate");
}

struct ExactOutcome {
    std::optional<int> value;
    std::optional<Bipartition> witness;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string exact_method_name(ExactMethod m) {
    switch (m) {
        case ExactMethod::flow: return "flow";
        case ExactMethod::oracle: return "oracle";
        case ExactMethod::both: return "both";
    }
    throw std::invalid_argument("exact_method_name: unknown method");
}

std::optional<ExactMethod> exact_method_from_name(const std::string& name) {
    if (name == "flow") return ExactMethod::flow;
    if (name == "oracle") return ExactMethod::oracle;
    if (name == "both") return ExactMethod::both;
    return std::nullopt;
}

std::string match_state_name(MatchState s) {
    switch (s) {
        case MatchState::matched: return "true";
        case MatchState::mismatched: return "false";
        case MatchState::skipped: return "unknown";
    }
    throw std::invalid_argument("match_state_name: unknown state");
}

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
    if (spec.max_order < 2) throw std::invalid_argument("generate_corpus: max_order must be >= 2");
    std::vector<Graph> out;
    if (spec.paths)
        for (int n = 2; n <= spec.max_order; ++n) out.push_back(make_path(n));
    if (spec.cycles)
        for (int n = 3; n <= spec.max_order; ++n) out.push_back(make_cycle(n));
    if (spec.completes)
        for (int n = 2; n <= spec.max_order; ++n) out.push_back(make_complete(n));
    if (spec.trees) {
        for (int n = 4; n <= spec.max_order; ++n) out.push_back(make_star(n));
        for (int n = 5; n <= spec.max_order; ++n) out.push_back(make_broom(n));
    }
    if (spec.near_regular) {
        for (int n = 4; n <= spec.max_order; ++n)
            out.push_back(make_complete_bipartite((n + 1) / 2, n / 2));
        for (int n = 4; n <= spec.max_order; n += 2) out.push_back(make_cocktail_party(n));
    }
    if (spec.random_count > 0) {
        const double probabilities[] = {0.35, 0.45, 0.55, 0.65};
        for (int order = 4; order <= spec.max_order; ++order)
            for (int i = 0; i < spec.random_count; ++i)
                out.push_back(make_random_connected(
                    order, probabilities[i % 4],
                    spec.seed + 1000003ull * static_cast<std::uint64_t>(order) +
                        static_cast<std::uint64_t>(i)));
    }
    return out;
}

std::vector<int> default_n_values(Family f) {
    switch (f) {
        case Family::path: return {2, 3, 4};
        case Family::cycle: return {3, 4, 5};
        case Family::complete: return {4, 5};
    }
    throw std::invalid_argument("default_n_values: unknown family");
}

VerificationRecord check_theorem(const Graph& factor, Family family, int n,
                                 const CheckOptions& options) {
    auto start = Clock::now();
    VerificationRecord rec;
    rec.factor_id = to_canonical_id(factor);
    rec.family = family;
    rec.n = n;
    rec.exact_method = options.method;

    FormulaBreakdown formula = lambda_prime_formula(family, factor, n);
    rec.formula_value = formula.value + options.formula_offset;
    rec.corollary_maximal_predicted = corollary_predicate(family, CorollaryMode::maximal, factor, n);
    rec.corollary_super_predicted = corollary_predicate(family, CorollaryMode::super, factor, n);

    long long product_order = static_cast<long long>(factor.order()) * n;
    if (product_order > options.product_order_cap) {
        rec.match = MatchState::skipped;
        rec.note = "product order " + std::to_string(product_order) + " exceeds cap " +
                   std::to_string(options.product_order_cap);
        rec.elapsed_ms = ms_since(start);
        return rec;
    }

    ProductGraph product = strong_product(factor, make_family_graph(family, n));

    bool want_flow = options.method != ExactMethod::oracle;
    bool want_oracle = options.method != ExactMethod::flow;
    if (want_oracle && product.graph.order() > options.enumeration_cap) {
        if (options.method == ExactMethod::oracle) {
            rec.match = MatchState::skipped;
            rec.note = "product order " + std::to_string(product.graph.order()) +
                       " exceeds enumeration cap " + std::to_string(options.enumeration_cap);
            rec.elapsed_ms = ms_since(start);
            return rec;
        }
        want_oracle = false;
        rec.exact_method = ExactMethod::flow;
        rec.note = "oracle skipped: order exceeds enumeration cap";
    }

    ExactOutcome flow, oracle;
    if (want_flow) {
        RestrictedCutResult r = restricted_edge_connectivity_flow(product.graph);
        flow = {r.value, std::move(r.witness)};
    }
    if (want_oracle) {
        RestrictedCutResult r =
            restricted_edge_connectivity_oracle(product.graph, options.enumeration_cap);
        oracle = {r.value, std::move(r.witness)};
    }

    if (want_flow && want_oracle && flow.value != oracle.value) {
        rec.match = MatchState::mismatched;
        rec.exact_value = flow.value;
        auto show = [](const std::optional<int>& v) {
            return v ? std::to_string(*v) : std::string("absent");
        };
        rec.note = "solvers disagree: flow=" + show(flow.value) + " oracle=" + show(oracle.value);
        rec.elapsed_ms = ms_since(start);
        return rec;
    }

    rec.exact_value = want_flow ? flow.value : oracle.value;
    rec.witness = want_oracle && oracle.witness ? std::move(oracle.witness) : std::move(flow.witness);
    if (!rec.exact_value) {
        rec.match = MatchState::mismatched;
        rec.note = "restricted edge connectivity undefined on product";
    } else {
        rec.match =
            *rec.exact_value == rec.formula_value ? MatchState::matched : MatchState::mismatched;
    }

    InvariantReport report = classify(product.graph, options.enumeration_cap);
    rec.classified_maximal = report.maximally_restricted;
    rec.classified_super = report.super_restricted;

    rec.elapsed_ms = ms_since(start);
    return rec;
}

SweepResult sweep(const std::vector<Graph>& corpus, const std::vector<Family>& families,
                  const std::vector<int>& n_values, const CheckOptions& options, int threads) {
    struct Item {
        const Graph* factor;
        Family family;
        int n;
    };
    std::vector<Item> items;
    for (const Graph& g : corpus) {
        for (Family f : families) {
            std::vector<int> ns = n_values.empty() ? default_n_values(f) : n_values;
            for (int n : ns)
                if (n >= family_min_n(f)) items.push_back({&g, f, n});
        }
    }

    SweepResult result;
    result.records.resize(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) break;
            const Item& item = items[i];
            try {
                result.records[i] = check_theorem(*item.factor, item.family, item.n, options);
            } catch (const std::exception& e) {
                VerificationRecord rec;
                rec.factor_id = to_canonical_id(*item.factor);
                rec.family = item.family;
                rec.n = item.n;
                rec.exact_method = options.method;
                rec.match = MatchState::mismatched;
                rec.note = std::string("error: ") + e.what();
                result.records[i] = std::move(rec);
            }
        }
    };

    int worker_count = std::max(1, threads);
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    result.summary.total = static_cast<int>(result.records.size());
    for (const VerificationRecord& r : result.records) {
        switch (r.match) {
            case MatchState::matched: ++result.summary.matched; break;
            case MatchState::mismatched: ++result.summary.mismatched; break;
            case MatchState::skipped: ++result.summary.skipped; break;
        }
    }
    return result;
}

nlohmann::json record_to_json(const VerificationRecord& r) {
    nlohmann::json j{
        {"factor_id", r.factor_id},
        {"family", family_name(r.family)},
        {"n", r.n},
        {"formula", r.formula_value},
        {"exact", nullptr},
        {"method", exact_method_name(r.exact_method)},
        {"match", match_state_name(r.match)},
        {"corollary_maximal_predicted", r.corollary_maximal_predicted},
        {"corollary_super_predicted", r.corollary_super_predicted},
        {"classified_maximal", nullptr},
        {"classified_super", nullptr},
        {"witness", nullptr},
        {"note", r.note},
        {"elapsed_ms", r.elapsed_ms},
    };
    if (r.exact_value) j["exact"] = *r.exact_value;
    if (r.classified_maximal) j["classified_maximal"] = *r.classified_maximal;
    if (r.classified_super) j["classified_super"] = *r.classified_super;
    if (r.witness) {
        nlohmann::json edges = nlohmann::json::array();
        for (const Edge& e : r.witness->cut_edges) edges.push_back({e.u, e.v});
        j["witness"] = {{"side_x", r.witness->side_x},
                        {"cut_edges", std::move(edges)},
                        {"cut_size", r.witness->cut_size()}};
    }
    return j;
}

std::string to_jsonl(const std::vector<VerificationRecord>& records) {
    std::string out;
    for (const VerificationRecord& r : records) {
        out += record_to_json(r).dump();
        out += '\n';
    }
    return out;
}

const char* const kCsvHeader = "factor_id,family,n,formula,exact,method,match,elapsed_ms";

std::string to_csv(const std::vector<VerificationRecord>& records) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const VerificationRecord& r : records) {
        char elapsed[32];
        std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
        out << r.factor_id << ',' << family_name(r.family) << ',' << r.n << ','
            << r.formula_value << ',';
        if (r.exact_value) out << *r.exact_value;
        out << ',' << exact_method_name(r.exact_method) << ',' << match_state_name(r.match) << ','
            << elapsed << '\n';
    }
    return out.str();
}

}  // namespace strongcut
