#include "strongcut/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "strongcut/invariants.hpp"

namespace strongcut {

namespace {

FormulaBreakdown finish(std::vector<std::pair<std::string, int>> terms) {
    FormulaBreakdown b;
    b.terms = std::move(terms);
    b.argmin = 0;
    for (std::size_t i = 1; i < b.terms.size(); ++i)
        if (b.terms[i].second < b.terms[b.argmin].second) b.argmin = i;
    b.value = b.terms[b.argmin].second;
    return b;
}

void require_factor(const Graph& g, const char* op) {
    if (g.order() < 2)
        throw std::invalid_argument(std::string(op) + ": factor must have at least two vertices");
    if (!is_connected(g)) throw std::invalid_argument(std::string(op) + ": factor is disconnected");
}

void require_n(Family f, int n, const char* op) {
    if (n < family_min_n(f))
        throw std::invalid_argument(std::string(op) + ": " + family_name(f) +
                                    " formula needs n >= " + std::to_string(family_min_n(f)));
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
    }
    throw std::invalid_argument("family_name: unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    return std::nullopt;
}

Graph make_family_graph(Family f, int n) {
    switch (f) {
        case Family::path: return make_path(n);
        case Family::cycle: return make_cycle(n);
        case Family::complete: return make_complete(n);
    }
    throw std::invalid_argument("make_family_graph: unknown family");
}

int family_min_n(Family f) {
    switch (f) {
        case Family::path: return 2;
        case Family::cycle: return 3;
        case Family::complete: return 4;
    }
    throw std::invalid_argument("family_min_n: unknown family");
}

FactorStats FactorStats::of(const Graph& g) {
    require_factor(g, "FactorStats::of");
    FactorStats s;
    s.order = g.order();
    s.size = g.size();
    s.min_degree = strongcut::min_degree(g);
    s.min_edge_degree = strongcut::min_edge_degree(g);
    s.edge_connectivity = strongcut::edge_connectivity(g);
    return s;
}

nlohmann::json to_json(const FormulaBreakdown& b) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [label, value] : b.terms) terms.push_back({{"label", label}, {"value", value}});
    return {{"value", b.value}, {"argmin", b.terms[b.argmin].first}, {"terms", std::move(terms)}};
}

FormulaBreakdown lambda_strong_formula(const Graph& g, const Graph& h) {
    require_factor(g, "lambda_strong_formula");
    require_factor(h, "lambda_strong_formula");
    FactorStats sg = FactorStats::of(g);
    FactorStats sh = FactorStats::of(h);
    return finish({
        {"lambda(G)*(|H|+2e(H))", sg.edge_connectivity * (sh.order + 2 * sh.size)},
        {"lambda(H)*(|G|+2e(G))", sh.edge_connectivity * (sg.order + 2 * sg.size)},
        {"delta(G)+delta(H)+delta(G)*delta(H)",
         sg.min_degree + sh.min_degree + sg.min_degree * sh.min_degree},
    });
}

FormulaBreakdown xi_strong_formula(const Graph& g, const Graph& h) {
    require_factor(g, "xi_strong_formula");
    require_factor(h, "xi_strong_formula");
    FactorStats sg = FactorStats::of(g);
    FactorStats sh = FactorStats::of(h);
    return finish({
        {"xi(G)*delta(H)+4*delta(H)+xi(G)",
         sg.min_edge_degree * sh.min_degree + 4 * sh.min_degree + sg.min_edge_degree},
        {"delta(G)*xi(H)+4*delta(G)+xi(H)",
         sg.min_degree * sh.min_edge_degree + 4 * sg.min_degree + sh.min_edge_degree},
    });
}

FormulaBreakdown lambda_prime_path_formula(const Graph& g, int n) {
    require_factor(g, "lambda_prime_path_formula");
    require_n(Family::path, n, "lambda_prime_path_formula");
    FactorStats s = FactorStats::of(g);
    return finish({
        {"(3n-2)*lambda(G)", (3 * n - 2) * s.edge_connectivity},
        {"|G|+2e(G)", s.order + 2 * s.size},
        {"2*xi(G)+4", 2 * s.min_edge_degree + 4},
        {"5*delta(G)+1", 5 * s.min_degree + 1},
    });
}

FormulaBreakdown lambda_prime_cycle_formula(const Graph& g, int n) {
    require_factor(g, "lambda_prime_cycle_formula");
    require_n(Family::cycle, n, "lambda_prime_cycle_formula");
    FactorStats s = FactorStats::of(g);
    return finish({
        {"3n*lambda(G)", 3 * n * s.edge_connectivity},
        {"2*(|G|+2e(G))", 2 * (s.order + 2 * s.size)},
        {"6*delta(G)+2", 6 * s.min_degree + 2},
    });
}

FormulaBreakdown lambda_prime_complete_formula(const Graph& g, int n) {
    require_factor(g, "lambda_prime_complete_formula");
    require_n(Family::complete, n, "lambda_prime_complete_formula");
    FactorStats s = FactorStats::of(g);
    return finish({
        {"n^2*lambda(G)", n * n * s.edge_connectivity},
        {"(n-1)*(|G|+2e(G))", (n - 1) * (s.order + 2 * s.size)},
        {"2n*delta(G)+2n-4", 2 * n * s.min_degree + 2 * n - 4},
    });
}

FormulaBreakdown lambda_prime_formula(Family f, const Graph& g, int n) {
    switch (f) {
        case Family::path: return lambda_prime_path_formula(g, n);
        case Family::cycle: return lambda_prime_cycle_formula(g, n);
        case Family::complete: return lambda_prime_complete_formula(g, n);
    }
    throw std::invalid_argument("lambda_prime_formula: unknown family");
}

bool corollary_predicate(Family f, CorollaryMode mode, const Graph& g, int n) {
    FormulaBreakdown b = lambda_prime_formula(f, g, n);
    // Terms 0 and 1 come from cuts across whole fibers; the rest bound the
    // cut isolating a single product edge. The product is maximally (super)
    // restricted when the fiber terms cannot fall below (tie) the edge terms.
    int fiber = std::min(b.terms[0].second, b.terms[1].second);
    int edge = b.terms[2].second;
    for (std::size_t i = 3; i < b.terms.size(); ++i) edge = std::min(edge, b.terms[i].second);
    return mode == CorollaryMode::maximal ? fiber >= edge : fiber > edge;
}

Bipartition factor_side_witness_cut(const Graph& g, const std::vector<int>& x_side,
                                    const Graph& h) {
    require_factor(g, "factor_side_witness_cut");
    require_factor(h, "factor_side_witness_cut");
    if (x_side.empty() || static_cast<int>(x_side.size()) >= g.order())
        throw std::invalid_argument("factor_side_witness_cut: side must be a proper nonempty subset");
    ProductGraph p = strong_product(g, h);
    std::vector<int> side;
    side.reserve(x_side.size() * static_cast<std::size_t>(h.order()));
    for (int x : x_side) {
        if (x < 0 || x >= g.order())
            throw std::invalid_argument("factor_side_witness_cut: vertex out of range");
        for (int y = 0; y < h.order(); ++y) side.push_back(p.indexing.flat(x, y));
    }
    return cut_of(p.graph, side);
}

Bipartition fiber_witness_cut(const Graph& g, const Graph& h, int y) {
    require_factor(g, "fiber_witness_cut");
    require_factor(h, "fiber_witness_cut");
    if (y < 0 || y >= h.order())
        throw std::invalid_argument("fiber_witness_cut: vertex out of range");
    if (h.degree(y) != min_degree(h))
        throw std::invalid_argument("fiber_witness_cut: vertex must attain the minimum degree");
    ProductGraph p = strong_product(g, h);
    return cut_of(p.graph, fiber_g(p, y));
}

std::optional<Bipartition> edge_isolating_witness_cut(const Graph& g, Edge e) {
    if (g.order() < 4)
        throw std::invalid_argument("edge_isolating_witness_cut: graph must have at least four vertices");
    Edge norm = e.u < e.v ? e : Edge{e.v, e.u};
    if (!g.adjacent(norm.u, norm.v))
        throw std::invalid_argument("edge_isolating_witness_cut: not an edge of the graph");
    // The complement side must keep every vertex attached; a vertex whose
    // whole neighborhood is {u, v} would be stranded.
    for (int w = 0; w < g.order(); ++w) {
        if (w == norm.u || w == norm.v) continue;
        bool attached = false;
        for (int z : g.neighbors(w))
            if (z != norm.u && z != norm.v) {
                attached = true;
                break;
            }
        if (!attached) return std::nullopt;
    }
    return cut_of(g, {norm.u, norm.v});
}

}  // namespace strongcut
