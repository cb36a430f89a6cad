#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strongcut/graph.hpp"
#include "strongcut/products.hpp"

namespace strongcut {

// Families with closed-form restricted edge-connectivity for G boxtimes F.
enum class Family { path, cycle, complete };

// Each family has two sharpness corollaries: the formula value reaching the
// edge-degree bound (maximal) or exceeding every non-edge-isolating term
// (super).
enum class CorollaryMode { maximal, super };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
Graph make_family_graph(Family f, int n);

// Smallest n for which the family formula applies.
int family_min_n(Family f);

// Invariants of a factor that the closed forms consume.
struct FactorStats {
    int order = 0;
    int size = 0;
    int min_degree = 0;
    int min_edge_degree = 0;
    int edge_connectivity = 0;

    static FactorStats of(const Graph& g);
};

// A formula evaluated as a minimum of named terms.
struct FormulaBreakdown {
    std::vector<std::pair<std::string, int>> terms;
    int value = 0;
    std::size_t argmin = 0;  // first index attaining the minimum
};

nlohmann::json to_json(const FormulaBreakdown& b);

// Edge connectivity of the strong product of two connected graphs on at
// least two vertices each.
FormulaBreakdown lambda_strong_formula(const Graph& g, const Graph& h);

// Minimum edge degree of the strong product; both factors connected with at
// least one edge, and not both K2 unless edge degrees are defined (they are:
// xi(K2) = 0).
FormulaBreakdown xi_strong_formula(const Graph& g, const Graph& h);

// Restricted edge connectivity of g boxtimes P_n (n >= 2), g boxtimes C_n
// (n >= 3), g boxtimes K_n (n >= 4); g connected with at least two vertices.
FormulaBreakdown lambda_prime_path_formula(const Graph& g, int n);
FormulaBreakdown lambda_prime_cycle_formula(const Graph& g, int n);
FormulaBreakdown lambda_prime_complete_formula(const Graph& g, int n);
FormulaBreakdown lambda_prime_formula(Family f, const Graph& g, int n);

// Sufficient condition for the product to be maximally/super restricted:
// the two cut-style terms of the formula dominate (weakly for maximal,
// strictly for super) the edge-isolating terms.
bool corollary_predicate(Family f, CorollaryMode mode, const Graph& g, int n);

// Cut isolating X x V(h) in g boxtimes h, where X is a proper nonempty
// vertex subset of g. Size: |[X, X-bar]_g| * (|h| + 2 e(h)).
Bipartition factor_side_witness_cut(const Graph& g, const std::vector<int>& x_side,
                                    const Graph& h);

// Cut isolating the fiber V(g) x {y} in g boxtimes h, where y attains the
// minimum degree of h. Size: d_h(y) * (|g| + 2 e(g)). Requires g connected
// without isolated vertices.
Bipartition fiber_witness_cut(const Graph& g, const Graph& h, int y);

// Cut isolating the two endpoints of edge e in any graph of order >= 4.
// Size: d(u) + d(v) - 2. Absent when removing the pair strands a vertex.
std::optional<Bipartition> edge_isolating_witness_cut(const Graph& g, Edge e);

}  // namespace strongcut
