#pragma once

#include <optional>
#include <vector>

#include "strongcut/graph.hpp"

namespace strongcut {

/// Exhaustive bipartition enumeration visits 2^(order-1) subsets; this cap
/// bounds the orders for which that is allowed.
inline constexpr int kEnumerationCap = 20;

enum class CutMethod { flow, oracle };

/// Result of a restricted edge-connectivity computation. `value` is absent
/// when the graph has no restricted edge-cut (order < 4, or a star).
struct RestrictedCutResult {
    std::optional<int> value;
    std::optional<Bipartition> witness;
    CutMethod method = CutMethod::flow;
};

/// Edge-connectivity via unit-capacity max-flow from vertex 0 to every other
/// vertex. Returns 0 for disconnected input; order must be >= 2.
int edge_connectivity(const Graph& g);

/// A bipartition achieving the edge-connectivity (empty cut on disconnected
/// input, splitting off the component of vertex 0).
Bipartition minimum_edge_cut(const Graph& g);

/// Restricted edge-connectivity: the smallest bipartition cut whose two sides
/// both induce subgraphs without isolated vertices. Flow method: contract
/// each vertex-disjoint edge pair into a source/sink and take the minimum
/// s-t cut over all pairs.
RestrictedCutResult restricted_edge_connectivity_flow(const Graph& g);

/// Same value by exhaustive bipartition enumeration; order must be <= cap.
RestrictedCutResult restricted_edge_connectivity_oracle(const Graph& g, int cap = kEnumerationCap);

/// Every bipartition achieving the restricted edge-connectivity, sides
/// canonicalized to contain vertex 0, sorted lexicographically. Empty when
/// no restricted cut exists.
std::vector<Bipartition> all_minimum_restricted_bipartitions(const Graph& g,
                                                             int cap = kEnumerationCap);

/// Full invariant and classification report. Super flags come from
/// enumeration and are "unknown" (nullopt) above the cap.
InvariantReport classify(const Graph& g, int cap = kEnumerationCap);

}  // namespace strongcut
