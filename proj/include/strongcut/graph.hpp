#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strongcut {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown by the edge-list reader; the message names the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a construction or enumeration exceeds a hard size cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..order-1.
/// Edges are normalized (u < v) and kept in lexicographic order; adjacency
/// lists are built once at construction.
class Graph {
public:
    Graph() = default;
    Graph(int order, std::vector<Edge> edges);

    int order() const noexcept { return order_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// A vertex subset X together with the cut [X, X-bar] it induces.
struct Bipartition {
    std::vector<int> side_x;      // sorted, nonempty proper subset
    std::vector<Edge> cut_edges;  // sorted lexicographically
    int cut_size() const noexcept { return static_cast<int>(cut_edges.size()); }
};

/// Connectivity invariants and classification flags for one graph.
/// Tri-state flags use std::nullopt for "unknown" (enumeration cap exceeded).
struct InvariantReport {
    int order = 0;
    int size = 0;
    int min_degree = 0;
    int min_edge_degree = 0;
    int edge_connectivity = 0;
    std::optional<int> restricted_edge_connectivity;  // absent: no restricted cut exists
    bool maximally_edge_connected = false;
    std::optional<bool> super_edge_connected;
    bool maximally_restricted = false;
    std::optional<bool> super_restricted;
};

/// Reads the ".el" format: optional "#" comment lines, one "order size"
/// header, then exactly `size` lines "u v". Errors name the offending line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Canonical text form: "order size" header, then edges in lexicographic
/// order, "\n" terminators. Byte-stable for equal graphs.
std::string to_edge_list(const Graph& g);

/// One-line canonical form "order size u-v u-v ...", safe for CSV cells.
std::string to_canonical_id(const Graph& g);
Graph from_canonical_id(const std::string& id);

bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);
int min_degree(const Graph& g);

/// Edge degree d(u) + d(v) - 2 of an existing edge.
int edge_degree(const Graph& g, Edge e);

/// Minimum edge degree over all edges; throws std::domain_error if edgeless.
int min_edge_degree(const Graph& g);

/// True iff g is K_{1,k} for some k >= 0 (K1 and K2 count as stars).
bool is_star(const Graph& g);

Bipartition cut_of(const Graph& g, const std::vector<int>& side_x);

/// Subgraph induced on the given vertices, relabeled 0..|s|-1 in sorted order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace strongcut
