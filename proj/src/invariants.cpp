#include "strongcut/invariants.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>

namespace strongcut {

namespace {

// Dinic-style unit-capacity max-flow. Arcs are stored in pairs so that
// arc ^ 1 is the reverse arc; an undirected edge contributes one unit of
// capacity in each direction.
class UnitFlowNetwork {
public:
    explicit UnitFlowNetwork(int node_count)
        : out_(node_count), level_(node_count), next_arc_(node_count) {}

    void add_undirected_edge(int u, int v) {
        push_arc(u, v);
        push_arc(v, u);
    }

    // Returns min(max-flow, limit); stops augmenting once limit is reached.
    // When the returned value is below limit the flow is maximum and the
    // residual graph identifies a minimum cut.
    int max_flow(int source, int sink, int limit) {
        int total = 0;
        while (total < limit && build_levels(source, sink)) {
            std::fill(next_arc_.begin(), next_arc_.end(), 0);
            while (total < limit && augment(source, sink)) ++total;
        }
        return total;
    }

    // Nodes reachable from `source` in the residual graph.
    std::vector<char> source_side(int source) const {
        std::vector<char> seen(out_.size(), 0);
        std::vector<int> stack = {source};
        seen[source] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a : out_[v]) {
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = 1;
                    stack.push_back(to_[a]);
                }
            }
        }
        return seen;
    }

private:
    void push_arc(int from, int to) {
        out_[from].push_back(static_cast<int>(to_.size()));
        to_.push_back(to);
        cap_.push_back(1);
    }

    bool build_levels(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[source] = 0;
        q.push(source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : out_[v]) {
                if (cap_[a] > 0 && level_[to_[a]] < 0) {
                    level_[to_[a]] = level_[v] + 1;
                    q.push(to_[a]);
                }
            }
        }
        return level_[sink] >= 0;
    }

    bool augment(int v, int sink) {
        if (v == sink) return true;
        for (int& i = next_arc_[v]; i < static_cast<int>(out_[v].size()); ++i) {
            int a = out_[v][i];
            int w = to_[a];
            if (cap_[a] > 0 && level_[w] == level_[v] + 1 && augment(w, sink)) {
                cap_[a] -= 1;
                cap_[a ^ 1] += 1;
                return true;
            }
        }
        level_[v] = -1;
        return false;
    }

    std::vector<int> to_;
    std::vector<int> cap_;
    std::vector<std::vector<int>> out_;
    std::vector<int> level_;
    std::vector<int> next_arc_;
};

UnitFlowNetwork build_network(const Graph& g) {
    UnitFlowNetwork net(g.order());
    for (const Edge& e : g.edges()) net.add_undirected_edge(e.u, e.v);
    return net;
}

// Adjacency as one bitmask per vertex, for exhaustive bipartition scans.
struct BitGraph {
    int n;
    std::uint64_t full;
    std::vector<std::uint64_t> adj;

    explicit BitGraph(const Graph& g) : n(g.order()), adj(g.order(), 0) {
        full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
        for (const Edge& e : g.edges()) {
            adj[e.u] |= 1ull << e.v;
            adj[e.v] |= 1ull << e.u;
        }
    }

    bool side_has_isolated(std::uint64_t side) const {
        for (std::uint64_t rest = side; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if ((adj[v] & side) == 0) return true;
        }
        return false;
    }

    int cut_size(std::uint64_t side) const {
        std::uint64_t comp = full ^ side;
        int total = 0;
        for (std::uint64_t rest = side; rest; rest &= rest - 1)
            total += std::popcount(adj[std::countr_zero(rest)] & comp);
        return total;
    }
};

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

// Sorted vertex list whose side contains vertex 0, the canonical
// representative of a bipartition.
std::vector<int> canonical_side(const std::vector<char>& membership) {
    std::vector<int> side;
    bool keep = membership[0] != 0;
    for (int v = 0; v < static_cast<int>(membership.size()); ++v)
        if ((membership[v] != 0) == keep) side.push_back(v);
    return side;
}

void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) throw std::invalid_argument(std::string(op) + ": graph is disconnected");
}

void require_cap(const Graph& g, int cap, const char* op) {
    if (cap < 1 || cap > 62)
        throw std::invalid_argument(std::string(op) + ": enumeration cap out of range");
    if (g.order() > cap)
        throw CapacityError(std::string(op) + ": order " + std::to_string(g.order()) +
                            " exceeds enumeration cap " + std::to_string(cap));
}

std::vector<std::pair<Edge, Edge>> disjoint_edge_pairs(const Graph& g) {
    std::vector<std::pair<Edge, Edge>> pairs;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            if (e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v) pairs.push_back({e, f});
        }
    }
    return pairs;
}

// Contract e into node 0 and f into node 1; remaining vertices become nodes
// 2.. in ascending order. Edges internal to a contracted pair vanish;
// parallel arcs are kept, each carrying unit capacity.
struct ContractedNetwork {
    UnitFlowNetwork net;
    std::vector<int> node_of;

    ContractedNetwork(const Graph& g, Edge e, Edge f)
        : net(g.order() - 2), node_of(g.order()) {
        int next = 2;
        for (int v = 0; v < g.order(); ++v) {
            if (v == e.u || v == e.v)
                node_of[v] = 0;
            else if (v == f.u || v == f.v)
                node_of[v] = 1;
            else
                node_of[v] = next++;
        }
        for (const Edge& ge : g.edges()) {
            int a = node_of[ge.u];
            int b = node_of[ge.v];
            if (a != b) net.add_undirected_edge(a, b);
        }
    }
};

}  // namespace

int edge_connectivity(const Graph& g) {
    if (g.order() < 2)
        throw std::invalid_argument("edge_connectivity: graph must have at least two vertices");
    if (!is_connected(g)) return 0;
    int best = min_degree(g);
    for (int t = 1; t < g.order() && best > 0; ++t) {
        UnitFlowNetwork net = build_network(g);
        best = std::min(best, net.max_flow(0, t, best));
    }
    return best;
}

Bipartition minimum_edge_cut(const Graph& g) {
    if (g.order() < 2)
        throw std::invalid_argument("minimum_edge_cut: graph must have at least two vertices");
    if (!is_connected(g)) {
        // Zero cut: split off the component containing vertex 0.
        std::vector<char> seen(g.order(), 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return cut_of(g, canonical_side(seen));
    }
    int arg_delta = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(arg_delta)) arg_delta = v;
    int best = g.degree(arg_delta);
    std::vector<char> best_membership(g.order(), 0);
    best_membership[arg_delta] = 1;
    for (int t = 1; t < g.order() && best > 0; ++t) {
        UnitFlowNetwork net = build_network(g);
        int flow = net.max_flow(0, t, best);
        if (flow < best) {
            best = flow;
            best_membership = net.source_side(0);
        }
    }
    return cut_of(g, canonical_side(best_membership));
}

RestrictedCutResult restricted_edge_connectivity_flow(const Graph& g) {
    require_connected(g, "restricted_edge_connectivity_flow");
    RestrictedCutResult result;
    result.method = CutMethod::flow;
    if (g.order() < 4) return result;
    auto pairs = disjoint_edge_pairs(g);
    if (pairs.empty()) return result;

    // A minimum cut separating contracted e from contracted f leaves no side
    // with an isolated vertex: such a vertex could switch sides and strictly
    // shrink the cut. Every restricted cut separates some vertex-disjoint
    // edge pair, so the minimum over pairs is exact. Two disjoint edges also
    // mean g is not a star, so min_edge_degree is a valid upper bound.
    int best = min_edge_degree(g);
    std::optional<std::vector<int>> best_side;
    for (const auto& [e, f] : pairs) {
        ContractedNetwork cn(g, e, f);
        int limit = best + 1;
        int flow = cn.net.max_flow(0, 1, limit);
        if (flow >= limit) continue;
        std::vector<char> node_side = cn.net.source_side(0);
        std::vector<char> membership(g.order(), 0);
        for (int v = 0; v < g.order(); ++v) membership[v] = node_side[cn.node_of[v]];
        std::vector<int> side = canonical_side(membership);
        if (!best_side || flow < best) {
            best = flow;
            best_side = std::move(side);
        } else if (flow == best && side < *best_side) {
            best_side = std::move(side);
        }
    }
    if (!best_side)
        throw std::logic_error("restricted_edge_connectivity_flow: no witness found");
    result.value = best;
    result.witness = cut_of(g, *best_side);
    return result;
}

RestrictedCutResult restricted_edge_connectivity_oracle(const Graph& g, int cap) {
    require_connected(g, "restricted_edge_connectivity_oracle");
    require_cap(g, cap, "restricted_edge_connectivity_oracle");
    RestrictedCutResult result;
    result.method = CutMethod::oracle;
    BitGraph bg(g);
    int best = INT_MAX;
    std::vector<int> best_side;
    for (std::uint64_t m = 1; m < bg.full; m += 2) {
        if (bg.side_has_isolated(m) || bg.side_has_isolated(bg.full ^ m)) continue;
        int cut = bg.cut_size(m);
        if (cut > best) continue;
        std::vector<int> side = mask_to_vertices(m);
        if (cut < best || best_side.empty() || side < best_side) {
            best = cut;
            best_side = std::move(side);
        }
    }
    if (best == INT_MAX) return result;
    result.value = best;
    result.witness = cut_of(g, best_side);
    return result;
}

std::vector<Bipartition> all_minimum_restricted_bipartitions(const Graph& g, int cap) {
    require_connected(g, "all_minimum_restricted_bipartitions");
    require_cap(g, cap, "all_minimum_restricted_bipartitions");
    BitGraph bg(g);
    int best = INT_MAX;
    std::vector<std::uint64_t> minima;
    for (std::uint64_t m = 1; m < bg.full; m += 2) {
        if (bg.side_has_isolated(m) || bg.side_has_isolated(bg.full ^ m)) continue;
        int cut = bg.cut_size(m);
        if (cut < best) {
            best = cut;
            minima.clear();
        }
        if (cut == best) minima.push_back(m);
    }
    std::vector<std::vector<int>> sides;
    sides.reserve(minima.size());
    for (std::uint64_t m : minima) sides.push_back(mask_to_vertices(m));
    std::sort(sides.begin(), sides.end());
    std::vector<Bipartition> out;
    out.reserve(sides.size());
    for (const auto& side : sides) out.push_back(cut_of(g, side));
    return out;
}

InvariantReport classify(const Graph& g, int cap) {
    if (g.order() < 2) throw std::invalid_argument("classify: graph must have at least two vertices");
    require_connected(g, "classify");

    InvariantReport report;
    report.order = g.order();
    report.size = g.size();
    report.min_degree = min_degree(g);
    report.min_edge_degree = min_edge_degree(g);
    report.edge_connectivity = edge_connectivity(g);
    report.maximally_edge_connected = report.edge_connectivity == report.min_degree;

    if (g.order() <= cap) {
        BitGraph bg(g);
        int min_cut = INT_MAX;
        bool min_cuts_isolate_vertex = true;
        int min_restricted = INT_MAX;
        bool min_restricted_isolate_edge = true;
        for (std::uint64_t m = 1; m < bg.full; m += 2) {
            std::uint64_t comp = bg.full ^ m;
            int cut = bg.cut_size(m);
            bool singleton = std::popcount(m) == 1 || std::popcount(comp) == 1;
            if (cut < min_cut) {
                min_cut = cut;
                min_cuts_isolate_vertex = singleton;
            } else if (cut == min_cut) {
                min_cuts_isolate_vertex = min_cuts_isolate_vertex && singleton;
            }
            if (bg.side_has_isolated(m) || bg.side_has_isolated(comp)) continue;
            bool pair_side = std::popcount(m) == 2 || std::popcount(comp) == 2;
            if (cut < min_restricted) {
                min_restricted = cut;
                min_restricted_isolate_edge = pair_side;
            } else if (cut == min_restricted) {
                min_restricted_isolate_edge = min_restricted_isolate_edge && pair_side;
            }
        }
        if (min_cut != report.edge_connectivity)
            throw std::logic_error("classify: enumeration disagrees with flow edge-connectivity");
        report.super_edge_connected = min_cuts_isolate_vertex;
        if (min_restricted != INT_MAX) {
            report.restricted_edge_connectivity = min_restricted;
            report.maximally_restricted = min_restricted == report.min_edge_degree;
            report.super_restricted = min_restricted_isolate_edge;
        } else {
            report.super_restricted = false;
        }
    } else {
        report.super_edge_connected = std::nullopt;
        RestrictedCutResult rc = restricted_edge_connectivity_flow(g);
        if (rc.value) {
            report.restricted_edge_connectivity = rc.value;
            report.maximally_restricted = *rc.value == report.min_edge_degree;
            report.super_restricted = std::nullopt;
        } else {
            report.super_restricted = false;
        }
    }
    return report;
}

}  // namespace strongcut
