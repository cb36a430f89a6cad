#include "strongcut/products.hpp"

#include <stdexcept>
#include <string>

namespace strongcut {

namespace {

ProductIndexing checked_indexing(const Graph& g, const Graph& h, const char* op) {
    if (g.order() < 1 || h.order() < 1)
        throw std::invalid_argument(std::string(op) + ": factors must be nonempty");
    long long count = static_cast<long long>(g.order()) * h.order();
    if (count > kMaxProductOrder)
        throw CapacityError(std::string(op) + ": product order " + std::to_string(count) +
                            " exceeds cap " + std::to_string(kMaxProductOrder));
    return ProductIndexing{g.order(), h.order()};
}

// Edges with one coordinate fixed and the other moving along a factor edge.
void add_cartesian_edges(const Graph& g, const Graph& h, const ProductIndexing& ix,
                         std::vector<Edge>& edges) {
    for (int x = 0; x < g.order(); ++x)
        for (const Edge& eh : h.edges())
            edges.push_back({ix.flat(x, eh.u), ix.flat(x, eh.v)});
    for (const Edge& eg : g.edges())
        for (int y = 0; y < h.order(); ++y)
            edges.push_back({ix.flat(eg.u, y), ix.flat(eg.v, y)});
}

// Edges moving along both factors at once; two per factor-edge pair.
void add_direct_edges(const Graph& g, const Graph& h, const ProductIndexing& ix,
                      std::vector<Edge>& edges) {
    for (const Edge& eg : g.edges()) {
        for (const Edge& eh : h.edges()) {
            edges.push_back({ix.flat(eg.u, eh.u), ix.flat(eg.v, eh.v)});
            edges.push_back({ix.flat(eg.u, eh.v), ix.flat(eg.v, eh.u)});
        }
    }
}

}  // namespace

int ProductIndexing::flat(int gi, int hj) const {
    if (gi < 0 || gi >= g_order || hj < 0 || hj >= h_order)
        throw std::invalid_argument("product index (" + std::to_string(gi) + ", " +
                                    std::to_string(hj) + ") out of range");
    return gi * h_order + hj;
}

std::pair<int, int> ProductIndexing::factors(int flat_index) const {
    if (flat_index < 0 || flat_index >= vertex_count())
        throw std::invalid_argument("flat index " + std::to_string(flat_index) + " out of range");
    return {flat_index / h_order, flat_index % h_order};
}

ProductGraph strong_product(const Graph& g, const Graph& h) {
    ProductIndexing ix = checked_indexing(g, h, "strong_product");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.order()) * h.size() +
                  static_cast<std::size_t>(h.order()) * g.size() +
                  2 * static_cast<std::size_t>(g.size()) * h.size());
    add_cartesian_edges(g, h, ix, edges);
    add_direct_edges(g, h, ix, edges);
    return {Graph(ix.vertex_count(), std::move(edges)), ix};
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    ProductIndexing ix = checked_indexing(g, h, "cartesian_product");
    std::vector<Edge> edges;
    add_cartesian_edges(g, h, ix, edges);
    return {Graph(ix.vertex_count(), std::move(edges)), ix};
}

ProductGraph direct_product(const Graph& g, const Graph& h) {
    ProductIndexing ix = checked_indexing(g, h, "direct_product");
    std::vector<Edge> edges;
    add_direct_edges(g, h, ix, edges);
    return {Graph(ix.vertex_count(), std::move(edges)), ix};
}

ProductGraph k2_odot(const Graph& h) {
    Graph k2 = make_complete(2);
    ProductIndexing ix = checked_indexing(k2, h, "k2_odot");
    std::vector<Edge> edges;
    for (int y = 0; y < h.order(); ++y) edges.push_back({ix.flat(0, y), ix.flat(1, y)});
    add_direct_edges(k2, h, ix, edges);
    return {Graph(ix.vertex_count(), std::move(edges)), ix};
}

std::vector<int> fiber_h(const ProductGraph& p, int g_vertex) {
    if (g_vertex < 0 || g_vertex >= p.indexing.g_order)
        throw std::invalid_argument("fiber_h: vertex " + std::to_string(g_vertex) + " out of range");
    std::vector<int> out;
    out.reserve(p.indexing.h_order);
    for (int y = 0; y < p.indexing.h_order; ++y) out.push_back(p.indexing.flat(g_vertex, y));
    return out;
}

std::vector<int> fiber_g(const ProductGraph& p, int h_vertex) {
    if (h_vertex < 0 || h_vertex >= p.indexing.h_order)
        throw std::invalid_argument("fiber_g: vertex " + std::to_string(h_vertex) + " out of range");
    std::vector<int> out;
    out.reserve(p.indexing.g_order);
    for (int x = 0; x < p.indexing.g_order; ++x) out.push_back(p.indexing.flat(x, h_vertex));
    return out;
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: order must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: order must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: order must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

}  // namespace strongcut
