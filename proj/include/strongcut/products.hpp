#pragma once

#include <utility>
#include <vector>

#include "strongcut/graph.hpp"

namespace strongcut {

/// Hard cap on constructed product order; guards accidental huge builds.
inline constexpr int kMaxProductOrder = 200'000;

/// Row-major pairing of factor vertices: (i, j) <-> i * h_order + j.
struct ProductIndexing {
    int g_order = 0;
    int h_order = 0;

    int flat(int gi, int hj) const;
    std::pair<int, int> factors(int flat_index) const;
    int vertex_count() const noexcept { return g_order * h_order; }
};

/// A product graph bundled with the indexing that names its vertices.
struct ProductGraph {
    Graph graph;
    ProductIndexing indexing;
};

/// Strong product: (x1,y1) ~ (x2,y2) iff the pair is adjacent in the
/// Cartesian product or in the direct product.
ProductGraph strong_product(const Graph& g, const Graph& h);

/// Cartesian product: one coordinate equal, the other adjacent.
ProductGraph cartesian_product(const Graph& g, const Graph& h);

/// Direct (tensor) product: both coordinates adjacent.
ProductGraph direct_product(const Graph& g, const Graph& h);

/// Two copies of H joined by a perfect matching plus the doubled cross
/// edges: K2 (x) H minus both H-fiber edge sets. Order 2|V(H)|.
ProductGraph k2_odot(const Graph& h);

/// {x} x V(H) as flat indices (a copy of H).
std::vector<int> fiber_h(const ProductGraph& p, int g_vertex);

/// V(G) x {y} as flat indices (a copy of G).
std::vector<int> fiber_g(const ProductGraph& p, int h_vertex);

Graph make_path(int n);      // n >= 1
Graph make_cycle(int n);     // n >= 3
Graph make_complete(int n);  // n >= 1

}  // namespace strongcut
