#include <algorithm>
#include <set>

#include "doctest.h"
#include "strongcut/graph.hpp"
#include "strongcut/products.hpp"

using namespace strongcut;

namespace {

std::set<Edge> edge_set(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

// G boxtimes H with coordinates swapped, relabeled back to row-major on G.
Graph transposed(const ProductGraph& hg, int g_order, int h_order) {
    std::vector<Edge> edges;
    for (const Edge& e : hg.graph.edges()) {
        auto [yu, xu] = hg.indexing.factors(e.u);
        auto [yv, xv] = hg.indexing.factors(e.v);
        edges.push_back({xu * h_order + yu, xv * h_order + yv});
    }
    return Graph(g_order * h_order, std::move(edges));
}

}  // namespace

TEST_SUITE("products") {

TEST_CASE("indexing round-trips and validates") {
    ProductIndexing ix{3, 4};
    CHECK(ix.vertex_count() == 12);
    CHECK(ix.flat(0, 0) == 0);
    CHECK(ix.flat(2, 3) == 11);
    CHECK(ix.flat(1, 2) == 6);
    CHECK(ix.factors(6) == std::pair<int, int>{1, 2});
    for (int v = 0; v < 12; ++v) {
        auto [i, j] = ix.factors(v);
        CHECK(ix.flat(i, j) == v);
    }
    CHECK_THROWS_AS(ix.flat(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(ix.flat(0, -1), std::invalid_argument);
    CHECK_THROWS_AS(ix.factors(12), std::invalid_argument);
}

TEST_CASE("family generators") {
    CHECK(make_path(1) == Graph(1, {}));
    CHECK(make_path(4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(make_cycle(3) == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(make_cycle(5).size() == 5);
    CHECK(make_complete(4).size() == 6);
    CHECK(make_complete(1) == Graph(1, {}));
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(make_complete(0), std::invalid_argument);
}

TEST_CASE("k2 strong k2 is the complete graph on four vertices") {
    CHECK(strong_product(make_complete(2), make_complete(2)).graph == make_complete(4));
}

TEST_CASE("k2 strong p3 matches the known edge list") {
    ProductGraph p = strong_product(make_complete(2), make_path(3));
    CHECK(to_canonical_id(p.graph) == "6 11 0-1 0-3 0-4 1-2 1-3 1-4 1-5 2-4 2-5 3-4 4-5");
}

TEST_CASE("edge counts follow the product identities") {
    std::vector<Graph> factors = {make_path(2), make_path(4), make_cycle(3),
                                  make_cycle(5), make_complete(4)};
    for (const Graph& g : factors) {
        for (const Graph& h : factors) {
            int m = g.order(), eg = g.size();
            int n = h.order(), eh = h.size();
            CHECK(cartesian_product(g, h).graph.size() == m * eh + n * eg);
            CHECK(direct_product(g, h).graph.size() == 2 * eg * eh);
            CHECK(strong_product(g, h).graph.size() == m * eh + n * eg + 2 * eg * eh);
        }
    }
}

TEST_CASE("strong product edges are the union of cartesian and direct edges") {
    Graph g = make_cycle(4);
    Graph h = make_path(3);
    auto strong = edge_set(strong_product(g, h).graph);
    auto cart = edge_set(cartesian_product(g, h).graph);
    auto direct = edge_set(direct_product(g, h).graph);
    std::set<Edge> both;
    both.insert(cart.begin(), cart.end());
    both.insert(direct.begin(), direct.end());
    CHECK(strong == both);
    CHECK(cart.size() + direct.size() == strong.size());  // disjoint groups
}

TEST_CASE("strong product degree law") {
    Graph g = make_path(4);
    Graph h = make_cycle(5);
    ProductGraph p = strong_product(g, h);
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < h.order(); ++y) {
            int expected = g.degree(x) + h.degree(y) + g.degree(x) * h.degree(y);
            CHECK(p.graph.degree(p.indexing.flat(x, y)) == expected);
        }
}

TEST_CASE("strong product commutes up to coordinate swap") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {make_path(3), make_cycle(4)},
        {make_complete(3), make_path(4)},
        {make_cycle(3), make_complete(4)},
    };
    for (const auto& [g, h] : pairs) {
        ProductGraph gh = strong_product(g, h);
        ProductGraph hg = strong_product(h, g);
        CHECK(gh.graph == transposed(hg, g.order(), h.order()));
    }
}

TEST_CASE("fibers induce copies of the factors") {
    Graph g = make_cycle(5);
    Graph h = make_path(4);
    ProductGraph p = strong_product(g, h);
    for (int x = 0; x < g.order(); ++x)
        CHECK(induced_subgraph(p.graph, fiber_h(p, x)) == h);
    for (int y = 0; y < h.order(); ++y)
        CHECK(induced_subgraph(p.graph, fiber_g(p, y)) == g);
    CHECK_THROWS_AS(fiber_h(p, 5), std::invalid_argument);
    CHECK_THROWS_AS(fiber_g(p, -1), std::invalid_argument);
}

TEST_CASE("k2_odot is the strong product minus both fiber copies") {
    for (const Graph& h : {make_path(3), make_cycle(4), make_complete(4)}) {
        ProductGraph odot = k2_odot(h);
        ProductGraph full = strong_product(make_complete(2), h);
        CHECK(odot.graph.order() == 2 * h.order());
        CHECK(odot.graph.size() == h.order() + 2 * h.size());

        std::set<Edge> expected = edge_set(full.graph);
        for (int x = 0; x < 2; ++x) {
            std::vector<int> fiber = fiber_h(full, x);
            for (int a : fiber)
                for (int b : fiber)
                    if (a < b) expected.erase({a, b});
        }
        CHECK(edge_set(odot.graph) == expected);
    }
}

TEST_CASE("k2_odot of k2 is the four-cycle") {
    Graph g = k2_odot(make_complete(2)).graph;
    CHECK(g.order() == 4);
    CHECK(g.size() == 4);
    CHECK(is_connected(g));
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("k2_odot connectivity tracks the factor") {
    CHECK(is_connected(k2_odot(make_path(3)).graph));
    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(k2_odot(two_edges).graph));
}

TEST_CASE("oversized products are rejected") {
    Graph big = make_path(500);
    CHECK_THROWS_AS(strong_product(big, big), CapacityError);
    CHECK_THROWS_AS(cartesian_product(big, big), CapacityError);
    CHECK_THROWS_AS(direct_product(big, big), CapacityError);
    CHECK_THROWS_AS(strong_product(Graph(0, {}), big), std::invalid_argument);
}

}  // TEST_SUITE
