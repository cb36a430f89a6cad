#include <algorithm>

#include "doctest.h"
#include "strongcut/graph.hpp"
#include "strongcut/invariants.hpp"
#include "strongcut/products.hpp"

using namespace strongcut;

namespace {

// A bipartition must be canonical (sorted side containing vertex 0, proper)
// and carry exactly the edges its side induces across.
void check_witness_shape(const Graph& g, const Bipartition& b) {
    REQUIRE_FALSE(b.side_x.empty());
    CHECK(b.side_x.front() == 0);
    CHECK(std::is_sorted(b.side_x.begin(), b.side_x.end()));
    CHECK(static_cast<int>(b.side_x.size()) < g.order());
    CHECK(cut_of(g, b.side_x).cut_edges == b.cut_edges);
}

bool side_has_isolated(const Graph& g, const std::vector<int>& side) {
    std::vector<char> in(g.order(), 0);
    for (int v : side) in[v] = 1;
    for (int v : side) {
        bool attached = false;
        for (int w : g.neighbors(v))
            if (in[w]) attached = true;
        if (!attached) return true;
    }
    return false;
}

void check_restricted_witness(const Graph& g, const Bipartition& b, int value) {
    check_witness_shape(g, b);
    CHECK(b.cut_size() == value);
    std::vector<int> complement;
    std::vector<char> in(g.order(), 0);
    for (int v : b.side_x) in[v] = 1;
    for (int v = 0; v < g.order(); ++v)
        if (!in[v]) complement.push_back(v);
    CHECK_FALSE(side_has_isolated(g, b.side_x));
    CHECK_FALSE(side_has_isolated(g, complement));
}

std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    for (int n = 2; n <= 8; ++n) out.push_back(make_path(n));
    for (int n = 3; n <= 8; ++n) out.push_back(make_cycle(n));
    for (int n = 2; n <= 8; ++n) out.push_back(make_complete(n));
    out.push_back(Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    out.push_back(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    out.push_back(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}}));
    return out;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("edge connectivity of known graphs") {
    CHECK(edge_connectivity(make_complete(2)) == 1);
    CHECK(edge_connectivity(make_path(4)) == 1);
    CHECK(edge_connectivity(make_cycle(5)) == 2);
    CHECK(edge_connectivity(make_complete(4)) == 3);
    CHECK(edge_connectivity(strong_product(make_complete(2), make_path(3)).graph) == 3);
    CHECK(edge_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
    CHECK_THROWS_AS(edge_connectivity(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("minimum edge cut witnesses") {
    Graph p4 = make_path(4);
    Bipartition b = minimum_edge_cut(p4);
    check_witness_shape(p4, b);
    CHECK(b.cut_size() == 1);

    Graph c5 = make_cycle(5);
    Bipartition c = minimum_edge_cut(c5);
    check_witness_shape(c5, c);
    CHECK(c.cut_size() == 2);

    Graph split(4, {{0, 1}, {2, 3}});
    Bipartition d = minimum_edge_cut(split);
    CHECK(d.cut_size() == 0);
    CHECK(d.side_x == std::vector<int>{0, 1});

    CHECK_THROWS_AS(minimum_edge_cut(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("restricted connectivity by flow on known graphs") {
    auto c6 = restricted_edge_connectivity_flow(make_cycle(6));
    REQUIRE(c6.value.has_value());
    CHECK(*c6.value == 2);
    check_restricted_witness(make_cycle(6), *c6.witness, 2);

    auto k4 = restricted_edge_connectivity_flow(make_complete(4));
    REQUIRE(k4.value.has_value());
    CHECK(*k4.value == 4);
    check_restricted_witness(make_complete(4), *k4.witness, 4);

    auto p4 = restricted_edge_connectivity_flow(make_path(4));
    REQUIRE(p4.value.has_value());
    CHECK(*p4.value == 1);
    CHECK(p4.witness->side_x == std::vector<int>{0, 1});
}

TEST_CASE("restricted connectivity is absent below order four and on stars") {
    CHECK_FALSE(restricted_edge_connectivity_flow(make_path(3)).value.has_value());
    CHECK_FALSE(restricted_edge_connectivity_flow(make_complete(3)).value.has_value());
    Graph star4(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(restricted_edge_connectivity_flow(star4).value.has_value());
    CHECK_FALSE(restricted_edge_connectivity_oracle(star4).value.has_value());
    CHECK_THROWS_AS(restricted_edge_connectivity_flow(Graph(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("oracle enforces its cap") {
    CHECK_THROWS_AS(restricted_edge_connectivity_oracle(make_cycle(6), 5), CapacityError);
    CHECK_THROWS_AS(restricted_edge_connectivity_oracle(make_cycle(6), 0), std::invalid_argument);
    CHECK_THROWS_AS(restricted_edge_connectivity_oracle(make_cycle(6), 63), std::invalid_argument);
    CHECK_THROWS_AS(all_minimum_restricted_bipartitions(make_cycle(6), 5), CapacityError);
}

TEST_CASE("flow and oracle agree with valid witnesses across a small corpus") {
    for (const Graph& g : small_corpus()) {
        CAPTURE(to_canonical_id(g));
        auto flow = restricted_edge_connectivity_flow(g);
        auto oracle = restricted_edge_connectivity_oracle(g);
        CHECK(flow.value == oracle.value);
        if (flow.value) {
            check_restricted_witness(g, *flow.witness, *flow.value);
            check_restricted_witness(g, *oracle.witness, *oracle.value);
        } else {
            CHECK_FALSE(flow.witness.has_value());
            CHECK_FALSE(oracle.witness.has_value());
        }
    }
}

TEST_CASE("all minimum restricted bipartitions of the six-cycle") {
    auto all = all_minimum_restricted_bipartitions(make_cycle(6));
    REQUIRE(all.size() == 9);
    bool saw_balanced = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
        check_restricted_witness(make_cycle(6), all[i], 2);
        if (all[i].side_x.size() == 3) saw_balanced = true;
        if (i > 0) CHECK(all[i - 1].side_x < all[i].side_x);
    }
    CHECK(saw_balanced);
}

TEST_CASE("all minimum restricted bipartitions of the complete graph on four") {
    auto all = all_minimum_restricted_bipartitions(make_complete(4));
    REQUIRE(all.size() == 3);
    for (const Bipartition& b : all) {
        CHECK(b.cut_size() == 4);
        CHECK(b.side_x.size() == 2);
        CHECK(b.side_x.front() == 0);
    }
}

TEST_CASE("no restricted bipartitions on a star") {
    CHECK(all_minimum_restricted_bipartitions(Graph(4, {{0, 1}, {0, 2}, {0, 3}})).empty());
    CHECK(all_minimum_restricted_bipartitions(make_path(3)).empty());
}

TEST_CASE("classification of known graphs") {
    InvariantReport c5 = classify(make_cycle(5));
    CHECK(c5.edge_connectivity == 2);
    CHECK(c5.maximally_edge_connected);
    REQUIRE(c5.super_edge_connected.has_value());
    CHECK_FALSE(*c5.super_edge_connected);
    CHECK(c5.restricted_edge_connectivity == 2);
    CHECK(c5.maximally_restricted);
    REQUIRE(c5.super_restricted.has_value());
    CHECK(*c5.super_restricted);

    InvariantReport c6 = classify(make_cycle(6));
    CHECK(c6.maximally_restricted);
    REQUIRE(c6.super_restricted.has_value());
    CHECK_FALSE(*c6.super_restricted);

    InvariantReport k4 = classify(make_complete(4));
    CHECK(k4.edge_connectivity == 3);
    CHECK(k4.maximally_edge_connected);
    CHECK(k4.super_edge_connected == std::optional<bool>(true));
    CHECK(k4.restricted_edge_connectivity == 4);
    CHECK(k4.maximally_restricted);
    CHECK(k4.super_restricted == std::optional<bool>(true));
}

TEST_CASE("classification when no restricted cut exists") {
    InvariantReport star = classify(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.edge_connectivity == 1);
    CHECK(star.maximally_edge_connected);
    CHECK_FALSE(star.restricted_edge_connectivity.has_value());
    CHECK_FALSE(star.maximally_restricted);
    CHECK(star.super_restricted == std::optional<bool>(false));

    InvariantReport k2 = classify(make_complete(2));
    CHECK(k2.edge_connectivity == 1);
    CHECK_FALSE(k2.restricted_edge_connectivity.has_value());
    CHECK_FALSE(k2.maximally_restricted);
}

TEST_CASE("classification beyond the cap falls back to flow") {
    InvariantReport r = classify(make_cycle(6), 5);
    CHECK(r.edge_connectivity == 2);
    CHECK(r.maximally_edge_connected);
    CHECK_FALSE(r.super_edge_connected.has_value());
    CHECK(r.restricted_edge_connectivity == 2);
    CHECK(r.maximally_restricted);
    CHECK_FALSE(r.super_restricted.has_value());
}

TEST_CASE("classification rejects bad input") {
    CHECK_THROWS_AS(classify(Graph(1, {})), std::invalid_argument);
    CHECK_THROWS_AS(classify(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("lambda <= lambda' <= xi on non-star graphs of order at least four") {
    for (const Graph& g : small_corpus()) {
        if (g.order() < 4 || is_star(g)) continue;
        CAPTURE(to_canonical_id(g));
        auto r = restricted_edge_connectivity_flow(g);
        REQUIRE(r.value.has_value());
        CHECK(edge_connectivity(g) <= *r.value);
        CHECK(*r.value <= min_edge_degree(g));
    }
}

}  // TEST_SUITE
