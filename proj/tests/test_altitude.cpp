#include <doctest.h>

#include <random>

#include "circalt/altitude.hpp"
#include "circalt/graph.hpp"
#include "circalt/monotonic.hpp"
#include "circalt/verify.hpp"

using namespace circalt;

namespace {

Graph two_triangles_shared_vertex() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace

TEST_CASE("oracle anchors") {
    CHECK(altitude_oracle(Graph(1)).value == 1);
    CHECK(altitude_oracle(complete(2)).value == 2);
    CHECK(altitude_oracle(complete(4)).value == 4);
    CHECK(altitude_oracle(cycle(4)).value == 2);
    CHECK(altitude_oracle(cycle(5)).value == 2);
}

TEST_CASE("oracle witness attains the value") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
        auto r = altitude_oracle(g);
        CAPTURE(encode_graph6(g));
        CHECK(max_monotonic_length(g, r.witness.seq) == r.value);
        CHECK(r.value >= 1);
        CHECK(r.value <= g.vertex_count());
        CHECK((r.value >= 2) == g.has_edges());
    }
    CHECK_THROWS(altitude_oracle(complete(11)));
}

TEST_CASE("branch and bound agrees with the oracle on all connected graphs n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_catalog(n)) {
            CAPTURE(encode_graph6(g));
            auto bb = altitude_bb(g);
            CHECK(bb.exact);
            CHECK(bb.value == altitude_oracle(g).value);
            CHECK(max_monotonic_length(g, bb.witness.seq) == bb.value);
        }
}

TEST_CASE("branch and bound agrees with the oracle on random connected graphs n = 7, 8") {
    std::mt19937_64 rng(6);
    int done = 0;
    while (done < 30) {
        int n = 7 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, 0.4, rng);
        if (components(g).size() != 1) continue;
        ++done;
        CAPTURE(encode_graph6(g));
        CHECK(altitude_bb(g).value == altitude_oracle(g).value);
    }
}

TEST_CASE("branch and bound options do not change the value") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(7, 0.5, rng);
        if (components(g).size() != 1) continue;
        auto base = altitude_bb(g);
        SearchOptions threaded;
        threaded.threads = 4;
        CHECK(altitude_bb(g, {}, threaded).value == base.value);
        SearchOptions no_reversal;
        no_reversal.use_reversal_pruning = false;
        CHECK(altitude_bb(g, {}, no_reversal).value == base.value);
        CHECK(altitude_bb(g, base.value).value == base.value);
    }
}

TEST_CASE("budget exhaustion is explicit, never a wrong answer") {
    Graph g = cycle(9);
    SearchOptions tiny;
    tiny.node_budget = 5;
    auto r = altitude_bb(g, {}, tiny);
    CHECK(!r.exact);
    int truth = altitude_oracle(g).value;
    CHECK(r.value >= truth);        // best found is an upper bound
    CHECK(r.lower_bound <= truth);  // clique bound is a lower bound
    CHECK(max_monotonic_length(g, r.witness.seq) == r.value);
}

TEST_CASE("block driver on named graphs") {
    SUBCASE("trees are all 2") {
        CHECK(altitude(path(2)).value == 2);
        CHECK(altitude(path(8)).value == 2);
        Graph star = complete_bipartite(1, 7);
        CHECK(altitude(star).value == 2);
    }
    SUBCASE("triangle with pendant vertex") {
        Graph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
        auto r = altitude(g);
        CHECK(r.value == 3);
        CHECK(r.value == altitude_oracle(g).value);
        REQUIRE(r.per_block.size() == 2);
    }
    SUBCASE("two triangles sharing a vertex") {
        auto r = altitude(two_triangles_shared_vertex());
        CHECK(r.value == 3);
        CHECK(r.value == altitude_oracle(two_triangles_shared_vertex()).value);
    }
    SUBCASE("disjoint union of C5 and K4") {
        Graph g = disjoint_union(cycle(5), complete(4));
        auto r = altitude(g);
        CHECK(r.value == 4);
        // The concatenated witness must certify the value on the whole graph.
        CHECK(max_monotonic_length(g, r.witness.seq) == 4);
        CHECK(r.value == altitude_oracle(g).value);
    }
    SUBCASE("isolated vertices contribute 1") {
        CHECK(altitude(Graph(5)).value == 1);
        CHECK(altitude(disjoint_union(Graph(2), complete(2))).value == 2);
    }
}

TEST_CASE("block driver equals oracle and certifies on random cut-vertex graphs") {
    for (const auto& g : random_cut_vertex_graphs(8, 40, 1234)) {
        CAPTURE(encode_graph6(g));
        auto r = altitude(g);
        CHECK(r.value == altitude_oracle(g).value);
        CHECK(max_monotonic_length(g, r.witness.seq) == r.value);
        CHECK(!r.per_block.empty());
        int block_max = 0;
        for (const auto& b : r.per_block) {
            CHECK(b.block_id >= 0);
            block_max = std::max(block_max, b.value);
        }
        CHECK(block_max == r.value);
    }
}

TEST_CASE("certify") {
    Graph g = two_triangles_shared_vertex();
    auto r = altitude(g);
    auto cert = certify(g, r);
    CHECK(cert.upper_ok);
    REQUIRE(cert.lower_ok.has_value());
    CHECK(*cert.lower_ok);
    CHECK(cert.passed());

    auto tampered = r;
    tampered.value -= 1;
    auto bad = certify(g, tampered);
    CHECK(!bad.passed());

    // Oracle results on small graphs always certify.
    for (const auto& small : graph_catalog(4)) {
        auto cr = certify(small, altitude_oracle(small));
        CHECK(cr.passed());
    }
}

TEST_CASE("subgraph monotonicity of altitude") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 30; ++t) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.5, rng);
        auto edges = g.edges();
        if (edges.empty()) continue;
        // Drop a random edge: a subgraph on the same vertices.
        edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
        Graph h(n, edges);
        CHECK(altitude_oracle(h).value <= altitude_oracle(g).value);
    }
}
