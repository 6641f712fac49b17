#include <doctest.h>

#include <random>

#include "graph.hpp"

using namespace dio;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution edge(p);
    GraphBuilder b(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (edge(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

// 2^n subset scan for the independence number.
int alpha_subset_oracle(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (int u = 1; u <= n && independent; ++u) {
            if (!(mask >> (u - 1) & 1))
                continue;
            for (int v = u + 1; v <= n && independent; ++v)
                if ((mask >> (v - 1) & 1) && g.has_edge(u, v))
                    independent = false;
        }
        if (independent)
            best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

} // namespace

TEST_CASE("constructors") {
    const Graph k2 = join(make_null(1), make_null(1));
    CHECK(k2 == make_complete(2));

    const Graph g1 = join(make_complete(3), make_null(4));
    CHECK(g1.order() == 7);
    CHECK(g1.edge_count() == 15);

    const Graph g2 = join(make_cycle(4), make_null(3));
    CHECK(g2.edge_count() == 16);

    CHECK_THROWS_AS(make_cycle(2), ArgumentError);
    CHECK_THROWS_AS(Graph(0), ArgumentError);
    CHECK_THROWS_AS(Graph(Graph::kMaxOrder + 1), ResourceError);
}

TEST_CASE("edge mutation and queries") {
    Graph p3 = make_null(3).add_edge(1, 2).add_edge(2, 3);
    CHECK(p3.has_edge(2, 1));
    CHECK(!p3.has_edge(1, 3));
    CHECK(p3.degree(2) == 2);
    CHECK(p3.remove_edge(2, 3).edge_count() == 1);
    CHECK(p3.edge_count() == 2); // original untouched

    CHECK_THROWS_AS(p3.add_edge(1, 1), ArgumentError);
    CHECK_THROWS_AS(p3.add_edge(0, 2), ArgumentError);
    CHECK_THROWS_AS(p3.has_edge(1, 4), ArgumentError);
}

TEST_CASE("spanning subgraph") {
    const Graph g = make_complete(5);
    CHECK(is_spanning_subgraph(g, g));
    CHECK(is_spanning_subgraph(make_cycle(5), g));
    CHECK(!is_spanning_subgraph(g, make_cycle(5)));
    CHECK(!is_spanning_subgraph(make_complete(4), g)); // order mismatch
}

TEST_CASE("degree sequence") {
    const DegreeSequence s = degree_sequence(join(make_cycle(4), make_null(3)));
    CHECK(s.counts == std::vector<u64>{0, 0, 0, 0, 3, 4, 0});

    CHECK(degree_sequence(make_complete(4)).counts == std::vector<u64>{0, 0, 0, 4});
    CHECK(degree_sequence(make_null(3)).counts == std::vector<u64>{3, 0, 0});

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(1 + trial % 24, 0.4, rng);
        const DegreeSequence ds = degree_sequence(g);
        CHECK(ds.vertex_sum() == static_cast<u64>(g.order()));
        CHECK(ds.weighted_sum() == 2 * g.edge_count());
    }
}

TEST_CASE("degree helpers") {
    const Graph g = join(make_complete(3), make_null(4));
    CHECK(full_degree_count(g) == 3);
    CHECK(min_degree(g) == 3);
    CHECK(full_degree_count(make_null(3)) == 0);
    CHECK(min_degree(make_complete(1)) == 0);
}

TEST_CASE("complement pairs alpha with clique") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + trial % 12;
        const Graph g = random_graph(n, 0.5, rng);
        const Graph co = complement(g);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                CHECK(g.has_edge(u, v) != co.has_edge(u, v));
        CHECK(alpha_subset_oracle(g) == alpha_subset_oracle(complement(complement(g))));
    }
}

TEST_CASE("labeled graph bijection checks") {
    const Graph g = make_cycle(3);
    const LabeledGraph lg(g, {10, 20, 30});
    CHECK(lg.label_of(2) == 20);
    CHECK(lg.vertex_of(30) == 3);
    CHECK_THROWS_AS(lg.vertex_of(11), ArgumentError);
    CHECK_THROWS_AS(LabeledGraph(g, {1, 1, 2}), ArgumentError);
    CHECK_THROWS_AS(LabeledGraph(g, {1, 2}), ArgumentError);
}
