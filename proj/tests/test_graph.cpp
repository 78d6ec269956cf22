#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "exgraph/graph.hpp"
#include "test_util.hpp"

using namespace exgraph;

TEST_CASE("make_graph basics") {
    Graph empty = make_graph(0, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(0, 2));
    CHECK(k3.weight(1) == 1);

    // symmetrization dedup
    Graph k2 = make_graph(2, {{0, 1}, {1, 0}});
    CHECK(k2.edge_count() == 1);

    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::out_of_range);
    CHECK_THROWS_AS(make_graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(1, {}, {Rational(-1)}), std::invalid_argument);
}

TEST_CASE("circulant families") {
    Graph c5 = circulant(5, {1});
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    // 8 rim + 4 chord edges
    Graph m4 = mobius_ladder(4);
    CHECK(m4.vertex_count() == 8);
    CHECK(m4.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(m4.degree(v) == 3);

    // two pentagons + 5 rungs under the circulant labeling
    Graph y5 = prism(5);
    CHECK(y5.vertex_count() == 10);
    CHECK(y5.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(y5.degree(v) == 3);

    CHECK(complete(4).edge_count() == 6);
    CHECK_THROWS_AS(circulant(5, {3}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(2, {1}), std::invalid_argument);

    // vertex transitivity: constant degree = number of distinct +-d residues
    std::mt19937 rng(7);
    for (int n = 3; n <= 50; ++n) {
        std::set<int> offs;
        std::uniform_int_distribution<int> od(1, n / 2);
        for (int k = 0; k < 3; ++k) offs.insert(od(rng));
        Graph g = circulant(n, std::vector<int>(offs.begin(), offs.end()));
        std::set<int> residues;
        for (int d : offs) {
            residues.insert(d);
            residues.insert((n - d) % n);
        }
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == static_cast<int>(residues.size()));
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete(4)).edge_count() == 0);
    CHECK(complement(empty_graph(3)).edge_count() == 3);

    // C5 is self-complementary under i -> 2i mod 5
    Graph c5 = cycle(5);
    Graph cc = complement(c5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v) CHECK(cc.adjacent(u, v) == c5.adjacent(2 * u % 5, 2 * v % 5));

    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(rng, 12);
        Graph gg = complement(complement(g));
        REQUIRE(gg.vertex_count() == g.vertex_count());
        CHECK(gg.edges() == g.edges());
    }
}

TEST_CASE("disjoint_union") {
    auto u = disjoint_union({cycle(5), cycle(5)});
    CHECK(u.graph.vertex_count() == 10);
    CHECK(u.graph.edge_count() == 10);
    CHECK(u.offsets == std::vector<int>{0, 5});
    CHECK(u.locate(7) == std::pair<int, int>{1, 2});

    auto v = disjoint_union({make_graph(2, {{0, 1}}), empty_graph(1)});
    CHECK(v.graph.vertex_count() == 3);
    CHECK(v.graph.edge_count() == 1);

    auto w = disjoint_union({mobius_ladder(4), mobius_ladder(4), mobius_ladder(4)});
    CHECK(w.graph.vertex_count() == 24);
    CHECK(w.graph.edge_count() == 36);

    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        Graph a = testutil::random_graph(rng, 10);
        Graph b = testutil::random_graph(rng, 10);
        auto du = disjoint_union({a, b});
        CHECK(du.graph.vertex_count() == a.vertex_count() + b.vertex_count());
        CHECK(du.graph.edge_count() == a.edge_count() + b.edge_count());
    }
}

TEST_CASE("or_product") {
    Graph k4 = or_product(complete(2), complete(2));
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    CHECK(or_product(empty_graph(2), empty_graph(2)).edge_count() == 0);

    // edge count vs brute-force pair scan on small random graphs
    std::mt19937 rng(17);
    for (int t = 0; t < 15; ++t) {
        Graph a = testutil::random_graph(rng, 6);
        Graph b = testutil::random_graph(rng, 6);
        Graph p = or_product(a, b);
        int expected = 0;
        for (int i = 0; i < a.vertex_count(); ++i)
            for (int j = 0; j < b.vertex_count(); ++j)
                for (int k = 0; k < a.vertex_count(); ++k)
                    for (int l = 0; l < b.vertex_count(); ++l) {
                        if (i == k && j == l) continue;
                        if (a.adjacent(i, k) || b.adjacent(j, l)) ++expected;
                    }
        CHECK(p.edge_count() == expected / 2);
    }
}

TEST_CASE("induced_subgraph") {
    Graph k3 = induced_subgraph(complete(5), {0, 1, 2});
    CHECK(k3.edge_count() == 3);

    Graph path = induced_subgraph(cycle(5), {0, 1, 2});
    CHECK(path.edge_count() == 2);

    // outer pentagon of the prism: even-index vertices of circulant(10,{2,5})
    Graph outer = induced_subgraph(prism(5), {0, 2, 4, 6, 8});
    CHECK(outer.vertex_count() == 5);
    CHECK(outer.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(outer.degree(v) == 2);

    CHECK_THROWS_AS(induced_subgraph(cycle(5), {9}), std::out_of_range);
}

TEST_CASE("adjacency symmetric and irreflexive on random instances") {
    std::mt19937 rng(23);
    for (int t = 0; t < 25; ++t) {
        Graph g = testutil::random_graph(rng, 14);
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK(!g.adjacent(u, u));
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }
}

TEST_CASE("to_dot") {
    std::string d1 = to_dot(empty_graph(1));
    CHECK(d1.find("v0;") != std::string::npos);
    CHECK(d1.find("--") == std::string::npos);

    std::string d2 = to_dot(make_graph(2, {{0, 1}}));
    CHECK(d2.find("v0 -- v1;") != std::string::npos);

    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    std::string d3 = to_dot(g, {{1, 2}});
    size_t colored = 0, pos = 0;
    while ((pos = d3.find("color=green", pos)) != std::string::npos) {
        ++colored;
        ++pos;
    }
    CHECK(colored == 1);
}
