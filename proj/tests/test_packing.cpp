#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "exgraph/packing.hpp"
#include "test_util.hpp"

using namespace exgraph;

namespace {

// independent dense oracle: floating-point simplex over the same clique
// constraints, written against the textbook tableau rather than the exact
// rational path under test
double float_packing_oracle(const Graph& g) {
    auto cs = testutil::brute_force_maximal_cliques(g);
    const int n = g.vertex_count();
    const int m = static_cast<int>(cs.size());
    const int cols = n + m;
    std::vector<std::vector<double>> T(m, std::vector<double>(cols + 1, 0.0));
    std::vector<double> red(cols, 0.0);
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int v : cs[i]) T[i][v] = 1.0;
        T[i][n + i] = 1.0;
        T[i][cols] = 1.0;
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) red[j] = to_double(g.weight(j));
    double obj = 0.0;
    for (int iter = 0; iter < 10000; ++iter) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (red[j] > 1e-9) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        double best = 0.0;
        for (int i = 0; i < m; ++i)
            if (T[i][enter] > 1e-9) {
                double ratio = T[i][cols] / T[i][enter];
                if (leave < 0 || ratio < best - 1e-12 ||
                    (std::abs(ratio - best) <= 1e-12 && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        REQUIRE(leave >= 0);
        double piv = T[leave][enter];
        for (int j = 0; j <= cols; ++j) T[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            double f = T[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        double f = red[enter];
        for (int j = 0; j < cols; ++j) red[j] -= f * T[leave][j];
        obj += f * T[leave][cols];
        basis[leave] = enter;
    }
    return obj;
}

}  // namespace

TEST_CASE("fractional packing on paper graphs") {
    CHECK(fractional_packing(cycle(5)).objective == Rational(5, 2));
    CHECK(fractional_packing(mobius_ladder(4)).objective == 4);
    CHECK(fractional_packing(prism(5)).objective == 5);
    CHECK(fractional_packing(empty_graph(6)).objective == 6);
    CHECK(fractional_packing(complete(6)).objective == 1);
    CHECK(fractional_packing(Graph(0)).objective == 0);
}

TEST_CASE("packing solution carries a matching dual cover") {
    auto sol = fractional_packing(cycle(5));
    REQUIRE(sol.optimal);
    Rational cover_total = 0;
    for (const auto& c : sol.dual_cover) cover_total += c.weight;
    CHECK(cover_total == sol.objective);
    auto check = verify_cover(cycle(5), sol.dual_cover);
    CHECK(check.valid);
    CHECK(check.bound == sol.objective);
}

TEST_CASE("packing matches independent float oracle on small graphs") {
    std::mt19937 rng(47);
    for (int t = 0; t < 40; ++t) {
        Graph g = testutil::random_graph(rng, 10, 0.4);
        auto sol = fractional_packing(g);
        double oracle = float_packing_oracle(g);
        CHECK(std::abs(to_double(sol.objective) - oracle) < 1e-7);
    }
}

TEST_CASE("packing additive over disjoint unions, monotone under edges") {
    std::mt19937 rng(53);
    for (int t = 0; t < 15; ++t) {
        Graph a = testutil::random_graph(rng, 9);
        Graph b = testutil::random_graph(rng, 9);
        auto u = disjoint_union({a, b});
        CHECK(fractional_packing(u.graph).objective ==
              fractional_packing(a).objective + fractional_packing(b).objective);
    }
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(rng, 10, 0.3);
        std::vector<std::pair<int, int>> non;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if (!g.adjacent(u, v)) non.emplace_back(u, v);
        if (non.empty()) continue;
        auto [u, v] = non[std::uniform_int_distribution<size_t>(0, non.size() - 1)(rng)];
        auto edges = g.edges();
        edges.emplace_back(u, v);
        CHECK(fractional_packing(make_graph(g.vertex_count(), edges)).objective <=
              fractional_packing(g).objective);
    }
}

TEST_CASE("alpha <= alpha* exactly") {
    std::mt19937 rng(59);
    for (int t = 0; t < 30; ++t) {
        Graph g = testutil::random_graph(rng, 12, 0.4);
        CHECK(max_independent_set(g).value <= fractional_packing(g).objective);
    }
}

TEST_CASE("packing_bounds") {
    // K3, feasible (1/2,1/2,0), cover [K3 x 1] -> (1, 1)
    Graph k3 = complete(3);
    auto b = packing_bounds(k3, {Rational(1, 2), Rational(1, 2), Rational(0)},
                            {{{0, 1, 2}, Rational(1)}});
    CHECK(b.lower == 1);
    CHECK(b.upper == 1);

    // C5 all-1/2 with the five-edge half-weight cover -> (5/2, 5/2)
    Graph c5 = cycle(5);
    std::vector<WeightedClique> cover;
    for (int i = 0; i < 5; ++i) cover.push_back({{i, (i + 1) % 5}, Rational(1, 2)});
    auto b2 = packing_bounds(c5, std::vector<Rational>(5, Rational(1, 2)), cover);
    CHECK(b2.lower == Rational(5, 2));
    CHECK(b2.upper == Rational(5, 2));

    // infeasible point named
    CHECK_THROWS_WITH(
        packing_bounds(k3, {Rational(1), Rational(1), Rational(0)}, {{{0, 1, 2}, Rational(1)}}),
        Catch::Matchers::ContainsSubstring("infeasible point"));

    // invalid cover named
    CHECK_THROWS_WITH(packing_bounds(k3, {Rational(0), Rational(0), Rational(0)},
                                     {{{0, 1}, Rational(1)}}),
                      Catch::Matchers::ContainsSubstring("invalid cover"));
}
