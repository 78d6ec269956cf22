#ifndef EXGRAPH_TEST_UTIL_HPP
#define EXGRAPH_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "exgraph/graph.hpp"

namespace testutil {

// deterministic Erdos-Renyi-ish sample
inline exgraph::Graph random_graph(std::mt19937& rng, int max_n, double p = 0.4) {
    std::uniform_int_distribution<int> nd(1, max_n);
    std::bernoulli_distribution ed(p);
    int n = nd(rng);
    std::vector<exgraph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (ed(rng)) edges.emplace_back(u, v);
    return exgraph::make_graph(n, edges);
}

// brute-force maximum weight independent set over all subsets (n <= 20)
inline exgraph::Rational brute_force_mis(const exgraph::Graph& g) {
    const int n = g.vertex_count();
    std::vector<uint32_t> nbr(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) nbr[u] |= 1u << v;
    exgraph::Rational best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (s >> u & 1u)
                if (nbr[u] & s) ok = false;
        if (!ok) continue;
        exgraph::Rational w = 0;
        for (int u = 0; u < n; ++u)
            if (s >> u & 1u) w += g.weight(u);
        if (w > best) best = w;
    }
    return best;
}

// brute-force maximal clique enumeration (n <= 16): every clique subset that
// cannot be extended
inline std::vector<std::vector<int>> brute_force_maximal_cliques(const exgraph::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            if (s >> u & 1u)
                for (int v = u + 1; v < n && clique; ++v)
                    if ((s >> v & 1u) && !g.adjacent(u, v)) clique = false;
        if (!clique) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w) {
            if (s >> w & 1u) continue;
            bool all = true;
            for (int u = 0; u < n && all; ++u)
                if ((s >> u & 1u) && !g.adjacent(u, w)) all = false;
            if (all) maximal = false;
        }
        if (!maximal) continue;
        std::vector<int> c;
        for (int u = 0; u < n; ++u)
            if (s >> u & 1u) c.push_back(u);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testutil

#endif
