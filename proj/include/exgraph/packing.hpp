#ifndef EXGRAPH_PACKING_HPP
#define EXGRAPH_PACKING_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "exgraph/cliques.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/rational.hpp"
#include "exgraph/simplex.hpp"

namespace exgraph {

struct PackingSolution {
    std::vector<Rational> values;           // per-vertex p(v), 0 <= p(v) <= w(v)
    Rational objective = 0;                 // alpha*(G), exact
    std::vector<WeightedClique> dual_cover; // optimal fractional clique cover
    bool optimal = false;
};

/// Exact fractional packing number alpha*(G):
///
///   max sum_v w(v) x(v)   s.t.   sum_{v in Q} x(v) <= 1  for every maximal
///   clique Q, x >= 0.
///
/// Every vertex lies in at least one maximal clique, so x(v) <= 1 is implied
/// and constraints over non-maximal cliques are dominated. Solved by exact
/// rational simplex; the returned dual cover certifies optimality and is
/// asserted to match the primal objective exactly.
inline PackingSolution fractional_packing(const Graph& g, size_t clique_limit = 1000000) {
    const int n = g.vertex_count();
    PackingSolution sol;
    sol.values.assign(n, Rational(0));
    if (n == 0) {
        sol.optimal = true;
        return sol;
    }
    CliqueSet cs = maximal_cliques(g, clique_limit);
    const int m = static_cast<int>(cs.cliques.size());
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int v : cs.cliques[i]) A[i][v] = 1;
    std::vector<Rational> b(m, Rational(1));
    std::vector<Rational> c(g.weights());

    LpResult lp = simplex_max(A, b, c);

    Rational dual_total = 0;
    for (int i = 0; i < m; ++i) {
        if (lp.dual[i] < 0) throw std::logic_error("internal: negative dual multiplier");
        dual_total += lp.dual[i];
        if (lp.dual[i] > 0) sol.dual_cover.push_back({cs.cliques[i], lp.dual[i]});
    }
    if (dual_total != lp.objective)
        throw std::logic_error("internal: strong duality violated");
    // primal feasibility, exactly
    for (int i = 0; i < m; ++i) {
        Rational s = 0;
        for (int v : cs.cliques[i]) s += lp.x[v];
        if (s > 1) throw std::logic_error("internal: clique constraint violated");
    }
    // dual feasibility: every vertex covered to its weight
    std::vector<Rational> covered(n, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int v : cs.cliques[i]) covered[v] += lp.dual[i];
    for (int v = 0; v < n; ++v)
        if (covered[v] < g.weight(v))
            throw std::logic_error("internal: dual cover infeasible");

    for (int v = 0; v < n; ++v) sol.values[v] = g.weight(v) * lp.x[v];
    sol.objective = lp.objective;
    sol.optimal = true;
    return sol;
}

struct PackingBounds {
    Rational lower;
    Rational upper;
};

/// Certificate-based two-sided bounds on alpha*(G) for graphs whose maximal
/// cliques cannot be enumerated. The upper bound comes from a supplied
/// fractional clique cover; the lower bound from a feasible point, checked
/// against the cover's cliques plus all pairwise edges (sufficient for the
/// 0/1 points used in practice, where edge feasibility alone implies every
/// clique constraint).
inline PackingBounds packing_bounds(const Graph& g, const std::vector<Rational>& feasible,
                                    const std::vector<WeightedClique>& cover) {
    const int n = g.vertex_count();
    if (static_cast<int>(feasible.size()) != n)
        throw std::invalid_argument("infeasible point: size != vertex count");

    CoverCheck cc = verify_cover(g, cover);
    if (!cc.valid) throw std::invalid_argument("invalid cover: " + cc.message);

    // scale p back to the unit-box variable x = p / w
    std::vector<Rational> x(n, Rational(0));
    Rational total = 0;
    for (int v = 0; v < n; ++v) {
        if (feasible[v] < 0 || feasible[v] > g.weight(v))
            throw std::invalid_argument("infeasible point: vertex " + std::to_string(v) +
                                        " outside [0, w]");
        if (g.weight(v) != 0) x[v] = feasible[v] / g.weight(v);
        total += feasible[v];
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && x[u] + x[v] > 1)
                throw std::invalid_argument("infeasible point: edge (" + std::to_string(u) +
                                            "," + std::to_string(v) + ") oversubscribed");
    for (size_t k = 0; k < cover.size(); ++k) {
        Rational s = 0;
        for (int v : cover[k].vertices) s += x[v];
        if (s > 1)
            throw std::invalid_argument("infeasible point: cover clique " + std::to_string(k) +
                                        " oversubscribed");
    }
    return PackingBounds{total, cc.bound};
}

}  // namespace exgraph

#endif
