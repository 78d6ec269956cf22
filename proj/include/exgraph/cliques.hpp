#ifndef EXGRAPH_CLIQUES_HPP
#define EXGRAPH_CLIQUES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "exgraph/graph.hpp"
#include "exgraph/rational.hpp"

namespace exgraph {

/// Thrown when maximal-clique enumeration passes its configured limit.
/// Callers fall back to certificate-based bounds (packing_bounds).
class CliqueOverflow : public std::runtime_error {
public:
    explicit CliqueOverflow(size_t reached)
        : std::runtime_error("maximal clique limit exceeded after " +
                             std::to_string(reached) + " cliques"),
          count(reached) {}
    size_t count;
};

struct CliqueSet {
    std::vector<std::vector<int>> cliques;
    bool complete = false;  // true iff exactly the maximal cliques
};

namespace detail {

using Bits = std::vector<uint64_t>;

inline Bits row_bits(const Graph& g, int v) {
    return Bits(g.row(v), g.row(v) + g.blocks());
}

inline int popcount(const Bits& b) {
    int c = 0;
    for (uint64_t w : b) c += __builtin_popcountll(w);
    return c;
}

inline bool test_bit(const Bits& b, int i) { return b[i >> 6] >> (i & 63) & 1ull; }
inline void set_bit(Bits& b, int i) { b[i >> 6] |= 1ull << (i & 63); }
inline void clear_bit(Bits& b, int i) { b[i >> 6] &= ~(1ull << (i & 63)); }

inline int intersect_count(const Bits& a, const Bits& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
    return c;
}

inline bool is_empty(const Bits& b) {
    for (uint64_t w : b)
        if (w) return false;
    return true;
}

template <typename F>
inline void for_each_bit(const Bits& b, F&& f) {
    for (size_t blk = 0; blk < b.size(); ++blk) {
        uint64_t w = b[blk];
        while (w) {
            int i = static_cast<int>(blk * 64) + __builtin_ctzll(w);
            f(i);
            w &= w - 1;
        }
    }
}

struct BronKerbosch {
    const Graph& g;
    size_t limit;
    std::vector<Bits> adj;
    std::vector<std::vector<int>> out;
    std::vector<int> stack;

    BronKerbosch(const Graph& graph, size_t lim) : g(graph), limit(lim) {
        adj.reserve(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(row_bits(g, v));
    }

    // Pivot on the candidate with the most neighbours inside P.
    void expand(Bits P, Bits X) {
        if (is_empty(P) && is_empty(X)) {
            if (out.size() >= limit) throw CliqueOverflow(out.size() + 1);
            out.push_back(stack);
            return;
        }
        int pivot = -1, best = -1;
        Bits PX(P);
        for (size_t i = 0; i < PX.size(); ++i) PX[i] |= X[i];
        for_each_bit(PX, [&](int u) {
            int c = intersect_count(adj[u], P);
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        Bits candidates(P);
        for (size_t i = 0; i < candidates.size(); ++i) candidates[i] &= ~adj[pivot][i];
        for_each_bit(candidates, [&](int v) {
            Bits P2(P), X2(X);
            for (size_t i = 0; i < P2.size(); ++i) {
                P2[i] &= adj[v][i];
                X2[i] &= adj[v][i];
            }
            stack.push_back(v);
            expand(std::move(P2), std::move(X2));
            stack.pop_back();
            clear_bit(P, v);
            set_bit(X, v);
        });
    }
};

}  // namespace detail

/// All maximal cliques via pivoting Bron-Kerbosch, sorted lexicographically
/// by their sorted vertex lists for deterministic downstream LPs.
inline CliqueSet maximal_cliques(const Graph& g, size_t limit = 1000000) {
    if (limit == 0) throw std::invalid_argument("clique limit must be positive");
    detail::BronKerbosch bk(g, limit);
    if (g.vertex_count() > 0) {
        detail::Bits P(g.blocks(), 0ull), X(g.blocks(), 0ull);
        for (int v = 0; v < g.vertex_count(); ++v) detail::set_bit(P, v);
        bk.expand(std::move(P), std::move(X));
    }
    for (auto& c : bk.out) std::sort(c.begin(), c.end());
    std::sort(bk.out.begin(), bk.out.end());
    return CliqueSet{std::move(bk.out), true};
}

struct IndependentSet {
    std::vector<int> vertices;
    Rational value;
};

namespace detail {

// Weighted maximum independent set by branch and bound. The bound partitions
// the candidate set into cliques greedily (a clique contributes at most its
// heaviest vertex to any independent set).
struct MisSolver {
    const Graph& g;
    std::vector<Bits> adj;
    std::vector<int> order;       // branch order: degree descending, index ascending
    std::vector<Rational> w;
    Rational best_value = 0;
    std::vector<int> best_set;
    std::vector<int> current;

    explicit MisSolver(const Graph& graph) : g(graph) {
        const int n = g.vertex_count();
        adj.reserve(n);
        for (int v = 0; v < n; ++v) adj.push_back(row_bits(g, v));
        w.reserve(n);
        for (int v = 0; v < n; ++v) w.push_back(g.weight(v));
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int da = g.degree(a), db = g.degree(b);
            if (da != db) return da > db;
            return a < b;
        });
    }

    Rational clique_cover_bound(const Bits& cand) const {
        Rational bound = 0;
        Bits rest(cand);
        while (!is_empty(rest)) {
            int seed = -1;
            for (size_t blk = 0; blk < rest.size() && seed < 0; ++blk)
                if (rest[blk]) seed = static_cast<int>(blk * 64) + __builtin_ctzll(rest[blk]);
            Rational heaviest = w[seed];
            Bits common(adj[seed]);
            for (size_t i = 0; i < common.size(); ++i) common[i] &= rest[i];
            clear_bit(rest, seed);
            // grow a clique greedily inside rest
            while (!is_empty(common)) {
                int u = -1;
                for (size_t blk = 0; blk < common.size() && u < 0; ++blk)
                    if (common[blk]) u = static_cast<int>(blk * 64) + __builtin_ctzll(common[blk]);
                if (w[u] > heaviest) heaviest = w[u];
                clear_bit(rest, u);
                for (size_t i = 0; i < common.size(); ++i) common[i] &= adj[u][i];
            }
            bound += heaviest;
        }
        return bound;
    }

    void branch(Bits cand, const Rational& value) {
        if (value > best_value) {
            best_value = value;
            best_set = current;
        }
        if (is_empty(cand)) return;
        if (value + clique_cover_bound(cand) <= best_value) return;
        // next branch vertex: first in the fixed order still in cand
        int v = -1;
        for (int u : order)
            if (test_bit(cand, u)) {
                v = u;
                break;
            }
        // include v
        Bits without_nv(cand);
        clear_bit(without_nv, v);
        Bits in_branch(without_nv);
        for (size_t i = 0; i < in_branch.size(); ++i) in_branch[i] &= ~adj[v][i];
        current.push_back(v);
        branch(std::move(in_branch), value + w[v]);
        current.pop_back();
        // exclude v
        branch(std::move(without_nv), value);
    }
};

}  // namespace detail

/// Exact maximum-weight independent set. The returned set is re-checked for
/// independence on every call.
inline IndependentSet max_independent_set(const Graph& g) {
    detail::MisSolver solver(g);
    if (g.vertex_count() > 0) {
        detail::Bits all(g.blocks(), 0ull);
        for (int v = 0; v < g.vertex_count(); ++v) detail::set_bit(all, v);
        solver.branch(std::move(all), Rational(0));
    }
    std::sort(solver.best_set.begin(), solver.best_set.end());
    for (size_t i = 0; i < solver.best_set.size(); ++i)
        for (size_t j = i + 1; j < solver.best_set.size(); ++j)
            if (g.adjacent(solver.best_set[i], solver.best_set[j]))
                throw std::logic_error("internal: MIS result not independent");
    return IndependentSet{std::move(solver.best_set), std::move(solver.best_value)};
}

struct WeightedClique {
    std::vector<int> vertices;
    Rational weight;
};

struct CoverCheck {
    bool valid = false;
    Rational bound = 0;
    std::string message;
};

/// Check a fractional clique cover: every listed set must be a clique and
/// every vertex must receive total clique weight >= its vertex weight.
/// A valid cover certifies alpha*(G) <= bound by LP weak duality.
inline CoverCheck verify_cover(const Graph& g, const std::vector<WeightedClique>& cover) {
    CoverCheck r;
    std::vector<Rational> covered(g.vertex_count(), Rational(0));
    for (size_t k = 0; k < cover.size(); ++k) {
        const auto& c = cover[k];
        if (c.weight < 0) {
            r.message = "cover set " + std::to_string(k) + " has negative weight";
            return r;
        }
        for (size_t i = 0; i < c.vertices.size(); ++i) {
            int u = c.vertices[i];
            if (u < 0 || u >= g.vertex_count()) {
                r.message = "cover set " + std::to_string(k) + " references vertex " +
                            std::to_string(u) + " out of range";
                return r;
            }
            covered[u] += c.weight;
            for (size_t j = i + 1; j < c.vertices.size(); ++j)
                if (!g.adjacent(u, c.vertices[j])) {
                    r.message = "cover set " + std::to_string(k) + " is not a clique: " +
                                std::to_string(u) + " !~ " + std::to_string(c.vertices[j]);
                    return r;
                }
        }
        r.bound += c.weight;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (covered[v] < g.weight(v)) {
            r.message = "vertex " + std::to_string(v) + " undercovered";
            r.bound = 0;
            return r;
        }
    r.valid = true;
    return r;
}

}  // namespace exgraph

#endif
