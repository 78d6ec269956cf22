#ifndef EXGRAPH_GRAPH_HPP
#define EXGRAPH_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exgraph/rational.hpp"

namespace exgraph {

using Edge = std::pair<int, int>;

class Graph;
struct DisjointUnion;
DisjointUnion disjoint_union(const std::vector<Graph>& parts);

/// Finite simple undirected vertex-weighted graph.
///
/// Adjacency is stored as dense bitset rows (64-bit blocks); every target
/// instance is a few hundred vertices at most. Instances are immutable once
/// constructed, so they can be shared freely across threads.
class Graph {
public:
    Graph() : n_(0), blocks_(0) {}

    explicit Graph(int n)
        : n_(n),
          blocks_((n + 63) / 64),
          adj_(static_cast<size_t>(n) * blocks_, 0ull),
          weights_(n, Rational(1)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<size_t>(u) * blocks_ + (v >> 6)] >> (v & 63) & 1ull;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int b = 0; b < blocks_; ++b)
            d += __builtin_popcountll(adj_[static_cast<size_t>(v) * blocks_ + b]);
        return d;
    }

    const Rational& weight(int v) const {
        check_vertex(v);
        return weights_[v];
    }
    const std::vector<Rational>& weights() const { return weights_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const {
        check_vertex(v);
        static const std::string empty;
        return labels_.empty() ? empty : labels_[v];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Row of 64-bit adjacency blocks for vertex v (used by the solvers).
    const uint64_t* row(int v) const { return adj_.data() + static_cast<size_t>(v) * blocks_; }
    int blocks() const { return blocks_; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    // Builder access: only the free constructor functions below mutate.
    friend Graph make_graph(int, const std::vector<Edge>&, const std::vector<Rational>&);
    friend Graph circulant(int, const std::vector<int>&);
    friend Graph complement(const Graph&);
    friend Graph or_product(const Graph&, const Graph&);
    friend Graph induced_subgraph(const Graph&, const std::vector<int>&);
    friend DisjointUnion disjoint_union(const std::vector<Graph>&);
    friend Graph with_labels(Graph, std::vector<std::string>);
    friend Graph with_weights(Graph, std::vector<Rational>);

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    void add_edge_unchecked(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop rejected");
        check_vertex(u);
        check_vertex(v);
        uint64_t& a = adj_[static_cast<size_t>(u) * blocks_ + (v >> 6)];
        if (!(a >> (v & 63) & 1ull)) {
            a |= 1ull << (v & 63);
            adj_[static_cast<size_t>(v) * blocks_ + (u >> 6)] |= 1ull << (u & 63);
            ++m_;
        }
    }

    int n_ = 0;
    int blocks_ = 0;
    int m_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<Rational> weights_;
    std::vector<std::string> labels_;
};

/// Build a graph from an edge list. Edges are symmetrized and deduplicated.
inline Graph make_graph(int n, const std::vector<Edge>& edges,
                        const std::vector<Rational>& weights = {}) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge_unchecked(u, v);
    if (!weights.empty()) {
        if (static_cast<int>(weights.size()) != n)
            throw std::invalid_argument("weight count != vertex count");
        for (const auto& w : weights)
            if (w < 0) throw std::invalid_argument("negative weight");
        g.weights_ = weights;
    }
    return g;
}

inline Graph with_labels(Graph g, std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != g.vertex_count())
        throw std::invalid_argument("label count != vertex count");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate label: " + l);
    g.labels_ = std::move(labels);
    return g;
}

inline Graph with_weights(Graph g, std::vector<Rational> weights) {
    if (static_cast<int>(weights.size()) != g.vertex_count())
        throw std::invalid_argument("weight count != vertex count");
    for (const auto& w : weights)
        if (w < 0) throw std::invalid_argument("negative weight");
    g.weights_ = std::move(weights);
    return g;
}

/// Circulant graph: vertex i adjacent to i +- d (mod n) for each offset d.
inline Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw std::invalid_argument("circulant needs n >= 3");
    if (offsets.empty()) throw std::invalid_argument("circulant needs offsets");
    Graph g(n);
    for (int d : offsets) {
        if (d < 1 || d > n / 2) throw std::invalid_argument("offset out of range 1..n/2");
        for (int i = 0; i < n; ++i) g.add_edge_unchecked(i, (i + d) % n);
    }
    return g;
}

inline Graph cycle(int n) { return circulant(n, {1}); }

/// Moebius ladder on 2m vertices as the (1, m) circulant.
inline Graph mobius_ladder(int m) { return circulant(2 * m, {1, m}); }

/// Prism on 2m vertices as the (2, m) circulant (two m-cycles plus rungs
/// when m is odd, which is the only case the cycle inequalities use).
inline Graph prism(int m) { return circulant(2 * m, {2, m}); }

inline Graph complete(int n) {
    if (n == 0) return Graph(0);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, e);
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complement(const Graph& g) {
    Graph out(g.vertex_count());
    out.weights_ = g.weights_;
    out.labels_ = g.labels_;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) out.add_edge_unchecked(u, v);
    return out;
}

/// Disjoint union plus the vertex offset of each part, so union vertices can
/// be mapped back to (part, local index).
struct DisjointUnion {
    Graph graph;
    std::vector<int> offsets;

    std::pair<int, int> locate(int v) const {
        for (int p = static_cast<int>(offsets.size()) - 1; p >= 0; --p)
            if (v >= offsets[p]) return {p, v - offsets[p]};
        throw std::out_of_range("vertex not in union");
    }
};

inline DisjointUnion disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    bool any_labels = false;
    for (const auto& g : parts) {
        total += g.vertex_count();
        any_labels = any_labels || g.has_labels();
    }
    DisjointUnion u;
    u.graph = Graph(total);
    if (any_labels) u.graph.labels_.assign(total, "");
    int base = 0;
    for (const auto& g : parts) {
        u.offsets.push_back(base);
        for (int v = 0; v < g.vertex_count(); ++v) {
            u.graph.weights_[base + v] = g.weight(v);
            if (any_labels && g.has_labels()) u.graph.labels_[base + v] = g.label(v);
        }
        for (const auto& [a, b] : g.edges()) u.graph.add_edge_unchecked(base + a, base + b);
        base += g.vertex_count();
    }
    return u;
}

/// OR (disjunctive) product: (g,h) ~ (g',h') iff g~g' or h~h'.
inline Graph or_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(static_cast<int>(static_cast<long long>(ng) * nh));
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) out.weights_[a * nh + b] = g.weight(a) * h.weight(b);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            for (int c = 0; c < ng; ++c)
                for (int d = 0; d < nh; ++d) {
                    if (a == c && b == d) continue;
                    if (g.adjacent(a, c) || h.adjacent(b, d)) {
                        int u = a * nh + b, v = c * nh + d;
                        if (u < v) out.add_edge_unchecked(u, v);
                    }
                }
    return out;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> s(vertices);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    Graph out(static_cast<int>(s.size()));
    if (g.has_labels()) out.labels_.resize(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        g.check_vertex(s[i]);
        out.weights_[i] = g.weight(s[i]);
        if (g.has_labels()) out.labels_[i] = g.label(s[i]);
    }
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) out.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
    return out;
}

/// DOT rendering. Highlighted edges (either orientation) are colored green,
/// which is how cross-experiment exclusivities are marked in exports.
inline std::string to_dot(const Graph& g, const std::vector<Edge>& highlight = {}) {
    std::set<Edge> hi;
    for (auto [u, v] : highlight) hi.insert({std::min(u, v), std::max(u, v)});
    std::ostringstream os;
    os << "graph exclusivity {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v;
        if (g.has_labels() && !g.label(v).empty()) os << " [label=\"" << g.label(v) << "\"]";
        os << ";\n";
    }
    for (const auto& [u, v] : g.edges()) {
        os << "  v" << u << " -- v" << v;
        if (hi.count({u, v})) os << " [color=green penwidth=2]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace exgraph

#endif
