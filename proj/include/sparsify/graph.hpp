#pragma once

#include "errors.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sparsify {

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)) {
        if (n < 0) throw InputError("negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    int size() const noexcept { return n_; }

    bool adjacent(int u, int v) const noexcept { return rows_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet &neighbours(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const noexcept { return rows_[static_cast<std::size_t>(v)].size(); }
    int degree_in(int v, const VertexSet &s) const noexcept {
        return rows_[static_cast<std::size_t>(v)].intersection_size(s);
    }

    void add_edge(int u, int v) { set_edge(u, v, true); }
    void remove_edge(int u, int v) { set_edge(u, v, false); }
    void set_edge(int u, int v, bool on) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        rows_[static_cast<std::size_t>(u)].assign(v, on);
        rows_[static_cast<std::size_t>(v)].assign(u, on);
    }

    int max_degree() const noexcept {
        int m = 0;
        for (const auto &r : rows_) m = std::max(m, r.size());
        return m;
    }

    std::int64_t edge_count() const noexcept {
        std::int64_t twice = 0;
        for (const auto &r : rows_) twice += r.size();
        return twice / 2;
    }

    /// Edges {u,v} with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[static_cast<std::size_t>(u)].next(u + 1); v >= 0; v = rows_[static_cast<std::size_t>(u)].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InputError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n_) + " vertices");
    }

    /// The complement, built row by row.
    Graph complemented() const {
        Graph out(n_);
        for (int v = 0; v < n_; ++v) {
            auto &r = out.rows_[static_cast<std::size_t>(v)];
            r = ~rows_[static_cast<std::size_t>(v)];
            r.erase(v);
        }
        return out;
    }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// A graph whose linear order is the index order: vertex i precedes j iff i < j.
class OrderedGraph {
public:
    OrderedGraph() = default;
    explicit OrderedGraph(Graph g) : g_(std::move(g)) {}

    /// The underlying unordered graph.
    const Graph &graph() const noexcept { return g_; }
    int size() const noexcept { return g_.size(); }
    bool adjacent(int u, int v) const noexcept { return g_.adjacent(u, v); }
    const VertexSet &neighbours(int v) const noexcept { return g_.neighbours(v); }
    int degree(int v) const noexcept { return g_.degree(v); }

    friend bool operator==(const OrderedGraph &, const OrderedGraph &) = default;

private:
    Graph g_;
};

/// Complete orientation: beats(u, v) means the arc u -> v.
class Tournament {
public:
    Tournament() = default;

    /// The transitive tournament with i -> j for all i < j.
    static Tournament transitive(int n) {
        Tournament t;
        t.n_ = n;
        t.out_.assign(static_cast<std::size_t>(n), VertexSet(n));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) t.out_[static_cast<std::size_t>(u)].insert(v);
        return t;
    }

    /// Builds from out-rows; throws InputError unless every pair has exactly one arc.
    static Tournament from_rows(std::vector<VertexSet> rows) {
        Tournament t;
        t.n_ = static_cast<int>(rows.size());
        t.out_ = std::move(rows);
        t.validate();
        return t;
    }

    int size() const noexcept { return n_; }
    bool beats(int u, int v) const noexcept { return out_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet &out_neighbours(int v) const noexcept { return out_[static_cast<std::size_t>(v)]; }
    VertexSet in_neighbours(int v) const {
        VertexSet s = ~out_[static_cast<std::size_t>(v)];
        s.erase(v);
        return s;
    }
    int out_degree(int v) const noexcept { return out_[static_cast<std::size_t>(v)].size(); }
    int in_degree(int v) const noexcept { return n_ - 1 - out_degree(v); }

    /// Orients the pair {u, v} as u -> v.
    void set_arc(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw InputError("invalid arc");
        out_[static_cast<std::size_t>(u)].insert(v);
        out_[static_cast<std::size_t>(v)].erase(u);
    }

    void validate() const {
        for (int u = 0; u < n_; ++u) {
            if (out_[static_cast<std::size_t>(u)].universe() != n_) throw InputError("tournament row has wrong width");
            if (beats(u, u)) throw InputError("tournament has a loop at " + std::to_string(u));
            for (int v = u + 1; v < n_; ++v)
                if (beats(u, v) == beats(v, u))
                    throw InputError("pair " + std::to_string(u) + "," + std::to_string(v) + " is not oriented exactly once");
        }
    }

    friend bool operator==(const Tournament &, const Tournament &) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> out_;
};

/// An injective map from pattern vertices to host vertices: copy[i] is the
/// image of pattern vertex i.
using Copy = std::vector<int>;

// ---------------------------------------------------------------------------
// Pure operations

inline Graph complement(const Graph &g) { return g.complemented(); }

inline OrderedGraph complement(const OrderedGraph &g) { return OrderedGraph(complement(g.graph())); }

/// Vertex i of the result is vertices[i] of g.
inline Graph permuted(const Graph &g, const std::vector<int> &vertices) {
    const int k = static_cast<int>(vertices.size());
    for (int v : vertices) g.check_vertex(v);
    Graph out(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (vertices[static_cast<std::size_t>(i)] == vertices[static_cast<std::size_t>(j)])
                throw InputError("repeated vertex " + std::to_string(vertices[static_cast<std::size_t>(i)]));
            if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) out.add_edge(i, j);
        }
    return out;
}

inline Graph induced(const Graph &g, const VertexSet &s) {
    if (s.universe() != g.size()) throw InputError("vertex set universe does not match graph");
    return permuted(g, s.to_vector());
}

/// Induced subgraph on a list of vertices; the list is sorted first so the
/// relative order of the host is kept.
inline Graph induced(const Graph &g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return permuted(g, vertices);
}

inline OrderedGraph induced(const OrderedGraph &g, const VertexSet &s) { return OrderedGraph(induced(g.graph(), s)); }
inline OrderedGraph induced(const OrderedGraph &g, std::vector<int> vertices) {
    return OrderedGraph(induced(g.graph(), std::move(vertices)));
}

inline Tournament permuted(const Tournament &t, const std::vector<int> &vertices) {
    const int k = static_cast<int>(vertices.size());
    std::vector<VertexSet> rows(static_cast<std::size_t>(k), VertexSet(k));
    for (int v : vertices)
        if (v < 0 || v >= t.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && t.beats(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
                rows[static_cast<std::size_t>(i)].insert(j);
    return Tournament::from_rows(std::move(rows));
}

inline Tournament induced(const Tournament &t, const VertexSet &s) { return permuted(t, s.to_vector()); }

/// Vertex layout of a substitution result: h1's vertices before v, then all of
/// h2, then h1's vertices after v. Returns for each h1 vertex its new index
/// (v maps to -1) and the offset of the h2 block.
struct SubstitutionLayout {
    std::vector<int> outer_index;
    int inner_offset = 0;
};

inline SubstitutionLayout substitution_layout(int n1, int v, int n2) {
    SubstitutionLayout lay;
    lay.outer_index.resize(static_cast<std::size_t>(n1));
    for (int x = 0; x < n1; ++x) lay.outer_index[static_cast<std::size_t>(x)] = x < v ? x : (x == v ? -1 : x + n2 - 1);
    lay.inner_offset = v;
    return lay;
}

/// Replaces vertex v of h1 by a copy of h2 joined to exactly v's neighbours.
inline Graph substitute(const Graph &h1, int v, const Graph &h2) {
    h1.check_vertex(v);
    const int n1 = h1.size(), n2 = h2.size();
    const auto lay = substitution_layout(n1, v, n2);
    Graph out(n1 + n2 - 1);
    for (int x = 0; x < n1; ++x) {
        if (x == v) continue;
        const int nx = lay.outer_index[static_cast<std::size_t>(x)];
        for (int y = x + 1; y < n1; ++y)
            if (y != v && h1.adjacent(x, y)) out.add_edge(nx, lay.outer_index[static_cast<std::size_t>(y)]);
        if (h1.adjacent(x, v))
            for (int z = 0; z < n2; ++z) out.add_edge(nx, lay.inner_offset + z);
    }
    for (auto [a, b] : h2.edges()) out.add_edge(lay.inner_offset + a, lay.inner_offset + b);
    return out;
}

/// Ordered substitution: h2 occupies a contiguous block at v's position.
inline OrderedGraph substitute(const OrderedGraph &h1, int v, const OrderedGraph &h2) {
    return OrderedGraph(substitute(h1.graph(), v, h2.graph()));
}

/// Tournament substitution: h2 replaces v and inherits v's arcs.
inline Tournament substitute(const Tournament &h1, int v, const Tournament &h2) {
    const int n1 = h1.size(), n2 = h2.size();
    if (v < 0 || v >= n1) throw InputError("vertex " + std::to_string(v) + " out of range");
    const auto lay = substitution_layout(n1, v, n2);
    const int n = n1 + n2 - 1;
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    auto index_of_outer = [&](int x) { return lay.outer_index[static_cast<std::size_t>(x)]; };
    for (int x = 0; x < n1; ++x) {
        if (x == v) continue;
        for (int y = 0; y < n1; ++y)
            if (y != v && y != x && h1.beats(x, y)) rows[static_cast<std::size_t>(index_of_outer(x))].insert(index_of_outer(y));
        for (int z = 0; z < n2; ++z) {
            if (h1.beats(x, v))
                rows[static_cast<std::size_t>(index_of_outer(x))].insert(lay.inner_offset + z);
            else
                rows[static_cast<std::size_t>(lay.inner_offset + z)].insert(index_of_outer(x));
        }
    }
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b)
            if (a != b && h2.beats(a, b)) rows[static_cast<std::size_t>(lay.inner_offset + a)].insert(lay.inner_offset + b);
    return Tournament::from_rows(std::move(rows));
}

/// Vertex i becomes n-1-i.
inline OrderedGraph reverse_order(const OrderedGraph &g) {
    const int n = g.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = n - 1 - i;
    return OrderedGraph(permuted(g.graph(), order));
}

/// Deletes one vertex, keeping the relative order of the rest.
inline Graph delete_vertex(const Graph &g, int v) {
    g.check_vertex(v);
    VertexSet keep = VertexSet::full(g.size());
    keep.erase(v);
    return induced(g, keep);
}
inline OrderedGraph delete_vertex(const OrderedGraph &g, int v) { return OrderedGraph(delete_vertex(g.graph(), v)); }

inline bool is_clique(const Graph &g, const VertexSet &s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && g.degree_in(v, s) == s.size() - 1; });
    return ok;
}
inline bool is_stable(const Graph &g, const VertexSet &s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && !g.neighbours(v).intersects(s); });
    return ok;
}

// ---------------------------------------------------------------------------
// Small named graphs used throughout

namespace named {

inline Graph path(int k) {
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}
inline Graph cycle(int k) {
    Graph g = path(k);
    if (k >= 3) g.add_edge(0, k - 1);
    return g;
}
/// P4 a-b-c-d plus a vertex adjacent to b and c.
inline Graph bull() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}); }
inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}
inline OrderedGraph monotone_path(int k) { return OrderedGraph(path(k)); }

} // namespace named

} // namespace sparsify
