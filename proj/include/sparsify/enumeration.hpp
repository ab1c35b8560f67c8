#pragma once

// Catalogs and named families: prime members of H by vertex count, the
// |H|+2 doubling chain, the leaf-path family of the bipartite construction,
// and the small figure graphs.

#include "canonical.hpp"
#include "classes.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "text_format.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sparsify {

enum class EnumStrategy {
    /// Grow every member of H on n-1 vertices by one vertex (H is hereditary).
    Hereditary,
    /// Filter every graph on n vertices.
    AllGraphs,
    /// Filter every split graph on n vertices.
    Split,
};

namespace detail {

inline std::vector<Graph> sorted_values(std::map<std::uint64_t, Graph> &m) {
    std::vector<Graph> out;
    for (auto &[k, g] : m) out.push_back(std::move(g));
    return out;
}

inline std::vector<Graph> members_of_H(int n) {
    std::map<std::uint64_t, Graph> level;
    level.emplace(canonical_form(Graph(1)).key, Graph(1));
    for (int m = 2; m <= n; ++m) {
        std::map<std::uint64_t, Graph> next;
        for (const auto &[key, base] : level)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Graph g(m);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int u = 0; u < m - 1; ++u)
                    if ((mask >> u) & 1u) g.add_edge(u, m - 1);
                CanonicalForm cf = canonical_form(g);
                if (next.count(cf.key) || !in_H(cf.graph)) continue;
                next.emplace(cf.key, std::move(cf.graph));
            }
        level = std::move(next);
    }
    if (n == 0) return {Graph(0)};
    return sorted_values(level);
}

inline std::vector<Graph> split_graphs(int n) {
    std::map<std::uint64_t, Graph> seen;
    for (int k = 0; k <= n; ++k) {
        const int s = n - k, bits = k * s;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g(n);
            for (int u = 0; u < k; ++u)
                for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
            for (int b = 0; b < bits; ++b)
                if ((mask >> b) & 1u) g.add_edge(b / s, k + b % s);
            CanonicalForm cf = canonical_form(g);
            seen.try_emplace(cf.key, std::move(cf.graph));
        }
    }
    return sorted_values(seen);
}

} // namespace detail

/// Isomorphism classes of prime n-vertex graphs in H, sorted by canonical key.
inline std::vector<Graph> enumerate_prime_in_H(int n, EnumStrategy strategy = EnumStrategy::Hereditary) {
    if (n < 0 || n > 8) throw DomainError("enumeration is limited to n <= 8");
    std::vector<Graph> pool;
    switch (strategy) {
    case EnumStrategy::Hereditary: pool = detail::members_of_H(n); break;
    case EnumStrategy::AllGraphs: pool = all_graphs(n); break;
    case EnumStrategy::Split: pool = detail::split_graphs(n); break;
    }
    std::vector<Graph> out;
    for (auto &g : pool)
        if (n >= 3 && is_prime(g) && in_H(g)) out.push_back(std::move(g));
    return out;
}

/// Catalog text: one graph block per member, preceded by a comment line.
inline std::string catalog_text(const std::vector<Graph> &graphs, const std::string &title) {
    std::string out = "# " + title + ": " + std::to_string(graphs.size()) + " graphs\n";
    for (const auto &g : graphs) out += serialize(g);
    return out;
}

/// Each step adds a vertex adjacent to every current vertex and a new leaf at
/// the neighbour u of the current leaf.
inline std::vector<Graph> doubling_chain(const Graph &start, int steps) {
    if (steps < 0) throw DomainError("steps must be non-negative");
    int leaf = -1;
    for (int v = 0; v < start.size() && leaf < 0; ++v)
        if (start.degree(v) == 1) leaf = v;
    if (leaf < 0) throw DomainError("start graph has no vertex of degree one");
    const int u = start.neighbours(leaf).first();
    std::vector<Graph> out{start};
    for (int s = 0; s < steps; ++s) {
        const Graph &h = out.back();
        const int n = h.size();
        Graph g(n + 2);
        for (auto [a, b] : h.edges()) g.add_edge(a, b);
        for (int v = 0; v < n; ++v) g.add_edge(v, n);
        g.add_edge(u, n + 1);
        out.push_back(std::move(g));
    }
    return out;
}

struct NumberedGraph {
    Graph graph;
    /// names[v] is the label of vertex v, e.g. "a2" or "b11".
    std::vector<std::string> names;
    /// The displayed linear order (vertex ids), B descending then A ascending.
    std::vector<int> order;
};

/// The bipartite construction on a path p_1..p_k with a leaf at every path
/// vertex and an isolated vertex b1. Numbers: p_t is 2t (t odd) or 2t-1 (t
/// even), its leaf 2t+2 or 2t+1; odd path positions lie in A, their leaves in
/// B, and the other way round for even positions. Then A becomes a clique and
/// a_i, b_j are joined when i >= j+4.
inline NumberedGraph fig2_family(int k) {
    if (k < 1) throw DomainError("path length must be at least 1");
    struct Item {
        int number;
        bool in_a;
        int path_pos; // 0 for leaves and b1
        int leaf_of;  // path position, 0 otherwise
    };
    std::vector<Item> items{{1, false, 0, 0}};
    for (int t = 1; t <= k; ++t) {
        const bool odd = t % 2 == 1;
        items.push_back({odd ? 2 * t : 2 * t - 1, odd, t, 0});
        items.push_back({odd ? 2 * t + 2 : 2 * t + 1, !odd, 0, t});
    }
    std::sort(items.begin(), items.end(), [](const Item &x, const Item &y) { return x.number < y.number; });
    const int n = static_cast<int>(items.size());
    std::vector<int> id_of_path(static_cast<std::size_t>(k) + 1, -1);
    for (int v = 0; v < n; ++v)
        if (items[static_cast<std::size_t>(v)].path_pos) id_of_path[static_cast<std::size_t>(items[static_cast<std::size_t>(v)].path_pos)] = v;
    Graph g(n);
    for (int t = 1; t < k; ++t) g.add_edge(id_of_path[static_cast<std::size_t>(t)], id_of_path[static_cast<std::size_t>(t) + 1]);
    for (int v = 0; v < n; ++v)
        if (int t = items[static_cast<std::size_t>(v)].leaf_of) g.add_edge(v, id_of_path[static_cast<std::size_t>(t)]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Item &x = items[static_cast<std::size_t>(i)], &y = items[static_cast<std::size_t>(j)];
            if (i == j || !x.in_a || g.adjacent(i, j)) continue;
            if (y.in_a || x.number >= y.number + 4) g.add_edge(i, j);
        }
    NumberedGraph out{std::move(g), {}, {}};
    for (const auto &it : items) out.names.push_back((it.in_a ? "a" : "b") + std::to_string(it.number));
    for (int v = n - 1; v >= 0; --v)
        if (!items[static_cast<std::size_t>(v)].in_a) out.order.push_back(v);
    for (int v = 0; v < n; ++v)
        if (items[static_cast<std::size_t>(v)].in_a) out.order.push_back(v);
    return out;
}

/// The two six-vertex prime members of H and the seven-vertex one.
inline std::vector<Graph> fig1_fixtures() {
    auto g = [](int n, std::vector<std::pair<int, int>> e) {
        for (auto &[a, b] : e) --a, --b;
        return Graph::from_edges(n, e);
    };
    return {g(6, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {5, 6}}),
            g(6, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {3, 6}}),
            g(7, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {3, 6}, {5, 7}})};
}

/// The four open six-vertex graphs.
inline std::vector<Graph> fig3_fixtures() {
    auto g = [](std::vector<std::pair<int, int>> e) {
        for (auto &[a, b] : e) --a, --b;
        return Graph::from_edges(6, e);
    };
    return {g({{1, 2}, {2, 3}, {4, 5}, {5, 6}, {2, 5}, {3, 6}}),
            g({{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {4, 2}, {2, 5}, {5, 3}, {3, 6}}),
            g({{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}}),
            g({{1, 2}, {2, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 5}, {4, 6}, {5, 6}})};
}

/// The seven four-vertex prime ordered graphs, up to complement and reversal.
inline std::vector<OrderedGraph> fig4_fixtures() {
    auto g = [](std::vector<std::pair<int, int>> e) { return OrderedGraph(Graph::from_edges(4, e)); };
    return {g({{0, 1}, {0, 3}}),         g({{0, 1}, {1, 3}}),         g({{0, 2}, {1, 3}}),         g({{0, 1}, {1, 2}, {2, 3}}),
            g({{0, 1}, {2, 3}, {0, 2}}), g({{0, 1}, {2, 3}, {0, 3}}), g({{0, 1}, {1, 2}, {0, 3}})};
}

} // namespace sparsify
