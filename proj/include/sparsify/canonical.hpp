#pragma once

// Canonical labelling for small graphs (n <= 11): the minimum column-major
// upper-triangle bit string over all vertex orders that respect a
// degree-refined ordered partition. Two graphs are isomorphic iff their
// canonical keys are equal.

#include "errors.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace sparsify {

struct CanonicalForm {
    std::uint64_t key = 0;
    /// order[i] is the original vertex placed at canonical position i.
    std::vector<int> order;
    Graph graph;
};

namespace detail {

/// Iterated degree refinement. Returns the cell index of each vertex; cells are
/// numbered by an isomorphism-invariant order.
inline std::vector<int> refine_cells(const Graph &g) {
    const int n = g.size();
    std::vector<int> cell(static_cast<std::size_t>(n), 0);
    int cells = n > 0 ? 1 : 0;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s(static_cast<std::size_t>(cells) + 1, 0);
            s[0] = cell[static_cast<std::size_t>(v)];
            g.neighbours(v).for_each([&](int w) { ++s[static_cast<std::size_t>(cell[static_cast<std::size_t>(w)]) + 1]; });
            sig[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (auto &[s, v] : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto &[s, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) cell[static_cast<std::size_t>(v)] = ids[sig[static_cast<std::size_t>(v)].first];
        if (next == cells) break;
        cells = next;
    }
    return cell;
}

struct CanonSearch {
    const Graph &g;
    int n;
    std::vector<int> cell;
    std::vector<int> pos;      // current order
    std::vector<bool> used;
    std::uint64_t best = ~std::uint64_t{0};
    bool have_best = false;
    std::vector<int> best_order;

    // Bits are laid out column by column: column j holds (0,j),(1,j),...,(j-1,j).
    // The key is compared MSB-first so the string order is the integer order.
    int total_bits() const { return n * (n - 1) / 2; }

    void run(int depth, std::uint64_t key, int bits_done) {
        if (have_best) {
            // compare the prefix of length bits_done
            const int shift = total_bits() - bits_done;
            std::uint64_t best_prefix = shift >= 64 ? 0 : (best >> shift);
            if (key > best_prefix) return;
            if (depth == n && key == best_prefix) return;
        }
        if (depth == n) {
            best = key;
            best_order = pos;
            have_best = true;
            return;
        }
        // the next position must take a vertex from the lowest unfinished cell
        int want = -1;
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<std::size_t>(v)] && (want < 0 || cell[static_cast<std::size_t>(v)] < want)) want = cell[static_cast<std::size_t>(v)];
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || cell[static_cast<std::size_t>(v)] != want) continue;
            std::uint64_t k = key;
            for (int i = 0; i < depth; ++i) k = (k << 1) | (g.adjacent(pos[static_cast<std::size_t>(i)], v) ? 1u : 0u);
            used[static_cast<std::size_t>(v)] = true;
            pos.push_back(v);
            run(depth + 1, k, bits_done + depth);
            pos.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    }
};

} // namespace detail

inline CanonicalForm canonical_form(const Graph &g) {
    const int n = g.size();
    if (n > 11) throw DomainError("canonical form is limited to 11 vertices");
    detail::CanonSearch s{g, n, detail::refine_cells(g), {}, std::vector<bool>(static_cast<std::size_t>(n), false), ~std::uint64_t{0}, false, {}};
    s.run(0, 0, 0);
    CanonicalForm cf;
    cf.key = n == 0 ? 0 : s.best;
    cf.order = s.best_order;
    cf.graph = permuted(g, cf.order);
    return cf;
}

/// Key combining vertex count and canonical bits, suitable for sorting catalogs.
inline std::pair<int, std::uint64_t> canonical_key(const Graph &g) { return {g.size(), canonical_form(g).key}; }

inline bool are_isomorphic(const Graph &a, const Graph &b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).key == canonical_form(b).key;
}

/// One representative per isomorphism class of graphs on exactly n vertices
/// (n <= 10), sorted by canonical key. Built by extending every class on n-1
/// vertices with all 2^(n-1) neighbourhoods of a new vertex.
inline std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 10) throw DomainError("all_graphs supports 0 <= n <= 10");
    std::vector<Graph> level{Graph(0)};
    for (int m = 1; m <= n; ++m) {
        std::map<std::uint64_t, Graph> seen;
        for (const Graph &base : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Graph g(m);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int u = 0; u < m - 1; ++u)
                    if ((mask >> u) & 1u) g.add_edge(u, m - 1);
                CanonicalForm cf = canonical_form(g);
                seen.try_emplace(cf.key, std::move(cf.graph));
            }
        }
        level.clear();
        for (auto &[key, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

} // namespace sparsify
