#pragma once

// Modules (homogeneous sets), primeness and cograph recognition.
//
// A module of a graph is a vertex set S with 2 <= |S| < n such that every
// vertex outside S sees all of S or none of it. For ordered graphs the module
// must also be an interval of the order; for tournaments every outside vertex
// must beat all of S or none of it.

#include "graph.hpp"

#include <optional>
#include <vector>

namespace sparsify {

struct ModuleWitness {
    VertexSet vertices;
};

namespace detail {

// Splits(w, m): w (outside m) distinguishes two members of m.
template <class Splits>
bool is_module_by(int n, const VertexSet &m, Splits &&splits) {
    const int k = m.size();
    if (k < 2 || k >= n) return false;
    for (int w = 0; w < n; ++w)
        if (!m.contains(w) && splits(w, m)) return false;
    return true;
}

/// Least module containing m: add splitters (and fill gaps when `interval`)
/// until none is left.
template <class Splits>
VertexSet module_closure(int n, VertexSet m, bool interval, Splits &&splits) {
    bool changed = true;
    while (changed) {
        changed = false;
        if (interval && !m.empty()) {
            for (int v = m.first(); v <= m.last(); ++v)
                if (!m.contains(v)) {
                    m.insert(v);
                    changed = true;
                }
        }
        for (int w = 0; w < n; ++w)
            if (!m.contains(w) && splits(w, m)) {
                m.insert(w);
                changed = true;
            }
    }
    return m;
}

/// Smallest module, lexicographically least among those, by exhaustive search
/// over subsets in size-then-lex order.
template <class Splits>
std::optional<ModuleWitness> find_module_exhaustive(int n, bool interval, Splits &&splits) {
    if (n <= 2) return std::nullopt;
    std::vector<int> comb;
    for (int k = 2; k < n; ++k) {
        comb.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            bool ok = !interval || comb.back() - comb.front() == k - 1;
            if (ok) {
                VertexSet m(n, comb);
                if (is_module_by(n, m, splits)) return ModuleWitness{m};
            }
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
        }
    }
    return std::nullopt;
}

/// Same answer as the exhaustive search: every minimum-size module is the
/// closure of any pair inside it.
template <class Splits>
std::optional<ModuleWitness> find_module_closure(int n, bool interval, Splits &&splits) {
    if (n <= 2) return std::nullopt;
    std::optional<VertexSet> best;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (interval && b != a + 1) continue; // interval closures start from adjacent positions
            VertexSet m = module_closure(n, VertexSet(n, {a, b}), interval, splits);
            if (m.size() >= n) continue;
            if (!best || m.size() < best->size() || (m.size() == best->size() && lex_less(m, *best))) best = m;
        }
    if (!best) return std::nullopt;
    return ModuleWitness{*best};
}

inline auto graph_splitter(const Graph &g) {
    return [&g](int w, const VertexSet &m) {
        const int c = g.neighbours(w).intersection_size(m);
        return c != 0 && c != m.size();
    };
}

inline auto tournament_splitter(const Tournament &t) {
    return [&t](int w, const VertexSet &m) {
        const int c = t.out_neighbours(w).intersection_size(m);
        return c != 0 && c != m.size();
    };
}

inline constexpr int exhaustive_limit = 12;

} // namespace detail

inline bool is_module(const Graph &g, const VertexSet &s) {
    return detail::is_module_by(g.size(), s, detail::graph_splitter(g));
}
inline bool is_module(const OrderedGraph &g, const VertexSet &s) {
    return !s.empty() && s.last() - s.first() + 1 == s.size() && is_module(g.graph(), s);
}
inline bool is_module(const Tournament &t, const VertexSet &s) {
    return detail::is_module_by(t.size(), s, detail::tournament_splitter(t));
}

inline std::optional<ModuleWitness> find_module(const Graph &g) {
    if (g.size() <= detail::exhaustive_limit) return detail::find_module_exhaustive(g.size(), false, detail::graph_splitter(g));
    return detail::find_module_closure(g.size(), false, detail::graph_splitter(g));
}

/// Interval modules only.
inline std::optional<ModuleWitness> find_module(const OrderedGraph &g) {
    if (g.size() <= detail::exhaustive_limit) return detail::find_module_exhaustive(g.size(), true, detail::graph_splitter(g.graph()));
    return detail::find_module_closure(g.size(), true, detail::graph_splitter(g.graph()));
}

inline std::optional<ModuleWitness> find_module(const Tournament &t) {
    if (t.size() <= detail::exhaustive_limit) return detail::find_module_exhaustive(t.size(), false, detail::tournament_splitter(t));
    return detail::find_module_closure(t.size(), false, detail::tournament_splitter(t));
}

/// Closure-based search regardless of size (exposed for cross-checking).
inline std::optional<ModuleWitness> find_module_by_closure(const Graph &g) {
    return detail::find_module_closure(g.size(), false, detail::graph_splitter(g));
}
inline std::optional<ModuleWitness> find_module_by_closure(const OrderedGraph &g) {
    return detail::find_module_closure(g.size(), true, detail::graph_splitter(g.graph()));
}
inline std::optional<ModuleWitness> find_module_by_closure(const Tournament &t) {
    return detail::find_module_closure(t.size(), false, detail::tournament_splitter(t));
}

inline bool is_prime(const Graph &g) { return !find_module_by_closure(g); }
inline bool is_prime(const OrderedGraph &g) { return !find_module_by_closure(g); }
inline bool is_prime(const Tournament &t) { return !find_module_by_closure(t); }

namespace detail {

inline std::vector<VertexSet> components_within(const Graph &g, const VertexSet &s, bool use_complement) {
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (!left.empty()) {
        VertexSet comp(g.size());
        VertexSet frontier(g.size());
        frontier.insert(left.first());
        while (!frontier.empty()) {
            comp |= frontier;
            left -= frontier;
            VertexSet next(g.size());
            frontier.for_each([&](int v) {
                VertexSet nb = use_complement ? ~g.neighbours(v) : g.neighbours(v);
                next |= nb & left;
            });
            frontier = next - comp;
            frontier &= left;
        }
        out.push_back(comp);
    }
    return out;
}

} // namespace detail

/// P4-free test: a graph is a cograph iff every induced subgraph on >= 2
/// vertices is disconnected or has a disconnected complement.
inline bool is_cograph(const Graph &g) {
    std::vector<VertexSet> stack{VertexSet::full(g.size())};
    while (!stack.empty()) {
        VertexSet s = std::move(stack.back());
        stack.pop_back();
        if (s.size() <= 3) {
            continue; // every graph on at most 3 vertices is P4-free
        }
        auto comps = detail::components_within(g, s, false);
        if (comps.size() == 1) comps = detail::components_within(g, s, true);
        if (comps.size() == 1) return false;
        for (auto &c : comps) stack.push_back(std::move(c));
    }
    return true;
}

} // namespace sparsify
