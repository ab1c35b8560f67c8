#pragma once

// Seeded generators for test hosts. Hosts free of a prime five-vertex pattern
// are built by recursive substitution of pieces with at most four vertices: a
// copy of a prime pattern cannot straddle a substitution, and every piece is
// too small to hold it.

#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace sparsify {

using Rng = std::mt19937_64;

inline Graph random_graph(int n, double p, Rng &rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Tournament random_tournament(int n, Rng &rng) {
    std::bernoulli_distribution coin(0.5);
    Tournament t = Tournament::transitive(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) t.set_arc(v, u);
    return t;
}

inline std::vector<int> random_permutation(int n, Rng &rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

namespace detail {

/// Splits [0, n) into at most four non-empty consecutive parts and fills
/// `part_of`; returns the number of parts.
inline int split_parts(int n, Rng &rng, std::vector<int> &sizes) {
    const int k = std::min(n, std::uniform_int_distribution<int>(2, 4)(rng));
    std::vector<int> cuts;
    std::vector<int> all(static_cast<std::size_t>(n - 1));
    std::iota(all.begin(), all.end(), 1);
    std::sample(all.begin(), all.end(), std::back_inserter(cuts), k - 1, rng);
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(n);
    sizes.clear();
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) sizes.push_back(cuts[i + 1] - cuts[i]);
    return k;
}

inline void fill_graph(Graph &g, int lo, int n, Rng &rng) {
    if (n <= 1) return;
    if (n <= 4) {
        Graph small = random_graph(n, 0.5, rng);
        for (auto [a, b] : small.edges()) g.add_edge(lo + a, lo + b);
        return;
    }
    std::vector<int> sizes;
    const int k = split_parts(n, rng, sizes);
    Graph quotient = random_graph(k, 0.5, rng);
    std::vector<int> start(static_cast<std::size_t>(k));
    for (int i = 0, at = lo; i < k; at += sizes[static_cast<std::size_t>(i)], ++i) start[static_cast<std::size_t>(i)] = at;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (quotient.adjacent(i, j))
                for (int a = 0; a < sizes[static_cast<std::size_t>(i)]; ++a)
                    for (int b = 0; b < sizes[static_cast<std::size_t>(j)]; ++b)
                        g.add_edge(start[static_cast<std::size_t>(i)] + a, start[static_cast<std::size_t>(j)] + b);
    for (int i = 0; i < k; ++i) fill_graph(g, start[static_cast<std::size_t>(i)], sizes[static_cast<std::size_t>(i)], rng);
}

inline void fill_tournament(Tournament &t, int lo, int n, Rng &rng) {
    if (n <= 1) return;
    if (n <= 4) {
        Tournament small = random_tournament(n, rng);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && small.beats(a, b)) t.set_arc(lo + a, lo + b);
        return;
    }
    std::vector<int> sizes;
    const int k = split_parts(n, rng, sizes);
    Tournament quotient = random_tournament(k, rng);
    std::vector<int> start(static_cast<std::size_t>(k));
    for (int i = 0, at = lo; i < k; at += sizes[static_cast<std::size_t>(i)], ++i) start[static_cast<std::size_t>(i)] = at;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && quotient.beats(i, j))
                for (int a = 0; a < sizes[static_cast<std::size_t>(i)]; ++a)
                    for (int b = 0; b < sizes[static_cast<std::size_t>(j)]; ++b)
                        t.set_arc(start[static_cast<std::size_t>(i)] + a, start[static_cast<std::size_t>(j)] + b);
    for (int i = 0; i < k; ++i) fill_tournament(t, start[static_cast<std::size_t>(i)], sizes[static_cast<std::size_t>(i)], rng);
}

} // namespace detail

/// A random graph with no induced copy of any prime graph on five or more
/// vertices (so bull-free), with vertices shuffled.
inline Graph random_substitution_graph(int n, Rng &rng) {
    Graph g(n);
    detail::fill_graph(g, 0, n, rng);
    return permuted(g, random_permutation(n, rng));
}

/// The tournament analogue: no subtournament isomorphic to a prime
/// tournament on five or more vertices.
inline Tournament random_substitution_tournament(int n, Rng &rng) {
    Tournament t = Tournament::transitive(n);
    detail::fill_tournament(t, 0, n, rng);
    return permuted(t, random_permutation(n, rng));
}

/// The five-vertex tournament whose identity backedge graph is the monotone
/// path: i -> j for i < j except (i+1) -> i.
inline Tournament path_tournament(int n = 5) {
    Tournament t = Tournament::transitive(n);
    for (int i = 0; i + 1 < n; ++i) t.set_arc(i + 1, i);
    return t;
}

} // namespace sparsify
