#pragma once

// eps-restricted sets: search, degree pruning, and the conversion of an
// x^2-restricted set into a blockade.

#include "errors.hpp"
#include "graph.hpp"
#include "outcome.hpp"
#include "rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sparsify {

/// Degree of v inside s on the given side (v need not be in s).
inline int side_degree(const Graph &g, int v, const VertexSet &s, Side side) {
    const int nb = g.degree_in(v, s);
    if (side == Side::Graph) return nb;
    return s.size() - (s.contains(v) ? 1 : 0) - nb;
}

inline int side_max_degree(const Graph &g, const VertexSet &s, Side side) {
    int m = 0;
    s.for_each([&](int v) { m = std::max(m, side_degree(g, v, s, side)); });
    return m;
}

inline std::int64_t side_edges(const Graph &g, const VertexSet &s, Side side) {
    std::int64_t twice = 0;
    s.for_each([&](int v) { twice += side_degree(g, v, s, side); });
    return twice / 2;
}

inline bool is_restricted(const Graph &g, const VertexSet &s, const Rational &eps, Side side) {
    return Rational(side_max_degree(g, s, side)) <= eps * s.size();
}

/// Labels a set that is eps-restricted on at least one side. The side with the
/// smaller maximum degree wins; equal degrees mark the result ambiguous.
inline std::optional<RestrictedSet> as_restricted(const Graph &g, const VertexSet &s, const Rational &eps) {
    const int dg = side_max_degree(g, s, Side::Graph);
    const int dc = side_max_degree(g, s, Side::Complement);
    const Rational cap = eps * s.size();
    const bool okg = Rational(dg) <= cap, okc = Rational(dc) <= cap;
    if (!okg && !okc) return std::nullopt;
    RestrictedSet r{s, Side::Graph, eps, false};
    if (dc < dg) r.side = Side::Complement;
    r.ambiguous = dg == dc;
    return r;
}

namespace detail {

/// Greedy peeling on one side: remove a vertex of largest degree (lowest index
/// on ties) until the bound holds.
inline VertexSet peel_to_restricted(const Graph &g, VertexSet s, const Rational &eps, Side side) {
    const int n = g.size();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    s.for_each([&](int v) { deg[static_cast<std::size_t>(v)] = side_degree(g, v, s, side); });
    int size = s.size();
    while (size > 0) {
        int worst = -1;
        s.for_each([&](int v) {
            if (worst < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(worst)]) worst = v;
        });
        if (Rational(deg[static_cast<std::size_t>(worst)]) <= eps * size) break;
        s.erase(worst);
        --size;
        // neighbours on this side lose one
        s.for_each([&](int w) {
            const bool adj = g.adjacent(w, worst);
            if ((side == Side::Graph) == adj) --deg[static_cast<std::size_t>(w)];
        });
    }
    return s;
}

/// Prefer the larger set, then the lexicographically smaller one; the
/// rule does not look at side labels, so it commutes with complementation.
inline bool better_set(const VertexSet &a, const VertexSet &b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
}

} // namespace detail

/// Searches for an eps-restricted subset of `scope` with at least min_size
/// vertices. Exact (largest such set, lexicographically least) when |scope| <=
/// 20, greedy peeling on both sides otherwise. nullopt only means the search
/// failed.
inline std::optional<RestrictedSet> restricted_subset_search(const Graph &g, const Rational &eps, int min_size,
                                                             std::optional<VertexSet> scope = std::nullopt) {
    if (eps <= 0 || eps >= Rational(1, 2)) throw DomainError("eps must lie in (0, 1/2)");
    const VertexSet dom = scope ? *scope : VertexSet::full(g.size());
    const auto members = dom.to_vector();
    const int m = static_cast<int>(members.size());
    if (m <= 20) {
        for (int k = m; k >= std::max(min_size, 0); --k) {
            // combinations of size k in lexicographic order
            std::vector<int> comb(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
            while (true) {
                VertexSet s(g.size());
                for (int i : comb) s.insert(members[static_cast<std::size_t>(i)]);
                if (auto r = as_restricted(g, s, eps)) return r;
                int i = k - 1;
                while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - k + i) --i;
                if (i < 0) break;
                ++comb[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
            }
        }
        return std::nullopt;
    }
    VertexSet sg = detail::peel_to_restricted(g, dom, eps, Side::Graph);
    VertexSet sc = detail::peel_to_restricted(g, dom, eps, Side::Complement);
    const VertexSet &best = detail::better_set(sc, sg) ? sc : sg;
    if (best.size() < min_size) return std::nullopt;
    return as_restricted(g, best, eps);
}

/// From a set whose `side` has at most (eps/4)*C(|S|,2) edges, keeps the
/// vertices of degree at most eps*|S|/2; the result has at least |S|/2
/// vertices and is eps-restricted on that side. The side is chosen
/// automatically when not given (fewer edges wins).
inline RestrictedSet degree_prune(const Graph &g, const VertexSet &s, const Rational &eps, std::optional<Side> side = std::nullopt) {
    const long long n = s.size();
    const Rational cap = eps / 4 * Rational(n * (n - 1) / 2);
    const std::int64_t eg = side_edges(g, s, Side::Graph);
    const std::int64_t ec = n * (n - 1) / 2 - eg;
    if (!side) {
        if (Rational(eg) <= cap && (eg <= ec || Rational(ec) > cap))
            side = Side::Graph;
        else if (Rational(ec) <= cap)
            side = Side::Complement;
        else
            throw DomainError("degree_prune: neither side has at most (eps/4)*C(|S|,2) edges");
    } else if (Rational(*side == Side::Graph ? eg : ec) > cap) {
        throw DomainError("degree_prune: the chosen side has too many edges");
    }
    VertexSet out(g.size());
    const Rational half = eps * n / 2;
    s.for_each([&](int v) {
        if (Rational(side_degree(g, v, s, *side)) <= half) out.insert(v);
    });
    RestrictedSet r{out, *side, eps, eg == ec};
    return r;
}

/// Splits an x^2-restricted set into k = ceil(x^(-1/2)) blocks of size
/// floor(2x|S|), taken from the lowest indices; the blockade is x-sparse when
/// the graph side is restricted and (1-x)-dense otherwise.
inline Blockade restricted_to_blockade(const Graph &g, const VertexSet &s, const Rational &x) {
    if (x <= 0 || x >= 1) throw DomainError("x must lie in (0, 1)");
    const Rational x2 = x * x;
    std::optional<Side> side;
    if (is_restricted(g, s, x2, Side::Graph))
        side = Side::Graph;
    else if (is_restricted(g, s, x2, Side::Complement))
        side = Side::Complement;
    if (!side) throw DomainError("set is not x^2-restricted");
    const BigInt k = ceil_sqrt(1 / x);
    const BigInt size = floor_of(2 * x * s.size());
    if (size < 1) throw DomainError("set too small: block size floor(2x|S|) is 0");
    if (k * size > s.size()) throw DomainError("set too small for k blocks of size floor(2x|S|)");
    Blockade b;
    b.kind = *side == Side::Graph ? BlockadeKind::Sparse : BlockadeKind::Dense;
    b.x = x;
    b.min_length = k;
    b.min_width = size;
    const auto members = s.to_vector();
    const int kk = static_cast<int>(k), sz = static_cast<int>(size);
    for (int i = 0; i < kk; ++i) {
        VertexSet blk(g.size());
        for (int j = 0; j < sz; ++j) blk.insert(members[static_cast<std::size_t>(i * sz + j)]);
        b.blocks.push_back(std::move(blk));
    }
    return b;
}

} // namespace sparsify
