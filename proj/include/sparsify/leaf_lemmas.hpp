#pragma once

// The leaf lemmas for an ordered pattern H with an end vertex v of degree one:
// a single sparse pair, and its iteration into a sparse blockade.

#include "certificates.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "outcome.hpp"
#include "rational.hpp"
#include "restricted.hpp"

#include <string>
#include <vector>

namespace sparsify {

namespace detail {

struct LeafSetup {
    int h = 0;
    int u = 0;         // the neighbour of v in H
    Graph h_prime;     // H - v
    int u_in_prime = 0;
    Graph j;           // H - {u, v}
    bool v_last = true;
};

inline LeafSetup leaf_setup(const OrderedGraph &h, int v) {
    LeafSetup s;
    s.h = h.size();
    if (s.h < 2) throw DomainError("pattern needs at least two vertices");
    if (v != 0 && v != s.h - 1) throw DomainError("v must be the first or last vertex of H");
    if (h.degree(v) != 1) throw DomainError("v must have degree one in H");
    s.u = h.neighbours(v).first();
    s.v_last = v == s.h - 1;
    s.h_prime = delete_vertex(h.graph(), v);
    s.u_in_prime = s.u - (v < s.u ? 1 : 0);
    s.j = delete_vertex(s.h_prime, s.u_in_prime);
    return s;
}

/// The first (or last) k members of s.
inline VertexSet end_part(const VertexSet &s, int k, bool from_front) {
    if (from_front) return s.first_k(k);
    auto m = s.to_vector();
    VertexSet out(s.universe());
    for (int i = static_cast<int>(m.size()) - k; i < static_cast<int>(m.size()); ++i)
        if (i >= 0) out.insert(m[static_cast<std::size_t>(i)]);
    return out;
}

inline int min_degree_vertex(const Graph &g, const VertexSet &r) {
    int best = -1, bd = 0;
    r.for_each([&](int w) {
        const int d = g.degree_in(w, r);
        if (best < 0 || d < bd) best = w, bd = d;
    });
    return best;
}

} // namespace detail

/// One step of the leaf lemma inside `scope`: a SparsePair (A, B) with
/// |A| >= y^a N and |B| >= (1-hy)N, a RestrictedCandidate S of size at least yN
/// with few copies of H - v, or a CopyWitness for H. N = |scope|.
/// Requires 0 < x <= y <= 1/(2h), a >= 2, and max degree of g[scope] <= yN.
inline ExtractionOutcome sparse_pair(const OrderedGraph &h, int v, const Graph &g, const VertexSet &scope, const Rational &x,
                                     const Rational &y, int a) {
    const auto ls = detail::leaf_setup(h, v);
    const int hs = ls.h;
    const long long n = scope.size();
    if (scope.universe() != g.size()) throw InputError("scope universe does not match host");
    if (n < 1) throw DomainError("scope is empty");
    if (a < 2) throw DomainError("a must be at least 2");
    if (x <= 0 || x > y || y > Rational(1, 2 * hs)) throw DomainError("need 0 < x <= y <= 1/(2h)");
    if (Rational(side_max_degree(g, scope, Side::Graph)) > y * n) throw DomainError("max degree of g[scope] exceeds y*|scope|");

    const Rational ya = pow(y, static_cast<unsigned long long>(a));
    const Rational min_b = (1 - hs * y) * n;

    // y^a N < 1: the pair is trivial, clamped to a single vertex or nothing
    if (floor_of(ya * n) == 0) {
        const int a0 = detail::min_degree_vertex(g, scope);
        VertexSet b = scope - g.neighbours(a0);
        b.erase(a0);
        SparsePair p{VertexSet(g.size()), b, x, 1, min_b, true};
        p.a.insert(a0);
        if (Rational(b.size()) < min_b) p = SparsePair{VertexSet(g.size()), scope, x, 0, min_b, true};
        return p;
    }

    const int s_size = static_cast<int>(ceil_of(y * n));
    const VertexSet s = detail::end_part(scope, s_size, ls.v_last);
    const Rational bound = pow(y, static_cast<unsigned long long>(a - 2)) * pow(Rational(s_size), static_cast<unsigned long long>(hs - 1));
    const std::uint64_t cap = to_u64_saturating(floor_of(bound));
    const CountResult hp = count_copies_in(ls.h_prime, g, true, CountOptions{cap, s, 1});
    if (!hp.exceeded) return RestrictedCandidate{s, ls.h_prime, true, hp.count, bound, y * n};

    const int a_size = static_cast<int>(ceil_of(ya * n));
    const VertexSet outside = scope - s;
    std::optional<SparsePair> found;
    for_each_copy(ls.j, g, true, s, [&](const Copy &phi) {
        const ExtensionResult ext = count_extensions(phi, ls.h_prime, ls.u_in_prime, g, s);
        if (Rational(static_cast<long long>(ext.count)) < ya * n) return true;
        const VertexSet av = ext.vertices.first_k(a_size);
        VertexSet b0 = outside;
        for (int p : phi) b0 -= g.neighbours(p);
        // drop the vertices of b0 with more than x|A| neighbours in A
        const long long per = static_cast<long long>(floor_of(x * a_size));
        std::vector<int> hits(static_cast<std::size_t>(g.size()), 0);
        VertexSet b = b0;
        av.for_each([&](int p) {
            VertexSet nb = g.neighbours(p) & b0;
            nb.for_each([&](int w) {
                if (++hits[static_cast<std::size_t>(w)] > per) b.erase(w);
            });
        });
        if (Rational(b.size()) < min_b) return true;
        found = SparsePair{av, b, x, floor_of(ya * n), min_b, false};
        return false;
    });
    if (found) return *found;

    const Rational threshold = pow(x, static_cast<unsigned long long>(2 * a + hs)) * pow(Rational(n), static_cast<unsigned long long>(hs));
    const std::uint64_t tcap = to_u64_saturating(floor_of(threshold));
    const CountResult full = count_copies_in(h.graph(), g, true, CountOptions{tcap, scope, 1});
    if (!full.exceeded)
        throw CertificateError("sparse_pair: no outcome holds (H has " + std::to_string(full.count) + " copies, threshold " +
                               to_display(threshold) + ")");
    return CopyWitness{h.graph(), true, scope, full.count, threshold};
}

/// Iterates sparse_pair into a sparse blockade of length ceil(1/y) and width
/// y^(a+1) N, or stops at a RestrictedCandidate of size y^2 N or a CopyWitness
/// for H with threshold x^(2a+2h) N^h. Requires 0 < x <= y <= 4^-h and max
/// degree of g[scope] <= y^2 N.
inline ExtractionOutcome grow_blockade(const OrderedGraph &h, int v, const Graph &g, const VertexSet &scope, const Rational &x,
                                       const Rational &y, int a) {
    const int hs = h.size();
    const long long n = scope.size();
    if (scope.universe() != g.size()) throw InputError("scope universe does not match host");
    if (n < 1) throw DomainError("scope is empty");
    if (x <= 0 || x > y || y > pow(Rational(1, 4), static_cast<unsigned long long>(hs))) throw DomainError("need 0 < x <= y <= 4^-h");
    if (Rational(side_max_degree(g, scope, Side::Graph)) > y * y * n) throw DomainError("max degree of g[scope] exceeds y^2*|scope|");

    const BigInt length = ceil_of(1 / y);
    std::vector<VertexSet> blocks;
    VertexSet rest = scope;
    bool clamped = false;
    while (BigInt(static_cast<long long>(blocks.size()) + 1) < length) {
        if (Rational(side_max_degree(g, rest, Side::Graph)) > y * rest.size())
            throw CertificateError("grow_blockade: residual set too small after " + std::to_string(blocks.size()) + " steps");
        ExtractionOutcome r = sparse_pair(h, v, g, rest, x, y, a);
        if (auto *p = std::get_if<SparsePair>(&r)) {
            blocks.push_back(p->a);
            rest = p->b;
            clamped = clamped || p->clamped;
            continue;
        }
        if (auto *w = std::get_if<CopyWitness>(&r)) {
            w->threshold = pow(x, static_cast<unsigned long long>(2 * a + 2 * hs)) * pow(Rational(n), static_cast<unsigned long long>(hs));
            return r;
        }
        auto &c = std::get<RestrictedCandidate>(r);
        c.min_size = y * y * n;
        return r;
    }
    blocks.push_back(rest);
    Blockade b;
    b.blocks = std::move(blocks);
    b.kind = BlockadeKind::Sparse;
    b.x = x;
    b.min_length = length;
    b.min_width = floor_of(pow(y, static_cast<unsigned long long>(a + 1)) * n);
    if (b.min_width == 0) clamped = true;
    b.clamped = clamped;
    return BlockadeFound{std::move(b)};
}

} // namespace sparsify
