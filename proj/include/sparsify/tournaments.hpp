#pragma once

// Buildable tournaments (the class Q), backedge ordered graphs, and
// transitive-set extraction through the ordered driver.

#include "classes.hpp"
#include "decomposition.hpp"
#include "driver.hpp"
#include "errors.hpp"
#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace sparsify {

struct BackedgePair {
    Tournament tournament;
    /// numbering[i] is the vertex at position i.
    std::vector<int> numbering;
    OrderedGraph backedge;
};

inline std::vector<int> identity_numbering(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline void check_numbering(const std::vector<int> &num, int n) {
    if (static_cast<int>(num.size()) != n) throw DomainError("numbering has the wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : num) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw DomainError("numbering is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

/// Positions i < j are adjacent iff the arc goes from numbering[j] to numbering[i].
inline BackedgePair backedge(const Tournament &t, const std::vector<int> &numbering) {
    const int n = t.size();
    check_numbering(numbering, n);
    Graph b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t.beats(numbering[static_cast<std::size_t>(j)], numbering[static_cast<std::size_t>(i)])) b.add_edge(i, j);
    return BackedgePair{t, numbering, OrderedGraph(std::move(b))};
}

inline BackedgePair backedge(const Tournament &t) { return backedge(t, identity_numbering(t.size())); }

/// The tournament on the original vertices whose backedge graph under
/// `numbering` is b.
inline Tournament from_backedge(const OrderedGraph &b, const std::vector<int> &numbering) {
    const int n = b.size();
    check_numbering(numbering, n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int u = numbering[static_cast<std::size_t>(i)], v = numbering[static_cast<std::size_t>(j)];
            if (b.adjacent(i, j))
                rows[static_cast<std::size_t>(v)].insert(u);
            else
                rows[static_cast<std::size_t>(u)].insert(v);
        }
    return Tournament::from_rows(std::move(rows));
}

inline Tournament from_backedge(const OrderedGraph &b) { return from_backedge(b, identity_numbering(b.size())); }

/// Acyclic on s, i.e. the out-degrees inside s are pairwise distinct.
inline bool is_transitive(const Tournament &t, const VertexSet &s) {
    std::vector<bool> seen(static_cast<std::size_t>(s.size()), false);
    bool ok = true;
    s.for_each([&](int v) {
        const int d = t.out_neighbours(v).intersection_size(s);
        if (seen[static_cast<std::size_t>(d)]) ok = false;
        seen[static_cast<std::size_t>(d)] = true;
    });
    return ok;
}

struct QMembership {
    bool member = false;
    /// A numbering under which the backedge graph is in K.
    std::vector<int> numbering;
};

namespace detail {

/// Reverse peeling on t[s]: a vertex of in-degree <= 1 goes first, one of
/// out-degree <= 1 goes last, and a module is numbered contiguously.
inline std::optional<std::vector<int>> q_numbering(const Tournament &t, const VertexSet &s) {
    const int m = s.size();
    if (m <= 1) return s.to_vector();
    for (int v = s.first(); v >= 0; v = s.next(v + 1)) {
        const int out = t.out_neighbours(v).intersection_size(s);
        const int in = m - 1 - out;
        if (in > 1 && out > 1) continue;
        VertexSet rest = s;
        rest.erase(v);
        auto sub = q_numbering(t, rest);
        if (!sub) return std::nullopt;
        if (in <= 1) sub->insert(sub->begin(), v);
        else sub->push_back(v);
        return sub;
    }
    const auto members = s.to_vector();
    const Tournament local = induced(t, s);
    auto mod = find_module(local);
    if (!mod) return std::nullopt;
    VertexSet inner(t.size()), outer = s;
    mod->vertices.for_each([&](int i) {
        inner.insert(members[static_cast<std::size_t>(i)]);
        outer.erase(members[static_cast<std::size_t>(i)]);
    });
    const int rep = inner.first();
    outer.insert(rep);
    auto o = q_numbering(t, outer);
    auto in = q_numbering(t, inner);
    if (!o || !in) return std::nullopt;
    auto it = std::find(o->begin(), o->end(), rep);
    it = o->erase(it);
    o->insert(it, in->begin(), in->end());
    return o;
}

} // namespace detail

inline QMembership recognize_Q(const Tournament &t) {
    auto num = detail::q_numbering(t, VertexSet::full(t.size()));
    if (!num) return {};
    if (!in_K(backedge(t, *num).backedge)) throw CertificateError("Q numbering does not give a backedge graph in K");
    return QMembership{true, std::move(*num)};
}

inline bool in_Q(const Tournament &t) { return recognize_Q(t).member; }

/// Cross-check: some numbering puts the backedge graph in K (n <= 7).
inline std::optional<std::vector<int>> in_Q_by_numbering_search(const Tournament &t) {
    if (t.size() > 7) throw DomainError("numbering search is limited to 7 vertices");
    auto p = identity_numbering(t.size());
    do {
        if (in_K(backedge(t, p).backedge)) return p;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

struct TransitiveResult {
    VertexSet set;
    /// The set is a clique of the backedge graph (arcs all point backward).
    bool backward = false;
    std::optional<CopyWitness> witness;
    std::vector<std::string> schedule;
};

/// A transitive subset of t, for t without many copies of q (q in Q).
inline TransitiveResult transitive_extract(const Tournament &q, const Tournament &t, const ViralParams &params = {}) {
    QMembership m = recognize_Q(q);
    if (!m.member) throw DomainError("q is not in Q");
    const OrderedGraph h = backedge(q, m.numbering).backedge;
    const OrderedGraph hr = reverse_order(h);
    const OrderedGraph p = backedge(t).backedge;
    EhResult r = eh_extract_ordered(h, hr, p, params);
    if (!is_transitive(t, r.set.set)) throw CertificateError("extracted set is not transitive");
    return TransitiveResult{r.set.set, r.set.kind == CliqueKind::Clique && !r.set.ambiguous, r.witness, r.schedule};
}

} // namespace sparsify
