#pragma once

// The extraction driver. viral_extract finds an eps-restricted subset of size
// eps^d |scope| for the ordered family {H, complement of J}, or a witness that
// one of them has too many copies; eh_extract iterates it with shrinking eps
// until a clique or stable set remains.
//
// The engine works on g and its complement side by side. A call for {H, J-bar}
// on g and a call for {J, H-bar} on the complement are mirror images, and every
// tie-break below is chosen so that the two calls make mirrored choices.

#include "certificates.hpp"
#include "classes.hpp"
#include "counting.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "leaf_lemmas.hpp"
#include "outcome.hpp"
#include "rational.hpp"
#include "restricted.hpp"
#include "transfer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sparsify {

struct ViralParams {
    int d = 4;
    /// Leaf-lemma exponent; defaults to 2 d^2 h.
    std::optional<int> a;
    std::uint64_t seed = 0;
    int max_depth = 24;
};

struct ViralResult {
    /// RestrictedSet or CopyWitness, in the coordinates of the host passed in.
    ExtractionOutcome outcome;
    /// For a CopyWitness: 0 when it is for H, 1 when it is for the complement of J.
    int member = -1;
    std::vector<std::string> trace;
};

namespace detail {

/// log2 of a positive rational, good to a few ulps for any magnitude.
inline long double log2_of(const Rational &r) {
    auto part = [](const BigInt &v) {
        const long long top = static_cast<long long>(boost::multiprecision::msb(v));
        const long long shift = top > 60 ? top - 60 : 0;
        const BigInt head = v >> static_cast<unsigned>(shift);
        return std::log2(static_cast<long double>(head.convert_to<unsigned long long>())) + shift;
    };
    return part(boost::multiprecision::numerator(r)) - part(boost::multiprecision::denominator(r));
}

/// Upper triangle of the adjacency matrix, row by row.
inline std::vector<bool> code_of(const Graph &h) {
    std::vector<bool> out;
    for (int i = 0; i < h.size(); ++i)
        for (int j = i + 1; j < h.size(); ++j) out.push_back(h.adjacent(i, j));
    return out;
}

inline std::optional<int> end_leaf(const Graph &h) {
    const int n = h.size();
    if (n >= 2 && h.degree(0) == 1) return 0;
    if (n >= 2 && h.degree(n - 1) == 1) return n - 1;
    return std::nullopt;
}

inline Graph collapse(const Graph &h, const VertexSet &m, int &rep_pos) {
    VertexSet keep = ~m;
    keep.insert(m.first());
    rep_pos = 0;
    for (int v = 0; v < m.first(); ++v)
        if (keep.contains(v)) ++rep_pos;
    return induced(h, keep);
}

class ViralEngine {
public:
    ViralEngine(const Graph &g, ViralParams p) : g_(g), gc_(complement(g)), p_(p) {
        if (p_.d < 4) throw DomainError("d must be at least 4");
    }

    const Graph &host() const { return g_; }

    ViralResult run(const Graph &h, const Graph &j, const VertexSet &scope, const Rational &eps) {
        trace_.clear();
        Res r = core(h, j, false, scope, eps, 0);
        require_certified(r.out, g_);
        return ViralResult{std::move(r.out), r.member, std::move(trace_)};
    }

private:
    struct Res {
        ExtractionOutcome out;
        int member = -1;
    };

    const Graph &host(bool fl) const { return fl ? gc_ : g_; }

    void note(int depth, const std::string &s) { trace_.push_back(std::string(static_cast<std::size_t>(2 * depth), ' ') + s); }

    static Res flipped(Res r) {
        if (auto *s = std::get_if<RestrictedSet>(&r.out)) {
            s->side = flip(s->side);
        } else if (auto *w = std::get_if<CopyWitness>(&r.out)) {
            w->pattern = complement(w->pattern);
            r.member = 1 - r.member;
        }
        return r;
    }

    /// True when H should be handled before J-bar. Smaller pattern first, then
    /// the smaller adjacency code; equal patterns defer to the denser side.
    bool h_first(const Graph &h, const Graph &j, bool fl, const VertexSet &s) const {
        if (h.size() != j.size()) return h.size() < j.size();
        auto ch = code_of(h), cj = code_of(j);
        if (ch != cj) return ch < cj;
        const std::int64_t e = side_edges(host(fl), s, Side::Graph);
        const long long n = s.size();
        return 2 * e >= n * (n - 1) / 2;
    }

    RestrictedSet make_set(const VertexSet &s, Side side, bool ambiguous, const Rational &eps, long long scope_size) const {
        RestrictedSet r{s, side, eps, ambiguous};
        r.target = pow(eps, static_cast<unsigned long long>(p_.d)) * scope_size;
        r.meets_target = Rational(s.size()) >= r.target;
        return r;
    }

    RestrictedSet labelled(const Graph &g, const VertexSet &s, const Rational &eps, long long scope_size) const {
        auto r = as_restricted(g, s, eps);
        if (!r) throw CertificateError("set expected to be restricted is not");
        return make_set(r->set, r->side, r->ambiguous, eps, scope_size);
    }

    /// Copies of member `m` (0: H in G, 1: J in the complement) against
    /// (eps^d |S|)^|pattern|.
    std::optional<Res> witness_for(int m, const Graph &h, const Graph &j, bool fl, const VertexSet &s, const Rational &eps) const {
        const Graph &p = m == 0 ? h : j;
        const Graph &where = m == 0 ? host(fl) : host(!fl);
        const Rational threshold = pow(pow(eps, static_cast<unsigned long long>(p_.d)) * s.size(), static_cast<unsigned long long>(p.size()));
        const CountResult c = count_copies_in(p, where, true, CountOptions{to_u64_saturating(floor_of(threshold)), s, 1});
        if (!c.exceeded) return std::nullopt;
        return Res{CopyWitness{m == 0 ? p : complement(p), true, s, c.count, threshold}, m};
    }

    std::optional<Res> any_witness(const Graph &h, const Graph &j, bool fl, const VertexSet &s, const Rational &eps) const {
        const bool hf = h_first(h, j, fl, s);
        for (int m : {hf ? 0 : 1, hf ? 1 : 0})
            if (auto w = witness_for(m, h, j, fl, s, eps)) return w;
        return std::nullopt;
    }

    Res finish(const Graph &h, const Graph &j, bool fl, const VertexSet &s, const Rational &eps, RestrictedSet r, int depth) {
        if (!r.meets_target) {
            if (auto w = any_witness(h, j, fl, s, eps)) {
                note(depth, "set below target; member " + std::to_string(w->member) + " has too many copies");
                return *w;
            }
            note(depth, "set below target, no witness");
        }
        return Res{std::move(r), -1};
    }

    Res fallback(const Graph &h, const Graph &j, bool fl, const VertexSet &s, const Rational &eps, int depth, const std::string &why) {
        note(depth, "fallback search (" + why + ")");
        const Graph &g = host(fl);
        auto r = restricted_subset_search(g, eps, 1, s);
        VertexSet set = r ? r->set : s.first_k(1);
        return finish(h, j, fl, s, eps, labelled(g, set, eps, s.size()), depth);
    }

    Res core(const Graph &h, const Graph &j, bool fl, const VertexSet &s, const Rational &eps, int depth) {
        const Graph &g = host(fl);
        const long long n = s.size();
        if (n <= 1) return Res{make_set(s, Side::Graph, true, eps, n), -1};
        if (auto r = as_restricted(g, s, eps)) {
            note(depth, "scope of " + std::to_string(n) + " is already restricted");
            return Res{make_set(s, r->side, r->ambiguous, eps, n), -1};
        }
        if (depth > p_.max_depth) return fallback(h, j, fl, s, eps, depth, "depth limit");
        if (h.size() <= 2 || j.size() <= 2) return base_case(h, j, fl, s, eps, depth);

        const bool hf = h_first(h, j, fl, s);
        for (int m : {hf ? 0 : 1, hf ? 1 : 0}) {
            if (m == 0) {
                if (auto mod = find_module(OrderedGraph(h))) return substitution_route(h, j, fl, s, eps, depth, mod->vertices);
            } else if (find_module(OrderedGraph(j))) {
                note(depth, "J has a module; working in the complement");
                return flipped(core(j, h, !fl, s, eps, depth));
            }
        }
        return prime_route(h, j, fl, s, eps, depth);
    }

    Res base_case(const Graph &h, const Graph &j, bool fl, const VertexSet &s, const Rational &eps, int depth) {
        const Graph &g = host(fl);
        const bool hf = h_first(h, j, fl, s);
        std::optional<Side> side;
        for (int m : {hf ? 0 : 1, hf ? 1 : 0}) {
            const Graph &p = m == 0 ? h : j;
            if (p.size() > 2) continue;
            if (auto w = witness_for(m, h, j, fl, s, eps)) {
                note(depth, "base case: member " + std::to_string(m) + " has too many copies");
                return *w;
            }
            // few copies of an edge means few edges on that side
            const bool edge = p.size() == 2 && p.adjacent(0, 1);
            const Side here = (m == 0) == edge ? Side::Graph : Side::Complement;
            if (!side) side = here;
        }
        if (!side) return fallback(h, j, fl, s, eps, depth, "base case without a small member");
        const long long n = s.size();
        const Rational cap = eps / 4 * Rational(n * (n - 1) / 2);
        if (Rational(side_edges(g, s, *side)) > cap) return fallback(h, j, fl, s, eps, depth, "degree pruning precondition fails");
        RestrictedSet r = degree_prune(g, s, eps, *side);
        note(depth, "base case: degree pruning keeps " + std::to_string(r.set.size()) + " of " + std::to_string(n));
        return finish(h, j, fl, s, eps, labelled(g, r.set, eps, n), depth);
    }

    Res substitution_route(const Graph &h, const Graph &j, bool fl, const VertexSet &s, const Rational &eps, int depth, const VertexSet &m) {
        const Graph &g = host(fl);
        int rep = 0;
        const Graph h1 = collapse(h, m, rep);
        const Graph h2 = induced(h, m);
        note(depth, "H splits at a module of size " + std::to_string(m.size()));
        Res r1 = core(h1, j, fl, s, eps, depth + 1);
        if (!std::holds_alternative<CopyWitness>(r1.out) || r1.member == 1) {
            if (auto *rs = std::get_if<RestrictedSet>(&r1.out)) return finish(h, j, fl, s, eps, labelled(g, rs->set, eps, s.size()), depth);
            return r1;
        }
        // many copies of H1: look inside the extension sets of its representative
        const Graph h1_minus = delete_vertex(h1, rep);
        const Rational need = pow(eps, static_cast<unsigned long long>(p_.d)) * s.size();
        std::optional<RestrictedSet> best;
        std::optional<Res> wit;
        int tried = 0;
        for_each_copy(h1_minus, g, true, s, [&](const Copy &phi) {
            const ExtensionResult ext = count_extensions(phi, h1, rep, g, s);
            if (ext.count < 2 || Rational(static_cast<long long>(ext.count)) < need) return true;
            ++tried;
            Res r2 = core(h2, j, fl, ext.vertices, eps, depth + 1);
            if (auto *rs = std::get_if<RestrictedSet>(&r2.out)) {
                if (!best || better_set(rs->set, best->set)) best = *rs;
                if (Rational(rs->set.size()) >= need) return false;
            } else if (r2.member == 1) {
                wit = r2;
                return false;
            }
            return tried < 64;
        });
        if (wit) return *wit;
        if (best) return finish(h, j, fl, s, eps, labelled(g, best->set, eps, s.size()), depth);
        return fallback(h, j, fl, s, eps, depth, "no extension set gave a restricted set");
    }

    Res prime_route(const Graph &h, const Graph &j, bool fl, const VertexSet &s, const Rational &eps, int depth) {
        const Graph &g = host(fl);
        const Graph &gc = host(!fl);
        const auto vh = end_leaf(h), vj = end_leaf(j);
        if (!vh || !vj) return fallback(h, j, fl, s, eps, depth, "a prime pattern has no end leaf");
        const int d = p_.d;
        const int hh = std::max({h.size(), j.size(), 4});
        const Rational c = pow(Rational(1, 4), static_cast<unsigned long long>(hh));
        const int a = p_.a ? *p_.a : 2 * d * d * hh;
        const Rational x = pow(eps, static_cast<unsigned long long>(12 * (d + 1)));
        const long double lx = log2_of(x), lc = log2_of(c);
        if (lx < -200000.0L) return fallback(h, j, fl, s, eps, depth, "parameters too small to represent");
        int levels = 2;
        for (long double e = d; lc * e > lx; e *= d) ++levels;

        auto first = restricted_subset_search(g, c * c, 1, s);
        VertexSet cur = first ? first->set : s.first_k(1);
        note(depth, "prime pair, " + std::to_string(levels) + " levels, first set of " + std::to_string(cur.size()));
        Rational y = c;
        for (int i = 1; i < levels; ++i, y = pow(y, static_cast<unsigned long long>(d))) {
            if (auto r = as_restricted(g, cur, eps)) {
                note(depth, "level " + std::to_string(i) + ": set of " + std::to_string(cur.size()) + " is eps-restricted");
                return finish(h, j, fl, s, eps, make_set(r->set, r->side, r->ambiguous, eps, s.size()), depth);
            }
            const int dg = side_max_degree(g, cur, Side::Graph), dc = side_max_degree(g, cur, Side::Complement);
            const bool sparse = dg != dc ? dg < dc : h_first(h, j, fl, cur);
            if (Rational(sparse ? dg : dc) > y * y * cur.size()) return fallback(h, j, fl, s, eps, depth, "level set is not y^2-restricted");
            ExtractionOutcome out = sparse ? grow_blockade(OrderedGraph(h), *vh, g, cur, x, y, a) : grow_blockade(OrderedGraph(j), *vj, gc, cur, x, y, a);

            if (auto *w = std::get_if<CopyWitness>(&out)) {
                note(depth, "level " + std::to_string(i) + ": leaf lemma found many copies");
                if (!sparse) w->pattern = complement(w->pattern);
                return Res{*w, sparse ? 0 : 1};
            }
            if (auto *rc = std::get_if<RestrictedCandidate>(&out)) {
                const Rational inner = pow(y, static_cast<unsigned long long>(2 * d));
                note(depth, "level " + std::to_string(i) + ": few copies of the reduced pattern in " + std::to_string(rc->set.size()) + " vertices");
                Res sub = sparse ? core(delete_vertex(h, *vh), j, fl, rc->set, inner, depth + 1)
                                 : core(h, delete_vertex(j, *vj), fl, rc->set, inner, depth + 1);
                if (auto *rs = std::get_if<RestrictedSet>(&sub.out)) {
                    cur = rs->set;
                } else if (sub.member == (sparse ? 1 : 0)) {
                    return sub;
                } else {
                    auto r = restricted_subset_search(g, inner, 1, rc->set);
                    cur = r ? r->set : rc->set.first_k(1);
                }
                continue;
            }
            Blockade found = std::get<BlockadeFound>(out).blockade;
            if (!sparse) found.kind = BlockadeKind::Dense;
            note(depth, "level " + std::to_string(i) + ": blockade of length " + std::to_string(found.length()));
            const Rational quarter = eps / 4;
            const Rational tx = pow(quarter, static_cast<unsigned long long>(12 * d));
            BlockadeProvider split = clique_split_provider(g, d, tx);
            BlockadeProvider provider = [&](const VertexSet &f) -> std::optional<Blockade> {
                if (f == cur && found.x <= tx && detail::check_provided(g, f, found, tx, d).empty()) return found;
                return split(f);
            };
            try {
                SparseSet t = blockade_to_sparse_set(g, cur, quarter, d, provider, p_.seed);
                for (const auto &line : t.trace) note(depth + 1, line);
                RestrictedSet r = degree_prune(g, t.set, eps, t.side);
                return finish(h, j, fl, s, eps, labelled(g, r.set, eps, s.size()), depth);
            } catch (const ProviderError &e) {
                return fallback(h, j, fl, s, eps, depth, e.what());
            }
        }
        if (auto r = as_restricted(g, cur, eps)) return finish(h, j, fl, s, eps, make_set(r->set, r->side, r->ambiguous, eps, s.size()), depth);
        return fallback(h, j, fl, s, eps, depth, "last level set is not eps-restricted");
    }

    const Graph &g_;
    Graph gc_;
    ViralParams p_;
    std::vector<std::string> trace_;
};

inline void check_eps(const Rational &eps) {
    if (eps <= 0 || eps >= Rational(1, 2)) throw DomainError("eps must lie in (0, 1/2)");
}

} // namespace detail

/// Ordered extraction for H, J in K on an ordered host.
inline ViralResult viral_extract(const OrderedGraph &h, const OrderedGraph &j, const OrderedGraph &g, const Rational &eps,
                                 const ViralParams &params = {}) {
    detail::check_eps(eps);
    if (!in_K(h)) throw DomainError("H is not in K");
    if (!in_K(j)) throw DomainError("J is not in K");
    detail::ViralEngine engine(g.graph(), params);
    return engine.run(h.graph(), j.graph(), VertexSet::full(g.size()), eps);
}

/// Unordered extraction for H, J in the class J: both are ordered into K and
/// the host keeps its index order. A CopyWitness is re-certified for the
/// unordered pattern, whose count is at least the ordered one.
inline ViralResult unordered_extract(const Graph &h, const Graph &j, const Graph &g, const Rational &eps, const ViralParams &params = {}) {
    detail::check_eps(eps);
    if (!in_J(h)) throw DomainError("H is not in J");
    if (!in_J(j)) throw DomainError("J is not in J");
    const OrderedGraph ho = order_into_K(h).graph, jo = order_into_K(j).graph;
    detail::ViralEngine engine(g, params);
    ViralResult r = engine.run(ho.graph(), jo.graph(), VertexSet::full(g.size()), eps);
    if (auto *w = std::get_if<CopyWitness>(&r.outcome)) {
        const CountResult c = count_copies_in(w->pattern, g, false, CountOptions{to_u64_saturating(floor_of(w->threshold)), w->scope, 1});
        if (!c.exceeded) throw CertificateError("unordered recount does not exceed the threshold");
        w->ordered = false;
        w->count = c.count;
        require_certified(r.outcome, g);
    }
    return r;
}

struct EhResult {
    CliqueOrStable set;
    /// Present when a step stopped on a witness; the set then comes from a
    /// greedy search.
    std::optional<CopyWitness> witness;
    std::vector<std::string> schedule;
};

namespace detail {

inline VertexSet greedy_clique_or_stable(const Graph &g, const VertexSet &w) {
    const Rational tiny(1, w.size() + 1);
    VertexSet st = peel_to_restricted(g, w, tiny, Side::Graph);
    VertexSet cl = peel_to_restricted(g, w, tiny, Side::Complement);
    return better_set(cl, st) ? cl : st;
}

inline EhResult eh_loop(ViralEngine &engine, const Graph &h, const Graph &j) {
    const Graph &g = engine.host();
    EhResult out;
    VertexSet w = VertexSet::full(g.size());
    Rational eps(1, 4);
    for (int step = 0; step < 256; ++step) {
        if (w.size() <= 1 || is_clique(g, w) || is_stable(g, w)) break;
        ViralResult r = engine.run(h, j, w, eps);
        if (auto *rs = std::get_if<RestrictedSet>(&r.outcome)) {
            out.schedule.push_back("eps=" + to_string(eps) + " |W|=" + std::to_string(w.size()) + " -> " + std::to_string(rs->set.size()) +
                                   " (" + to_string(rs->side) + ")");
            w = rs->set;
            eps /= 2;
            continue;
        }
        const auto &cw = std::get<CopyWitness>(r.outcome);
        out.witness = cw;
        w = greedy_clique_or_stable(g, w);
        out.schedule.push_back("eps=" + to_string(eps) + " witness with " + std::to_string(cw.count) + " copies; greedy set of " +
                               std::to_string(w.size()));
        break;
    }
    const bool clique = w.size() >= 2 && is_clique(g, w);
    out.set = CliqueOrStable{w, clique ? CliqueKind::Clique : CliqueKind::Stable, w.size() <= 1};
    require_certified(out.set, g);
    return out;
}

} // namespace detail

/// A clique or stable set of g, for a host without many copies of H or of the
/// complement of J (H, J in the class J).
inline EhResult eh_extract(const Graph &h, const Graph &j, const Graph &g, const ViralParams &params = {}) {
    if (!in_J(h)) throw DomainError("H is not in J");
    if (!in_J(j)) throw DomainError("J is not in J");
    const OrderedGraph ho = order_into_K(h).graph, jo = order_into_K(j).graph;
    detail::ViralEngine engine(g, params);
    return detail::eh_loop(engine, ho.graph(), jo.graph());
}

/// The ordered variant for H, J in K on an ordered host.
inline EhResult eh_extract_ordered(const OrderedGraph &h, const OrderedGraph &j, const OrderedGraph &g, const ViralParams &params = {}) {
    if (!in_K(h)) throw DomainError("H is not in K");
    if (!in_K(j)) throw DomainError("J is not in K");
    detail::ViralEngine engine(g.graph(), params);
    return detail::eh_loop(engine, h.graph(), j.graph());
}

} // namespace sparsify
