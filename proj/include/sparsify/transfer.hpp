#pragma once

// From blockades to a sparse set. A layout is a cograph J on disjoint parts of
// the scope; J says which pairs of parts are meant to be complete. The loop
// refines the largest part with a blockade until either J has many vertices
// (then a clique or stable set of J gives a sparse set) or a blockade is long
// enough to sample from directly.

#include "certificates.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "outcome.hpp"
#include "rational.hpp"
#include "restricted.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sparsify {

/// The blockade provider failed or returned something invalid for F.
class ProviderError : public DomainError {
public:
    ProviderError(const VertexSet &f, const std::string &why)
        : DomainError("blockade provider failed on a set of " + std::to_string(f.size()) + " vertices: " + why), set_(f) {}

    const VertexSet &set() const noexcept { return set_; }

private:
    VertexSet set_;
};

using BlockadeProvider = std::function<std::optional<Blockade>(const VertexSet &)>;

/// S whose `side` has at most eps*C(|S|,2) edges.
struct SparseSet {
    VertexSet set;
    Side side = Side::Graph;
    Rational eps;
    /// Produced by greedy peeling after the layout route did not apply.
    bool fallback = false;
    std::vector<std::string> trace;
};

inline Verdict verify(const SparseSet &s, const Graph &g) {
    if (s.set.universe() != g.size()) return {false, "set universe does not match host"};
    const long long n = s.set.size();
    std::int64_t e = 0;
    const auto m = s.set.to_vector();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.adjacent(m[i], m[j]) == (s.side == Side::Graph)) ++e;
    if (Rational(e) > s.eps * Rational(n * (n - 1) / 2)) return {false, "too many edges on the " + std::string(to_string(s.side)) + " side"};
    return {};
}

namespace detail {

inline Rational pairs(long long n) { return Rational(n * (n - 1) / 2); }

inline bool sparse_enough(const Graph &g, const VertexSet &s, const Rational &eps, Side side) {
    return Rational(side_edges(g, s, side)) <= eps * pairs(s.size());
}

/// Greedy peeling on one side until edges <= eps*C(|S|,2).
inline VertexSet peel_to_sparse(const Graph &g, VertexSet s, const Rational &eps, Side side) {
    std::vector<int> deg(static_cast<std::size_t>(g.size()), 0);
    std::int64_t twice = 0;
    s.for_each([&](int v) {
        deg[static_cast<std::size_t>(v)] = side_degree(g, v, s, side);
        twice += deg[static_cast<std::size_t>(v)];
    });
    long long n = s.size();
    while (n > 1 && Rational(twice / 2) > eps * pairs(n)) {
        int worst = -1;
        s.for_each([&](int v) {
            if (worst < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(worst)]) worst = v;
        });
        s.erase(worst);
        --n;
        twice -= 2 * deg[static_cast<std::size_t>(worst)];
        s.for_each([&](int w) {
            if (g.adjacent(w, worst) == (side == Side::Graph)) --deg[static_cast<std::size_t>(w)];
        });
    }
    return s;
}

inline SparseSet greedy_sparse_set(const Graph &g, const VertexSet &scope, const Rational &eps, std::vector<std::string> trace) {
    VertexSet a = peel_to_sparse(g, scope, eps, Side::Graph);
    VertexSet b = peel_to_sparse(g, scope, eps, Side::Complement);
    const bool take_b = better_set(b, a);
    trace.push_back("greedy peeling");
    return SparseSet{take_b ? b : a, take_b ? Side::Complement : Side::Graph, eps, true, std::move(trace)};
}

/// Largest clique of a cograph inside s (stable set when use_complement).
inline VertexSet cograph_max_clique(const Graph &j, const VertexSet &s, bool use_complement) {
    if (s.size() <= 1) return s;
    auto comps = components_within(j, s, use_complement);
    if (comps.size() > 1) {
        VertexSet best(j.size());
        bool have = false;
        for (const auto &c : comps) {
            VertexSet r = cograph_max_clique(j, c, use_complement);
            if (!have || better_set(r, best)) best = r, have = true;
        }
        return best;
    }
    auto co = components_within(j, s, !use_complement);
    if (co.size() == 1) throw DomainError("layout graph is not a cograph");
    VertexSet out(j.size());
    for (const auto &c : co) out |= cograph_max_clique(j, c, use_complement);
    return out;
}

struct Layout {
    Graph j;
    std::vector<VertexSet> parts;
};

/// Pairs in different parts (or touching a vertex outside every part) and,
/// among them, pairs between parts that disagree with J.
inline std::pair<Rational, Rational> decided_and_wrong(const Graph &g, const Layout &lay, long long n) {
    Rational inside = 0;
    for (const auto &p : lay.parts) inside += pairs(p.size());
    std::int64_t wrong = 0;
    for (std::size_t a = 0; a < lay.parts.size(); ++a)
        for (std::size_t b = a + 1; b < lay.parts.size(); ++b) {
            std::int64_t e = 0;
            lay.parts[a].for_each([&](int v) { e += g.degree_in(v, lay.parts[b]); });
            const std::int64_t all = static_cast<std::int64_t>(lay.parts[a].size()) * lay.parts[b].size();
            wrong += lay.j.adjacent(static_cast<int>(a), static_cast<int>(b)) ? all - e : e;
        }
    return {pairs(n) - inside, Rational(wrong)};
}

inline std::string check_provided(const Graph &g, const VertexSet &f, const Blockade &b, const Rational &x, int d) {
    const int k = b.length();
    if (k < 2) return "length below 2";
    if (Rational(k) > 1 / x) return "length above 1/x";
    for (const auto &blk : b.blocks)
        if (!blk.is_subset_of(f)) return "block outside the requested set";
    if (b.x > x) return "blockade parameter above x";
    if (Rational(b.width()) < Rational(f.size()) / pow(Rational(k), static_cast<unsigned long long>(d))) return "width below |F|/k^d";
    Verdict v = verify(b, g);
    if (!v) return v.reason;
    return {};
}

} // namespace detail

/// Finds a subset of `scope` with at most eps*C(|S|,2) edges on one side,
/// calling `provider` for blockades of length k and width |F|/k^d in the
/// current largest part F. Always returns a verified set; `fallback` reports
/// whether greedy peeling had to take over.
inline SparseSet blockade_to_sparse_set(const Graph &g, const VertexSet &scope, const Rational &eps, int d, const BlockadeProvider &provider,
                                        std::uint64_t seed = 0) {
    if (eps <= 0 || eps >= 1) throw DomainError("eps must lie in (0, 1)");
    if (d < 1) throw DomainError("d must be positive");
    if (scope.universe() != g.size()) throw InputError("scope universe does not match host");
    const long long n = scope.size();
    std::vector<std::string> trace;
    if (n <= 1) return SparseSet{scope, Side::Graph, eps, false, {"trivial scope"}};
    {
        const bool okg = detail::sparse_enough(g, scope, eps, Side::Graph), okc = detail::sparse_enough(g, scope, eps, Side::Complement);
        if (okg || okc) {
            const bool use_c = okc && (!okg || side_edges(g, scope, Side::Complement) < side_edges(g, scope, Side::Graph));
            return SparseSet{scope, use_c ? Side::Complement : Side::Graph, eps, false, {"scope already sparse"}};
        }
    }
    const Rational x = pow(eps, static_cast<unsigned long long>(12 * d));
    const Rational min_part = pow(eps, static_cast<unsigned long long>(6 * d)) * n;
    const Rational many = 4 / (eps * eps);

    detail::Layout lay{Graph(1), {scope}};

    auto claim_exit = [&]() -> SparseSet {
        const VertexSet all = VertexSet::full(lay.j.size());
        VertexSet cl = detail::cograph_max_clique(lay.j, all, false);
        VertexSet st = detail::cograph_max_clique(lay.j, all, true);
        const bool use_clique = detail::better_set(cl, st);
        const VertexSet &pick = use_clique ? cl : st;
        const int each = std::max(1, static_cast<int>(ceil_of(min_part)));
        VertexSet s(g.size());
        pick.for_each([&](int i) { s |= lay.parts[static_cast<std::size_t>(i)].first_k(each); });
        const Side side = use_clique ? Side::Complement : Side::Graph;
        trace.push_back("layout with " + std::to_string(lay.j.size()) + " parts, " + (use_clique ? "clique" : "stable set") + " of " +
                        std::to_string(pick.size()) + " parts");
        if (detail::sparse_enough(g, s, eps, side)) return SparseSet{s, side, eps, false, trace};
        return detail::greedy_sparse_set(g, scope, eps, trace);
    };

    for (int round = 0; round <= n; ++round) {
        if (Rational(lay.j.size()) >= many) return claim_exit();
        int big = 0;
        for (std::size_t i = 1; i < lay.parts.size(); ++i)
            if (lay.parts[i].size() > lay.parts[static_cast<std::size_t>(big)].size()) big = static_cast<int>(i);
        const VertexSet f = lay.parts[static_cast<std::size_t>(big)];
        if (f.size() < 2) return claim_exit();

        std::optional<Blockade> got = provider(f);
        if (!got) throw ProviderError(f, "no blockade returned");
        if (std::string why = detail::check_provided(g, f, *got, x, d); !why.empty()) throw ProviderError(f, why);
        const int k = got->length();
        const Side bside = got->kind == BlockadeKind::Sparse ? Side::Graph : Side::Complement;

        if (Rational(k) > 2 / eps) {
            // sample w vertices from each of the first ceil(2/eps) blocks
            const int use = static_cast<int>(ceil_of(2 / eps));
            const int w = static_cast<int>(ceil_of(Rational(f.size()) / pow(Rational(k), static_cast<unsigned long long>(d))));
            std::mt19937_64 rng(seed);
            for (int attempt = 0; attempt < 64; ++attempt) {
                VertexSet s(g.size());
                for (int i = 0; i < use; ++i) {
                    auto m = got->blocks[static_cast<std::size_t>(i)].to_vector();
                    std::vector<int> pick;
                    std::sample(m.begin(), m.end(), std::back_inserter(pick), w, rng);
                    for (int v : pick) s.insert(v);
                }
                if (detail::sparse_enough(g, s, eps, bside)) {
                    trace.push_back("sampled " + std::to_string(w) + " from each of " + std::to_string(use) + " blocks (attempt " +
                                    std::to_string(attempt + 1) + ")");
                    return SparseSet{s, bside, eps, false, trace};
                }
            }
            trace.push_back("sampling failed after 64 attempts");
            return detail::greedy_sparse_set(g, scope, eps, trace);
        }

        // refine the largest part into the k blocks
        detail::Layout next;
        next.j = substitute(lay.j, big, bside == Side::Graph ? Graph(k) : Graph::complete(k));
        for (int i = 0; i < big; ++i) next.parts.push_back(lay.parts[static_cast<std::size_t>(i)]);
        for (const auto &blk : got->blocks) next.parts.push_back(blk);
        for (std::size_t i = static_cast<std::size_t>(big) + 1; i < lay.parts.size(); ++i) next.parts.push_back(lay.parts[i]);

        std::string broken;
        for (const auto &p : next.parts)
            if (Rational(p.size()) < min_part) broken = "part size";
        long double lhs = 0;
        for (const auto &p : next.parts) lhs += std::pow(static_cast<long double>(p.size()), 1.0L / d);
        const long double rhs = std::pow(static_cast<long double>(n), 1.0L / d);
        if (broken.empty() && lhs < rhs * (1 - 1e-12L)) broken = "power sum";
        if (broken.empty()) {
            auto [decided, wrong] = detail::decided_and_wrong(g, next, n);
            if (wrong > x * decided) broken = "wrong pairs";
        }
        if (!broken.empty()) {
            trace.push_back("refinement breaks the layout (" + broken + ")");
            return detail::greedy_sparse_set(g, scope, eps, trace);
        }
        trace.push_back("refined a part of " + std::to_string(f.size()) + " into " + std::to_string(k) + " " + to_string(got->kind) + " blocks");
        lay = std::move(next);
    }
    return detail::greedy_sparse_set(g, scope, eps, trace);
}

/// A provider that splits a greedy clique or stable set T of F into the
/// smallest number k >= 2 of equal blocks with floor(|T|/k) >= |F|/k^d.
inline BlockadeProvider clique_split_provider(const Graph &g, int d, Rational x) {
    return [&g, d, x](const VertexSet &f) -> std::optional<Blockade> {
        const Rational tiny(1, f.size() + 1);
        VertexSet st = detail::peel_to_restricted(g, f, tiny, Side::Graph);
        VertexSet cl = detail::peel_to_restricted(g, f, tiny, Side::Complement);
        const bool use_clique = detail::better_set(cl, st);
        const auto t = (use_clique ? cl : st).to_vector();
        const int ts = static_cast<int>(t.size());
        for (int k = 2; k <= ts && Rational(k) <= 1 / x; ++k) {
            const int w = ts / k;
            if (Rational(w) < Rational(f.size()) / pow(Rational(k), static_cast<unsigned long long>(d))) continue;
            Blockade b;
            b.kind = use_clique ? BlockadeKind::Dense : BlockadeKind::Sparse;
            b.x = x;
            b.min_length = k;
            b.min_width = w;
            for (int i = 0; i < k; ++i) {
                VertexSet blk(g.size());
                for (int j = 0; j < w; ++j) blk.insert(t[static_cast<std::size_t>(i * w + j)]);
                b.blocks.push_back(std::move(blk));
            }
            return b;
        }
        return std::nullopt;
    };
}

} // namespace sparsify
