#pragma once

// Independent re-verification of extraction outcomes. Nothing here shares code
// with the producers beyond the graph type: degrees and cross counts are
// recomputed by plain loops, copies are recounted by a separate naive search.

#include "outcome.hpp"

#include <string>
#include <vector>

namespace sparsify {

struct Verdict {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
};

namespace verify_detail {

inline Verdict fail(std::string why) { return {false, std::move(why)}; }

inline bool edge(const Graph &g, int u, int v, Side side) { return side == Side::Graph ? g.adjacent(u, v) : !g.adjacent(u, v); }

inline int count_into(const Graph &g, int v, const std::vector<int> &set, Side side) {
    int c = 0;
    for (int w : set)
        if (w != v && edge(g, v, w, side)) ++c;
    return c;
}

/// Naive copy count: every injective map, checked pair by pair.
inline std::uint64_t naive_count(const Graph &h, const Graph &g, bool ordered, const std::vector<int> &scope, std::uint64_t stop_above) {
    const int k = h.size();
    std::uint64_t total = 0;
    std::vector<int> img;
    auto rec = [&](auto &self) -> bool {
        const int p = static_cast<int>(img.size());
        if (p == k) {
            ++total;
            return total <= stop_above;
        }
        for (int w : scope) {
            bool ok = true;
            for (int q = 0; q < p && ok; ++q) {
                const int z = img[static_cast<std::size_t>(q)];
                ok = z != w && (!ordered || z < w) && h.adjacent(p, q) == g.adjacent(w, z);
            }
            if (!ok) continue;
            img.push_back(w);
            const bool go = self(self);
            img.pop_back();
            if (!go) return false;
        }
        return true;
    };
    rec(rec);
    return total;
}

inline std::uint64_t floor_u64(const Rational &r) { return r < 0 ? 0 : to_u64_saturating(floor_of(r)); }

inline bool in_universe(const VertexSet &s, const Graph &g) { return s.universe() == g.size(); }

} // namespace verify_detail

inline Verdict verify(const RestrictedSet &r, const Graph &g) {
    using namespace verify_detail;
    if (!in_universe(r.set, g)) return fail("set universe does not match host");
    const auto s = r.set.to_vector();
    if (r.meets_target != (Rational(static_cast<long long>(s.size())) >= r.target)) return fail("target flag does not match the set size");
    const std::uint64_t bound = floor_u64(r.eps * static_cast<long long>(s.size()));
    for (int v : s)
        if (static_cast<std::uint64_t>(count_into(g, v, s, r.side)) > bound)
            return fail("vertex " + std::to_string(v) + " has degree above eps*|S| on the " + to_string(r.side) + " side");
    return {};
}

inline Verdict verify(const Blockade &b, const Graph &g) {
    using namespace verify_detail;
    const Side side = b.kind == BlockadeKind::Sparse ? Side::Graph : Side::Complement;
    VertexSet seen(g.size());
    std::vector<std::vector<int>> blocks;
    for (const auto &blk : b.blocks) {
        if (!in_universe(blk, g)) return fail("block universe does not match host");
        if (blk.intersects(seen)) return fail("blocks are not disjoint");
        seen |= blk;
        blocks.push_back(blk.to_vector());
    }
    if (BigInt(b.length()) < b.min_length) return fail("blockade shorter than required");
    if (BigInt(b.width()) < b.min_width) return fail("blockade narrower than required");
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            const std::uint64_t cap = floor_u64(b.x * static_cast<long long>(blocks[i].size()));
            for (int v : blocks[j])
                if (static_cast<std::uint64_t>(count_into(g, v, blocks[i], side)) > cap)
                    return fail("vertex " + std::to_string(v) + " of block " + std::to_string(j) + " exceeds the bound into block " +
                                std::to_string(i));
        }
    return {};
}

inline Verdict verify(const BlockadeFound &b, const Graph &g) { return verify(b.blockade, g); }

inline Verdict verify(const CopyWitness &w, const Graph &g) {
    using namespace verify_detail;
    if (!in_universe(w.scope, g)) return fail("scope universe does not match host");
    const std::uint64_t cap = floor_u64(w.threshold);
    const std::uint64_t c = naive_count(w.pattern, g, w.ordered, w.scope.to_vector(), cap);
    if (c <= cap) return fail("recount " + std::to_string(c) + " does not exceed the threshold");
    return {};
}

inline Verdict verify(const SparsePair &p, const Graph &g) {
    using namespace verify_detail;
    if (!in_universe(p.a, g) || !in_universe(p.b, g)) return fail("set universe does not match host");
    if (p.a.intersects(p.b)) return fail("A and B intersect");
    if (BigInt(p.a.size()) < p.min_a) return fail("A smaller than required");
    if (Rational(p.b.size()) < p.min_b) return fail("B smaller than required");
    const auto a = p.a.to_vector();
    const std::uint64_t cap = floor_u64(p.x * static_cast<long long>(a.size()));
    for (int v : p.b.to_vector())
        if (static_cast<std::uint64_t>(count_into(g, v, a, Side::Graph)) > cap) return fail("vertex " + std::to_string(v) + " of B has too many neighbours in A");
    return {};
}

inline Verdict verify(const CliqueOrStable &c, const Graph &g) {
    using namespace verify_detail;
    if (!in_universe(c.set, g)) return fail("set universe does not match host");
    const auto s = c.set.to_vector();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]) != (c.kind == CliqueKind::Clique)) return fail("set is not a " + std::string(to_string(c.kind)));
    return {};
}

inline Verdict verify(const RestrictedCandidate &r, const Graph &g) {
    using namespace verify_detail;
    if (!in_universe(r.set, g)) return fail("set universe does not match host");
    if (Rational(r.set.size()) < r.min_size) return fail("set smaller than required");
    const std::uint64_t cap = floor_u64(r.bound);
    const std::uint64_t c = naive_count(r.pattern, g, r.ordered, r.set.to_vector(), cap);
    if (c > cap) return fail("pattern count exceeds the bound");
    return {};
}

inline Verdict verify(const ExtractionOutcome &o, const Graph &g) {
    return std::visit([&](const auto &x) { return verify(x, g); }, o);
}

/// Throws CertificateError unless the outcome re-verifies.
inline void require_certified(const ExtractionOutcome &o, const Graph &g) {
    Verdict v = verify(o, g);
    if (!v) throw CertificateError(outcome_name(o) + " failed verification: " + v.reason);
}

} // namespace sparsify
