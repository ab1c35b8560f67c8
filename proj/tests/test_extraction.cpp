#include "oracles.hpp"

#include <sparsify/sparsify.hpp>

#include <gtest/gtest.h>

using namespace sparsify;
using namespace sparsify::named;

namespace {

/// Largest eps-restricted subset by trying every subset (n <= 12).
int max_restricted(const Graph &g, const Rational &eps) {
    const int n = g.size();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto s = oracle::members(mask, n);
        const int k = static_cast<int>(s.size());
        if (k <= best) continue;
        int dg = 0, dc = 0;
        for (int u : s) {
            int a = 0;
            for (int v : s) a += (u != v && g.adjacent(u, v)) ? 1 : 0;
            dg = std::max(dg, a);
            dc = std::max(dc, k - 1 - a);
        }
        if (Rational(std::min(dg, dc)) <= eps * k) best = k;
    }
    return best;
}

/// Vertex v in clique v mod k.
Graph interleaved_cliques(int n, int k) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + k; v < n; v += k) g.add_edge(u, v);
    return g;
}

/// Balanced cotree on index ranges, join at even depth and union at odd.
void cotree(Graph &g, int lo, int hi, int depth) {
    if (hi - lo < 2) return;
    const int mid = (lo + hi) / 2;
    if (depth % 2 == 0)
        for (int u = lo; u < mid; ++u)
            for (int v = mid; v < hi; ++v) g.add_edge(u, v);
    cotree(g, lo, mid, depth + 1);
    cotree(g, mid, hi, depth + 1);
}

/// Witness counts are lower bounds once past the threshold, so only the
/// verifier sees them.
bool sides_swapped(const ExtractionOutcome &a, int ma, const Graph &g, const ExtractionOutcome &b, int mb, const Graph &gc) {
    if (a.index() != b.index()) return false;
    if (auto *x = std::get_if<RestrictedSet>(&a)) {
        const auto &y = std::get<RestrictedSet>(b);
        if (!(x->set == y.set)) return false;
        if (x->ambiguous || y.ambiguous) return x->ambiguous && y.ambiguous;
        return x->side != y.side;
    }
    if (auto *x = std::get_if<CopyWitness>(&a)) {
        const auto &y = std::get<CopyWitness>(b);
        return ma == 1 - mb && x->pattern == complement(y.pattern) && x->scope == y.scope && verify(*x, g).ok && verify(y, gc).ok;
    }
    return false;
}

} // namespace

TEST(RestrictedSearch, CompleteAndEdgeless) {
    for (int n : {5, 12, 40}) {
        auto c = restricted_subset_search(Graph::complete(n), Rational(1, 10), n);
        ASSERT_TRUE(c);
        EXPECT_EQ(c->set.size(), n);
        EXPECT_EQ(c->side, Side::Complement);
        auto e = restricted_subset_search(Graph(n), Rational(1, 10), n);
        ASSERT_TRUE(e);
        EXPECT_EQ(e->set.size(), n);
        EXPECT_TRUE(verify(*e, Graph(n)).ok);
    }
}

TEST(RestrictedSearch, C5ThirdIsThree) {
    EXPECT_EQ(max_restricted(cycle(5), Rational(1, 3)), 3);
    auto r = restricted_subset_search(cycle(5), Rational(1, 3), 1);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->set.size(), 3);
    EXPECT_TRUE(verify(*r, cycle(5)).ok);
    EXPECT_FALSE(restricted_subset_search(cycle(5), Rational(1, 3), 4));
}

TEST(RestrictedSearch, ExactBelowTwentyAgreesWithOracle) {
    Rng rng(1);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(6 + i % 6, 0.5, rng);
        const Rational eps(1 + i % 4, 9);
        auto r = restricted_subset_search(g, eps, 1);
        ASSERT_TRUE(r);
        EXPECT_EQ(r->set.size(), max_restricted(g, eps));
        EXPECT_TRUE(verify(*r, g).ok);
    }
}

TEST(DegreePrune, Examples) {
    RestrictedSet e = degree_prune(Graph(10), VertexSet::full(10), Rational(1, 4));
    EXPECT_EQ(e.set.size(), 10);
    Graph g = star(40); // centre 0 sees everything
    RestrictedSet s = degree_prune(g, VertexSet::full(41), Rational(1, 4), Side::Graph);
    VertexSet want = VertexSet::full(41);
    want.erase(0);
    EXPECT_EQ(s.set, want);
    EXPECT_THROW(degree_prune(Graph::complete(8), VertexSet::full(8), Rational(1, 4), Side::Graph), DomainError);
}

TEST(DegreePrune, RandomSparseSets) {
    Rng rng(2);
    for (int i = 0; i < 40; ++i) {
        const int n = 50 + i * 5;
        Graph g = random_graph(n, 0.02, rng);
        if (i % 2) g = complement(g);
        RestrictedSet r = degree_prune(g, VertexSet::full(n), Rational(1, 2));
        EXPECT_GE(2 * r.set.size(), n);
        EXPECT_TRUE(verify(r, g).ok) << verify(r, g).reason;
    }
}

TEST(RestrictedToBlockade, SparseAndDense) {
    const Rational x(1, 16);
    Blockade s = restricted_to_blockade(Graph(64), VertexSet::full(64), x);
    EXPECT_EQ(s.kind, BlockadeKind::Sparse);
    EXPECT_TRUE(verify(s, Graph(64)).ok);
    Blockade d = restricted_to_blockade(Graph::complete(64), VertexSet::full(64), x);
    EXPECT_EQ(d.kind, BlockadeKind::Dense);
    EXPECT_TRUE(verify(d, Graph::complete(64)).ok);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(400, 0.5, rng);
        auto r = restricted_subset_search(g, x * x, 1);
        ASSERT_TRUE(r);
        Blockade b = restricted_to_blockade(g, r->set, x);
        EXPECT_TRUE(verify(b, g).ok) << verify(b, g).reason;
    }
}

TEST(SparsePairLemma, EdgelessHostGivesPair) {
    Graph g(64);
    auto out = sparse_pair(OrderedGraph(Graph::complete(2)), 1, g, VertexSet::full(64), Rational(1, 8), Rational(1, 4), 3);
    ASSERT_TRUE(std::holds_alternative<SparsePair>(out)) << outcome_name(out);
    const auto &p = std::get<SparsePair>(out);
    EXPECT_FALSE(p.clamped);
    EXPECT_GE(BigInt(p.a.size()), p.min_a);
    EXPECT_GE(Rational(p.b.size()), p.min_b);
    EXPECT_FALSE(p.a.intersects(p.b));
    EXPECT_TRUE(verify(out, g).ok);
}

TEST(SparsePairLemma, InterleavedCliquesGiveWitness) {
    Graph g = interleaved_cliques(1024, 4);
    auto out = sparse_pair(OrderedGraph(Graph::complete(2)), 1, g, VertexSet::full(1024), Rational(1, 64), Rational(1, 4), 3);
    ASSERT_TRUE(std::holds_alternative<CopyWitness>(out)) << outcome_name(out);
    const auto &w = std::get<CopyWitness>(out);
    EXPECT_GT(Rational(static_cast<long long>(w.count)), w.threshold);
    // 4 cliques of 256, so the ordered edges number 4 * C(256, 2)
    EXPECT_EQ(count_copies_in(w.pattern, g, true).count, 4u * 256 * 255 / 2);
    EXPECT_TRUE(verify(out, g).ok);
}

TEST(SparsePairLemma, CopyFreeStartGivesCandidate) {
    Graph g(96);
    auto out = sparse_pair(monotone_path(3), 2, g, VertexSet::full(96), Rational(1, 12), Rational(1, 6), 2);
    ASSERT_TRUE(std::holds_alternative<RestrictedCandidate>(out)) << outcome_name(out);
    const auto &c = std::get<RestrictedCandidate>(out);
    EXPECT_EQ(c.count, 0u);
    EXPECT_EQ(c.set, VertexSet::range(96, 0, 16));
    EXPECT_TRUE(verify(out, g).ok);
}

TEST(SparsePairLemma, Preconditions) {
    Graph g(64);
    const auto all = VertexSet::full(64);
    const OrderedGraph k2(Graph::complete(2));
    EXPECT_THROW(sparse_pair(k2, 1, g, all, Rational(1, 8), Rational(1, 3), 3), DomainError);
    EXPECT_THROW(sparse_pair(k2, 1, g, all, Rational(1, 2), Rational(1, 4), 3), DomainError);
    EXPECT_THROW(sparse_pair(k2, 1, g, all, Rational(1, 8), Rational(1, 4), 1), DomainError);
    EXPECT_THROW(sparse_pair(monotone_path(4), 1, g, all, Rational(1, 8), Rational(1, 8), 3), DomainError);
    EXPECT_THROW(sparse_pair(k2, 1, Graph::complete(64), all, Rational(1, 8), Rational(1, 4), 3), DomainError);
}

TEST(GrowBlockadeLemma, EdgelessHost) {
    Graph g(1024);
    const Rational y(1, 16);
    auto out = grow_blockade(OrderedGraph(Graph::complete(2)), 1, g, VertexSet::full(1024), Rational(1, 32), y, 3);
    ASSERT_TRUE(std::holds_alternative<BlockadeFound>(out)) << outcome_name(out);
    const auto &b = std::get<BlockadeFound>(out).blockade;
    EXPECT_EQ(b.length(), 16);
    EXPECT_EQ(b.kind, BlockadeKind::Sparse);
    // y^4 * 1024 < 1, so the width floor is clamped
    EXPECT_TRUE(b.clamped);
    EXPECT_TRUE(verify(out, g).ok);
}

TEST(GrowBlockadeLemma, FirstRoundOutcomePassesThrough) {
    // with a = 2 and |H| = 2 the count bound equals |S|, so the first round
    // stops on S
    Graph g(2048);
    const Rational x(1, 64), y(1, 16);
    const OrderedGraph k2(Graph::complete(2));
    auto first = sparse_pair(k2, 1, g, VertexSet::full(2048), x, y, 2);
    auto out = grow_blockade(k2, 1, g, VertexSet::full(2048), x, y, 2);
    ASSERT_TRUE(std::holds_alternative<RestrictedCandidate>(first));
    ASSERT_TRUE(std::holds_alternative<RestrictedCandidate>(out));
    EXPECT_EQ(std::get<RestrictedCandidate>(out).set, std::get<RestrictedCandidate>(first).set);
    EXPECT_EQ(std::get<RestrictedCandidate>(out).min_size, y * y * 2048);
    EXPECT_TRUE(verify(out, g).ok);
}

TEST(GrowBlockadeLemma, RandomRestrictedHosts) {
    Rng rng(4);
    for (int i = 0; i < 30; ++i) {
        const int n = 1024 + 128 * (i % 8);
        Graph g = random_graph(n, 1.0 / 400, rng);
        const Rational y(1, 16);
        if (Rational(g.max_degree()) > y * y * n) continue;
        const int a = 2 + i % 3;
        auto out = grow_blockade(OrderedGraph(Graph::complete(2)), 1, g, VertexSet::full(n), Rational(1, 64), y, a);
        EXPECT_TRUE(verify(out, g).ok) << verify(out, g).reason;
    }
}

TEST(Transfer, EdgelessAcceptedAtOnce) {
    Graph g(50);
    SparseSet s = blockade_to_sparse_set(g, VertexSet::full(50), Rational(1, 4), 1, clique_split_provider(g, 1, Rational(1, 100)));
    EXPECT_EQ(s.set.size(), 50);
    EXPECT_FALSE(s.fallback);
    EXPECT_TRUE(verify(s, g).ok);
}

TEST(Transfer, CographLayoutReachesClaimExit) {
    Graph g(256);
    cotree(g, 0, 256, 0);
    BlockadeProvider halves = [&](const VertexSet &f) -> std::optional<Blockade> {
        auto m = f.to_vector();
        const std::size_t h = m.size() / 2;
        Blockade b;
        b.kind = g.adjacent(m.front(), m[h]) ? BlockadeKind::Dense : BlockadeKind::Sparse;
        b.x = 0;
        b.min_length = 2;
        b.min_width = static_cast<long long>(h);
        b.blocks = {VertexSet(256, std::vector<int>(m.begin(), m.begin() + static_cast<long>(h))),
                    VertexSet(256, std::vector<int>(m.begin() + static_cast<long>(h), m.end()))};
        return b;
    };
    SparseSet s = blockade_to_sparse_set(g, VertexSet::full(256), Rational(1, 4), 1, halves);
    EXPECT_FALSE(s.fallback);
    EXPECT_TRUE(verify(s, g).ok);
    bool claim = false;
    for (const auto &line : s.trace) claim = claim || line.rfind("layout with 64 parts", 0) == 0;
    EXPECT_TRUE(claim);
}

TEST(Transfer, RandomHostsWithSplitProvider) {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_substitution_graph(150 + 10 * i, rng);
        const Rational eps(1, 4);
        SparseSet s = blockade_to_sparse_set(g, VertexSet::full(g.size()), eps, 4, clique_split_provider(g, 4, pow(eps, 48)), 7);
        EXPECT_TRUE(verify(s, g).ok) << verify(s, g).reason;
    }
}

TEST(Transfer, BadProviderIsReported) {
    Graph g = random_substitution_graph(60, *std::make_unique<Rng>(6));
    BlockadeProvider bad = [&](const VertexSet &f) -> std::optional<Blockade> {
        Blockade b;
        b.blocks = {f};
        return b;
    };
    if (sparsify::detail::sparse_enough(g, VertexSet::full(60), Rational(1, 4), Side::Graph) ||
        sparsify::detail::sparse_enough(g, VertexSet::full(60), Rational(1, 4), Side::Complement))
        GTEST_SKIP();
    EXPECT_THROW(blockade_to_sparse_set(g, VertexSet::full(60), Rational(1, 4), 1, bad), ProviderError);
}

TEST(Viral, EdgelessHost) {
    Graph g(30);
    ViralResult r = viral_extract(monotone_path(4), monotone_path(4), OrderedGraph(g), Rational(1, 4));
    ASSERT_TRUE(std::holds_alternative<RestrictedSet>(r.outcome));
    EXPECT_EQ(std::get<RestrictedSet>(r.outcome).set.size(), 30);
    ViralResult u = unordered_extract(bull(), bull(), g, Rational(1, 4));
    ASSERT_TRUE(std::holds_alternative<RestrictedSet>(u.outcome));
    EXPECT_EQ(std::get<RestrictedSet>(u.outcome).set.size(), 30);
}

TEST(Viral, DenseRandomHostGivesRecountedWitness) {
    Rng rng(0);
    Graph g = random_graph(200, 0.5, rng);
    ViralResult r = viral_extract(monotone_path(4), monotone_path(4), OrderedGraph(g), Rational(49, 100));
    ASSERT_TRUE(std::holds_alternative<CopyWitness>(r.outcome)) << outcome_name(r.outcome);
    const auto &w = std::get<CopyWitness>(r.outcome);
    const CountResult c = count_copies_in(w.pattern, g, true, CountOptions{std::nullopt, w.scope, 1});
    EXPECT_GT(Rational(static_cast<long long>(c.count)), w.threshold);
    EXPECT_TRUE(r.member == 0 || r.member == 1);
}

TEST(Viral, CographHostsWithP4Family) {
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_substitution_graph(80 + 20 * i, rng);
        ViralResult r = viral_extract(monotone_path(4), monotone_path(4), OrderedGraph(g), Rational(1, 5));
        EXPECT_TRUE(verify(r.outcome, g).ok);
    }
}

TEST(Viral, RejectsPatternsOutsideK) {
    EXPECT_THROW(viral_extract(OrderedGraph(cycle(5)), monotone_path(3), OrderedGraph(Graph(5)), Rational(1, 4)), DomainError);
    EXPECT_THROW(viral_extract(monotone_path(3), monotone_path(3), OrderedGraph(Graph(5)), Rational(1, 2)), DomainError);
    EXPECT_THROW(unordered_extract(cycle(5), bull(), Graph(5), Rational(1, 4)), DomainError);
}

TEST(Unordered, BullFreeHosts) {
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_substitution_graph(100 + 15 * i, rng);
        ViralResult r = unordered_extract(bull(), bull(), g, Rational(1, 4));
        EXPECT_TRUE(verify(r.outcome, g).ok);
    }
}

TEST(Unordered, ForestPairOnSparseHosts) {
    Rng rng(9);
    for (int i = 0; i < 15; ++i) {
        Graph g = random_graph(120 + 10 * i, 0.03, rng);
        ViralResult r = unordered_extract(star(3), path(4), g, Rational(1, 5));
        EXPECT_TRUE(verify(r.outcome, g).ok);
        if (auto *w = std::get_if<CopyWitness>(&r.outcome)) {
            EXPECT_FALSE(w->ordered);
        }
    }
}

TEST(Unordered, ComplementDuality) {
    Rng rng(10);
    for (int i = 0; i < 12; ++i) {
        Graph g = i % 2 ? random_substitution_graph(90 + 10 * i, rng) : random_graph(60 + 10 * i, 0.5, rng);
        const Graph h = i % 3 ? bull() : path(4), j = i % 3 == 1 ? path(4) : bull();
        const Rational eps = i % 2 ? Rational(1, 4) : Rational(49, 100);
        ViralResult a = unordered_extract(h, j, g, eps);
        const Graph gc = complement(g);
        ViralResult b = unordered_extract(j, h, gc, eps);
        EXPECT_TRUE(sides_swapped(a.outcome, a.member, g, b.outcome, b.member, gc)) << i << " " << outcome_name(a.outcome) << " " << outcome_name(b.outcome);
    }
}

TEST(Unordered, SameSeedSameTrace) {
    Rng rng(11);
    Graph g = random_substitution_graph(300, rng);
    ViralParams p;
    p.seed = 42;
    ViralResult a = unordered_extract(bull(), bull(), g, Rational(1, 4), p);
    ViralResult b = unordered_extract(bull(), bull(), g, Rational(1, 4), p);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.outcome.index(), b.outcome.index());
}

TEST(Eh, CompleteAndEdgeless) {
    EhResult c = eh_extract(bull(), bull(), Graph::complete(25));
    EXPECT_EQ(c.set.kind, CliqueKind::Clique);
    EXPECT_EQ(c.set.set.size(), 25);
    EhResult s = eh_extract(bull(), bull(), Graph(25));
    EXPECT_EQ(s.set.kind, CliqueKind::Stable);
    EXPECT_EQ(s.set.set.size(), 25);
}

TEST(Eh, BullFreeHostsGiveVerifiedSets) {
    Rng rng(12);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_substitution_graph(200 + 30 * i, rng);
        EhResult r = eh_extract(bull(), bull(), g);
        const auto v = r.set.set.to_vector();
        if (r.set.kind == CliqueKind::Clique)
            EXPECT_TRUE(is_clique(g, r.set.set));
        else
            EXPECT_TRUE(is_stable(g, r.set.set));
        EXPECT_GE(v.size(), 2u);
        EXPECT_FALSE(r.schedule.empty());
    }
}

TEST(Certificates, TamperedOutcomesAreRejected) {
    Graph g = star(10);
    RestrictedSet bad{VertexSet::full(11), Side::Graph, Rational(1, 10)};
    EXPECT_FALSE(verify(bad, g).ok);
    CliqueOrStable cs{VertexSet(11, {0, 1, 2}), CliqueKind::Clique, false};
    EXPECT_FALSE(verify(cs, g).ok);
    CopyWitness w{Graph::complete(2), false, VertexSet::full(11), 20, Rational(19)};
    EXPECT_TRUE(verify(w, g).ok);
    w.threshold = 20;
    w.count = 25;
    EXPECT_FALSE(verify(w, g).ok);
    SparsePair p{VertexSet(11, {0}), VertexSet(11, {1, 2}), Rational(1, 2), 1, Rational(2), false};
    EXPECT_FALSE(verify(p, g).ok);
    RestrictedCandidate rc{VertexSet(11, {0, 1, 2}), Graph::complete(2), true, 2, Rational(1), Rational(3)};
    EXPECT_FALSE(verify(rc, g).ok);
    EXPECT_THROW(require_certified(ExtractionOutcome{bad}, g), CertificateError);
}
