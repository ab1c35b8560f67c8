#include "oracles.hpp"

#include <sparsify/random.hpp>
#include <sparsify/text_format.hpp>
#include <sparsify/tournaments.hpp>

#include <gtest/gtest.h>

using namespace sparsify;
using namespace sparsify::named;

namespace {

/// Every tournament on n vertices, arcs u->v (u < v) chosen by the mask bits.
std::vector<Tournament> all_tournaments(int n) {
    std::vector<Tournament> out;
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        Tournament t = Tournament::transitive(n);
        int b = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++b)
                if ((mask >> b) & 1u) t.set_arc(v, u);
        out.push_back(std::move(t));
    }
    return out;
}

Tournament paley7() {
    Tournament t = Tournament::transitive(7);
    for (int i = 0; i < 7; ++i)
        for (int s : {1, 2, 4}) t.set_arc(i, (i + s) % 7);
    return t;
}

bool contains_copy(const Tournament &t, const Tournament &q) {
    const int n = t.size(), k = q.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        auto s = oracle::members(mask, n);
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < k && ok; ++j)
                    if (i != j && q.beats(i, j) != t.beats(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)])) ok = false;
            if (ok) return true;
        } while (std::next_permutation(s.begin(), s.end()));
    }
    return false;
}

} // namespace

TEST(Backedge, Examples) {
    EXPECT_EQ(backedge(Tournament::transitive(6)).backedge, OrderedGraph(Graph(6)));
    Tournament c3 = Tournament::transitive(3);
    c3.set_arc(2, 0);
    EXPECT_EQ(backedge(c3).backedge, OrderedGraph(Graph::from_edges(3, {{0, 2}})));
}

TEST(Backedge, InvalidNumbering) {
    EXPECT_THROW(backedge(Tournament::transitive(3), {0, 0, 1}), DomainError);
    EXPECT_THROW(backedge(Tournament::transitive(3), {0, 1}), DomainError);
    EXPECT_THROW(backedge(Tournament::transitive(3), {0, 1, 3}), DomainError);
}

TEST(Backedge, ReversedNumberingIsComplementOfReversal) {
    for (int n = 1; n <= 5; ++n)
        for (const Tournament &t : all_tournaments(n)) {
            std::vector<int> p = identity_numbering(n);
            do {
                std::vector<int> r(p.rbegin(), p.rend());
                EXPECT_EQ(backedge(t, r).backedge, complement(reverse_order(backedge(t, p).backedge)));
            } while (std::next_permutation(p.begin(), p.end()) && n <= 4);
        }
}

TEST(Backedge, RoundTripExhaustive) {
    Rng rng(1);
    for (int n = 1; n <= 6; ++n)
        for (const Tournament &t : all_tournaments(n)) {
            const auto p = random_permutation(n, rng);
            const BackedgePair b = backedge(t, p);
            EXPECT_EQ(from_backedge(b.backedge, p), t);
        }
}

TEST(Transitive, AgreesWithSourceRemoval) {
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        Tournament t = random_tournament(2 + i % 7, rng);
        VertexSet s(t.size());
        for (int v = 0; v < t.size(); ++v)
            if (rng() % 3) s.insert(v);
        EXPECT_EQ(is_transitive(t, s), oracle::transitive(t, s.to_vector()));
    }
}

TEST(ClassQ, Examples) {
    for (int n = 1; n <= 8; ++n) EXPECT_TRUE(in_Q(Tournament::transitive(n)));
    Tournament c3 = Tournament::transitive(3);
    c3.set_arc(2, 0);
    EXPECT_TRUE(in_Q(c3));
    const Tournament q = path_tournament();
    EXPECT_TRUE(in_Q(q));
    EXPECT_TRUE(is_prime(q));
    EXPECT_TRUE(oracle::tournament_prime(q));
}

TEST(ClassQ, Paley7ByNumberingSearch) {
    const Tournament p = paley7();
    const bool searched = in_Q_by_numbering_search(p).has_value();
    EXPECT_EQ(in_Q(p), searched);
    EXPECT_FALSE(searched);
}

TEST(ClassQ, PeelingAgreesWithNumberingSearch) {
    for (int n = 1; n <= 5; ++n)
        for (const Tournament &t : all_tournaments(n)) EXPECT_EQ(in_Q(t), in_Q_by_numbering_search(t).has_value()) << serialize(t);
    Rng rng(3);
    for (int i = 0; i < 80; ++i) {
        Tournament t = random_tournament(6 + i % 2, rng);
        EXPECT_EQ(in_Q(t), in_Q_by_numbering_search(t).has_value()) << serialize(t);
    }
}

TEST(ClassQ, WitnessNumberingGivesK) {
    Rng rng(4);
    int members = 0;
    for (int i = 0; i < 200; ++i) {
        Tournament t = random_tournament(3 + i % 9, rng);
        QMembership m = recognize_Q(t);
        if (!m.member) continue;
        ++members;
        EXPECT_TRUE(in_K(backedge(t, m.numbering).backedge));
    }
    EXPECT_GT(members, 20);
}

TEST(RandomHosts, SubstitutionTournamentsAvoidQ) {
    Rng rng(5);
    const Tournament q = path_tournament();
    for (int i = 0; i < 15; ++i) EXPECT_FALSE(contains_copy(random_substitution_tournament(9, rng), q));
    // and a plain random tournament usually does contain it
    int hits = 0;
    for (int i = 0; i < 10; ++i) hits += contains_copy(random_tournament(9, rng), q) ? 1 : 0;
    EXPECT_GT(hits, 0);
}

TEST(TransitiveExtract, TransitiveHostIsReturnedWhole) {
    TransitiveResult r = transitive_extract(path_tournament(), Tournament::transitive(40));
    EXPECT_EQ(r.set.size(), 40);
}

TEST(TransitiveExtract, QFreeHosts) {
    Rng rng(6);
    const Tournament q = path_tournament();
    for (int i = 0; i < 10; ++i) {
        Tournament t = random_substitution_tournament(60 + 20 * i, rng);
        TransitiveResult r = transitive_extract(q, t);
        EXPECT_TRUE(oracle::transitive(t, r.set.to_vector()));
        EXPECT_GE(r.set.size(), 2);
    }
}

TEST(TransitiveExtract, HostEqualToQ) {
    const Tournament q = path_tournament();
    TransitiveResult r = transitive_extract(q, q);
    EXPECT_TRUE(oracle::transitive(q, r.set.to_vector()));
    EXPECT_GE(r.set.size(), 1);
}

TEST(TransitiveExtract, RejectsPatternOutsideQ) { EXPECT_THROW(transitive_extract(paley7(), Tournament::transitive(5)), DomainError); }
