// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"

#include <sparsify/sparsify.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace sparsify;
using namespace sparsify::named;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void result(int id, bool ok, const std::string &detail) {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
    if (!ok) ++failures;
}

bool contains_iso(const std::vector<Graph> &list, const Graph &g) {
    return std::any_of(list.begin(), list.end(), [&](const Graph &x) { return oracle::isomorphic(x, g); });
}

void catalog() {
    const auto t0 = Clock::now();
    std::vector<std::vector<Graph>> by_n(8);
    for (int n = 3; n <= 7; ++n) by_n[static_cast<std::size_t>(n)] = enumerate_prime_in_H(n);
    const double secs = seconds_since(t0);
    const auto fig1 = fig1_fixtures();
    const bool ok = by_n[3].empty() && by_n[4].size() == 1 && oracle::isomorphic(by_n[4][0], path(4)) && by_n[5].size() == 1 &&
                    oracle::isomorphic(by_n[5][0], bull()) && by_n[6].size() == 2 && contains_iso(by_n[6], fig1[0]) &&
                    contains_iso(by_n[6], fig1[1]) && !by_n[7].empty() && contains_iso(by_n[7], fig1[2]) && secs < 300;
    std::ostringstream d;
    d << "prime members of H by n=3..7: ";
    for (int n = 3; n <= 7; ++n) d << by_n[static_cast<std::size_t>(n)].size() << (n < 7 ? "," : "");
    d << " (" << std::fixed << std::setprecision(2) << secs << "s)";
    result(1, ok, d.str());
}

void char_equivalence() {
    const auto t0 = Clock::now();
    std::size_t exceptions = 0, graphs = 0, at_six = 0;
    for (int n = 0; n <= 6; ++n)
        for (const Graph &g : all_graphs(n)) {
            ++graphs;
            if (n == 6) ++at_six;
            if (in_H(g) != (in_J(g) && in_J(complement(g)))) ++exceptions;
        }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << graphs << " classes on <=6 vertices (" << at_six << " on 6), " << exceptions << " exceptions (" << std::fixed << std::setprecision(2)
      << secs << "s)";
    result(2, exceptions == 0 && at_six == 156 && secs < 60, d.str());
}

void split_property() {
    std::size_t members = 0, exceptions = 0;
    for (int n = 3; n <= 8; ++n)
        for (const Graph &g : enumerate_prime_in_H(n, EnumStrategy::AllGraphs)) {
            ++members;
            auto p = split_partition(g);
            if (!p || !is_clique(g, *p) || !is_stable(g, ~*p) || !oracle::split(g)) ++exceptions;
        }
    result(3, exceptions == 0 && members > 0, std::to_string(members) + " prime members on 3..8 vertices, " + std::to_string(exceptions) + " exceptions");
}

void figures() {
    const NumberedGraph f2 = fig2_family(6);
    const OrderedGraph f2o(permuted(f2.graph, f2.order));
    const auto fixture_blocks = parse_all(read_file(std::string(SPARSIFY_FIXTURES) + "/fig2.txt"));
    const bool fixture_ok = fixture_blocks.size() == 2 && std::get<Graph>(fixture_blocks[0]) == f2.graph && std::get<OrderedGraph>(fixture_blocks[1]) == f2o;
    const bool fig2 = in_H(f2.graph) && in_L(f2o) && is_prime(f2o) && fixture_ok;
    std::vector<int> in_l;
    int prime4 = 0;
    const auto f4 = fig4_fixtures();
    for (std::size_t i = 0; i < f4.size(); ++i) {
        prime4 += is_prime(f4[i]) ? 1 : 0;
        if (in_L(f4[i])) in_l.push_back(static_cast<int>(i) + 1);
    }
    int fig3_out = 0;
    for (const Graph &g : fig3_fixtures()) fig3_out += in_H(g) ? 0 : 1;
    const bool ok = fig2 && prime4 == 7 && in_l == std::vector<int>{1, 5, 7} && fig3_out == 4;
    std::string pos;
    for (int p : in_l) pos += (pos.empty() ? "" : ",") + std::to_string(p);
    result(4, ok,
           std::string("13-vertex graph in H, order in L and prime: ") + (fig2 ? "yes" : "no") + "; 4-vertex ordered: " + std::to_string(prime4) +
               "/7 prime, in L at " + pos + "; 6-vertex open graphs outside H: " + std::to_string(fig3_out) + "/4");
}

void counting_oracle() {
    Rng rng(20240501);
    std::size_t checks = 0, mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + i % 8;
        Graph g = random_graph(n, 0.5, rng);
        for (int k = 1; k <= 4; ++k)
            for (const Graph &h : all_graphs(k)) {
                checks += 2;
                if (count_copies(h, g).count != oracle::count(h, g, false)) ++mismatches;
                if (count_copies(OrderedGraph(h), OrderedGraph(g)).count != oracle::count(h, g, true)) ++mismatches;
            }
    }
    result(5, mismatches == 0, std::to_string(checks) + " counts against subset x automorphism enumeration, " + std::to_string(mismatches) + " mismatches");
}

Graph interleaved_cliques(int n, int k) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + k; v < n; v += k) g.add_edge(u, v);
    return g;
}

void trichotomy() {
    Rng rng(777);
    struct Pattern {
        OrderedGraph h;
        int v;
    };
    const std::vector<Pattern> leafy{{OrderedGraph(Graph::complete(2)), 1},
                                     {OrderedGraph(Graph::complete(2)), 0},
                                     {monotone_path(3), 2},
                                     {monotone_path(3), 0},
                                     {OrderedGraph(Graph::from_edges(3, {{0, 1}, {0, 2}})), 2},
                                     {OrderedGraph(Graph::from_edges(3, {{0, 2}, {1, 2}})), 0}};
    std::map<std::string, int> variants;
    int done = 0, skipped = 0, failed = 0, wrong_variant = 0;
    while (done < 1000) {
        const bool grow = done % 2 == 1;
        const int a = 2 + static_cast<int>(rng() % 3);
        Pattern p = grow ? leafy[rng() % 2] : leafy[rng() % leafy.size()];
        const int hs = p.h.size();
        Rational y = grow ? Rational(1, 16 + static_cast<long long>(rng() % 3) * 8) : Rational(1, 2 * hs + static_cast<long long>(rng() % 4));
        Rational x = y / (1 + static_cast<long long>(rng() % 4));
        const int n = grow ? 1024 + 256 * static_cast<int>(rng() % 5) : 48 + 16 * static_cast<int>(rng() % 25);
        const Rational cap = grow ? Rational(y * y * n) : Rational(y * n);
        Graph g;
        switch (rng() % 3) {
        case 0: g = Graph(n); break;
        case 1: g = random_graph(n, cap.convert_to<double>() / (3.0 * n), rng); break;
        default: {
            const long long per = std::max<long long>(2, static_cast<long long>(floor_of(cap)));
            g = interleaved_cliques(n, std::max(1, static_cast<int>((n + per - 1) / per)));
            break;
        }
        }
        VertexSet scope = VertexSet::full(n);
        if (rng() % 4 == 0)
            for (int u = 0; u < n; ++u)
                if (rng() % 5 == 0) scope.erase(u);
        ExtractionOutcome out;
        try {
            out = grow ? grow_blockade(p.h, p.v, g, scope, x, y, a) : sparse_pair(p.h, p.v, g, scope, x, y, a);
        } catch (const DomainError &) {
            ++skipped;
            continue;
        }
        ++done;
        const std::string name = outcome_name(out);
        ++variants[(grow ? "grow:" : "pair:") + name];
        const bool allowed = std::holds_alternative<CopyWitness>(out) || std::holds_alternative<RestrictedCandidate>(out) ||
                             (grow ? std::holds_alternative<BlockadeFound>(out) : std::holds_alternative<SparsePair>(out));
        if (!allowed) ++wrong_variant;
        if (!verify(out, g).ok) ++failed;
    }
    std::string mix;
    for (const auto &[k, c] : variants) mix += " " + k + "=" + std::to_string(c);
    result(6, failed == 0 && wrong_variant == 0,
           "1000 instances (" + std::to_string(skipped) + " draws skipped on preconditions), " + std::to_string(failed) +
               " certificate failures, " + std::to_string(wrong_variant) + " foreign variants;" + mix);
}

void end_to_end() {
    Rng rng(31337);
    struct Row {
        int instances = 0, min_size = 1 << 30, max_size = 0, witness = 0;
        double size_sum = 0, log_sum = 0;
    };
    std::map<int, Row> rows;
    int failed = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 200 + 3 * i;
        Graph g = random_substitution_graph(n, rng);
        ViralParams params;
        params.seed = static_cast<std::uint64_t>(i);
        EhResult r = eh_extract(bull(), bull(), g, params);
        const bool ok = r.set.kind == CliqueKind::Clique ? is_clique(g, r.set.set) : is_stable(g, r.set.set);
        if (!ok || !verify(r.set, g).ok) ++failed;
        Row &row = rows[n / 100 * 100];
        ++row.instances;
        row.min_size = std::min(row.min_size, r.set.set.size());
        row.max_size = std::max(row.max_size, r.set.set.size());
        row.size_sum += r.set.set.size();
        row.log_sum += std::log2(static_cast<double>(n));
        row.witness += r.witness ? 1 : 0;
    }
    result(7, failed == 0, "100 bull-free hosts, n=200..497, " + std::to_string(failed) + " unverified sets; no exponent threshold asserted");
    std::printf("  %-9s %5s %8s %6s %6s %6s %9s %8s\n", "n", "runs", "log2 n", "min", "mean", "max", "mean/lgn", "witness");
    for (const auto &[lo, row] : rows) {
        const double mean = row.size_sum / row.instances, lg = row.log_sum / row.instances;
        std::printf("  %3d-%-5d %5d %8.2f %6d %6.1f %6d %9.2f %8d\n", lo, lo + 99, row.instances, lg, row.min_size, mean, row.max_size, mean / lg,
                    row.witness);
    }
}

/// Samples 5-subsets and checks none is isomorphic to q.
bool sampled_q_free(const Tournament &t, const Tournament &q, Rng &rng, int samples) {
    const int n = t.size();
    for (int s = 0; s < samples; ++s) {
        std::vector<int> pick;
        while (pick.size() < 5) {
            const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
        }
        std::sort(pick.begin(), pick.end());
        do {
            bool same = true;
            for (int i = 0; i < 5 && same; ++i)
                for (int j = 0; j < 5 && same; ++j)
                    if (i != j && q.beats(i, j) != t.beats(pick[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(j)])) same = false;
            if (same) return false;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return true;
}

void tournaments() {
    Rng rng(4242);
    const Tournament q = path_tournament();
    int failed = 0, not_free = 0, min_size = 1 << 30, max_size = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 60 + 5 * i;
        Tournament t = random_substitution_tournament(n, rng);
        if (!sampled_q_free(t, q, rng, 2000)) ++not_free;
        TransitiveResult r = transitive_extract(q, t);
        if (!oracle::transitive(t, r.set.to_vector())) ++failed;
        min_size = std::min(min_size, r.set.size());
        max_size = std::max(max_size, r.set.size());
    }
    long long round_trips = 0, round_fail = 0;
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Tournament t = Tournament::transitive(n);
            int b = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++b)
                    if ((mask >> b) & 1u) t.set_arc(v, u);
            std::vector<int> p = identity_numbering(n);
            do {
                ++round_trips;
                if (!(from_backedge(backedge(t, p).backedge, p) == t)) ++round_fail;
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
    result(8, failed == 0 && not_free == 0 && round_fail == 0,
           "50 tournaments n=60..305 free of the 5-vertex path tournament (sampled check), transitive sets " + std::to_string(min_size) + ".." +
               std::to_string(max_size) + ", " + std::to_string(failed) + " unverified; backedge round trip " + std::to_string(round_trips) +
               " (tournament, numbering) pairs on <=6 vertices, " + std::to_string(round_fail) + " failures");
}

/// Witness counts stop once past the threshold and are only lower bounds, so
/// they are compared through the verifier rather than for equality.
bool sides_swapped(const ViralResult &a, const Graph &g, const ViralResult &b, const Graph &gc) {
    if (a.outcome.index() != b.outcome.index()) return false;
    if (auto *x = std::get_if<RestrictedSet>(&a.outcome)) {
        const auto &y = std::get<RestrictedSet>(b.outcome);
        if (!(x->set == y.set)) return false;
        if (x->ambiguous || y.ambiguous) return x->ambiguous && y.ambiguous;
        return x->side != y.side;
    }
    const auto &x = std::get<CopyWitness>(a.outcome), &y = std::get<CopyWitness>(b.outcome);
    return a.member == 1 - b.member && x.pattern == complement(y.pattern) && x.scope == y.scope && verify(x, g).ok && verify(y, gc).ok;
}

/// Runs the fixed duality suite; returns the concatenated reports.
std::string duality_suite(std::uint64_t seed, int &swapped, int &total) {
    Rng rng(seed);
    std::string all;
    swapped = total = 0;
    const std::vector<std::pair<Graph, Graph>> pairs{{bull(), bull()}, {path(4), bull()}, {bull(), path(4)}, {path(4), path(4)}};
    for (int i = 0; i < 50; ++i) {
        const int n = 60 + 4 * i;
        Graph g = i % 2 ? random_substitution_graph(n, rng) : random_graph(n, 0.5, rng);
        const auto &[h, j] = pairs[static_cast<std::size_t>(i) % pairs.size()];
        const Rational eps = i % 3 == 0 ? Rational(49, 100) : Rational(1, 4);
        ViralParams params;
        params.seed = seed + static_cast<std::uint64_t>(i);
        ViralResult a = unordered_extract(h, j, g, eps, params);
        const Graph gc = complement(g);
        ViralResult b = unordered_extract(j, h, gc, eps, params);
        ++total;
        swapped += sides_swapped(a, g, b, gc) ? 1 : 0;
        all += "instance: " + std::to_string(i) + "\n" + describe(a.outcome).str() + "member: " + std::to_string(a.member) + "\n";
        for (const auto &line : a.trace) all += "trace: " + line + "\n";
        all += describe(b.outcome).str() + "member: " + std::to_string(b.member) + "\n";
    }
    return all;
}

void duality() {
    int swapped = 0, total = 0, swapped2 = 0, total2 = 0;
    const std::string first = duality_suite(9001, swapped, total);
    const std::string second = duality_suite(9001, swapped2, total2);
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(oracle::fnv1a(first)));
    result(9, swapped == 50 && total == 50 && first == second,
           std::to_string(swapped) + "/" + std::to_string(total) + " instances with swapped kinds; report " + std::to_string(first.size()) +
               " bytes, fnv1a " + hash + ", rerun " + (first == second ? "identical" : "DIFFERENT"));
}

} // namespace

int main() {
    const std::vector<std::function<void()>> criteria{catalog, char_equivalence, split_property, figures, counting_oracle,
                                                      trichotomy, end_to_end, tournaments, duality};
    const auto t0 = Clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception &e) {
            result(static_cast<int>(i) + 1, false, std::string("exception: ") + e.what());
        }
    }
    std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " passed in " << std::fixed
              << std::setprecision(1) << seconds_since(t0) << "s" << std::endl;
    return failures == 0 ? 0 : 1;
}
