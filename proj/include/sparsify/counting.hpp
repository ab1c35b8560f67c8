#pragma once

// Induced-copy counting. A copy of H in G is an injective map that preserves
// adjacency and non-adjacency (and the vertex order for ordered graphs), so
// ind_H(G) counts maps rather than vertex subsets.

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace sparsify {

struct CountResult {
    std::uint64_t count = 0;
    /// Counting stopped because count exceeded the supplied threshold; count is
    /// then a lower bound.
    bool exceeded = false;
    /// The true count does not fit in 64 bits.
    bool saturated = false;
};

struct CountOptions {
    std::optional<std::uint64_t> threshold; // stop once count > threshold
    std::optional<VertexSet> restrict_to;   // count copies inside this set only
    int threads = 1;
};

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, bool &saturated) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        saturated = true;
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a + b;
}

class Counter {
public:
    Counter(const Graph &h, const Graph &g, bool ordered, const CountOptions &opt)
        : h_(h), g_(g), ordered_(ordered), threshold_(opt.threshold), n_(g.size()), k_(h.size()) {
        domain_ = opt.restrict_to ? *opt.restrict_to : VertexSet::full(n_);
        if (domain_.universe() != n_) throw InputError("restriction set does not match host");
        non_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            VertexSet s = ~g.neighbours(v);
            s.erase(v);
            non_.push_back(std::move(s));
        }
        // matching order: highest pattern degree first, then by adjacency to
        // already placed vertices, lowest index on ties
        std::vector<bool> placed(static_cast<std::size_t>(k_), false);
        for (int step = 0; step < k_; ++step) {
            int best = -1, best_conn = -1, best_deg = -1;
            for (int p = 0; p < k_; ++p) {
                if (placed[static_cast<std::size_t>(p)]) continue;
                int conn = 0;
                for (int q : order_) conn += h.adjacent(p, q) ? 1 : 0;
                int deg = h.degree(p);
                if (step == 0 ? deg > best_deg : (conn > best_conn || (conn == best_conn && deg > best_deg))) {
                    best = p;
                    best_conn = conn;
                    best_deg = deg;
                }
            }
            placed[static_cast<std::size_t>(best)] = true;
            order_.push_back(best);
        }
        img_.assign(static_cast<std::size_t>(k_), -1);
        used_ = VertexSet(n_);
    }

    CountResult run() {
        if (k_ == 0) return {1, false, false};
        if (k_ > n_) return {};
        descend(0);
        return {count_, exceeded_, saturated_};
    }

    /// Counts copies whose first matched pattern vertex maps to `first`.
    CountResult run_from(int first) {
        if (k_ == 0 || k_ > n_) return {};
        VertexSet c = candidates(0);
        if (!c.contains(first)) return {};
        place(0, first);
        if (k_ == 1)
            count_ = 1;
        else
            descend(1);
        unplace(0, first);
        return {count_, exceeded_, saturated_};
    }

    VertexSet candidates(int depth) const {
        const int p = order_[static_cast<std::size_t>(depth)];
        VertexSet c = domain_;
        c -= used_;
        int lo = 0, hi = n_ - 1;
        for (int i = 0; i < depth; ++i) {
            const int q = order_[static_cast<std::size_t>(i)];
            const int w = img_[static_cast<std::size_t>(q)];
            c &= h_.adjacent(p, q) ? g_.neighbours(w) : non_[static_cast<std::size_t>(w)];
            if (ordered_) {
                if (q < p) lo = std::max(lo, w + 1);
                else hi = std::min(hi, w - 1);
            }
        }
        if (ordered_) {
            if (lo > hi) return VertexSet(n_);
            c &= VertexSet::range(n_, lo, hi + 1);
        }
        return c;
    }

private:
    void place(int depth, int w) {
        img_[static_cast<std::size_t>(order_[static_cast<std::size_t>(depth)])] = w;
        used_.insert(w);
    }
    void unplace(int depth, int w) {
        img_[static_cast<std::size_t>(order_[static_cast<std::size_t>(depth)])] = -1;
        used_.erase(w);
    }

    bool stop() const { return exceeded_ || saturated_; }

    void descend(int depth) {
        VertexSet c = candidates(depth);
        if (depth == k_ - 1) {
            count_ = sat_add(count_, static_cast<std::uint64_t>(c.size()), saturated_);
            if (threshold_ && count_ > *threshold_) exceeded_ = true;
            return;
        }
        for (int w = c.first(); w >= 0 && !stop(); w = c.next(w + 1)) {
            place(depth, w);
            descend(depth + 1);
            unplace(depth, w);
        }
    }

    const Graph &h_;
    const Graph &g_;
    bool ordered_;
    std::optional<std::uint64_t> threshold_;
    int n_, k_;
    VertexSet domain_;
    std::vector<VertexSet> non_;
    std::vector<int> order_;
    std::vector<int> img_;
    VertexSet used_;
    std::uint64_t count_ = 0;
    bool exceeded_ = false, saturated_ = false;
};

inline CountResult count_impl(const Graph &h, const Graph &g, bool ordered, const CountOptions &opt) {
    if (opt.threads <= 1 || h.size() < 2 || g.size() < 64) return Counter(h, g, ordered, opt).run();
    // Split over images of the first matched vertex; each worker takes a
    // contiguous slice of host vertices and partial counts are summed.
    const int n = g.size();
    const int workers = std::min(opt.threads, n);
    std::vector<std::future<CountResult>> jobs;
    for (int t = 0; t < workers; ++t) {
        const int lo = n * t / workers, hi = n * (t + 1) / workers;
        jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
            CountResult acc;
            for (int v = lo; v < hi; ++v) {
                Counter c(h, g, ordered, CountOptions{opt.threshold, opt.restrict_to, 1});
                CountResult r = c.run_from(v);
                acc.count = sat_add(acc.count, r.count, acc.saturated);
                acc.saturated = acc.saturated || r.saturated;
                if (opt.threshold && acc.count > *opt.threshold) {
                    acc.exceeded = true;
                    break;
                }
            }
            return acc;
        }));
    }
    CountResult total;
    for (auto &j : jobs) {
        CountResult r = j.get();
        total.count = sat_add(total.count, r.count, total.saturated);
        total.saturated = total.saturated || r.saturated;
    }
    if (opt.threshold && total.count > *opt.threshold) total.exceeded = true;
    return total;
}

} // namespace detail

/// Counts copies of h in g, treating both as ordered by index when `ordered`.
inline CountResult count_copies_in(const Graph &h, const Graph &g, bool ordered, const CountOptions &opt = {}) {
    return detail::count_impl(h, g, ordered, opt);
}

inline CountResult count_copies(const Graph &h, const Graph &g, const CountOptions &opt = {}) {
    return detail::count_impl(h, g, false, opt);
}
inline CountResult count_copies(const OrderedGraph &h, const OrderedGraph &g, const CountOptions &opt = {}) {
    return detail::count_impl(h.graph(), g.graph(), true, opt);
}

/// Exact count as a big integer; throws if it does not fit in 64 bits.
template <class G>
BigInt ind(const G &h, const G &g, const CountOptions &opt = {}) {
    CountResult r = count_copies(h, g, opt);
    if (r.saturated) throw DomainError("copy count overflows 64 bits");
    return BigInt(r.count);
}

/// Lists every copy (for small instances and oracles).
template <class G>
std::vector<Copy> list_copies(const G &h, const G &g) {
    const bool ordered = std::is_same_v<G, OrderedGraph>;
    const Graph &hp = [&]() -> const Graph & {
        if constexpr (std::is_same_v<G, OrderedGraph>) return h.graph(); else return h;
    }();
    const Graph &gp = [&]() -> const Graph & {
        if constexpr (std::is_same_v<G, OrderedGraph>) return g.graph(); else return g;
    }();
    std::vector<Copy> out;
    const int k = hp.size(), n = gp.size();
    Copy cur(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto &self, int p) -> void {
        if (p == k) {
            out.push_back(cur);
            return;
        }
        for (int w = ordered && p > 0 ? cur[static_cast<std::size_t>(p) - 1] + 1 : 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int q = 0; q < p && ok; ++q) ok = hp.adjacent(p, q) == gp.adjacent(w, cur[static_cast<std::size_t>(q)]);
            if (!ok) continue;
            used[static_cast<std::size_t>(w)] = true;
            cur[static_cast<std::size_t>(p)] = w;
            self(self, p + 1);
            used[static_cast<std::size_t>(w)] = false;
        }
    };
    rec(rec, 0);
    return out;
}

/// Calls f(copy) for every copy of h in g whose image lies in `domain`, in
/// lexicographic order of the image sequence; stops when f returns false.
template <class F>
void for_each_copy(const Graph &h, const Graph &g, bool ordered, const VertexSet &domain, F &&f) {
    const int k = h.size(), n = g.size();
    if (domain.universe() != n) throw InputError("restriction set does not match host");
    Copy cur(static_cast<std::size_t>(k), -1);
    VertexSet used(n);
    bool go = true;
    auto rec = [&](auto &self, int p) -> void {
        if (!go) return;
        if (p == k) {
            go = f(static_cast<const Copy &>(cur));
            return;
        }
        VertexSet c = domain - used;
        if (ordered && p > 0) c -= VertexSet::range(n, 0, cur[static_cast<std::size_t>(p) - 1] + 1);
        for (int q = 0; q < p; ++q) {
            const int w = cur[static_cast<std::size_t>(q)];
            if (h.adjacent(p, q))
                c &= g.neighbours(w);
            else
                c -= g.neighbours(w);
        }
        for (int w = c.first(); w >= 0 && go; w = c.next(w + 1)) {
            cur[static_cast<std::size_t>(p)] = w;
            used.insert(w);
            self(self, p + 1);
            used.erase(w);
        }
        cur[static_cast<std::size_t>(p)] = -1;
    };
    rec(rec, 0);
}

/// Checks that `c` is a copy of h in g.
inline bool is_copy(const Graph &h, const Graph &g, const Copy &c, bool ordered) {
    if (static_cast<int>(c.size()) != h.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= g.size()) return false;
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            if (c[i] == c[j]) return false;
            if (h.adjacent(static_cast<int>(i), static_cast<int>(j)) != g.adjacent(c[i], c[j])) return false;
            if (ordered && c[i] > c[j]) return false;
        }
    }
    return true;
}

struct ExtensionResult {
    std::uint64_t count = 0;
    VertexSet vertices;
};

/// Extensions of a copy of h_prime minus `ext_vertex` to a copy of h_prime,
/// with the image of ext_vertex inside `restrict_to`. j_copy lists the images
/// of the other pattern vertices in index order.
inline ExtensionResult count_extensions(const Copy &j_copy, const Graph &h_prime, int ext_vertex, const Graph &g,
                                        const VertexSet &restrict_to) {
    const int k = h_prime.size();
    if (ext_vertex < 0 || ext_vertex >= k) throw DomainError("extension vertex out of range");
    if (static_cast<int>(j_copy.size()) != k - 1) throw DomainError("copy has the wrong length");
    if (!is_copy(delete_vertex(h_prime, ext_vertex), g, j_copy, true)) throw DomainError("not a copy of the reduced pattern");
    const int n = g.size();
    auto image = [&](int p) { return j_copy[static_cast<std::size_t>(p < ext_vertex ? p : p - 1)]; };
    int lo = 0, hi = n - 1;
    if (ext_vertex > 0) lo = image(ext_vertex - 1) + 1;
    if (ext_vertex < k - 1) hi = image(ext_vertex + 1) - 1;
    VertexSet c = lo <= hi ? VertexSet::range(n, lo, hi + 1) : VertexSet(n);
    c &= restrict_to;
    for (int p = 0; p < k; ++p) {
        if (p == ext_vertex) continue;
        const int w = image(p);
        if (h_prime.adjacent(p, ext_vertex))
            c &= g.neighbours(w);
        else {
            c -= g.neighbours(w);
            c.erase(w);
        }
    }
    return {static_cast<std::uint64_t>(c.size()), c};
}

inline ExtensionResult count_extensions(const Copy &j_copy, const OrderedGraph &h_prime, int ext_vertex, const OrderedGraph &g,
                                        const VertexSet &restrict_to) {
    return count_extensions(j_copy, h_prime.graph(), ext_vertex, g.graph(), restrict_to);
}

// ---------------------------------------------------------------------------
// The mu functional

struct MuReport {
    std::string pattern;
    BigInt count;
    Rational x;
    Rational mu;
    Rational family_mu;
};

template <class G>
MuReport mu(const G &h, const Rational &x, const G &g, std::string name = "H") {
    if (x <= 0) throw DomainError("x must be positive");
    if (g.size() < 1) throw DomainError("host must be non-empty");
    MuReport r;
    r.pattern = std::move(name);
    r.count = ind(h, g);
    r.x = x;
    r.mu = Rational(r.count) / pow(x * g.size(), static_cast<unsigned long long>(h.size()));
    r.family_mu = r.mu;
    return r;
}

/// mu of the member attaining the maximum; family_mu is that maximum.
template <class G>
MuReport mu_family(const std::vector<G> &family, const Rational &x, const G &g) {
    if (family.empty()) throw DomainError("empty family");
    MuReport best;
    bool have = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        MuReport r = mu(family[i], x, g, "F" + std::to_string(i));
        if (!have || r.mu > best.mu) {
            best = r;
            have = true;
        }
    }
    best.family_mu = best.mu;
    return best;
}

} // namespace sparsify
