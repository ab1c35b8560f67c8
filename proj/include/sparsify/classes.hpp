#pragma once

// Recognition of the classes J, H (graphs), K, L (ordered graphs) by reverse
// construction, with replayable build sequences as membership witnesses.
//
// Each class is hereditary and closed under substitution, so peeling any
// vertex that a construction step could have added last, or collapsing any
// module, keeps membership unchanged. The greedy peel therefore decides
// membership; when it gets stuck, the remaining vertex set induces a prime
// subgraph with no peelable vertex, which is an obstruction.

#include "canonical.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sparsify {

enum class StepKind { Base, AddLeaf, AddCodominating, AddEndLeaf, Substitute };

/// One construction step. Labels are vertex ids of the graph being built.
///   Base:            push a one-vertex graph {vertex}
///   AddLeaf:         add `vertex` adjacent to `other` only (other = -1: no neighbour)
///   AddCodominating: add `vertex` adjacent to everything except `other`
///   AddEndLeaf:      add `vertex` at the front or back, adjacent to `other` only (or none)
///   Substitute:      pop inner, pop outer; replace `vertex` of outer by inner
///                    (both contain the label `vertex`)
struct BuildStep {
    StepKind kind = StepKind::Base;
    int vertex = 0;
    int other = -1;
    bool front = false;

    friend bool operator==(const BuildStep &, const BuildStep &) = default;
};

enum class ClassRules { J, H, K };

struct BuildSequence {
    int n = 0;
    ClassRules rules = ClassRules::J;
    std::vector<BuildStep> steps;
};

struct Membership {
    bool member = false;
    std::optional<BuildSequence> witness;
    /// When not a member: vertices inducing a prime subgraph that no step can peel.
    std::vector<int> obstruction;
};

inline std::string to_string(const BuildStep &s) {
    switch (s.kind) {
    case StepKind::Base: return "base " + std::to_string(s.vertex);
    case StepKind::AddLeaf:
        return "leaf " + std::to_string(s.vertex) + (s.other < 0 ? std::string(" isolated") : " -> " + std::to_string(s.other));
    case StepKind::AddCodominating: return "codominating " + std::to_string(s.vertex) + " avoids " + std::to_string(s.other);
    case StepKind::AddEndLeaf:
        return std::string("endleaf ") + (s.front ? "front " : "back ") + std::to_string(s.vertex) +
               (s.other < 0 ? std::string(" isolated") : " -> " + std::to_string(s.other));
    case StepKind::Substitute: return "substitute " + std::to_string(s.vertex);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Replay

namespace detail {

struct Part {
    std::vector<int> labels; // in linear order for ordered rules
    Graph g;

    int index_of(int label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return static_cast<int>(i);
        return -1;
    }
};

inline Part add_vertex(const Part &p, int label, bool front, const VertexSet &nbrs_local) {
    const int m = p.g.size();
    Part out;
    out.g = Graph(m + 1);
    const int shift = front ? 1 : 0;
    for (auto [u, v] : p.g.edges()) out.g.add_edge(u + shift, v + shift);
    const int nv = front ? 0 : m;
    nbrs_local.for_each([&](int u) { out.g.add_edge(nv, u + shift); });
    out.labels = p.labels;
    if (front)
        out.labels.insert(out.labels.begin(), label);
    else
        out.labels.push_back(label);
    return out;
}

[[noreturn]] inline void bad_step(std::size_t i, const std::string &why) {
    throw DomainError("build step " + std::to_string(i) + ": " + why);
}

} // namespace detail

/// Replays a build sequence, checking every step's precondition for its rule
/// set. Returns the graph on vertices 0..n-1; for the ordered rules the linear
/// order of the build must be the index order.
inline Graph replay(const BuildSequence &seq) {
    using detail::Part;
    std::vector<Part> stack;
    // a label may be live in several parts: the representative in an outer
    // part and again in each inner part substituted for it
    std::vector<int> live(static_cast<std::size_t>(seq.n), 0);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const BuildStep &s = seq.steps[i];
        auto fresh = [&](int v) {
            if (v < 0 || v >= seq.n) detail::bad_step(i, "label out of range");
            int &c = live[static_cast<std::size_t>(v)];
            if (c > 0 && s.kind != StepKind::Base && stack.back().index_of(v) >= 0)
                detail::bad_step(i, "label " + std::to_string(v) + " used twice");
            ++c;
        };
        switch (s.kind) {
        case StepKind::Base: {
            fresh(s.vertex);
            stack.push_back(Part{{s.vertex}, Graph(1)});
            break;
        }
        case StepKind::AddLeaf:
        case StepKind::AddCodominating:
        case StepKind::AddEndLeaf: {
            if (stack.empty()) detail::bad_step(i, "empty stack");
            Part &top = stack.back();
            const int m = top.g.size();
            const bool allowed = (s.kind == StepKind::AddLeaf && seq.rules != ClassRules::K) ||
                                 (s.kind == StepKind::AddCodominating && seq.rules == ClassRules::H) ||
                                 (s.kind == StepKind::AddEndLeaf && seq.rules == ClassRules::K);
            if (!allowed) detail::bad_step(i, "step kind not allowed for this class");
            int t = -1;
            if (s.other >= 0) {
                t = top.index_of(s.other);
                if (t < 0) detail::bad_step(i, "reference to a vertex not in the current graph");
            }
            VertexSet nb(m);
            if (s.kind == StepKind::AddCodominating) {
                if (t < 0) detail::bad_step(i, "codominating step needs an avoided vertex");
                if (top.g.degree(t) > 1) detail::bad_step(i, "avoided vertex has degree above one");
                nb = VertexSet::full(m);
                nb.erase(t);
            } else {
                if (t >= 0) nb.insert(t);
                if (seq.rules == ClassRules::H && (t < 0 || top.g.degree(t) < m - 1))
                    detail::bad_step(i, "leaf target must dominate the current graph");
            }
            fresh(s.vertex);
            top = detail::add_vertex(top, s.vertex, s.kind == StepKind::AddEndLeaf && s.front, nb);
            break;
        }
        case StepKind::Substitute: {
            if (stack.size() < 2) detail::bad_step(i, "substitution needs two graphs");
            Part inner = std::move(stack.back());
            stack.pop_back();
            Part outer = std::move(stack.back());
            stack.pop_back();
            const int ro = outer.index_of(s.vertex);
            if (ro < 0 || inner.index_of(s.vertex) < 0) detail::bad_step(i, "substituted vertex missing");
            Part out;
            out.g = substitute(outer.g, ro, inner.g);
            out.labels.assign(outer.labels.begin(), outer.labels.begin() + ro);
            out.labels.insert(out.labels.end(), inner.labels.begin(), inner.labels.end());
            out.labels.insert(out.labels.end(), outer.labels.begin() + ro + 1, outer.labels.end());
            --live[static_cast<std::size_t>(s.vertex)];
            stack.push_back(std::move(out));
            break;
        }
        }
    }
    if (seq.n == 0 && stack.empty()) return Graph(0);
    if (stack.size() != 1) throw DomainError("build sequence leaves " + std::to_string(stack.size()) + " graphs");
    const Part &p = stack.back();
    if (static_cast<int>(p.labels.size()) != seq.n) throw DomainError("build sequence does not cover every vertex");
    for (int c : live)
        if (c != 1) throw DomainError("build sequence does not use every label exactly once");
    if (seq.rules == ClassRules::K)
        for (int i = 0; i < seq.n; ++i)
            if (p.labels[static_cast<std::size_t>(i)] != i) throw DomainError("build order differs from the vertex order");
    Graph out(seq.n);
    for (auto [u, v] : p.g.edges()) out.add_edge(p.labels[static_cast<std::size_t>(u)], p.labels[static_cast<std::size_t>(v)]);
    return out;
}

// ---------------------------------------------------------------------------
// Reverse construction

namespace detail {

/// A peelable vertex as a construction step (local indices mapped to labels).
inline std::optional<BuildStep> peel_step(const Graph &h, const std::vector<int> &labels, ClassRules rules) {
    const int m = h.size();
    auto lab = [&](int i) { return labels[static_cast<std::size_t>(i)]; };
    if (rules == ClassRules::J) {
        for (int v = 0; v < m; ++v)
            if (h.degree(v) <= 1) return BuildStep{StepKind::AddLeaf, lab(v), h.degree(v) ? lab(h.neighbours(v).first()) : -1, false};
        return std::nullopt;
    }
    if (rules == ClassRules::K) {
        for (int v : {0, m - 1})
            if (h.degree(v) <= 1)
                return BuildStep{StepKind::AddEndLeaf, lab(v), h.degree(v) ? lab(h.neighbours(v).first()) : -1, v == 0 && m > 1};
        return std::nullopt;
    }
    // H: a leaf whose neighbour dominates the rest, or a vertex missing only
    // one vertex that has degree <= 1 in the rest
    for (int v = 0; v < m; ++v) {
        if (h.degree(v) == 1) {
            const int u = h.neighbours(v).first();
            if (h.degree(u) - 1 >= m - 2) return BuildStep{StepKind::AddLeaf, lab(v), lab(u), false};
        }
        if (h.degree(v) == m - 2) {
            VertexSet non = ~h.neighbours(v);
            non.erase(v);
            const int w = non.first();
            if (h.degree(w) <= 1) return BuildStep{StepKind::AddCodominating, lab(v), lab(w), false};
        }
    }
    return std::nullopt;
}

inline std::optional<VertexSet> module_for(const Graph &h, ClassRules rules) {
    std::optional<ModuleWitness> w = rules == ClassRules::K ? find_module(OrderedGraph(h)) : find_module(h);
    if (!w) return std::nullopt;
    return w->vertices;
}

inline bool reverse_build(const Graph &h, const std::vector<int> &labels, ClassRules rules, std::vector<BuildStep> &steps,
                          std::vector<int> &obstruction) {
    const int m = h.size();
    if (m == 1) {
        steps.push_back({StepKind::Base, labels[0], -1, false});
        return true;
    }
    if (auto st = peel_step(h, labels, rules)) {
        int local = -1;
        for (int i = 0; i < m; ++i)
            if (labels[static_cast<std::size_t>(i)] == st->vertex) local = i;
        std::vector<int> rest = labels;
        rest.erase(rest.begin() + local);
        if (!reverse_build(delete_vertex(h, local), rest, rules, steps, obstruction)) return false;
        steps.push_back(*st);
        return true;
    }
    if (auto mod = module_for(h, rules)) {
        const int r = mod->first();
        VertexSet outer = ~*mod;
        outer.insert(r);
        auto sub_labels = [&](const VertexSet &s) {
            std::vector<int> out;
            s.for_each([&](int i) { out.push_back(labels[static_cast<std::size_t>(i)]); });
            return out;
        };
        if (!reverse_build(induced(h, outer), sub_labels(outer), rules, steps, obstruction)) return false;
        if (!reverse_build(induced(h, *mod), sub_labels(*mod), rules, steps, obstruction)) return false;
        steps.push_back({StepKind::Substitute, labels[static_cast<std::size_t>(r)], -1, false});
        return true;
    }
    obstruction = labels;
    return false;
}

inline Membership recognize(const Graph &g, ClassRules rules) {
    Membership res;
    if (g.size() == 0) {
        res.member = true;
        res.witness = BuildSequence{0, rules, {}};
        return res;
    }
    std::vector<int> labels(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) labels[static_cast<std::size_t>(i)] = i;
    BuildSequence seq{g.size(), rules, {}};
    res.member = reverse_build(g, labels, rules, seq.steps, res.obstruction);
    if (res.member) res.witness = std::move(seq);
    return res;
}

} // namespace detail

inline Membership recognize_J(const Graph &g) { return detail::recognize(g, ClassRules::J); }
inline Membership recognize_H(const Graph &g) { return detail::recognize(g, ClassRules::H); }
inline Membership recognize_K(const OrderedGraph &g) { return detail::recognize(g.graph(), ClassRules::K); }

inline bool in_J(const Graph &g) { return recognize_J(g).member; }
inline bool in_H(const Graph &g) { return recognize_H(g).member; }
inline bool in_K(const OrderedGraph &g) { return recognize_K(g).member; }
inline bool in_L(const OrderedGraph &g) { return in_K(g) && in_K(complement(g)); }

// ---------------------------------------------------------------------------
// Direct characterizations over induced subgraphs (exponential; small n)

namespace detail {

template <class Pred>
bool every_prime_induced(const Graph &g, bool ordered, Pred &&ok) {
    const int n = g.size();
    if (n > 20) throw DomainError("characterization check is limited to 20 vertices");
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.push_back(v);
        Graph sub = permuted(g, s);
        const bool prime = ordered ? is_prime(OrderedGraph(sub)) : is_prime(sub);
        if (prime && !ok(sub)) return false;
    }
    return true;
}

} // namespace detail

inline bool in_J_by_characterization(const Graph &g) {
    return detail::every_prime_induced(g, false, [](const Graph &s) {
        for (int v = 0; v < s.size(); ++v)
            if (s.degree(v) <= 1) return true;
        return false;
    });
}

/// Every prime induced subgraph on at least 3 vertices has a vertex of degree
/// one and a vertex of degree |S|-2.
inline bool in_H_by_characterization(const Graph &g) {
    return detail::every_prime_induced(g, false, [](const Graph &s) {
        const int m = s.size();
        if (m < 3) return true;
        bool one = false, co = false;
        for (int v = 0; v < m; ++v) {
            one = one || s.degree(v) == 1;
            co = co || s.degree(v) == m - 2;
        }
        return one && co;
    });
}

inline bool in_K_by_characterization(const OrderedGraph &g) {
    return detail::every_prime_induced(g.graph(), true, [](const Graph &s) {
        const int m = s.size();
        return m == 0 || s.degree(0) <= 1 || s.degree(m - 1) <= 1;
    });
}

// ---------------------------------------------------------------------------
// Orders

struct OrderedWitness {
    OrderedGraph graph;
    /// order[i] is the vertex of the input placed at position i.
    std::vector<int> order;
};

/// A linear order of a member of J that puts it in K: replay its J build,
/// adding each leaf at alternating ends and keeping substituted blocks
/// contiguous.
inline OrderedWitness order_into_K(const Graph &f) {
    Membership m = recognize_J(f);
    if (!m.member) throw DomainError("graph is not in J");
    std::vector<std::vector<int>> stack;
    std::vector<int> adds; // per stack entry, number of leaves added so far
    for (const BuildStep &s : m.witness->steps) {
        switch (s.kind) {
        case StepKind::Base:
            stack.push_back({s.vertex});
            adds.push_back(0);
            break;
        case StepKind::AddLeaf: {
            auto &top = stack.back();
            if (adds.back()++ % 2 == 0)
                top.push_back(s.vertex);
            else
                top.insert(top.begin(), s.vertex);
            break;
        }
        case StepKind::Substitute: {
            std::vector<int> inner = std::move(stack.back());
            stack.pop_back();
            adds.pop_back();
            std::vector<int> &outer = stack.back();
            auto it = std::find(outer.begin(), outer.end(), s.vertex);
            it = outer.erase(it);
            outer.insert(it, inner.begin(), inner.end());
            break;
        }
        default: break;
        }
    }
    OrderedWitness w;
    w.order = stack.empty() ? std::vector<int>{} : stack.back();
    w.graph = OrderedGraph(permuted(f, w.order));
    return w;
}

/// A linear order of a member of H that puts it in L, by search over the
/// J-orders of f and its complement; nullopt if none is found.
inline std::optional<OrderedWitness> order_into_L(const Graph &f) {
    if (!in_H(f)) throw DomainError("graph is not in H");
    OrderedWitness w = order_into_K(f);
    if (in_L(w.graph)) return w;
    OrderedWitness wc = order_into_K(complement(f));
    OrderedGraph cand(permuted(f, wc.order));
    if (in_L(cand)) return OrderedWitness{cand, wc.order};
    if (f.size() <= 8) {
        std::vector<int> perm(static_cast<std::size_t>(f.size()));
        for (int i = 0; i < f.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
        do {
            OrderedGraph o(permuted(f, perm));
            if (in_L(o)) return OrderedWitness{o, perm};
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The four forward rules of L, used to generate members

enum class LRule { FirstAdjLast, LastAdjFirst, FirstNonadjLast, LastNonadjFirst };

/// Applies one L growth rule if its condition holds: e.g. FirstAdjLast needs
/// the first vertex a adjacent to exactly {last} \ {a}; the new last vertex is
/// then adjacent to everything except a. The Nonadj rules are the same in the
/// complement; the Last rules mirror the order.
inline std::optional<OrderedGraph> apply_L_rule(const OrderedGraph &h, LRule rule) {
    const bool mirror = rule == LRule::LastAdjFirst || rule == LRule::LastNonadjFirst;
    const bool comp = rule == LRule::FirstNonadjLast || rule == LRule::LastNonadjFirst;
    OrderedGraph w = h;
    if (mirror) w = reverse_order(w);
    if (comp) w = complement(w);
    const int m = w.size();
    if (m == 0) return std::nullopt;
    VertexSet want(m);
    if (m > 1) want.insert(m - 1);
    if (!(w.neighbours(0) == want)) return std::nullopt;
    Graph g(m + 1);
    for (auto [u, v] : w.graph().edges()) g.add_edge(u, v);
    for (int u = 1; u < m; ++u) g.add_edge(u, m);
    OrderedGraph out(std::move(g));
    if (comp) out = complement(out);
    if (mirror) out = reverse_order(out);
    return out;
}

// ---------------------------------------------------------------------------
// Split graphs

/// Exhaustive search for a partition into a clique and a stable set.
inline std::optional<VertexSet> split_partition(const Graph &g) {
    const int n = g.size();
    if (n > 24) throw DomainError("split check is limited to 24 vertices");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet clique(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) clique.insert(v);
        if (is_clique(g, clique) && is_stable(g, ~clique)) return clique;
    }
    return std::nullopt;
}

inline bool is_split(const Graph &g) { return split_partition(g).has_value(); }

// ---------------------------------------------------------------------------
// Self-test of the characterization H = J and co-J

struct CharReport {
    int graphs = 0;
    int members = 0;
    std::vector<Graph> exceptions;
};

/// Checks in_H(g) == in_J(g) && in_J(complement g) for every isomorphism class
/// on at most max_n vertices.
inline CharReport char_consistency(int max_n) {
    if (max_n > 8) throw DomainError("char_consistency supports n <= 8");
    CharReport r;
    for (int n = 0; n <= max_n; ++n)
        for (const Graph &g : all_graphs(n)) {
            ++r.graphs;
            const bool h = in_H(g);
            r.members += h ? 1 : 0;
            if (h != (in_J(g) && in_J(complement(g)))) r.exceptions.push_back(g);
        }
    return r;
}

} // namespace sparsify
