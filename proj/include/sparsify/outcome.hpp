#pragma once

// Extraction outcomes. Every variant carries the data its defining inequality
// needs, so certificates.hpp can re-check it from scratch.

#include "graph.hpp"
#include "rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sparsify {

/// Which graph a degree or edge bound refers to: g itself or its complement.
enum class Side { Graph, Complement };

inline Side flip(Side s) { return s == Side::Graph ? Side::Complement : Side::Graph; }
inline const char *to_string(Side s) { return s == Side::Graph ? "graph" : "complement"; }

/// S with max degree of g[S] (on `side`) at most eps*|S|.
struct RestrictedSet {
    VertexSet set;
    Side side = Side::Graph;
    Rational eps;
    /// Both sides meet the bound equally well; the side label is then arbitrary.
    bool ambiguous = false;
    /// Size the producer aimed for (eps^d times the scope size) and whether
    /// the set reaches it.
    Rational target = 0;
    bool meets_target = true;
};

enum class BlockadeKind { Sparse, Dense };

inline const char *to_string(BlockadeKind k) { return k == BlockadeKind::Sparse ? "sparse" : "dense"; }

/// Sparse: for i < j every vertex of blocks[j] has at most x*|blocks[i]|
/// neighbours in blocks[i]. Dense: the same with non-neighbours.
struct Blockade {
    std::vector<VertexSet> blocks;
    BlockadeKind kind = BlockadeKind::Sparse;
    Rational x;
    BigInt min_length = 0;
    BigInt min_width = 0;
    /// A size floor was below 1 and was clamped.
    bool clamped = false;

    int length() const { return static_cast<int>(blocks.size()); }
    int width() const {
        int w = -1;
        for (const auto &b : blocks) w = w < 0 ? b.size() : std::min(w, b.size());
        return w < 0 ? 0 : w;
    }
};

struct BlockadeFound {
    Blockade blockade;
};

/// More than `threshold` copies of `pattern` inside `scope`.
struct CopyWitness {
    Graph pattern;
    bool ordered = true;
    VertexSet scope;
    std::uint64_t count = 0;
    Rational threshold;
};

/// B is x-sparse to A: each vertex of B has at most x*|A| neighbours in A.
struct SparsePair {
    VertexSet a;
    VertexSet b;
    Rational x;
    BigInt min_a = 0;
    Rational min_b;
    bool clamped = false;
};

enum class CliqueKind { Clique, Stable };

inline const char *to_string(CliqueKind k) { return k == CliqueKind::Clique ? "clique" : "stable"; }

struct CliqueOrStable {
    VertexSet set;
    CliqueKind kind = CliqueKind::Stable;
    /// |set| <= 1, so the set is both.
    bool ambiguous = false;
};

/// A set S with |S| >= min_size and ind_pattern(g[S]) <= bound.
struct RestrictedCandidate {
    VertexSet set;
    Graph pattern;
    bool ordered = true;
    std::uint64_t count = 0;
    Rational bound;
    Rational min_size;
};

using ExtractionOutcome = std::variant<RestrictedSet, BlockadeFound, CopyWitness, SparsePair, CliqueOrStable, RestrictedCandidate>;

inline std::string outcome_name(const ExtractionOutcome &o) {
    static const char *names[] = {"RestrictedSet", "BlockadeFound", "CopyWitness", "SparsePair", "CliqueOrStable", "RestrictedCandidate"};
    return names[o.index()];
}

} // namespace sparsify
