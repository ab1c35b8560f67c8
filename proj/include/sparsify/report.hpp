#pragma once

// Line-oriented key:value rendering of outcomes.

#include "outcome.hpp"
#include "rational.hpp"
#include "text_format.hpp"

#include <string>
#include <type_traits>
#include <variant>

namespace sparsify {

inline std::string set_text(const VertexSet &s) {
    std::string out;
    for (int v : s.to_vector()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

class Report {
  public:
    Report &add(const std::string &key, const std::string &value) {
        text_ += key + ": " + value + "\n";
        return *this;
    }
    Report &add(const std::string &key, const char *value) { return add(key, std::string(value)); }
    Report &add(const std::string &key, bool value) { return add(key, value ? "true" : "false"); }
    Report &add(const std::string &key, long long value) { return add(key, std::to_string(value)); }
    Report &add(const std::string &key, int value) { return add(key, std::to_string(value)); }
    Report &add(const std::string &key, std::uint64_t value) { return add(key, std::to_string(value)); }
    Report &add(const std::string &key, const Rational &value) { return add(key, to_string(value)); }
    Report &add(const std::string &key, const BigInt &value) { return add(key, value.str()); }
    Report &add(const std::string &key, const VertexSet &value) { return add(key, set_text(value)); }
    Report &append(const Report &other) {
        text_ += other.text_;
        return *this;
    }
    const std::string &str() const { return text_; }

  private:
    std::string text_;
};

inline Report describe(const ExtractionOutcome &o) {
    Report r;
    r.add("outcome", outcome_name(o));
    std::visit(
        [&r](const auto &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RestrictedSet>) {
                r.add("size", x.set.size()).add("side", to_string(x.side)).add("eps", x.eps).add("ambiguous", x.ambiguous);
                r.add("target", x.target).add("meets_target", x.meets_target).add("set", x.set);
            } else if constexpr (std::is_same_v<T, BlockadeFound>) {
                const Blockade &b = x.blockade;
                r.add("kind", to_string(b.kind)).add("length", b.length()).add("width", b.width()).add("x", b.x);
                r.add("min_length", b.min_length).add("min_width", b.min_width).add("clamped", b.clamped);
                for (int i = 0; i < b.length(); ++i) r.add("block" + std::to_string(i), b.blocks[static_cast<std::size_t>(i)]);
            } else if constexpr (std::is_same_v<T, CopyWitness>) {
                r.add("pattern", to_graph6(x.pattern)).add("ordered", x.ordered).add("scope_size", x.scope.size());
                r.add("count", x.count).add("threshold", x.threshold);
            } else if constexpr (std::is_same_v<T, SparsePair>) {
                r.add("a_size", x.a.size()).add("b_size", x.b.size()).add("x", x.x).add("min_a", x.min_a).add("min_b", x.min_b);
                r.add("clamped", x.clamped).add("a", x.a).add("b", x.b);
            } else if constexpr (std::is_same_v<T, CliqueOrStable>) {
                r.add("kind", to_string(x.kind)).add("size", x.set.size()).add("ambiguous", x.ambiguous).add("set", x.set);
            } else {
                r.add("size", x.set.size()).add("pattern", to_graph6(x.pattern)).add("ordered", x.ordered).add("count", x.count);
                r.add("bound", x.bound).add("min_size", x.min_size).add("set", x.set);
            }
        },
        o);
    return r;
}

} // namespace sparsify
