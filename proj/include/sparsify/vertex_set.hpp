#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sparsify {

/// Fixed-universe bitset over vertex indices [0, universe).
class VertexSet {
public:
    using word_type = std::uint64_t;
    static constexpr int word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((static_cast<std::size_t>(universe) + word_bits - 1) / word_bits, 0) {}
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }
    VertexSet(int universe, const std::vector<int> &members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto &w : s.words_) w = ~word_type{0};
        s.trim();
        return s;
    }

    /// The interval [lo, hi).
    static VertexSet range(int universe, int lo, int hi) {
        VertexSet s(universe);
        for (int v = lo; v < hi; ++v) s.insert(v);
        return s;
    }

    int universe() const noexcept { return universe_; }

    bool contains(int v) const noexcept {
        return (words_[static_cast<std::size_t>(v) / word_bits] >> (v % word_bits)) & 1u;
    }
    void insert(int v) noexcept { words_[static_cast<std::size_t>(v) / word_bits] |= word_type{1} << (v % word_bits); }
    void erase(int v) noexcept { words_[static_cast<std::size_t>(v) / word_bits] &= ~(word_type{1} << (v % word_bits)); }
    void assign(int v, bool on) noexcept { on ? insert(v) : erase(v); }

    int size() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member >= from, or -1.
    int next(int from) const noexcept {
        if (from >= universe_) return -1;
        std::size_t wi = static_cast<std::size_t>(from) / word_bits;
        word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w) return static_cast<int>(wi * word_bits) + std::countr_zero(w);
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }
    int first() const noexcept { return universe_ == 0 ? -1 : next(0); }

    /// Largest member, or -1.
    int last() const noexcept {
        for (std::size_t wi = words_.size(); wi-- > 0;)
            if (words_[wi]) return static_cast<int>(wi * word_bits) + word_bits - 1 - std::countl_zero(words_[wi]);
        return -1;
    }

    template <class F>
    void for_each(F &&f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word_type w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * word_bits) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// First k members in index order.
    VertexSet first_k(int k) const {
        VertexSet out(universe_);
        for (int v = first(); v >= 0 && k > 0; v = next(v + 1), --k) out.insert(v);
        return out;
    }

    int intersection_size(const VertexSet &o) const noexcept {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const VertexSet &o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet &o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet &operator&=(const VertexSet &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet &operator|=(const VertexSet &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet &operator-=(const VertexSet &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

    /// Complement within the universe.
    VertexSet operator~() const {
        VertexSet s = *this;
        for (auto &w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    /// Lexicographic comparison of the sorted member lists.
    friend bool lex_less(const VertexSet &a, const VertexSet &b) {
        int x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y;
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        return x < 0 && y >= 0;
    }

    const std::vector<word_type> &words() const noexcept { return words_; }

private:
    void trim() noexcept {
        if (universe_ % word_bits && !words_.empty()) words_.back() &= (word_type{1} << (universe_ % word_bits)) - 1;
    }

    int universe_ = 0;
    std::vector<word_type> words_;
};

} // namespace sparsify
