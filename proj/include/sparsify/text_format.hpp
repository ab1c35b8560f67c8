#pragma once

// Line-oriented text format:
//   g <n>   unordered graph header, followed by "e <u> <v>" lines
//   og <n>  ordered graph header (index order is the linear order)
//   t <n>   tournament header, followed by exactly C(n,2) "a <u> <v>" lines (u -> v)
// '#' starts a comment. Several blocks may follow each other (catalog files).

#include "errors.hpp"
#include "graph.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sparsify {

using AnyGraph = std::variant<Graph, OrderedGraph, Tournament>;

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) words.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

inline int parse_index(const std::string &word, int line_no) {
    if (word.empty() || word.size() > 9) throw ParseError(line_no, "bad integer '" + word + "'");
    int v = 0;
    for (char c : word) {
        if (c < '0' || c > '9') throw ParseError(line_no, "bad integer '" + word + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

struct BlockBuilder {
    enum class Kind { Graph, Ordered, Tournament } kind;
    int header_line;
    int n;
    std::vector<VertexSet> rows;
    long long arcs = 0;

    BlockBuilder(Kind k, int line, int count) : kind(k), header_line(line), n(count), rows(static_cast<std::size_t>(count), VertexSet(count)) {}

    void add(const std::vector<std::string> &w, int line_no) {
        const bool tour = kind == Kind::Tournament;
        const char *expected = tour ? "a" : "e";
        if (w.size() != 3 || w[0] != expected)
            throw ParseError(line_no, std::string("expected '") + expected + " <u> <v>'");
        int u = parse_index(w[1], line_no), v = parse_index(w[2], line_no);
        if (u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        auto &ru = rows[static_cast<std::size_t>(u)];
        auto &rv = rows[static_cast<std::size_t>(v)];
        if (tour) {
            if (ru.contains(v) || rv.contains(u)) throw ParseError(line_no, "duplicate arc between " + w[1] + " and " + w[2]);
            ru.insert(v);
            ++arcs;
        } else {
            if (ru.contains(v)) throw ParseError(line_no, "duplicate edge " + w[1] + " " + w[2]);
            ru.insert(v);
            rv.insert(u);
        }
    }

    AnyGraph finish() {
        if (kind == Kind::Tournament) {
            const long long need = static_cast<long long>(n) * (n - 1) / 2;
            if (arcs != need)
                throw ParseError(header_line, "tournament has " + std::to_string(arcs) + " arcs, expected " + std::to_string(need));
            return Tournament::from_rows(std::move(rows));
        }
        Graph g(n);
        for (int u = 0; u < n; ++u)
            rows[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v) g.add_edge(u, v);
            });
        if (kind == Kind::Ordered) return OrderedGraph(std::move(g));
        return g;
    }
};

} // namespace detail

/// Parses every block in the text.
inline std::vector<AnyGraph> parse_all(std::string_view text) {
    std::vector<AnyGraph> out;
    std::optional<detail::BlockBuilder> cur;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto w = detail::split_words(line);
        if (w.empty()) continue;
        using K = detail::BlockBuilder::Kind;
        if (w[0] == "g" || w[0] == "og" || w[0] == "t") {
            if (w.size() != 2) throw ParseError(line_no, "header needs exactly one vertex count");
            if (cur) out.push_back(cur->finish());
            K k = w[0] == "g" ? K::Graph : (w[0] == "og" ? K::Ordered : K::Tournament);
            cur.emplace(k, line_no, detail::parse_index(w[1], line_no));
        } else {
            if (!cur) throw ParseError(line_no, "directive before any header");
            cur->add(w, line_no);
        }
    }
    if (cur) out.push_back(cur->finish());
    return out;
}

/// Parses text holding exactly one block.
inline AnyGraph parse(std::string_view text) {
    auto all = parse_all(text);
    if (all.size() != 1) throw ParseError(1, "expected exactly one graph, found " + std::to_string(all.size()));
    return std::move(all.front());
}

template <class T>
T parse_as(std::string_view text) {
    AnyGraph any = parse(text);
    if (auto *p = std::get_if<T>(&any)) return std::move(*p);
    throw ParseError(1, "graph has the wrong kind");
}

inline std::string serialize(const Graph &g) {
    std::ostringstream os;
    os << "g " << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
    return os.str();
}

inline std::string serialize(const OrderedGraph &g) {
    std::ostringstream os;
    os << "og " << g.size() << '\n';
    for (auto [u, v] : g.graph().edges()) os << "e " << u << ' ' << v << '\n';
    return os.str();
}

inline std::string serialize(const Tournament &t) {
    std::ostringstream os;
    os << "t " << t.size() << '\n';
    for (int u = 0; u < t.size(); ++u)
        for (int v = u + 1; v < t.size(); ++v) {
            if (t.beats(u, v))
                os << "a " << u << ' ' << v << '\n';
            else
                os << "a " << v << ' ' << u << '\n';
        }
    return os.str();
}

inline std::string serialize(const AnyGraph &g) {
    return std::visit([](const auto &x) { return serialize(x); }, g);
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// graph6 (unordered graphs only)

inline Graph parse_graph6(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    std::size_t pos = 0;
    auto byte = [&]() -> int {
        if (pos >= s.size()) throw ParseError(1, "graph6 string truncated");
        int b = static_cast<unsigned char>(s[pos++]) - 63;
        if (b < 0 || b > 63) throw ParseError(1, "graph6 byte out of range");
        return b;
    };
    long long n = byte();
    if (n == 63) {
        if (pos < s.size() && s[pos] == '~') throw ParseError(1, "graph6 graphs above 258047 vertices are not supported");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | byte();
    }
    Graph g(static_cast<int>(n));
    int bit = 6, cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bit == 6) {
                cur = byte();
                bit = 0;
            }
            if ((cur >> (5 - bit)) & 1) g.add_edge(i, j);
            ++bit;
        }
    if (pos != s.size()) throw ParseError(1, "trailing bytes after graph6 data");
    return g;
}

inline std::string to_graph6(const Graph &g) {
    std::string out;
    const int n = g.size();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
    }
    int bit = 0, cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(cur + 63));
                bit = cur = 0;
            }
        }
    if (bit) out.push_back(static_cast<char>((cur << (6 - bit)) + 63));
    return out;
}

} // namespace sparsify
