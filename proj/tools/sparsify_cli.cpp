#include <sparsify/sparsify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace sparsify;

namespace {

enum Exit { Ok = 0, Usage = 1, Input = 2, Precondition = 3, Certificate = 4 };

struct Options {
    int threads = 1;
    std::uint64_t seed = 0;
    std::string out;

    std::string file, kind, pattern, host, h, j, eps, cls = "prime-in-H", strategy = "hereditary", suite;
    std::optional<std::uint64_t> threshold;
    std::optional<int> d;
    std::optional<int> max_n;
    int n = 0;
};

AnyGraph load(const std::string &path) { return parse(read_file(path)); }

Graph as_graph(const AnyGraph &g, const std::string &what) {
    if (auto *x = std::get_if<Graph>(&g)) return *x;
    if (auto *x = std::get_if<OrderedGraph>(&g)) return x->graph();
    throw InputError(what + " must be a graph, not a tournament");
}

std::string join(const std::vector<int> &v) {
    std::string out;
    for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

std::string steps_text(const Membership &m) {
    std::string out;
    if (!m.witness) return out;
    for (const auto &s : m.witness->steps) out += (out.empty() ? "" : "; ") + to_string(s);
    return out;
}

void add_membership(Report &r, const std::string &name, const Membership &m) {
    r.add(name, m.member);
    if (m.member)
        r.add(name + "_witness", steps_text(m));
    else if (!m.obstruction.empty())
        r.add(name + "_obstruction", join(m.obstruction));
}

Report classify(const Options &o) {
    AnyGraph g = load(o.file);
    if (o.kind == "graph") g = as_graph(g, "input");
    if (o.kind == "ordered") g = OrderedGraph(as_graph(g, "input"));
    if (o.kind == "tournament" && !std::holds_alternative<Tournament>(g)) throw InputError("input is not a tournament");
    Report r;
    if (auto *x = std::get_if<Graph>(&g)) {
        r.add("kind", "graph").add("n", x->size()).add("prime", is_prime(*x)).add("cograph", is_cograph(*x)).add("split", is_split(*x));
        add_membership(r, "in_J", recognize_J(*x));
        add_membership(r, "in_H", recognize_H(*x));
        if (auto w = order_into_L(*x)) r.add("L_order", join(w->order));
    } else if (auto *y = std::get_if<OrderedGraph>(&g)) {
        r.add("kind", "ordered").add("n", y->size()).add("prime", is_prime(*y));
        add_membership(r, "in_K", recognize_K(*y));
        r.add("in_L", in_L(*y));
    } else {
        const auto &t = std::get<Tournament>(g);
        r.add("kind", "tournament").add("n", t.size()).add("prime", is_prime(t)).add("transitive", is_transitive(t, VertexSet::full(t.size())));
        QMembership q = recognize_Q(t);
        r.add("in_Q", q.member);
        if (q.member) r.add("Q_numbering", join(q.numbering));
    }
    return r;
}

Report count(const Options &o) {
    const AnyGraph p = load(o.pattern), g = load(o.host);
    CountOptions opt{o.threshold, std::nullopt, o.threads};
    CountResult c;
    Report r;
    if (std::holds_alternative<OrderedGraph>(p) && std::holds_alternative<OrderedGraph>(g)) {
        c = count_copies(std::get<OrderedGraph>(p), std::get<OrderedGraph>(g), opt);
        r.add("ordered", true);
    } else if (std::holds_alternative<Graph>(p) && std::holds_alternative<Graph>(g)) {
        c = count_copies(std::get<Graph>(p), std::get<Graph>(g), opt);
        r.add("ordered", false);
    } else {
        throw InputError("pattern and host must both be graphs or both ordered graphs");
    }
    if (c.exceeded)
        r.add("count", "exceeds threshold").add("threshold", *o.threshold);
    else
        r.add("count", c.count);
    return r;
}

ViralParams params_of(const Options &o) {
    ViralParams p;
    p.seed = o.seed;
    if (o.d) p.d = *o.d;
    return p;
}

Report extract(const Options &o) {
    const AnyGraph h = load(o.h), j = load(o.j), g = load(o.host);
    const Rational eps = parse_rational(o.eps);
    ViralResult res;
    Graph host;
    const bool ordered = std::holds_alternative<OrderedGraph>(h) && std::holds_alternative<OrderedGraph>(j) && std::holds_alternative<OrderedGraph>(g);
    if (ordered) {
        host = std::get<OrderedGraph>(g).graph();
        res = viral_extract(std::get<OrderedGraph>(h), std::get<OrderedGraph>(j), std::get<OrderedGraph>(g), eps, params_of(o));
    } else {
        host = as_graph(g, "host");
        res = unordered_extract(as_graph(h, "h"), as_graph(j, "j"), host, eps, params_of(o));
    }
    Report r;
    r.add("mode", ordered ? "ordered" : "unordered").add("n", host.size()).add("input_eps", eps).add("seed", o.seed);
    r.append(describe(res.outcome));
    if (std::holds_alternative<CopyWitness>(res.outcome)) r.add("member", res.member == 0 ? "H" : "complement of J");
    for (const auto &line : res.trace) r.add("trace", line);
    const Verdict v = verify(res.outcome, host);
    if (!v.ok) throw CertificateError(v.reason);
    r.add("certificate", "verified");
    return r;
}

Report eh(const Options &o) {
    const AnyGraph h = load(o.h), j = load(o.j), g = load(o.host);
    EhResult res;
    Graph host;
    if (std::holds_alternative<OrderedGraph>(g)) {
        host = std::get<OrderedGraph>(g).graph();
        res = eh_extract_ordered(OrderedGraph(as_graph(h, "h")), OrderedGraph(as_graph(j, "j")), std::get<OrderedGraph>(g), params_of(o));
    } else {
        host = as_graph(g, "host");
        res = eh_extract(as_graph(h, "h"), as_graph(j, "j"), host, params_of(o));
    }
    Report r;
    r.add("n", host.size()).add("seed", o.seed);
    r.append(describe(res.set));
    if (res.witness) r.add("stopped_on_witness", true).add("witness_count", res.witness->count);
    for (const auto &line : res.schedule) r.add("schedule", line);
    const Verdict v = verify(res.set, host);
    if (!v.ok) throw CertificateError(v.reason);
    if (res.witness && !verify(*res.witness, host).ok) throw CertificateError("witness: " + verify(*res.witness, host).reason);
    r.add("certificate", "verified");
    return r;
}

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

std::vector<Check> suite_char(int max_n) {
    CharReport c = char_consistency(max_n);
    return {{"char_max_n" + std::to_string(max_n), c.exceptions.empty(),
             std::to_string(c.graphs) + " classes, " + std::to_string(c.members) + " in H, " + std::to_string(c.exceptions.size()) + " exceptions"}};
}

std::vector<Check> suite_split(int max_n) {
    std::vector<Check> out;
    for (int n = 3; n <= max_n; ++n) {
        int bad = 0, total = 0;
        for (const Graph &g : enumerate_prime_in_H(n)) {
            ++total;
            if (!is_split(g)) ++bad;
        }
        out.push_back({"split_n" + std::to_string(n), bad == 0, std::to_string(total) + " prime members, " + std::to_string(bad) + " not split"});
    }
    return out;
}

std::vector<Check> suite_figures() {
    std::vector<Check> out;
    const NumberedGraph f2 = fig2_family(6);
    const OrderedGraph o(permuted(f2.graph, f2.order));
    out.push_back({"fig2_in_H", in_H(f2.graph), ""});
    out.push_back({"fig2_order_in_L", in_L(o), ""});
    out.push_back({"fig2_order_prime", is_prime(o), ""});
    const auto f4 = fig4_fixtures();
    for (std::size_t i = 0; i < f4.size(); ++i) {
        const bool want = i == 0 || i == 4 || i == 6;
        out.push_back({"fig4_" + std::to_string(i + 1), is_prime(f4[i]) && in_L(f4[i]) == want, std::string("in_L ") + (in_L(f4[i]) ? "true" : "false")});
    }
    const auto f3 = fig3_fixtures();
    for (std::size_t i = 0; i < f3.size(); ++i) out.push_back({"fig3_" + std::to_string(i + 1), !in_H(f3[i]), ""});
    const auto f1 = fig1_fixtures();
    for (std::size_t i = 0; i < f1.size(); ++i) out.push_back({"fig1_" + std::to_string(i + 1), is_prime(f1[i]) && in_H(f1[i]), ""});
    return out;
}

std::vector<Check> suite_duality(std::uint64_t seed, int max_n) {
    std::vector<Check> out;
    Rng rng(seed);
    const Graph bull = named::bull(), p4 = named::path(4);
    const int top = std::max(60, max_n);
    for (int i = 0; i < 10; ++i) {
        const int n = 40 + (top - 40) * i / 9;
        const Graph g = i % 2 ? random_substitution_graph(n, rng) : random_graph(n, 0.5, rng);
        const Graph &h = i % 3 ? bull : p4, &j = i % 3 == 1 ? p4 : bull;
        ViralParams p;
        p.seed = seed + static_cast<std::uint64_t>(i);
        const Graph gc = complement(g);
        ViralResult a = unordered_extract(h, j, g, Rational(1, 4), p), b = unordered_extract(j, h, gc, Rational(1, 4), p);
        bool ok = a.outcome.index() == b.outcome.index();
        if (ok && std::holds_alternative<RestrictedSet>(a.outcome)) {
            const auto &x = std::get<RestrictedSet>(a.outcome), &y = std::get<RestrictedSet>(b.outcome);
            ok = x.set == y.set && (x.ambiguous || y.ambiguous ? x.ambiguous && y.ambiguous : x.side != y.side);
        } else if (ok) {
            const auto &x = std::get<CopyWitness>(a.outcome), &y = std::get<CopyWitness>(b.outcome);
            ok = a.member == 1 - b.member && x.pattern == complement(y.pattern) && verify(x, g).ok && verify(y, gc).ok;
        }
        out.push_back({"duality_" + std::to_string(i), ok, "n=" + std::to_string(n) + " " + outcome_name(a.outcome) + "/" + outcome_name(b.outcome)});
    }
    return out;
}

Report verify_suite(const Options &o, bool &all_ok) {
    std::vector<Check> checks;
    if (o.suite == "char") checks = suite_char(o.max_n.value_or(6));
    else if (o.suite == "split") checks = suite_split(o.max_n.value_or(8));
    else if (o.suite == "figures") checks = suite_figures();
    else if (o.suite == "duality") checks = suite_duality(o.seed, o.max_n.value_or(120));
    else throw InputError("unknown suite " + o.suite);
    Report r;
    r.add("suite", o.suite);
    all_ok = true;
    for (const auto &c : checks) {
        r.add(c.name, std::string(c.ok ? "pass" : "fail") + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        all_ok = all_ok && c.ok;
    }
    r.add("result", all_ok ? "pass" : "fail");
    return r;
}

} // namespace

int main(int argc, char **argv) {
    Options o;
    if (const char *env = std::getenv("SPARSIFY_SEED")) {
        try {
            o.seed = std::stoull(env);
        } catch (const std::exception &) {
            std::cerr << "error: SPARSIFY_SEED is not a number\n";
            return Usage;
        }
    }

    CLI::App app{"sparsify: hereditary classes, induced copy counting and clique/stable extraction"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "worker cap for counting")->check(CLI::Range(1, 256));
    app.add_option("--seed", o.seed, "seed, overrides SPARSIFY_SEED");
    app.add_option("--out", o.out, "write the report here instead of stdout");

    auto *cl = app.add_subcommand("classify", "class membership report");
    cl->add_option("file", o.file)->required();
    cl->add_option("--kind", o.kind)->check(CLI::IsMember({"graph", "ordered", "tournament"}));

    auto *co = app.add_subcommand("count", "induced copies of a pattern");
    co->add_option("--pattern", o.pattern)->required();
    co->add_option("--host", o.host)->required();
    co->add_option("--threshold", o.threshold);

    auto *ex = app.add_subcommand("extract", "restricted set or copy witness");
    ex->set_help_flag("--help", "print this help message and exit");
    ex->add_option("--h", o.h)->required();
    ex->add_option("--j", o.j)->required();
    ex->add_option("--host", o.host)->required();
    ex->add_option("--eps", o.eps, "rational p/q")->required();
    ex->add_option("--seed", o.seed);
    ex->add_option("--d", o.d);

    auto *e = app.add_subcommand("eh", "clique or stable set");
    e->set_help_flag("--help", "print this help message and exit");
    e->add_option("--h", o.h)->required();
    e->add_option("--j", o.j)->required();
    e->add_option("--host", o.host)->required();
    e->add_option("--seed", o.seed);

    auto *en = app.add_subcommand("enumerate", "catalog of a class");
    en->add_option("--class", o.cls)->check(CLI::IsMember({"prime-in-H"}));
    en->add_option("--n", o.n)->required();
    en->add_option("--strategy", o.strategy)->check(CLI::IsMember({"hereditary", "all", "split"}));

    auto *ve = app.add_subcommand("verify", "self-verification suites");
    ve->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"char", "split", "figures", "duality"}));
    ve->add_option("--max-n", o.max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &err) {
        return app.exit(err);
    } catch (const CLI::ParseError &err) {
        std::cerr << "error: " << err.what() << "\n";
        return Usage;
    }

    int code = Ok;
    std::string text;
    try {
        if (cl->parsed()) text = classify(o).str();
        else if (co->parsed()) text = count(o).str();
        else if (ex->parsed()) text = extract(o).str();
        else if (e->parsed()) text = eh(o).str();
        else if (en->parsed()) {
            const EnumStrategy s = o.strategy == "all" ? EnumStrategy::AllGraphs : o.strategy == "split" ? EnumStrategy::Split : EnumStrategy::Hereditary;
            text = catalog_text(enumerate_prime_in_H(o.n, s), o.cls + " n=" + std::to_string(o.n));
        } else {
            bool ok = false;
            text = verify_suite(o, ok).str();
            if (!ok) code = Certificate;
        }
    } catch (const InputError &err) {
        std::cerr << "error: " << err.what() << "\n";
        return Input;
    } catch (const DomainError &err) {
        std::cerr << "error: " << err.what() << "\n";
        return Precondition;
    } catch (const CertificateError &err) {
        std::cerr << "certificate: " << err.what() << "\n";
        return Certificate;
    }

    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f || !(f << text)) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return Input;
        }
    }
    return code;
}
