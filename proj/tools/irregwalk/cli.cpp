#include "irregwalk/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <irregwalk/closedform.hpp>
#include <irregwalk/constructive.hpp>
#include <irregwalk/errors.hpp>
#include <irregwalk/exact.hpp>
#include <irregwalk/gadget.hpp>
#include <irregwalk/generators.hpp>
#include <irregwalk/io.hpp>
#include <irregwalk/treedp.hpp>
#include <irregwalk/walkops.hpp>

namespace irregwalk::cli {

using json = nlohmann::json;

int workers_from_env()
{
    const char* s = std::getenv("IRREGWALK_WORKERS");
    if (!s)
        return 1;
    int w = std::atoi(s);
    return std::max(1, w);
}

namespace {

json walk_json(const Walk& w)
{
    return json(w.vertices);
}

json edges_json(const std::vector<Edge>& es)
{
    json a = json::array();
    for (const auto& e : es)
        a.push_back({e.u, e.v});
    return a;
}

// ---- closed-form recognition -------------------------------------------------

// Relabels a canonical witness onto g through `to_g` (canonical index -> vertex of g).
Walk relabel(const Walk& w, const std::vector<Vertex>& to_g)
{
    Walk out;
    for (Vertex v : w.vertices)
        out.vertices.push_back(to_g[v]);
    return out;
}

// Vertices of a path or cycle in traversal order, starting at `start`.
std::vector<Vertex> trace(const Graph& g, Vertex start)
{
    std::vector<Vertex> order{start};
    std::vector<char> seen(g.order(), 0);
    seen[start] = 1;
    while (true) {
        Vertex next = -1;
        for (Vertex u : g.neighbours(order.back()))
            if (!seen[u]) {
                next = u;
                break;
            }
        if (next < 0)
            break;
        seen[next] = 1;
        order.push_back(next);
    }
    return order;
}

struct Recognised {
    std::string family;
    ClosedFormAnswer answer;
};

std::optional<Recognised> recognise(const Graph& g)
{
    const int n = g.order(), m = g.size();
    if (n < 3 || !is_connected(g))
        return std::nullopt;
    const int delta = max_degree(g);

    if (m == n * (n - 1) / 2)
        return Recognised{"complete", mlw_complete(n)};

    if (m == n - 1 && delta <= 2) {
        Vertex end = 0;
        while (g.degree(end) != 1)
            ++end;
        auto order = trace(g, end);
        auto cf = mlw_path(n - 1);
        cf.witness = relabel(cf.witness, order);
        return Recognised{"path", cf};
    }

    if (m == n && delta == 2) {
        auto order = trace(g, 0);
        auto cf = mlw_cycle(n);
        cf.witness = relabel(cf.witness, order);
        return Recognised{"cycle", cf};
    }

    std::vector<Side> side;
    try {
        side = bipartition(g);
    } catch (const Error&) {
        return std::nullopt;
    }
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v)
        (side[v] == Side::U ? a : b).push_back(v);
    if (static_cast<long>(a.size()) * static_cast<long>(b.size()) != m)
        return std::nullopt;
    auto cf = mlw_complete_bipartite(static_cast<int>(a.size()), static_cast<int>(b.size()));
    std::vector<Vertex> order = a;
    order.insert(order.end(), b.begin(), b.end());
    cf.witness = relabel(cf.witness, order);
    return Recognised{"complete-bipartite", cf};
}

// ---- solve -------------------------------------------------------------------

struct RunReport {
    std::string input;
    std::string method;
    int value = 0;
    Walk walk;
    std::optional<int> bound;
    std::string note;
    std::uint64_t seed = 0;
    std::optional<double> seconds;

    json to_json() const
    {
        json j;
        j["schema"] = 1;
        j["input"] = input;
        j["method"] = method;
        j["value"] = value;
        j["walk"] = walk_json(walk);
        j["bound"] = bound ? json(*bound) : json(nullptr);
        j["seed"] = seed;
        if (!note.empty())
            j["note"] = note;
        if (seconds)
            j["seconds"] = *seconds;
        return j;
    }
};

struct SolveOutcome {
    RunReport report;
    bool found = true;
    std::string reason;
};

SolveOutcome solve(const Graph& g, const std::string& method, std::optional<int> budget, std::uint64_t seed)
{
    SolveOutcome out;
    RunReport& r = out.report;
    r.method = method;
    r.seed = seed;

    auto take_exact = [&](const ExactResult& e) {
        if (e.finite()) {
            r.value = e.value;
            r.walk = e.witness.value_or(Walk{});
            r.bound = e.value;
        } else {
            out.found = false;
            out.reason = e.kind == ExactResult::Kind::Infinite
                             ? "no irregularising walk"
                             : "Exhausted: no irregularising walk within budget " + std::to_string(e.value);
        }
    };

    if (!is_nice(g))
        throw Error(ErrorCode::MethodInapplicable, "graph is not nice (needs connected, n >= 2, not K2)");

    if (method == "exact") {
        take_exact(exact_mlw(g, budget, workers_from_env()));
    } else if (method == "exact-multiset") {
        take_exact(exact_mlw_multiset(g, budget));
    } else if (method == "tree") {
        if (g.size() != g.order() - 1)
            throw Error(ErrorCode::MethodInapplicable, "method tree needs a tree");
        take_exact(tree_mlw(RootedTree::from_graph(g, 0)));
    } else if (method == "greedy") {
        auto b = greedy_irregularise(g, guiding_closed_walk(g));
        r.walk = b.walk;
        r.bound = b.bound;
    } else if (method == "chromatic") {
        auto col = greedy_vertex_colouring(g);
        auto b = chromatic_irregularise(g, guiding_closed_walk(g), col);
        r.walk = b.walk;
        r.bound = b.bound;
        r.note = std::to_string(col.k) + " colours";
    } else if (method == "labelling") {
        auto lab = exact_proper_labelling(g, LabellingObjective::MinSum, 3);
        auto b = labelling_irregularise(g, lab);
        r.walk = b.walk;
        r.bound = b.bound;
    } else if (method == "closed-form") {
        auto rec = recognise(g);
        if (!rec)
            throw Error(ErrorCode::MethodInapplicable, "no closed form for this graph");
        r.value = rec->answer.value;
        r.walk = rec->answer.witness;
        r.bound = rec->answer.value;
        r.note = rec->family;
    } else {
        throw Error(ErrorCode::MethodInapplicable, "unknown method " + method);
    }
    if (method == "greedy" || method == "chromatic" || method == "labelling")
        r.value = static_cast<int>(r.walk.length());
    return out;
}

// ---- bench -------------------------------------------------------------------

struct Instance {
    std::string name;
    Graph g;
    bool tree = false;
    int k = 0, l = 0;
};

std::vector<Instance> make_instances(const std::string& cls, int lo, int hi, int samples, std::uint64_t seed)
{
    std::vector<Instance> out;
    Rng rng(seed);
    auto name = [](const std::string& c, int a, int b = -1) {
        return c + "(" + std::to_string(a) + (b >= 0 ? "," + std::to_string(b) : "") + ")";
    };
    if (cls == "star") {
        for (int k = lo; k <= hi; ++k)
            for (int l = lo; l <= hi; ++l)
                out.push_back({name("star", k, l), make_subdivided_star(k, l), true, k, l});
        return out;
    }
    for (int s = lo; s <= hi; ++s) {
        if (cls == "path")
            out.push_back({name("path", s), make_path(s), true});
        else if (cls == "cycle")
            out.push_back({name("cycle", s), make_cycle(s)});
        else if (cls == "complete")
            out.push_back({name("complete", s), make_complete(s)});
        else if (cls == "complete-bipartite")
            out.push_back({name("complete-bipartite", s, s), make_complete_bipartite(s, s)});
        else if (cls == "tree" || cls == "random" || cls == "cubic-bipartite") {
            for (int i = 0; i < samples; ++i) {
                std::string nm = name(cls, s) + "#" + std::to_string(i);
                if (cls == "tree")
                    out.push_back({nm, random_tree(s, rng), true});
                else if (cls == "random")
                    out.push_back({nm, random_connected_graph(s, 0.4, rng)});
                else
                    out.push_back({nm, random_cubic_bipartite(s, rng)});
            }
        } else {
            throw Error(ErrorCode::MethodInapplicable, "unknown class " + cls);
        }
    }
    return out;
}

struct BenchRow {
    std::string name;
    int n = 0, m = 0;
    bool nice = false;
    std::optional<int> exact;
    int greedy = 0, chromatic = 0;
    bool violation = false, counterexample = false;
    int k = 0, l = 0;
};

BenchRow bench_one(const Instance& in, int exact_limit)
{
    BenchRow row;
    row.name = in.name;
    row.n = in.g.order();
    row.m = in.g.size();
    row.k = in.k;
    row.l = in.l;
    row.nice = is_nice(in.g);
    if (!row.nice)
        return row;
    const Graph& g = in.g;
    auto guide = guiding_closed_walk(g);
    auto gr = greedy_irregularise(g, guide);
    auto ch = chromatic_irregularise(g, guide, greedy_vertex_colouring(g));
    row.greedy = static_cast<int>(gr.walk.length());
    row.chromatic = static_cast<int>(ch.walk.length());
    row.violation = !check_irregularising(g, gr.walk).irregularising() ||
                    row.greedy > 2 * (row.m + row.n - 1) || row.greedy > 4 * row.m ||
                    !check_irregularising(g, ch.walk).irregularising() || row.chromatic > ch.bound;
    ExactResult e;
    if (in.tree)
        e = tree_mlw(RootedTree::from_graph(g, 0));
    else if (row.m <= exact_limit)
        e = exact_mlw_multiset(g);
    if (e.finite()) {
        row.exact = e.value;
        row.counterexample = e.value > 3 * row.m;
    }
    return row;
}

std::string ratio(double x)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << x;
    return s.str();
}

// Adjacent grid cells (k,l) -> (k+1,l) or (k,l+1) whose exact ratio drops.
json star_findings(const std::vector<BenchRow>& rows)
{
    json f = json::array();
    auto find = [&](int k, int l) -> const BenchRow* {
        for (const auto& r : rows)
            if (r.k == k && r.l == l && r.exact)
                return &r;
        return nullptr;
    };
    for (const auto& r : rows) {
        if (!r.exact)
            continue;
        for (auto [dk, dl] : {std::pair{1, 0}, std::pair{0, 1}}) {
            const BenchRow* s = find(r.k + dk, r.l + dl);
            if (!s)
                continue;
            double a = double(*r.exact) / r.m, b = double(*s->exact) / s->m;
            if (b < a)
                f.push_back({{"from", r.name}, {"to", s->name}, {"ratio_from", a}, {"ratio_to", b}});
        }
    }
    return f;
}

int cmd_bench(const std::string& cls, int lo, int hi, int samples, std::uint64_t seed, int exact_limit, bool as_json,
              std::ostream& out)
{
    auto instances = make_instances(cls, lo, hi, samples, seed);
    std::vector<BenchRow> rows(instances.size());
    const int workers = std::min<int>(workers_from_env(), std::max<std::size_t>(1, instances.size()));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < instances.size(); i += workers)
                    rows[i] = bench_one(instances[i], exact_limit);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& f : failures)
        if (f)
            std::rethrow_exception(f);

    int violations = 0, counterexamples = 0;
    double max_exact = 0, max_greedy = 0;
    for (const auto& r : rows) {
        violations += r.violation;
        counterexamples += r.counterexample;
        if (r.nice && r.m > 0) {
            max_greedy = std::max(max_greedy, double(r.greedy) / r.m);
            if (r.exact)
                max_exact = std::max(max_exact, double(*r.exact) / r.m);
        }
    }

    if (as_json) {
        json j;
        j["schema"] = 1;
        j["class"] = cls;
        j["seed"] = seed;
        json arr = json::array();
        for (const auto& r : rows) {
            json x{{"name", r.name}, {"n", r.n}, {"m", r.m}, {"nice", r.nice}};
            if (r.nice) {
                x["greedy"] = r.greedy;
                x["chromatic"] = r.chromatic;
                x["exact"] = r.exact ? json(*r.exact) : json(nullptr);
                x["exact_ratio"] = r.exact ? json(double(*r.exact) / r.m) : json(nullptr);
                x["greedy_ratio"] = double(r.greedy) / r.m;
                x["violation"] = r.violation;
                x["counterexample"] = r.counterexample;
            }
            arr.push_back(x);
        }
        j["rows"] = arr;
        j["max_exact_ratio"] = max_exact;
        j["max_greedy_ratio"] = max_greedy;
        j["violations"] = violations;
        j["counterexamples"] = counterexamples;
        if (cls == "star")
            j["ratio_drops"] = star_findings(rows);
        out << j.dump(2) << "\n";
    } else {
        out << std::left << std::setw(24) << "instance" << std::right << std::setw(5) << "n" << std::setw(5) << "m"
            << std::setw(7) << "exact" << std::setw(8) << "greedy" << std::setw(8) << "chrom" << std::setw(9)
            << "exact/m" << std::setw(9) << "greedy/m" << "  flags\n";
        for (const auto& r : rows) {
            out << std::left << std::setw(24) << r.name << std::right << std::setw(5) << r.n << std::setw(5) << r.m;
            if (!r.nice) {
                out << "  not nice\n";
                continue;
            }
            out << std::setw(7) << (r.exact ? std::to_string(*r.exact) : "-") << std::setw(8) << r.greedy
                << std::setw(8) << r.chromatic << std::setw(9) << (r.exact ? ratio(double(*r.exact) / r.m) : "-")
                << std::setw(9) << ratio(double(r.greedy) / r.m) << "  " << (r.violation ? "VIOLATION " : "")
                << (r.counterexample ? "COUNTEREXAMPLE" : "") << "\n";
        }
        out << "max exact/m " << ratio(max_exact) << ", max greedy/m " << ratio(max_greedy) << ", violations "
            << violations << ", counterexamples " << counterexamples << "\n";
    }
    return violations ? VerificationFailed : Ok;
}

// ---- small helpers -----------------------------------------------------------

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorCode::ParseError, "cannot write " + path);
    f << text;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Irregularising walks: verify, solve and explore", "irregwalk"};
    app.require_subcommand(1);

    std::string graph_path, walk_path, method = "exact", dot_path, cls = "star", kind = "walk";
    std::optional<int> budget;
    std::uint64_t seed = 1;
    int samples = 1, lo = 2, hi = 5, exact_limit = 14;
    bool as_json = false, timing = false;

    auto* verify = app.add_subcommand("verify", "Check that a walk is irregularising");
    verify->add_option("--graph", graph_path, "edge list file")->required();
    verify->add_option("--walk", walk_path, "walk file")->required();
    verify->add_flag("--json", as_json);

    auto* solve_cmd = app.add_subcommand("solve", "Find an irregularising walk");
    solve_cmd->add_option("--graph", graph_path, "edge list file")->required();
    solve_cmd->add_option("--method", method, "exact|exact-multiset|greedy|chromatic|labelling|tree|closed-form");
    solve_cmd->add_option("--budget", budget, "longest walk tried by exact search");
    solve_cmd->add_option("--seed", seed);
    solve_cmd->add_option("--dot", dot_path, "also write the witness as DOT");
    solve_cmd->add_flag("--json", as_json);
    solve_cmd->add_flag("--timing", timing, "include wall time in the report");

    auto* bench = app.add_subcommand("bench", "Greedy and exact lengths over a generated family");
    bench->add_option("--class", cls, "path|cycle|complete|complete-bipartite|tree|random|cubic-bipartite|star");
    bench->add_option("--min", lo);
    bench->add_option("--max", hi);
    bench->add_option("--samples", samples, "graphs per size for random classes");
    bench->add_option("--seed", seed);
    bench->add_option("--budget", exact_limit, "largest m solved exactly outside trees");
    bench->add_flag("--json", as_json);

    auto* dot = app.add_subcommand("export-dot", "Render a graph and walk as DOT");
    dot->add_option("--graph", graph_path)->required();
    dot->add_option("--walk", walk_path);
    dot->add_option("--dot", dot_path, "output file (default stdout)");

    auto* gadget = app.add_subcommand("gadget", "Build a reduction graph from a cubic bipartite graph");
    gadget->add_option("--graph", graph_path)->required();
    gadget->add_option("--kind", kind, "walk|path");
    gadget->add_flag("--json", as_json);

    auto* normalize = app.add_subcommand("normalize", "Rewrite a walk as base walk plus half-turns");
    normalize->add_option("--graph", graph_path)->required();
    normalize->add_option("--walk", walk_path)->required();
    normalize->add_flag("--json", as_json);

    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*verify) {
            Graph g = read_edge_list(graph_path);
            Walk w = read_walk(walk_path);
            auto rep = check_irregularising(g, w);
            if (as_json) {
                json j{{"schema", 1}, {"irregularising", rep.irregularising()},
                       {"conflicts", edges_json(rep.conflicts)}};
                out << j.dump(2) << "\n";
            } else if (rep.irregularising()) {
                out << "irregularising\n";
            } else {
                out << rep.conflicts.size() << " conflicts:";
                for (const auto& e : rep.conflicts)
                    out << " " << e.u << "-" << e.v;
                out << "\n";
            }
            return rep.irregularising() ? Ok : Negative;
        }

        if (*solve_cmd) {
            Graph g = read_edge_list(graph_path);
            auto t0 = std::chrono::steady_clock::now();
            auto res = solve(g, method, budget, seed);
            res.report.input = graph_path;
            if (timing)
                res.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (!res.found) {
                if (as_json)
                    out << json{{"schema", 1}, {"method", method}, {"found", false}, {"reason", res.reason}}.dump(2)
                        << "\n";
                else
                    out << res.reason << "\n";
                return Negative;
            }
            const auto& r = res.report;
            if (!check_irregularising(g, r.walk).irregularising() ||
                static_cast<int>(r.walk.length()) != r.value || (r.bound && r.value > *r.bound)) {
                err << "internal error: " << method << " produced a walk that fails verification\n";
                return VerificationFailed;
            }
            if (!dot_path.empty())
                write_text(dot_path, to_dot(g, r.walk));
            if (as_json) {
                out << r.to_json().dump(2) << "\n";
            } else {
                out << "method " << r.method << (r.note.empty() ? "" : " (" + r.note + ")") << "\n"
                    << "value " << r.value << "\n";
                if (r.bound)
                    out << "bound " << *r.bound << "\n";
                out << "walk " << format_walk(r.walk) << "\n";
                if (r.seconds)
                    out << "seconds " << *r.seconds << "\n";
            }
            return Ok;
        }

        if (*bench)
            return cmd_bench(cls, lo, hi, samples, seed, exact_limit, as_json, out);

        if (*dot) {
            Graph g = read_edge_list(graph_path);
            Walk w = walk_path.empty() ? Walk{} : read_walk(walk_path);
            if (!validate_walk(g, w))
                throw Error(ErrorCode::InvalidWalk, "walk leaves the graph");
            std::string text = to_dot(g, w);
            if (dot_path.empty())
                out << text;
            else
                write_text(dot_path, text);
            return Ok;
        }

        if (*gadget) {
            Graph h = read_edge_list(graph_path);
            GadgetInstance gi;
            if (kind == "walk")
                gi = build_walk_gadget(h);
            else if (kind == "path")
                gi = build_path_gadget(h);
            else
                throw Error(ErrorCode::MethodInapplicable, "unknown gadget kind " + kind);
            if (as_json) {
                json side = json::array();
                for (Side s : gi.side)
                    side.push_back(s == Side::U ? "U" : "V");
                json j{{"schema", 1},
                       {"kind", kind},
                       {"n", gi.g.order()},
                       {"edges", edges_json(gi.g.edges())},
                       {"k", gi.k ? json(*gi.k) : json(nullptr)},
                       {"h_vertices", gi.h_vertices},
                       {"side", side}};
                out << j.dump(2) << "\n";
            } else {
                out << format_edge_list(gi.g);
            }
            return Ok;
        }

        if (*normalize) {
            Graph g = read_edge_list(graph_path);
            Walk w = read_walk(walk_path);
            auto nf = normalize_walk(g, w);
            Walk e = expand_normal_form(nf);
            if (edge_counts(g, e) != edge_counts(g, w)) {
                err << "internal error: normal form changes the edge multiset\n";
                return VerificationFailed;
            }
            if (as_json) {
                json j{{"schema", 1},
                       {"base", walk_json(nf.base)},
                       {"half_turns", nf.half_turns},
                       {"odd_edges", edges_json(nf.e_odd)},
                       {"even_edges", edges_json(nf.e_even)},
                       {"expanded", walk_json(e)}};
                out << j.dump(2) << "\n";
            } else {
                out << "base " << format_walk(nf.base) << "\n";
                out << "half-turns";
                for (int h : nf.half_turns)
                    out << " " << h;
                out << "\nexpanded " << format_walk(e) << "\n";
            }
            return Ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

} // namespace irregwalk::cli
