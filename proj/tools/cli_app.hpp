#ifndef MIXEDCOLOR_TOOLS_CLI_APP_HPP
#define MIXEDCOLOR_TOOLS_CLI_APP_HPP

// The `mixedcolor` command line: solve, bounds, params, gen, expr, verify.
// Exit codes: 0 yes / success, 1 no / improper, 2 usage or runtime error.

#include "CLI11.hpp"
#include "json.hpp"
#include "report.hpp"

#include "mixedcolor/bounds.hpp"
#include "mixedcolor/expression.hpp"
#include "mixedcolor/expression_transforms.hpp"
#include "mixedcolor/families.hpp"
#include "mixedcolor/parameters.hpp"
#include "mixedcolor/reductions.hpp"
#include "mixedcolor/solvers.hpp"
#include "mixedcolor/tree_decomposition.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace mixedcolor::cli {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_error = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error("cannot write " + path);
}

// ------------------------------------------------------------ instance files

inline nlohmann::json parse_json(const std::string& text, const std::string& what)
{
    try {
        return nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

template <class F>
auto json_field(const std::string& what, F&& read)
{
    try {
        return read();
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

/// {"strings": ["01", ...], "k": 4, "split": false}
inline std::pair<SuperstringInstance, bool> superstring_from_json(const std::string& text)
{
    auto doc = parse_json(text, "superstring instance");
    return json_field("superstring instance", [&] {
        SuperstringInstance inst{doc.at("strings").get<std::vector<std::string>>(), doc.at("k").get<int>()};
        return std::pair{inst, doc.value("split", false)};
    });
}

/// {"machine1": [...], "machine2": [...], "precedence": [["a","b"], ...], "deadline": 2}
inline SchedulingInstance scheduling_from_json(const std::string& text)
{
    auto doc = parse_json(text, "scheduling instance");
    return json_field("scheduling instance", [&] {
        SchedulingInstance inst;
        inst.tasks_m1 = doc.value("machine1", std::vector<std::string>{});
        inst.tasks_m2 = doc.value("machine2", std::vector<std::string>{});
        for (const auto& p : doc.value("precedence", nlohmann::json::array()))
            inst.precedence.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        inst.deadline = doc.at("deadline").get<int>();
        return inst;
    });
}

inline MixedGraph undirected_from_json(const nlohmann::json& doc)
{
    const int n = doc.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : doc.value("edges", nlohmann::json::array()))
        edges.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1});
    return MixedGraph::create(n, std::move(edges), {});
}

/// {"vertices": n, "edges": [[1,2], ...], "colors": l, "lists": [[1,4], ...]}
inline ListColoringInstance list_coloring_from_json(const std::string& text)
{
    auto doc = parse_json(text, "list colouring instance");
    return json_field("list colouring instance", [&] {
        ListColoringInstance inst;
        inst.graph = undirected_from_json(doc);
        inst.colors = doc.at("colors").get<int>();
        inst.lists = doc.at("lists").get<std::vector<std::vector<int>>>();
        return inst;
    });
}

/// {"vertices": n, "edges": [[1,2], ...], "classes": [1, 2, 1, ...]}
inline std::pair<MixedGraph, std::vector<int>> multicolored_clique_from_json(const std::string& text)
{
    auto doc = parse_json(text, "multicoloured clique instance");
    return json_field("multicoloured clique instance", [&] {
        auto g = undirected_from_json(doc);
        auto classes = doc.at("classes").get<std::vector<int>>();
        for (auto& c : classes)
            --c;
        return std::pair{g, classes};
    });
}

// ------------------------------------------------------------ the app

struct Settings {
    bool json = false;
    std::int64_t budget = 10'000'000;
    int threads = 1;
    std::uint64_t seed = 1;
    std::string out;
};

inline void add_stats(RunReport& r, const SolveStats& s)
{
    r.set("nodes", s.nodes);
    r.set("preorders", s.preorders);
    r.set("programs", s.programs);
    r.set("max_table", s.max_table);
    r.set("max_fanout", s.max_fanout);
    r.set("seconds", s.seconds);
}

inline std::string coloring_text(const Coloring& c)
{
    std::ostringstream o;
    save_coloring(o, c);
    return o.str();
}

inline std::string expression_text(const MixedExpression& e)
{
    std::ostringstream o;
    print_expression(o, e);
    o << '\n';
    return o.str();
}

class App {
public:
    App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv)
    {
        CLI::App app{"Mixed graph colouring toolkit", "mixedcolor"};
        app.require_subcommand(1);
        app.fallthrough();
        app.add_flag("--json", s_.json, "Print the report as one JSON object");
        app.add_option("--budget", s_.budget, "Search node budget; exceeding it exits 2")->check(CLI::PositiveNumber);
        app.add_option("--threads", s_.threads, "Worker threads for the solvers")->check(CLI::PositiveNumber);
        app.add_option("--seed", s_.seed, "Seed for random generation");
        app.add_option("--out", s_.out, "Output file for generated graphs or expressions");

        std::string graph_path, cert_path, td_path, method = "branch", dump_path, second;
        std::optional<int> k;
        int width_cap = default_tc_width_cap;
        std::vector<std::string> gen_args;
        std::string expr_path;
        int rand_n = 8;
        double p_edge = 0.3, p_arc = 0.3;

        auto* solve = app.add_subcommand("solve", "Decide k-colourability, or compute chi without --k");
        solve->add_option("graph", graph_path, "Graph file")->required();
        solve->add_option("--k", k, "Number of colours");
        solve->add_option("--method", method, "brute | twdp | ndm | branch")
            ->check(CLI::IsMember({"brute", "twdp", "ndm", "branch"}));
        solve->add_option("--td", td_path, "Tree decomposition (.td) for twdp");
        solve->add_option("--cert", cert_path, "Write the witness colouring here");
        solve->add_option("--dump-ilp", dump_path, "Write the type solver's feasibility programs here");

        auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on chi");
        bounds->add_option("graph", graph_path, "Graph file")->required();
        bounds->add_option("--cert", cert_path, "Write the upper-bound colouring here");

        auto* params = app.add_subcommand("params", "Structural parameters");
        params->add_option("graph", graph_path, "Graph file")->required();

        auto* gen = app.add_subcommand("gen", "Generate a family member or a reduction output");
        gen->add_option("kind", gen_args,
                        "grid L | tournament L | layered L K | tripartite L | grid-arcs L | star L | snake L | "
                        "random | superstring F | scheduling F | list F | multicolored-clique F")
            ->required();
        gen->add_option("--n", rand_n, "random: vertex count")->check(CLI::NonNegativeNumber);
        gen->add_option("--pe", p_edge, "random: edge probability")->check(CLI::Range(0.0, 1.0));
        gen->add_option("--pa", p_arc, "random: arc probability")->check(CLI::Range(0.0, 1.0));
        gen->add_option("--expr", expr_path, "superstring (split): also write the width-6 expression here");

        auto* expr = app.add_subcommand("expr", "Mixed expressions");
        expr->require_subcommand(1);
        auto* eval = expr->add_subcommand("eval", "Evaluate an expression to a graph");
        eval->add_option("expression", graph_path, "Expression file")->required();
        auto* from_ndm = expr->add_subcommand("from-ndm", "Expression of width <= ndm+1 for a graph");
        from_ndm->add_option("graph", graph_path, "Graph file")->required();
        auto* tc = expr->add_subcommand("tc", "Expression for the transitive closure");
        tc->add_option("expression", graph_path, "Expression file")->required();
        tc->add_option("--width-cap", width_cap, "Largest accepted input width")->check(CLI::PositiveNumber);

        auto* verify = app.add_subcommand("verify", "Check a colouring certificate");
        verify->add_option("graph", graph_path, "Graph file")->required();
        verify->add_option("cert", second, "Certificate file")->required();

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return exit_yes;
        }
        catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return exit_yes;
        }
        catch (const CLI::ParseError& e) {
            err_ << "usage error: " << e.what() << '\n';
            return exit_error;
        }

        report_.set("command", command_echo(argc, argv));
        try {
            if (*solve)
                return run_solve(graph_path, k, method, td_path, cert_path, dump_path);
            if (*bounds)
                return run_bounds(graph_path, cert_path);
            if (*params)
                return run_params(graph_path);
            if (*gen)
                return run_gen(gen_args, rand_n, p_edge, p_arc, expr_path);
            if (*eval)
                return run_eval(graph_path);
            if (*from_ndm)
                return run_from_ndm(graph_path);
            if (*tc)
                return run_tc(graph_path, width_cap);
            if (*verify)
                return run_verify(graph_path, second);
        }
        catch (const UsageError& e) {
            err_ << "usage error: " << e.what() << '\n';
            return exit_error;
        }
        catch (const std::exception& e) {
            err_ << "error: " << e.what() << '\n';
            return exit_error;
        }
        return exit_error;
    }

private:
    static std::string command_echo(int argc, const char* const* argv)
    {
        std::string s = "mixedcolor";
        for (int i = 1; i < argc; ++i)
            s += std::string(" ") + argv[i];
        return s;
    }

    MixedGraph load_input_graph(const std::string& path)
    {
        auto text = read_file(path);
        report_.set("input_digest", fnv1a_hex(text));
        return load_graph(text);
    }

    int finish(int code)
    {
        report_.print(out_, s_.json);
        return code;
    }

    // Artifacts go to --out when given; otherwise to stdout, with the report moved to stderr.
    int emit_artifact(const std::string& text, int code = exit_yes)
    {
        if (!s_.out.empty()) {
            write_file(s_.out, text);
            report_.set("out", s_.out);
            return finish(code);
        }
        out_ << text;
        report_.print(err_, s_.json);
        return code;
    }

    void write_cert(const std::string& path, const Coloring& c)
    {
        if (path.empty())
            return;
        write_file(path, coloring_text(c));
        report_.set("cert", path);
    }

    SolveOptions solve_options() const
    {
        SolveOptions opt;
        opt.budget = s_.budget;
        opt.threads = s_.threads;
        return opt;
    }

    int run_solve(const std::string& path, std::optional<int> k, const std::string& method_text,
                  const std::string& td_path, const std::string& cert_path, const std::string& dump_path)
    {
        const Method method = *parse_method(method_text);
        auto g = load_input_graph(path);
        std::optional<TreeDecomposition> td;
        if (!td_path.empty()) {
            if (method != Method::twdp)
                throw UsageError("--td only applies to --method twdp");
            td = load_decomposition_file(td_path);
            validate_decomposition(g, *td);
        }
        if (!dump_path.empty()) {
            if (method != Method::ndm || !k)
                throw UsageError("--dump-ilp needs --method ndm and --k");
            dump_programs(g, *k, dump_path);
        }
        report_.set("method", method_name(method));
        report_.set("vertices", g.size());
        if (k) {
            if (*k < 0)
                throw UsageError("--k must be non-negative");
            auto r = decide(g, *k, method, solve_options(), td);
            report_.set("k", *k);
            report_.set("decision", r.decision ? "yes" : "no");
            add_stats(report_, r.stats);
            if (r.decision)
                write_cert(cert_path, *r.witness);
            return finish(r.decision ? exit_yes : exit_no);
        }
        auto r = chi_exact(g, method, solve_options(), td);
        report_.set("chi", r.chi);
        add_stats(report_, r.stats);
        write_cert(cert_path, r.witness);
        return finish(exit_yes);
    }

    void dump_programs(const MixedGraph& g, int k, const std::string& path)
    {
        std::ostringstream o;
        if (!g.empty() && k > 0) {
            auto ts = type_structure(g);
            int idx = 0;
            for (const auto& p : enumerate_preorders(ts)) {
                if (p.endpoint_count > k + 1)
                    continue;
                o << "# program " << idx++ << " (" << p.endpoint_count << " endpoints)\n";
                dump_program(o, build_preorder_program(ts, p, k).program);
            }
        }
        write_file(path, o.str());
        report_.set("ilp_dump", path);
    }

    int run_bounds(const std::string& path, const std::string& cert_path)
    {
        auto g = load_input_graph(path);
        auto b = chromatic_bounds(g, s_.budget);
        report_.set("lower", b.lower);
        report_.set("upper", b.upper);
        report_.set("lower_witness", b.lower_witness == LowerWitness::maxrank ? "maxrank" : "undirected_clique");
        report_.set("chi_undirected_exact", b.lower_exact_chi_undirected);
        write_cert(cert_path, b.upper_witness);
        return finish(exit_yes);
    }

    int run_params(const std::string& path)
    {
        auto g = load_input_graph(path);
        report_.set("vertices", g.size());
        report_.set("edges", static_cast<std::int64_t>(g.edges().size()));
        report_.set("arcs", static_cast<std::int64_t>(g.arcs().size()));
        report_.set("ndm", ndm(g));
        report_.set("ndu", ndu(g));
        report_.set("vc", vertex_cover_number(g, s_.budget).size);
        report_.set("omega", clique_number(g, s_.budget));
        const auto lay = layering(g);
        report_.set("maxrank", lay.maxrank());
        report_.set("layers", static_cast<std::int64_t>(lay.layers.size()));
        return finish(exit_yes);
    }

    static int int_arg(const std::vector<std::string>& args, std::size_t i)
    {
        if (i >= args.size())
            throw UsageError("'" + args[0] + "' needs " + std::to_string(i) + " integer parameter(s)");
        try {
            std::size_t used = 0;
            int v = std::stoi(args[i], &used);
            if (used != args[i].size())
                throw std::invalid_argument(args[i]);
            return v;
        }
        catch (const std::logic_error&) {
            throw UsageError("'" + args[i] + "' is not an integer");
        }
    }

    std::string file_arg(const std::vector<std::string>& args)
    {
        if (args.size() != 2)
            throw UsageError("'" + args[0] + "' needs one instance file");
        auto text = read_file(args[1]);
        report_.set("input_digest", fnv1a_hex(text));
        return text;
    }

    int run_gen(const std::vector<std::string>& args, int n, double pe, double pa, const std::string& expr_path)
    {
        const std::string& kind = args[0];
        report_.set("family", kind);
        auto expect = [&](std::size_t count) {
            if (args.size() != count + 1)
                throw UsageError("'" + kind + "' takes " + std::to_string(count) + " parameter(s)");
        };
        MixedGraph g;
        std::optional<int> colors;
        try {
            if (kind == "grid") {
                expect(1);
                g = family_oriented_grid(int_arg(args, 1));
            }
            else if (kind == "tournament") {
                expect(1);
                g = family_hamiltonian_tournament(int_arg(args, 1));
            }
            else if (kind == "layered") {
                expect(2);
                g = family_layered_cliques(int_arg(args, 1), int_arg(args, 2));
            }
            else if (kind == "tripartite") {
                expect(1);
                g = family_tripartite(int_arg(args, 1));
            }
            else if (kind == "grid-arcs") {
                expect(1);
                g = family_grid_arc_vertices(int_arg(args, 1));
            }
            else if (kind == "star") {
                expect(1);
                g = family_oriented_star(int_arg(args, 1));
            }
            else if (kind == "snake") {
                expect(1);
                g = family_grid_hamiltonian(int_arg(args, 1));
            }
            else if (kind == "random") {
                expect(0);
                if (pe + pa > 1.0)
                    throw UsageError("--pe + --pa must not exceed 1");
                std::mt19937_64 rng(s_.seed);
                g = random_mixed_graph(n, pe, pa, rng);
                report_.set("seed", static_cast<std::int64_t>(s_.seed));
            }
            else if (kind == "superstring") {
                auto [inst, split] = superstring_from_json(file_arg(args));
                auto r = reduce_superstring(inst, split);
                g = r.graph;
                colors = r.colors;
                report_.set("split", split);
                if (!expr_path.empty()) {
                    if (!split)
                        throw UsageError("--expr needs a split superstring instance");
                    auto e = superstring_split_expression(inst);
                    write_file(expr_path, expression_text(e));
                    report_.set("expression", expr_path);
                    report_.set("expression_width", width(e));
                }
            }
            else if (kind == "scheduling") {
                auto r = reduce_scheduling(scheduling_from_json(file_arg(args)));
                g = r.graph;
                colors = r.colors;
            }
            else if (kind == "list") {
                auto r = reduce_list_coloring(list_coloring_from_json(file_arg(args)));
                g = r.graph;
                colors = r.colors;
            }
            else if (kind == "multicolored-clique") {
                auto [src, classes] = multicolored_clique_from_json(file_arg(args));
                auto r = reduce_list_coloring(reduce_multicolored_clique(src, classes));
                g = r.graph;
                colors = r.colors;
            }
            else {
                throw UsageError("unknown generator '" + kind + "'");
            }
        }
        catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        report_.set("vertices", g.size());
        report_.set("edges", static_cast<std::int64_t>(g.edges().size()));
        report_.set("arcs", static_cast<std::int64_t>(g.arcs().size()));
        if (colors)
            report_.set("colors", *colors);
        return emit_artifact(to_text(g));
    }

    MixedExpression load_input_expression(const std::string& path)
    {
        auto text = read_file(path);
        report_.set("input_digest", fnv1a_hex(text));
        return parse_expression(text);
    }

    int run_eval(const std::string& path)
    {
        auto e = load_input_expression(path);
        auto g = evaluate(e).graph;
        report_.set("width", width(e));
        report_.set("vertices", g.size());
        report_.set("edges", static_cast<std::int64_t>(g.edges().size()));
        report_.set("arcs", static_cast<std::int64_t>(g.arcs().size()));
        return emit_artifact(to_text(g));
    }

    int run_from_ndm(const std::string& path)
    {
        auto g = load_input_graph(path);
        auto c = ndm_expression(g);
        report_.set("ndm", ndm(g));
        report_.set("width", width(c.expression));
        std::string corr;
        for (Vertex v : c.correspondence)
            corr += (corr.empty() ? "" : " ") + std::to_string(v + 1);
        report_.set("correspondence", corr);
        return emit_artifact(expression_text(c.expression));
    }

    int run_tc(const std::string& path, int cap)
    {
        auto e = load_input_expression(path);
        auto t = tc_expression(e, cap);
        report_.set("input_width", width(e));
        report_.set("width", width(t));
        return emit_artifact(expression_text(t));
    }

    int run_verify(const std::string& graph_path, const std::string& cert_path)
    {
        auto g = load_input_graph(graph_path);
        std::istringstream in(read_file(cert_path));
        auto c = load_coloring(in, g.size());
        try {
            auto check = check_proper(g, c);
            report_.set("proper", check.proper);
            report_.set("colors", c.color_count());
            if (check.violation) {
                const auto& v = *check.violation;
                report_.set("violation", std::string(v.kind == RelationKind::edge ? "edge " : "arc ") +
                                             std::to_string(v.u + 1) + " " + std::to_string(v.v + 1));
            }
            return finish(check.proper ? exit_yes : exit_no);
        }
        catch (const IncompleteColoring& e) {
            report_.set("proper", false);
            report_.set("violation", std::string("incomplete: ") + e.what());
            return finish(exit_no);
        }
    }

    std::ostream& out_;
    std::ostream& err_;
    Settings s_;
    RunReport report_;
};

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    return App(out, err).run(argc, argv);
}

} // namespace mixedcolor::cli

#endif
