// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "mixedcolor/bounds.hpp"
#include "mixedcolor/expression.hpp"
#include "mixedcolor/expression_transforms.hpp"
#include "mixedcolor/families.hpp"
#include "mixedcolor/oracles.hpp"
#include "mixedcolor/parameters.hpp"
#include "mixedcolor/reductions.hpp"
#include "mixedcolor/solvers.hpp"
#include "instances.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace mixedcolor;
using namespace mixedcolor::testing;

namespace {

const std::string data_dir = MIXEDCOLOR_DATA_DIR;

constexpr double c1_time_limit_seconds = 300.0;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass)
            detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

int chi_by(const MixedGraph& g, Method m) { return chi_exact(g, m).chi; }

Outcome oracle_equivalence()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    auto corpus = random_corpus(240, 8, 1001);
    int disagreements = 0;
    for (const auto& g : corpus) {
        const int chi = brute_force_chi(g).chi;
        for (Method m : {Method::twdp, Method::ndm, Method::branch}) {
            auto r = chi_exact(g, m);
            const bool ok = r.chi == chi && (g.empty() || check_proper(g, r.witness).proper);
            if (!ok)
                ++disagreements;
            o.require(ok, std::string(method_name(m)) + " on\n" + to_text(g));
        }
    }
    const double t = seconds_since(start);
    o.require(t <= c1_time_limit_seconds, "time limit");
    o.detail << corpus.size() << " graphs, " << disagreements << " disagreements, " << t << " s (limit "
             << c1_time_limit_seconds << " s)";
    return o;
}

Outcome figure_instances()
{
    Outcome o;
    SuperstringInstance strings{{"01", "100", "11"}, 4};
    auto small = reduce_superstring(strings).graph;
    auto upper = superstring_coloring(strings, "1010");
    o.require(check_proper(small, upper).proper && upper.color_count() == 4, "1010 colouring");
    auto three = strings;
    three.k = 3;
    o.require(!find_common_supersequence(three).has_value(), "no length-3 supersequence");
    const int chi2 = chi_by(small, Method::twdp);
    o.require(chi2 == 4, "superstring graph chi");

    SchedulingInstance sched{{"t1"}, {"t2", "t3"}, {{"t1", "t3"}}, 2};
    const bool eight = decide(reduce_scheduling(sched).graph, 8, Method::branch).decision;
    o.require(eight, "scheduling graph 8-colourable");
    sched.deadline = 1;
    const bool four = decide(reduce_scheduling(sched).graph, 4, Method::branch).decision;
    o.require(!four, "deadline-1 variant not 4-colourable");
    o.detail << "superstring chi=" << chi2 << ", scheduling 8-colourable=" << eight
             << ", deadline-1 4-colourable=" << four;
    return o;
}

Outcome tightness()
{
    Outcome o;
    int checked = 0;
    for (int l = 1; l <= 3; ++l)
        for (int k = 1; k <= 3; ++k) {
            auto g = family_layered_cliques(l, k);
            const int expected = (l + 1) * k;
            const int chi = chi_by(g, Method::ndm);
            auto c = layering_coloring(g);
            o.require(chi == expected, "chi of layered cliques " + std::to_string(l) + "," + std::to_string(k));
            o.require(check_proper(g, c).proper && c.color_count() == expected, "layering colouring");
            ++checked;
        }
    o.detail << checked << " (l,k) pairs with chi = (l+1)k";
    return o;
}

Outcome constructive_bound()
{
    Outcome o;
    for (int l = 1; l <= 6; ++l) {
        auto g = directed_path(2 * l);
        auto cover = vertex_cover_number(g).cover;
        auto c = vc_coloring(g, cover);
        o.require(static_cast<int>(cover.size()) == l, "cover size of P_" + std::to_string(2 * l));
        o.require(check_proper(g, c).proper && c.color_count() == 2 * l + 1, "2l+1 colours");
    }
    int graphs = 0;
    Rng rng(1004);
    while (graphs < 100) {
        auto g = random_corpus(1, 10, rng())[0];
        auto cover = vertex_cover_number(g).cover;
        if (cover.size() > 6)
            continue;
        auto c = vc_coloring(g, cover);
        o.require(check_proper(g, c).proper, "vc colouring proper");
        o.require(c.color_count() <= 2 * static_cast<int>(cover.size()) + 1, "vc colouring size");
        ++graphs;
    }
    o.detail << "paths l=1..6 exact, " << graphs << " random graphs within 2vc+1";
    return o;
}

Outcome parameter_inequalities()
{
    Outcome o;
    std::vector<std::pair<std::string, MixedGraph>> graphs;
    for (int l = 1; l <= 4; ++l) {
        graphs.push_back({"grid", family_oriented_grid(l)});
        graphs.push_back({"tournament", family_hamiltonian_tournament(l)});
        graphs.push_back({"tripartite", family_tripartite(l)});
        graphs.push_back({"star", family_oriented_star(l)});
        graphs.push_back({"snake", family_grid_hamiltonian(l)});
        for (int k = 1; k <= 4; ++k)
            graphs.push_back({"layered", family_layered_cliques(l, k)});
        if (l >= 2)
            graphs.push_back({"grid-arcs", family_grid_arc_vertices(l)});
    }
    for (const auto& g : random_corpus(100, 10, 1005))
        graphs.push_back({"random", g});
    int checked = 0;
    for (const auto& [name, g] : graphs) {
        const int m = ndm(g);
        const int vc = vertex_cover_number(g).size;
        const auto closure = transitive_closure(g);
        o.require(ndu(g) <= m, name + ": ndu <= ndm");
        o.require(vc >= 16 || m <= vc + (1 << (2 * vc)), name + ": ndm <= vc + 4^vc");
        o.require(ndm(closure) <= m, name + ": closure ndm");
        o.require(maxrank(g) <= 2 * vc, name + ": maxrank <= 2vc");
        ++checked;
    }
    for (int l = 0; l <= 8; ++l)
        o.require(ndm(directed_path(l)) >= l + 1, "directed path ndm");
    for (int l = 1; l <= 4; ++l) {
        auto t = family_tripartite(l);
        o.require(ndm(t) == 2 * l + 4, "tripartite ndm");
        o.require(ndm(transitive_closure(t)) == 6, "tripartite closure ndm");
        auto h = family_hamiltonian_tournament(l);
        o.require(ndu(h) == 1 && ndm(h) == l, "tournament ndu/ndm");
    }
    o.detail << checked << " graphs, directed paths 0..8, family values l=1..4";
    return o;
}

Outcome reduction_equivalences()
{
    Outcome o;
    Rng rng(1006);
    int counts[4] = {0, 0, 0, 0}, yes[4] = {0, 0, 0, 0};
    for (int i = 0; i < 80; ++i) {
        auto s = random_superstring(rng);
        const bool source = find_common_supersequence(s).has_value();
        auto r = reduce_superstring(s);
        o.require(decide(r.graph, r.colors, Method::twdp).decision == source, "superstring");
        ++counts[0];
        yes[0] += source;
    }
    for (int i = 0; i < 80; ++i) {
        auto p = random_scheduling(rng);
        const bool source = find_schedule(p).has_value();
        auto r = reduce_scheduling(p);
        o.require(decide(r.graph, r.colors, Method::branch).decision == source, "scheduling");
        ++counts[1];
        yes[1] += source;
    }
    for (int i = 0; i < 80; ++i) {
        auto inst = random_list_coloring(rng);
        const bool source = find_list_coloring(inst).has_value();
        auto r = reduce_list_coloring(inst);
        o.require(decide(r.graph, r.colors, Method::twdp).decision == source, "list colouring");
        ++counts[2];
        yes[2] += source;
    }
    for (int i = 0; i < 80; ++i) {
        auto [g, cls] = random_three_class_graph(rng);
        const bool source = find_multicolored_clique(g, cls).has_value();
        auto li = reduce_multicolored_clique(g, cls);
        o.require(find_list_coloring(li).has_value() == source, "multicoloured clique to list colouring");
        auto r = reduce_list_coloring(li);
        o.require(decide(r.graph, r.colors, Method::twdp).decision == source, "multicoloured clique chain");
        ++counts[3];
        yes[3] += source;
    }
    const char* names[] = {"superstring", "scheduling", "list", "multicoloured-clique"};
    for (int i = 0; i < 4; ++i) {
        o.require(counts[i] >= 50, std::string(names[i]) + " count");
        o.detail << names[i] << " " << counts[i] << " (" << yes[i] << " yes)" << (i < 3 ? ", " : "");
    }
    return o;
}

Outcome expression_suite()
{
    Outcome o;
    auto path3 = load_expression_file(data_dir + "/path3.expr");
    auto g = evaluate(path3).graph;
    o.require(width(path3) == 3, "example width");
    // the example's path counts four vertices (three arcs)
    o.require(g.size() == 4 && g.edges().empty() && g.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}},
              "example evaluates to the directed path on four vertices");

    for (int n = 1; n <= 8; ++n) {
        std::vector<Arc> arcs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                arcs.push_back({i, j});
        auto e = tournament_expression(n);
        o.require(width(e) <= 2 && evaluate(e).graph == MixedGraph::create(n, {}, arcs), "tournament");
    }

    int round_trips = 0;
    for (const auto& h : random_corpus(200, 8, 1007)) {
        auto c = ndm_expression(h);
        auto ev = evaluate(c.expression).graph;
        bool same = ev.size() == h.size() && ev.edges().size() == h.edges().size() &&
                    ev.arcs().size() == h.arcs().size();
        for (const auto& e : ev.edges())
            same = same && h.has_edge(c.correspondence[e.u], c.correspondence[e.v]);
        for (const auto& a : ev.arcs())
            same = same && h.has_arc(c.correspondence[a.tail], c.correspondence[a.head]);
        o.require(same && width(c.expression) <= ndm(h) + 1, "ndm expression round trip");
        ++round_trips;
    }

    Rng rng(1008);
    int tc_matches = 0, tc_conflicts = 0, directed_checks = 0;
    for (int i = 0; i < 400; ++i) {
        ExpressionBuilder b;
        auto e = b.build(random_expression(b, rng, 2 + static_cast<int>(rng() % 7), 3, 3));
        MixedGraph h;
        try {
            h = evaluate(e).graph;
        }
        catch (const Error&) {
            continue;
        }
        o.require(evaluate_arcs_relaxed(mixed_to_directed(e)) == corresponding_digraph(h), "mixed_to_directed");
        ++directed_checks;
        try {
            auto t = tc_expression(e);
            o.require(evaluate(t).graph == transitive_closure(h), "tc expression");
            ++tc_matches;
        }
        catch (const ClosureConflict&) {
            ++tc_conflicts;
        }
    }
    o.require(tc_matches >= 30, "at least 30 closure matches");
    o.detail << "example is a 4-vertex directed path, tournaments 1..8 at width 2, " << round_trips
             << " ndm round trips, tc " << tc_matches << " matches (" << tc_conflicts << " conflicts skipped), "
             << directed_checks << " directed checks";
    return o;
}

Outcome branching_fanout()
{
    Outcome o;
    std::int64_t nodes = 0, worst_fanout = 0;
    for (const auto& g : random_corpus(200, 10, 1009)) {
        SolveOptions opt;
        opt.on_fanout = [&](const VertexSet& residual, std::int64_t fanout) {
            std::vector<Vertex> keep;
            for (int v = residual.first(); v != -1; v = residual.next(v + 1))
                keep.push_back(v);
            auto sub = induced_subgraph(g, std::span<const Vertex>(keep));
            const double bound = std::pow(clique_number(sub) + 1, ndu(sub));
            o.require(static_cast<double>(fanout) <= bound, "fan-out bound on\n" + to_text(g));
            worst_fanout = std::max(worst_fanout, fanout);
            ++nodes;
        };
        const int upper = layering_coloring(g).color_count();
        for (int k = std::max(1, upper - 2); k <= upper; ++k)
            branching_decide(g, k, opt);
    }
    o.detail << nodes << " branching nodes checked, largest fan-out " << worst_fanout;
    return o;
}

Outcome feasibility_solver()
{
    Outcome o;
    Rng rng(1010);
    int programs = 0, feasible = 0, disagreements = 0, resampled = 0;
    while (programs < 500) {
        auto p = random_program(rng, 12, 10);
        std::optional<Assignment> expected;
        try {
            expected = enumerate_feasibility(p);
        }
        catch (const CapExceeded&) {
            ++resampled;
            continue;
        }
        auto got = solve_feasibility(p);
        const bool ok = got.has_value() == expected.has_value() && (!got || p.satisfied_by(*got));
        disagreements += !ok;
        o.require(ok, "program " + std::to_string(programs));
        feasible += expected.has_value();
        ++programs;
    }
    o.detail << programs << " programs (" << feasible << " feasible), " << disagreements << " disagreements, "
             << resampled << " resampled above the enumeration cap";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "oracle equivalence", oracle_equivalence},
        {2, "figure instances", figure_instances},
        {3, "layered-clique tightness", tightness},
        {4, "vertex-cover colouring bound", constructive_bound},
        {5, "parameter inequalities", parameter_inequalities},
        {6, "reduction equivalences", reduction_equivalences},
        {7, "expression suite", expression_suite},
        {8, "branching fan-out bound", branching_fanout},
        {9, "feasibility solver", feasibility_solver},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": "
                  << o.detail.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
