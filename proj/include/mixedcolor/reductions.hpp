#ifndef MIXEDCOLOR_REDUCTIONS_HPP
#define MIXEDCOLOR_REDUCTIONS_HPP

// Generators turning source-problem instances into mixed colouring instances.
// Vertex numbering follows input order so outputs are deterministic.

#include "mixedcolor/expression.hpp"
#include "mixedcolor/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixedcolor {

/// Output of a reduction: colour with `colors` colours iff the source instance is a yes-instance.
struct ColoringInstance {
    MixedGraph graph;
    int colors = 0;
};

// ---------------------------------------------------------------- superstring

/// Binary strings and a target length. "Superstring" means supersequence: each
/// string is obtained from it by deleting characters.
struct SuperstringInstance {
    std::vector<std::string> strings;
    int k = 0;
};

inline void validate(const SuperstringInstance& inst)
{
    if (inst.k < 1)
        throw std::invalid_argument("superstring length must be positive");
    for (const auto& s : inst.strings) {
        if (s.empty())
            throw std::invalid_argument("empty string in superstring instance");
        if (s.find_first_not_of("01") != std::string::npos)
            throw std::invalid_argument("string '" + s + "' is not over {0,1}");
    }
}

namespace detail {

    inline std::vector<Edge> cross_character_edges(const std::vector<std::vector<std::vector<Vertex>>>& groups,
                                                   const std::vector<std::string>& strings)
    {
        // groups[s][p] = vertices standing for character p of string s
        std::vector<Edge> edges;
        for (std::size_t s = 0; s < strings.size(); ++s)
            for (std::size_t t = s + 1; t < strings.size(); ++t)
                for (std::size_t p = 0; p < strings[s].size(); ++p)
                    for (std::size_t q = 0; q < strings[t].size(); ++q)
                        if (strings[s][p] != strings[t][q])
                            for (Vertex a : groups[s][p])
                                for (Vertex b : groups[t][q])
                                    edges.push_back(make_edge(a, b));
        return edges;
    }

} // namespace detail

/// Unsplit: one directed path per string. Split: each character becomes an
/// in-sibling and an out-sibling sharing a private (k-1)-clique; maxrank drops to 1.
/// Split numbering per character: in-sibling, clique vertices, out-sibling.
inline ColoringInstance reduce_superstring(const SuperstringInstance& inst, bool split = false)
{
    validate(inst);
    std::vector<std::vector<std::vector<Vertex>>> groups(inst.strings.size());
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    int n = 0;
    for (std::size_t s = 0; s < inst.strings.size(); ++s) {
        Vertex prev_out = -1;
        for (std::size_t p = 0; p < inst.strings[s].size(); ++p) {
            if (!split) {
                Vertex v = n++;
                if (prev_out >= 0)
                    arcs.push_back({prev_out, v});
                groups[s].push_back({v});
                prev_out = v;
                continue;
            }
            Vertex in = n++;
            std::vector<Vertex> clique;
            for (int i = 0; i < inst.k - 1; ++i)
                clique.push_back(n++);
            Vertex out = n++;
            if (prev_out >= 0)
                arcs.push_back({prev_out, in});
            for (std::size_t i = 0; i < clique.size(); ++i) {
                edges.push_back(make_edge(in, clique[i]));
                edges.push_back(make_edge(out, clique[i]));
                for (std::size_t j = i + 1; j < clique.size(); ++j)
                    edges.push_back(make_edge(clique[i], clique[j]));
            }
            groups[s].push_back({in, out});
            prev_out = out;
        }
    }
    auto cross = detail::cross_character_edges(groups, inst.strings);
    edges.insert(edges.end(), cross.begin(), cross.end());
    return {MixedGraph::create(n, std::move(edges), std::move(arcs)), inst.k};
}

/// Width-6 expression building the split reduction with the same vertex numbering.
/// Labels: 1 and 2 finished characters '0'/'1', 3 finished cliques, 4 clique under
/// construction, 5 in-sibling, 6 out-sibling.
inline MixedExpression superstring_split_expression(const SuperstringInstance& inst)
{
    validate(inst);
    if (inst.strings.empty())
        return {};
    ExpressionBuilder b;
    auto clique = [&](int size) {
        int cur = b.intro(4);
        for (int i = 1; i < size; ++i) {
            cur = b.unite(cur, b.intro(3));
            cur = b.edge(4, 3, cur);
            cur = b.relabel(3, 4, cur);
        }
        return cur;
    };
    int acc = -1;
    for (const auto& str : inst.strings) {
        int cur = -1;
        int prev_label = 0;
        for (std::size_t p = 0; p < str.size(); ++p) {
            const int label = str[p] == '0' ? 1 : 2;
            if (cur < 0) {
                cur = b.intro(5);
            }
            else {
                cur = b.unite(cur, b.intro(5));
                cur = b.arc(6, 5, cur);
                cur = b.relabel(6, prev_label, cur);
            }
            if (inst.k > 1) {
                cur = b.unite(cur, clique(inst.k - 1));
                cur = b.edge(4, 5, cur);
            }
            cur = b.relabel(5, label, cur);
            cur = b.unite(cur, b.intro(6));
            if (inst.k > 1) {
                cur = b.edge(4, 6, cur);
                cur = b.relabel(4, 3, cur);
            }
            prev_label = label;
        }
        cur = b.relabel(6, prev_label, cur);
        if (acc < 0) {
            acc = cur;
            continue;
        }
        // Move the new path to labels 4..6 so cross edges only hit it.
        cur = b.relabel(3, 6, b.relabel(2, 5, b.relabel(1, 4, cur)));
        acc = b.unite(acc, cur);
        acc = b.edge(2, 4, b.edge(1, 5, acc));
        acc = b.relabel(6, 3, b.relabel(5, 2, b.relabel(4, 1, acc)));
    }
    return b.build(acc);
}

/// Colouring of the unsplit reduction from a common supersequence `s`: every
/// character gets the position (1-based) of its leftmost embedding.
/// Throws std::invalid_argument if `s` is not a supersequence of every string.
inline Coloring superstring_coloring(const SuperstringInstance& inst, const std::string& s)
{
    std::vector<int> colors;
    for (const auto& str : inst.strings) {
        std::size_t pos = 0;
        for (char ch : str) {
            while (pos < s.size() && s[pos] != ch)
                ++pos;
            if (pos == s.size())
                throw std::invalid_argument("'" + s + "' is not a supersequence of '" + str + "'");
            colors.push_back(static_cast<int>(++pos));
        }
    }
    return Coloring(std::move(colors));
}

// ---------------------------------------------------------------- scheduling

/// Unit tasks on two machines with precedences and a deadline.
struct SchedulingInstance {
    std::vector<std::string> tasks_m1;
    std::vector<std::string> tasks_m2;
    std::vector<std::pair<std::string, std::string>> precedence; ///< (t, t'): t finishes before t' starts
    int deadline = 1;

    /// Machine-1 tasks then machine-2 tasks, in input order.
    std::vector<std::string> tasks() const
    {
        auto all = tasks_m1;
        all.insert(all.end(), tasks_m2.begin(), tasks_m2.end());
        return all;
    }
};

/// Task name -> index in tasks(). Throws std::invalid_argument on duplicates,
/// unknown names, a non-positive deadline, or cyclic precedence.
inline std::map<std::string, int> validate(const SchedulingInstance& inst)
{
    if (inst.deadline < 1)
        throw std::invalid_argument("deadline must be positive");
    std::map<std::string, int> index;
    auto all = inst.tasks();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (!index.emplace(all[i], static_cast<int>(i)).second)
            throw std::invalid_argument("task '" + all[i] + "' listed twice");
    std::vector<Arc> order;
    for (const auto& [a, b] : inst.precedence) {
        if (!index.contains(a) || !index.contains(b))
            throw std::invalid_argument("precedence mentions unknown task");
        if (a == b)
            throw std::invalid_argument("task '" + a + "' precedes itself");
        order.push_back({index[a], index[b]});
    }
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    try {
        MixedGraph::create(static_cast<int>(all.size()), {}, order);
    }
    catch (const Error&) {
        throw std::invalid_argument("precedence relation is cyclic or contradictory");
    }
    return index;
}

/// Path p_1..p_4D first (vertices 0..4D-1), then per task its start and end vertex.
/// Start/end colours are forced into residues 1/3 (machine 1) or 2/0 (machine 2) mod 4.
inline ColoringInstance reduce_scheduling(const SchedulingInstance& inst)
{
    auto index = validate(inst);
    const int path = 4 * inst.deadline;
    const int tasks = static_cast<int>(index.size());
    const int m1 = static_cast<int>(inst.tasks_m1.size());
    const int n = path + 2 * tasks;
    auto start = [&](int t) { return path + 2 * t; };
    auto finish = [&](int t) { return path + 2 * t + 1; };

    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < path; ++i)
        arcs.push_back({i, i + 1});
    for (int t = 0; t < tasks; ++t) {
        arcs.push_back({start(t), finish(t)});
        const int start_residue = t < m1 ? 1 : 2;
        const int finish_residue = t < m1 ? 3 : 0;
        for (int i = 1; i <= path; ++i) {
            if (i % 4 != start_residue)
                edges.push_back(make_edge(start(t), i - 1));
            if (i % 4 != finish_residue)
                edges.push_back(make_edge(finish(t), i - 1));
        }
    }
    std::set<std::pair<Vertex, Vertex>> directed;
    for (const auto& [a, b] : inst.precedence) {
        Arc arc{finish(index[a]), start(index[b])};
        if (directed.insert({arc.tail, arc.head}).second)
            arcs.push_back(arc);
    }
    for (int t = 0; t < tasks; ++t)
        directed.insert({start(t), finish(t)});
    for (Vertex a = path; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!directed.contains({a, b}) && !directed.contains({b, a}))
                edges.push_back({a, b});
    return {MixedGraph::create(n, std::move(edges), std::move(arcs)), path};
}

/// Colouring of the scheduling reduction from 1-based time slots per task (tasks() order).
inline Coloring schedule_coloring(const SchedulingInstance& inst, const std::vector<int>& slot)
{
    const int path = 4 * inst.deadline;
    const int m1 = static_cast<int>(inst.tasks_m1.size());
    std::vector<int> colors(path + 2 * slot.size());
    for (int i = 0; i < path; ++i)
        colors[i] = i + 1;
    for (std::size_t t = 0; t < slot.size(); ++t) {
        const int base = 4 * (slot[t] - 1);
        const bool first = static_cast<int>(t) < m1;
        colors[path + 2 * t] = base + (first ? 1 : 2);
        colors[path + 2 * t + 1] = base + (first ? 3 : 4);
    }
    return Coloring(std::move(colors));
}

// ---------------------------------------------------------------- list colouring

/// Undirected graph with a list of allowed colours (1..colors) per vertex.
struct ListColoringInstance {
    MixedGraph graph;
    std::vector<std::vector<int>> lists;
    int colors = 0;
};

inline void validate(const ListColoringInstance& inst)
{
    if (!inst.graph.arcs().empty())
        throw std::invalid_argument("list colouring needs an undirected graph");
    if (static_cast<int>(inst.lists.size()) != inst.graph.size())
        throw std::invalid_argument("one list per vertex required");
    for (const auto& list : inst.lists) {
        if (list.empty())
            throw std::invalid_argument("empty colour list");
        for (int c : list)
            if (c < 1 || c > inst.colors)
                throw std::invalid_argument("list colour " + std::to_string(c) + " outside 1.." +
                                            std::to_string(inst.colors));
    }
}

/// For every vertex v and forbidden colour j, appends a directed path of `colors`
/// vertices whose j-th vertex gets an edge to v. Paths follow vertex order, then j.
inline ColoringInstance reduce_list_coloring(const ListColoringInstance& inst)
{
    validate(inst);
    const int l = inst.colors;
    std::vector<Edge> edges = inst.graph.edges();
    std::vector<Arc> arcs;
    int n = inst.graph.size();
    for (Vertex v = 0; v < inst.graph.size(); ++v) {
        std::set<int> allowed(inst.lists[v].begin(), inst.lists[v].end());
        for (int j = 1; j <= l; ++j) {
            if (allowed.contains(j))
                continue;
            const Vertex first = n;
            n += l;
            for (int i = 0; i + 1 < l; ++i)
                arcs.push_back({first + i, first + i + 1});
            edges.push_back(make_edge(v, first + j - 1));
        }
    }
    return {MixedGraph::create(n, std::move(edges), std::move(arcs)), l};
}

/// Class vertices first (list = members of the class, as colours id+1), then one
/// vertex per non-adjacent cross-class pair x < y with list {x+1, y+1}.
/// `class_of[v]` must lie in 0..classes-1 and every class must be nonempty.
inline ListColoringInstance reduce_multicolored_clique(const MixedGraph& g, const std::vector<int>& class_of)
{
    if (!g.arcs().empty())
        throw std::invalid_argument("multicoloured clique needs an undirected graph");
    if (static_cast<int>(class_of.size()) != g.size())
        throw std::invalid_argument("one class per vertex required");
    int classes = 0;
    for (int c : class_of) {
        if (c < 0)
            throw std::invalid_argument("negative class");
        classes = std::max(classes, c + 1);
    }
    ListColoringInstance out;
    out.colors = g.size();
    out.lists.assign(classes, {});
    for (Vertex v = 0; v < g.size(); ++v)
        out.lists[class_of[v]].push_back(v + 1);
    for (const auto& list : out.lists)
        if (list.empty())
            throw std::invalid_argument("empty colour class");
    std::vector<Edge> edges;
    int n = classes;
    for (Vertex x = 0; x < g.size(); ++x)
        for (Vertex y = x + 1; y < g.size(); ++y) {
            if (class_of[x] == class_of[y] || g.has_edge(x, y))
                continue;
            edges.push_back({class_of[x], n});
            edges.push_back({class_of[y], n});
            out.lists.push_back({x + 1, y + 1});
            ++n;
        }
    out.graph = MixedGraph::create(n, std::move(edges), {});
    return out;
}

} // namespace mixedcolor

#endif
