#ifndef MIXEDCOLOR_BOUNDS_HPP
#define MIXEDCOLOR_BOUNDS_HPP

#include "mixedcolor/graph.hpp"
#include "mixedcolor/parameters.hpp"
#include "mixedcolor/undirected.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace mixedcolor {

enum class RelationKind { edge, arc };

struct Violation {
    RelationKind kind = RelationKind::edge;
    Vertex u = 0; ///< tail for arcs
    Vertex v = 0;
};

struct ProperCheck {
    bool proper = true;
    std::optional<Violation> violation; ///< lexicographically smallest violated pair

    explicit operator bool() const { return proper; }
};

/// Throws IncompleteColoring if `c` does not assign a colour >= 1 to every vertex.
inline ProperCheck check_proper(const MixedGraph& g, const Coloring& c)
{
    if (c.size() != g.size())
        throw IncompleteColoring("colouring covers " + std::to_string(c.size()) + " of " +
                                 std::to_string(g.size()) + " vertices");
    for (Vertex v = 0; v < g.size(); ++v)
        if (c[v] < 1)
            throw IncompleteColoring("vertex " + std::to_string(v + 1) + " has no colour");
    std::optional<Violation> worst;
    auto consider = [&](Violation x) {
        if (!worst || std::pair{x.u, x.v} < std::pair{worst->u, worst->v})
            worst = x;
    };
    for (const auto& e : g.edges())
        if (c[e.u] == c[e.v])
            consider({RelationKind::edge, e.u, e.v});
    for (const auto& a : g.arcs())
        if (c[a.tail] >= c[a.head])
            consider({RelationKind::arc, a.tail, a.head});
    return {!worst.has_value(), worst};
}

struct LowerBounds {
    int chi_undirected = 0; ///< exact, or the clique number when `chi_undirected_exact` is false
    bool chi_undirected_exact = true;
    int maxrank = 0;
    int combined = 0; ///< max(chi_undirected, maxrank + 1); 0 for the empty graph
};

inline LowerBounds lower_bounds(const MixedGraph& g, std::int64_t budget = default_node_budget)
{
    LowerBounds lb;
    lb.maxrank = maxrank(g);
    if (g.empty())
        return lb;
    auto adj = undirected_adjacency(g);
    std::vector<Vertex> all(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        all[v] = v;
    try {
        auto col = exact_coloring(adj, all, budget);
        lb.chi_undirected = *std::max_element(col.begin(), col.end());
    }
    catch (const BudgetExceeded&) {
        lb.chi_undirected = static_cast<int>(maximum_clique(adj, budget).size());
        lb.chi_undirected_exact = false;
    }
    lb.combined = std::max(lb.chi_undirected, lb.maxrank + 1);
    return lb;
}

inline constexpr int exact_layer_limit = 20;

/// Colours layer i with a fresh block of colours above those of layers < i.
/// Layers up to `exact_limit` vertices are coloured optimally, larger ones by DSATUR.
inline Coloring layering_coloring(const MixedGraph& g, int exact_limit = exact_layer_limit,
                                  std::int64_t budget = default_node_budget)
{
    Coloring c(std::vector<int>(g.size(), 0));
    auto adj = undirected_adjacency(g);
    int offset = 0;
    for (const auto& layer : layering(g).layers) {
        std::vector<int> local;
        if (static_cast<int>(layer.size()) <= exact_limit) {
            try {
                local = exact_coloring(adj, layer, budget);
            }
            catch (const BudgetExceeded&) {
                local = dsatur_coloring(adj, layer);
            }
        }
        else {
            local = dsatur_coloring(adj, layer);
        }
        int used = 0;
        for (std::size_t i = 0; i < layer.size(); ++i) {
            c[layer[i]] = offset + local[i];
            used = std::max(used, local[i]);
        }
        offset += used;
    }
    return c;
}

/// Colouring with at most 2|cover|+1 colours: the i-th cover vertex in topological
/// order of the closure gets 2i, any other vertex one more than its largest in-neighbour.
inline Coloring vc_coloring(const MixedGraph& g, const std::vector<Vertex>& cover)
{
    VertexSet in_cover(g.size());
    for (Vertex v : cover) {
        if (v < 0 || v >= g.size())
            throw InvalidCover("cover vertex out of range");
        in_cover.insert(v);
    }
    auto uncovered = [&](Vertex a, Vertex b) { return !in_cover.contains(a) && !in_cover.contains(b); };
    for (const auto& e : g.edges())
        if (uncovered(e.u, e.v))
            throw InvalidCover("edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "} uncovered");
    for (const auto& a : g.arcs())
        if (uncovered(a.tail, a.head))
            throw InvalidCover("arc (" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) +
                               ") uncovered");

    Coloring c(std::vector<int>(g.size(), 0));
    auto members = in_cover.members();
    MixedGraph sub = induced_subgraph(transitive_closure(g), in_cover);
    const auto& order = sub.topological_order();
    for (std::size_t i = 0; i < order.size(); ++i)
        c[members[order[i]]] = 2 * static_cast<int>(i + 1);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (in_cover.contains(v))
            continue;
        int below = 0;
        for (Vertex u : g.in_neighbors(v))
            below = std::max(below, c[u]);
        c[v] = below + 1;
    }
    return c;
}

enum class LowerWitness { undirected_clique, maxrank };

struct ChromaticBounds {
    int lower = 0;
    int upper = 0;
    LowerWitness lower_witness = LowerWitness::undirected_clique;
    bool lower_exact_chi_undirected = true;
    Coloring upper_witness;
};

/// Lower bound plus the better of the layering and vertex-cover colourings, compacted.
inline ChromaticBounds chromatic_bounds(const MixedGraph& g, std::int64_t budget = default_node_budget)
{
    ChromaticBounds b;
    auto lb = lower_bounds(g, budget);
    b.lower = lb.combined;
    b.lower_exact_chi_undirected = lb.chi_undirected_exact;
    b.lower_witness = lb.chi_undirected >= lb.maxrank + 1 ? LowerWitness::undirected_clique : LowerWitness::maxrank;
    b.upper_witness = layering_coloring(g, exact_layer_limit, budget).compacted();
    try {
        auto cover = vertex_cover_number(g, budget);
        auto alt = vc_coloring(g, cover.cover).compacted();
        if (alt.color_count() < b.upper_witness.color_count())
            b.upper_witness = alt;
    }
    catch (const BudgetExceeded&) {
    }
    b.upper = b.upper_witness.color_count();
    return b;
}

} // namespace mixedcolor

#endif
