#ifndef MIXEDCOLOR_PARAMETERS_HPP
#define MIXEDCOLOR_PARAMETERS_HPP

#include "mixedcolor/graph.hpp"
#include "mixedcolor/undirected.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace mixedcolor {

enum class PartitionKind { mixed, undirected };
enum class ClassKind { clique, independent };

/// Vertex types: classes of equal in-, out- and undirected neighbourhoods
/// (mixed kind) or equal neighbourhoods in the underlying graph (undirected kind).
struct NeighborhoodPartition {
    PartitionKind kind = PartitionKind::mixed;
    std::vector<std::vector<Vertex>> classes; ///< ordered by smallest member; members ascending
    std::vector<ClassKind> class_kinds;       ///< singletons are reported as independent
    std::vector<int> class_of;                ///< vertex -> class index

    int count() const { return static_cast<int>(classes.size()); }
};

namespace detail {

    // Sorted-span equality after dropping one value from each side.
    inline bool equal_except(std::span<const Vertex> a, Vertex drop_a, std::span<const Vertex> b, Vertex drop_b)
    {
        auto ia = a.begin(), ib = b.begin();
        while (true) {
            while (ia != a.end() && *ia == drop_a)
                ++ia;
            while (ib != b.end() && *ib == drop_b)
                ++ib;
            if (ia == a.end() || ib == b.end())
                return ia == a.end() && ib == b.end();
            if (*ia != *ib)
                return false;
            ++ia;
            ++ib;
        }
    }

    inline bool same_mixed_type(const MixedGraph& g, Vertex u, Vertex v)
    {
        auto iu = g.in_neighbors(u), iv = g.in_neighbors(v);
        auto ou = g.out_neighbors(u), ov = g.out_neighbors(v);
        return std::ranges::equal(iu, iv) && std::ranges::equal(ou, ov) &&
               equal_except(g.undirected_neighbors(u), v, g.undirected_neighbors(v), u);
    }

    template <class SameType>
    NeighborhoodPartition build_partition(const MixedGraph& g, PartitionKind kind, SameType same)
    {
        NeighborhoodPartition p;
        p.kind = kind;
        p.class_of.assign(g.size(), -1);
        for (Vertex v = 0; v < g.size(); ++v) {
            int found = -1;
            for (int c = 0; c < p.count() && found < 0; ++c)
                if (same(p.classes[c].front(), v))
                    found = c;
            if (found < 0) {
                found = p.count();
                p.classes.emplace_back();
            }
            p.classes[found].push_back(v);
            p.class_of[v] = found;
        }
        for (const auto& cls : p.classes) {
            bool clique = cls.size() >= 2 && g.has_edge(cls[0], cls[1]);
            p.class_kinds.push_back(clique ? ClassKind::clique : ClassKind::independent);
        }
        return p;
    }

} // namespace detail

inline NeighborhoodPartition mixed_neighborhood_partition(const MixedGraph& g)
{
    return detail::build_partition(
        g, PartitionKind::mixed, [&](Vertex u, Vertex v) { return detail::same_mixed_type(g, u, v); });
}

inline NeighborhoodPartition undirected_neighborhood_partition(const MixedGraph& g)
{
    MixedGraph u = underlying_undirected(g);
    auto p = detail::build_partition(
        u, PartitionKind::undirected, [&](Vertex a, Vertex b) { return detail::same_mixed_type(u, a, b); });
    return p;
}

inline int ndm(const MixedGraph& g) { return mixed_neighborhood_partition(g).count(); }
inline int ndu(const MixedGraph& g) { return undirected_neighborhood_partition(g).count(); }

/// Minimum vertex cover of the underlying undirected graph, with a witness.
inline VertexCoverResult vertex_cover_number(const MixedGraph& g, std::int64_t budget = default_node_budget)
{
    return minimum_vertex_cover(undirected_adjacency(g), budget);
}

/// Maximum clique size of the underlying undirected graph (0 for the empty graph).
inline int clique_number(const MixedGraph& g, std::int64_t budget = default_node_budget)
{
    return static_cast<int>(maximum_clique(undirected_adjacency(g), budget).size());
}

} // namespace mixedcolor

#endif
