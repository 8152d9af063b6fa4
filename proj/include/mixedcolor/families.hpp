#ifndef MIXEDCOLOR_FAMILIES_HPP
#define MIXEDCOLOR_FAMILIES_HPP

// Parameterised graph families separating the structural parameters, plus a
// seeded random generator. Grid vertex (r, c) has id r * l + c.

#include "mixedcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mixedcolor {

namespace detail {

    inline void require_positive(int l, int minimum = 1)
    {
        if (l < minimum)
            throw std::invalid_argument("family parameter must be at least " + std::to_string(minimum));
    }

    // Edges on every pair not joined by an arc.
    inline std::vector<Edge> complement_edges(int n, const std::vector<Arc>& arcs)
    {
        std::set<std::pair<Vertex, Vertex>> taken;
        for (const auto& a : arcs)
            taken.insert(std::minmax(a.tail, a.head));
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!taken.contains({u, v}))
                    edges.push_back({u, v});
        return edges;
    }

} // namespace detail

/// l x l grid with arcs pointing right and down; every other pair is an edge,
/// so the underlying graph is complete.
inline MixedGraph family_oriented_grid(int l)
{
    detail::require_positive(l);
    std::vector<Arc> arcs;
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c) {
            if (c + 1 < l)
                arcs.push_back({r * l + c, r * l + c + 1});
            if (r + 1 < l)
                arcs.push_back({r * l + c, (r + 1) * l + c});
        }
    return MixedGraph::create(l * l, detail::complement_edges(l * l, arcs), arcs);
}

/// K_l with the path arcs i -> i+1 and edges elsewhere. ndu = 1, ndm = l.
inline MixedGraph family_hamiltonian_tournament(int l)
{
    detail::require_positive(l);
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < l; ++i)
        arcs.push_back({i, i + 1});
    return MixedGraph::create(l, detail::complement_edges(l, arcs), arcs);
}

/// l+1 layers, each a K_k, with arcs from every vertex of a layer to every vertex
/// of the next. Layer i holds ids i*k .. i*k+k-1. chi = (l+1) * k.
inline MixedGraph family_layered_cliques(int l, int k)
{
    detail::require_positive(l);
    detail::require_positive(k);
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (int layer = 0; layer <= l; ++layer)
        for (int i = 0; i < k; ++i) {
            const Vertex v = layer * k + i;
            for (int j = i + 1; j < k; ++j)
                edges.push_back({v, layer * k + j});
            if (layer < l)
                for (int j = 0; j < k; ++j)
                    arcs.push_back({v, (layer + 1) * k + j});
        }
    return MixedGraph::create((l + 1) * k, std::move(edges), std::move(arcs));
}

/// Independent sets u_1..u_l, v_1..v_l, w_1..w_l (ids 0.., l.., 2l..), then u*, v*, w*.
/// Arcs u_i -> v_j, v_i -> w_j and u_i -> w_i; star edges from each starred vertex
/// to its set. ndm = 2l + 4, ndm of the closure = 6.
inline MixedGraph family_tripartite(int l)
{
    detail::require_positive(l);
    const Vertex u = 0, v = l, w = 2 * l;
    const Vertex star = 3 * l;
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            arcs.push_back({u + i, v + j});
            arcs.push_back({v + i, w + j});
        }
        arcs.push_back({u + i, w + i});
        edges.push_back({u + i, star});
        edges.push_back({v + i, star + 1});
        edges.push_back({w + i, star + 2});
    }
    return MixedGraph::create(3 * l + 3, std::move(edges), std::move(arcs));
}

/// l*l independent grid vertices plus one arc vertex per grid-adjacent pair
/// (horizontal pairs row by row, then vertical pairs). Pairs are oriented from the
/// even-parity cell (r + c even) to the odd one, so every directed path has length 2
/// and the closure induces exactly the grid on the grid vertices. Each arc vertex
/// gets edges to all grid vertices it has no arc with. ndu = 2.
inline MixedGraph family_grid_arc_vertices(int l)
{
    detail::require_positive(l, 2);
    const int grid = l * l;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int r = 0; r < l; ++r)
        for (int c = 0; c + 1 < l; ++c)
            pairs.push_back({r * l + c, r * l + c + 1});
    for (int r = 0; r + 1 < l; ++r)
        for (int c = 0; c < l; ++c)
            pairs.push_back({r * l + c, (r + 1) * l + c});
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    Vertex x = grid;
    for (auto [a, b] : pairs) {
        const bool a_even = ((a / l) + (a % l)) % 2 == 0;
        if (!a_even)
            std::swap(a, b);
        arcs.push_back({a, x});
        arcs.push_back({x, b});
        for (Vertex g = 0; g < grid; ++g)
            if (g != a && g != b)
                edges.push_back({g, x});
        ++x;
    }
    return MixedGraph::create(x, std::move(edges), std::move(arcs));
}

/// u_1..u_l, v, w_1..w_l with arcs u_i -> v -> w_j. vc = 1; the closure contains K_{l,l}.
inline MixedGraph family_oriented_star(int l)
{
    detail::require_positive(l);
    const Vertex centre = l;
    std::vector<Arc> arcs;
    for (int i = 0; i < l; ++i) {
        arcs.push_back({i, centre});
        arcs.push_back({centre, l + 1 + i});
    }
    return MixedGraph::create(2 * l + 1, {}, std::move(arcs));
}

/// l x l grid whose boustrophedon path (row 0 left to right, row 1 right to left, ...)
/// is oriented; the remaining grid edges stay undirected. The closure is the acyclic tournament.
inline MixedGraph family_grid_hamiltonian(int l)
{
    detail::require_positive(l);
    std::vector<Vertex> snake;
    for (int r = 0; r < l; ++r)
        for (int i = 0; i < l; ++i)
            snake.push_back(r * l + (r % 2 == 0 ? i : l - 1 - i));
    std::vector<Arc> arcs;
    std::set<std::pair<Vertex, Vertex>> oriented;
    for (std::size_t i = 0; i + 1 < snake.size(); ++i) {
        arcs.push_back({snake[i], snake[i + 1]});
        oriented.insert(std::minmax(snake[i], snake[i + 1]));
    }
    std::vector<Edge> edges;
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c) {
            const Vertex a = r * l + c;
            for (Vertex b : {c + 1 < l ? a + 1 : -1, r + 1 < l ? a + l : -1})
                if (b >= 0 && !oriented.contains({a, b}))
                    edges.push_back({a, b});
        }
    return MixedGraph::create(l * l, std::move(edges), std::move(arcs));
}

/// Random acyclic mixed graph: a random permutation fixes the topological order,
/// each pair independently becomes an arc (forward in that order) with probability
/// `p_arc`, else an edge with probability `p_edge`.
template <class Rng>
MixedGraph random_mixed_graph(int n, double p_edge, double p_arc, Rng& rng)
{
    if (n < 0 || p_edge < 0 || p_arc < 0 || p_edge + p_arc > 1)
        throw std::invalid_argument("invalid random graph parameters");
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double x = coin(rng);
            if (x < p_arc)
                arcs.push_back({order[i], order[j]});
            else if (x < p_arc + p_edge)
                edges.push_back(make_edge(order[i], order[j]));
        }
    return MixedGraph::create(n, std::move(edges), std::move(arcs));
}

} // namespace mixedcolor

#endif
