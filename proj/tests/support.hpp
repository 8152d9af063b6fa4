#ifndef MIXEDCOLOR_TESTS_SUPPORT_HPP
#define MIXEDCOLOR_TESTS_SUPPORT_HPP

// Seeded corpora shared by the unit and acceptance tests.

#include "mixedcolor/expression.hpp"
#include "mixedcolor/families.hpp"
#include "mixedcolor/feasibility.hpp"
#include "mixedcolor/graph.hpp"

#include <random>
#include <vector>

namespace mixedcolor::testing {

using Rng = std::mt19937_64;

/// Directed path with `length` arcs.
inline MixedGraph directed_path(int length)
{
    std::vector<Arc> arcs;
    for (int i = 0; i < length; ++i)
        arcs.push_back({i, i + 1});
    return MixedGraph::create(length + 1, {}, arcs);
}

/// Undirected path on n vertices.
inline MixedGraph undirected_path(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return MixedGraph::create(n, edges, {});
}

/// Random graphs with n in [1, max_n]; densities sweep a fixed grid so that
/// sparse, dense, arc-heavy and edge-heavy graphs all appear.
inline std::vector<MixedGraph> random_corpus(int count, int max_n, std::uint64_t seed)
{
    static constexpr double grid[][2] = {{0.1, 0.1}, {0.3, 0.1}, {0.1, 0.3}, {0.3, 0.3},
                                         {0.5, 0.2}, {0.2, 0.5}, {0.6, 0.3}, {0.0, 0.6}};
    Rng rng(seed);
    std::vector<MixedGraph> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % max_n);
        const auto& d = grid[i % std::size(grid)];
        out.push_back(random_mixed_graph(n, d[0], d[1], rng));
    }
    return out;
}

/// Random expression over labels 1..w with roughly `size` introduce nodes.
inline int random_expression(ExpressionBuilder& b, Rng& rng, int size, int w, int arc_bias = 1)
{
    int cur;
    if (size <= 1) {
        cur = b.intro(1 + static_cast<int>(rng() % w));
    }
    else {
        const int left = 1 + static_cast<int>(rng() % (size - 1));
        cur = b.unite(random_expression(b, rng, left, w, arc_bias), random_expression(b, rng, size - left, w, arc_bias));
    }
    const int ops = static_cast<int>(rng() % 3);
    for (int o = 0; o < ops && w > 1; ++o) {
        const int i = 1 + static_cast<int>(rng() % w);
        const int j = 1 + static_cast<int>(rng() % w);
        if (i == j)
            continue;
        const int t = static_cast<int>(rng() % (2 + arc_bias));
        if (t == 0)
            cur = b.edge(i, j, cur);
        else if (t == 1)
            cur = b.relabel(i, j, cur);
        else
            cur = b.arc(i, j, cur);
    }
    return cur;
}

/// Random bounded program: domains of at most `max_domain` values, mixed <= and = rows.
inline FeasibilityProgram random_program(Rng& rng, int max_vars, int max_domain)
{
    FeasibilityProgram p;
    const int n = 1 + static_cast<int>(rng() % max_vars);
    for (int i = 0; i < n; ++i) {
        const std::int64_t lo = static_cast<std::int64_t>(rng() % 7) - 3;
        const std::int64_t size = 1 + static_cast<std::int64_t>(rng() % max_domain);
        p.add_variable("x" + std::to_string(i), lo, lo + size - 1);
    }
    const int rows = static_cast<int>(rng() % (n + 3));
    for (int r = 0; r < rows; ++r) {
        std::vector<Term> terms;
        for (int i = 0; i < n; ++i)
            if (rng() % 3 == 0)
                terms.push_back({i, static_cast<std::int64_t>(rng() % 7) - 3});
        if (terms.empty())
            terms.push_back({static_cast<int>(rng() % n), 1});
        const Relation rel = rng() % 4 == 0 ? Relation::equal : Relation::less_equal;
        const std::int64_t rhs = static_cast<std::int64_t>(rng() % 15) - 5;
        p.add_constraint(std::move(terms), rel, rhs);
    }
    return p;
}

} // namespace mixedcolor::testing

#endif
