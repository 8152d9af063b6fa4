#include "mixedcolor/families.hpp"
#include "mixedcolor/parameters.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace mixedcolor;
using mixedcolor::testing::directed_path;
using mixedcolor::testing::random_corpus;

namespace {

std::set<Vertex> as_set(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

bool same_mixed_type(const MixedGraph& g, Vertex u, Vertex v)
{
    auto nu = as_set(g.undirected_neighbors(u)), nv = as_set(g.undirected_neighbors(v));
    nu.erase(v);
    nv.erase(u);
    return as_set(g.in_neighbors(u)) == as_set(g.in_neighbors(v)) &&
           as_set(g.out_neighbors(u)) == as_set(g.out_neighbors(v)) && nu == nv;
}

// Fewest classes over all set partitions whose classes are pairwise same-typed.
int coarsest_partition_brute(const MixedGraph& g)
{
    const int n = g.size();
    std::vector<int> block(n, 0);
    int best = n;
    std::function<void(int, int)> go = [&](int v, int used) {
        if (used >= best)
            return;
        if (v == n) {
            best = used;
            return;
        }
        for (int b = 0; b <= used; ++b) {
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                if (block[u] == b)
                    ok = same_mixed_type(g, u, v);
            if (!ok)
                continue;
            block[v] = b;
            go(v + 1, std::max(used, b + 1));
        }
    };
    go(0, 0);
    return best;
}

MixedGraph complete_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.push_back({i, j});
    return MixedGraph::create(n, e, {});
}

MixedGraph acyclic_tournament(int n)
{
    std::vector<Arc> a;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            a.push_back({i, j});
    return MixedGraph::create(n, {}, a);
}

} // namespace

TEST(MixedPartition, Examples)
{
    auto k4 = mixed_neighborhood_partition(complete_graph(4));
    ASSERT_EQ(k4.count(), 1);
    EXPECT_EQ(k4.class_kinds[0], ClassKind::clique);

    EXPECT_EQ(ndm(acyclic_tournament(5)), 5);
    EXPECT_EQ(ndm(family_tripartite(3)), 10);
}

TEST(MixedPartition, ClassesOrderedAndLabelled)
{
    auto g = MixedGraph::create(5, {{1, 2}}, {{0, 3}, {0, 4}});
    auto p = mixed_neighborhood_partition(g);
    // {0}, {1,2} clique, {3,4} independent
    ASSERT_EQ(p.count(), 3);
    EXPECT_EQ(p.classes[0], (std::vector<Vertex>{0}));
    EXPECT_EQ(p.classes[1], (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(p.classes[2], (std::vector<Vertex>{3, 4}));
    EXPECT_EQ(p.class_kinds[0], ClassKind::independent);
    EXPECT_EQ(p.class_kinds[1], ClassKind::clique);
    EXPECT_EQ(p.class_kinds[2], ClassKind::independent);
    EXPECT_EQ(p.class_of, (std::vector<int>{0, 1, 1, 2, 2}));
}

TEST(MixedPartition, CoarsestAgainstBruteForce)
{
    for (const auto& g : random_corpus(60, 7, 21)) {
        auto p = mixed_neighborhood_partition(g);
        EXPECT_EQ(p.count(), coarsest_partition_brute(g)) << to_text(g);
        for (const auto& cls : p.classes)
            for (Vertex u : cls)
                for (Vertex v : cls)
                    EXPECT_TRUE(u == v || same_mixed_type(g, u, v));
    }
}

TEST(UndirectedPartition, Examples)
{
    EXPECT_EQ(ndu(acyclic_tournament(6)), 1);
    EXPECT_EQ(ndu(MixedGraph::create(4, {}, {})), 1);
    EXPECT_EQ(ndu(MixedGraph::create(4, {{0, 1}, {0, 2}, {0, 3}}, {})), 2);
    EXPECT_EQ(undirected_neighborhood_partition(acyclic_tournament(3)).kind, PartitionKind::undirected);
}

TEST(VertexCover, Examples)
{
    for (int l = 1; l <= 5; ++l) {
        auto g = directed_path(2 * l);
        auto r = vertex_cover_number(g);
        EXPECT_EQ(r.size, l);
        EXPECT_EQ(static_cast<int>(r.cover.size()), r.size);
    }
    EXPECT_EQ(vertex_cover_number(complete_graph(4)).size, 3);
    EXPECT_EQ(vertex_cover_number(MixedGraph::create(3, {}, {})).size, 0);
}

TEST(VertexCover, WitnessCoversAndIsMinimum)
{
    for (const auto& g : random_corpus(60, 9, 22)) {
        auto r = vertex_cover_number(g);
        std::set<Vertex> cover(r.cover.begin(), r.cover.end());
        const auto und = underlying_undirected(g);
        for (const auto& e : und.edges())
            EXPECT_TRUE(cover.contains(e.u) || cover.contains(e.v));
        // brute force over all subsets
        const int n = g.size();
        int best = n;
        for (int mask = 0; mask < (1 << n); ++mask) {
            bool ok = true;
            for (const auto& e : und.edges())
                ok = ok && ((mask >> e.u & 1) || (mask >> e.v & 1));
            if (ok)
                best = std::min(best, std::popcount(static_cast<unsigned>(mask)));
        }
        EXPECT_EQ(r.size, best);
    }
}

TEST(VertexCover, BudgetExceeded)
{
    mixedcolor::testing::Rng rng(5);
    auto dense = random_mixed_graph(40, 0.3, 0.0, rng);
    EXPECT_THROW(vertex_cover_number(dense, 3), BudgetExceeded);
}

TEST(CliqueNumber, Examples)
{
    EXPECT_EQ(clique_number(complete_graph(3)), 3);
    EXPECT_EQ(clique_number(acyclic_tournament(6)), 6);
    EXPECT_EQ(clique_number(family_grid_hamiltonian(3)), 2);
}

TEST(CliqueNumber, MatchesBruteForce)
{
    for (const auto& g : random_corpus(60, 9, 23)) {
        const int n = g.size();
        int best = 0;
        for (int mask = 1; mask < (1 << n); ++mask) {
            bool clique = true;
            for (Vertex u = 0; u < n && clique; ++u)
                for (Vertex v = u + 1; v < n && clique; ++v)
                    if ((mask >> u & 1) && (mask >> v & 1))
                        clique = g.adjacent(u, v);
            if (clique)
                best = std::max(best, std::popcount(static_cast<unsigned>(mask)));
        }
        EXPECT_EQ(clique_number(g), best);
    }
}

TEST(ParameterInequalities, HoldOnCorpus)
{
    for (const auto& g : random_corpus(100, 10, 24)) {
        const int m = ndm(g);
        const int vc = vertex_cover_number(g).size;
        EXPECT_LE(ndu(g), m);
        EXPECT_LE(m, vc + (1 << (2 * vc)));
        EXPECT_LE(ndm(transitive_closure(g)), m);
        EXPECT_LE(maxrank(g) + 1, ndm(transitive_closure(g)));
        EXPECT_LE(maxrank(g), 2 * vc);
    }
}

TEST(ParameterInequalities, DirectedPathForcesDistinctTypes)
{
    for (int l = 0; l <= 6; ++l)
        EXPECT_GE(ndm(directed_path(l)), l + 1);
}
