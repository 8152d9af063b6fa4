#ifndef MIXEDCOLOR_UNDIRECTED_HPP
#define MIXEDCOLOR_UNDIRECTED_HPP

// Exact and heuristic routines on the underlying undirected graph:
// vertex cover, maximum clique, greedy and exact colouring.

#include "mixedcolor/errors.hpp"
#include "mixedcolor/graph.hpp"
#include "mixedcolor/vertex_set.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace mixedcolor {

inline constexpr std::int64_t default_node_budget = 10'000'000;

/// Bitset adjacency of the underlying undirected graph (arcs count as edges).
inline std::vector<VertexSet> undirected_adjacency(const MixedGraph& g)
{
    const int n = g.size();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    for (const auto& a : g.arcs()) {
        adj[a.tail].insert(a.head);
        adj[a.head].insert(a.tail);
    }
    return adj;
}

struct VertexCoverResult {
    int size = 0;
    std::vector<Vertex> cover;
    std::int64_t nodes = 0;
};

namespace detail {

    class CoverSearch {
    public:
        CoverSearch(const std::vector<VertexSet>& adj, std::int64_t budget) : adj_(adj), budget_(budget) {}

        VertexCoverResult run()
        {
            const int n = static_cast<int>(adj_.size());
            VertexSet alive(n, true);
            VertexSet taken(n);
            // Start from the trivial cover of every non-isolated vertex.
            best_ = VertexSet(n);
            for (int v = 0; v < n; ++v)
                if (!adj_[v].empty())
                    best_.insert(v);
            best_size_ = best_.count();
            recurse(alive, taken, 0);
            return {best_size_, best_.members(), nodes_};
        }

    private:
        // Greedy maximal matching on the live graph: a lower bound on the cover still needed.
        int matching_bound(const VertexSet& alive) const
        {
            VertexSet free = alive;
            int m = 0;
            for (int v = free.first(); v != -1; v = free.next(v + 1)) {
                VertexSet nb = adj_[v] & free;
                nb.erase(v);
                int w = nb.first();
                if (w != -1) {
                    free.erase(v);
                    free.erase(w);
                    ++m;
                }
            }
            return m;
        }

        void recurse(VertexSet alive, VertexSet taken, int size)
        {
            if (++nodes_ > budget_)
                throw BudgetExceeded("vertex cover search exceeded " + std::to_string(budget_) + " nodes");
            // Pick the live vertex of maximum live degree.
            int pick = -1, pick_deg = 0;
            for (int v = alive.first(); v != -1; v = alive.next(v + 1)) {
                int d = (adj_[v] & alive).count();
                if (d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            if (pick == -1) {
                if (size < best_size_) {
                    best_size_ = size;
                    best_ = taken;
                }
                return;
            }
            if (size + matching_bound(alive) >= best_size_)
                return;
            // Degree-1 vertices: taking the neighbour is never worse.
            if (pick_deg == 1) {
                VertexSet a = alive, t = taken;
                int s = size;
                for (int v = a.first(); v != -1; v = a.next(v + 1)) {
                    VertexSet nb = adj_[v] & a;
                    int w = nb.first();
                    if (w == -1)
                        continue;
                    t.insert(w);
                    a.erase(w);
                    a.erase(v);
                    ++s;
                }
                recurse(a, t, s);
                return;
            }
            {
                VertexSet a = alive, t = taken;
                a.erase(pick);
                t.insert(pick);
                recurse(a, t, size + 1);
            }
            {
                VertexSet nb = adj_[pick] & alive;
                VertexSet a = alive - nb;
                a.erase(pick);
                recurse(a, taken | nb, size + nb.count());
            }
        }

        const std::vector<VertexSet>& adj_;
        std::int64_t budget_;
        std::int64_t nodes_ = 0;
        VertexSet best_;
        int best_size_ = 0;
    };

    class CliqueSearch {
    public:
        CliqueSearch(const std::vector<VertexSet>& adj, std::int64_t budget) : adj_(adj), budget_(budget) {}

        std::vector<Vertex> run()
        {
            const int n = static_cast<int>(adj_.size());
            VertexSet cand(n, true);
            std::vector<Vertex> current;
            expand(current, cand);
            return best_;
        }

    private:
        void expand(std::vector<Vertex>& current, VertexSet cand)
        {
            if (++nodes_ > budget_)
                throw BudgetExceeded("clique search exceeded " + std::to_string(budget_) + " nodes");
            if (cand.empty()) {
                if (current.size() > best_.size())
                    best_ = current;
                return;
            }
            // Greedy colour classes give an upper bound per candidate.
            std::vector<Vertex> order;
            std::vector<int> bound;
            VertexSet uncolored = cand;
            int color = 0;
            while (!uncolored.empty()) {
                ++color;
                VertexSet avail = uncolored;
                for (int v = avail.first(); v != -1; v = avail.next(v + 1)) {
                    order.push_back(v);
                    bound.push_back(color);
                    uncolored.erase(v);
                    avail -= adj_[v];
                }
            }
            for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
                if (current.size() + bound[i] <= best_.size())
                    return;
                Vertex v = order[i];
                current.push_back(v);
                expand(current, cand & adj_[v]);
                current.pop_back();
                cand.erase(v);
            }
        }

        const std::vector<VertexSet>& adj_;
        std::int64_t budget_;
        std::int64_t nodes_ = 0;
        std::vector<Vertex> best_;
    };

} // namespace detail

inline VertexCoverResult minimum_vertex_cover(const std::vector<VertexSet>& adj,
                                              std::int64_t budget = default_node_budget)
{
    return detail::CoverSearch(adj, budget).run();
}

/// Maximum clique of the graph given by bitset adjacency; vertices ascending.
inline std::vector<Vertex> maximum_clique(const std::vector<VertexSet>& adj, std::int64_t budget = default_node_budget)
{
    auto c = detail::CliqueSearch(adj, budget).run();
    std::sort(c.begin(), c.end());
    return c;
}

/// DSATUR greedy colouring of the subgraph induced by `members`. Colours start at 1.
/// Returns colours indexed like `members`.
inline std::vector<int> dsatur_coloring(const std::vector<VertexSet>& adj, const std::vector<Vertex>& members)
{
    const int m = static_cast<int>(members.size());
    std::vector<int> color(m, 0);
    std::vector<std::vector<bool>> seen(m, std::vector<bool>(m + 2, false));
    std::vector<int> sat(m, 0), deg(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && adj[members[i]].contains(members[j]))
                ++deg[i];
    for (int step = 0; step < m; ++step) {
        int pick = -1;
        for (int i = 0; i < m; ++i) {
            if (color[i])
                continue;
            if (pick == -1 || sat[i] > sat[pick] || (sat[i] == sat[pick] && deg[i] > deg[pick]))
                pick = i;
        }
        int c = 1;
        while (seen[pick][c])
            ++c;
        color[pick] = c;
        for (int j = 0; j < m; ++j) {
            if (j == pick || color[j] || !adj[members[pick]].contains(members[j]))
                continue;
            if (!seen[j][c]) {
                seen[j][c] = true;
                ++sat[j];
            }
        }
    }
    return color;
}

namespace detail {

    // Exact colouring by DSATUR-ordered backtracking with a clique lower bound.
    class ExactColoring {
    public:
        ExactColoring(const std::vector<VertexSet>& adj, const std::vector<Vertex>& members, std::int64_t budget)
            : m_(static_cast<int>(members.size())), budget_(budget)
        {
            local_.assign(m_, std::vector<bool>(m_, false));
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j)
                    local_[i][j] = i != j && adj[members[i]].contains(members[j]);
            best_ = dsatur_coloring(adj, members);
            best_k_ = best_.empty() ? 0 : *std::max_element(best_.begin(), best_.end());
            // Clique lower bound inside the member set.
            std::vector<VertexSet> ladj(m_, VertexSet(m_));
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j)
                    if (local_[i][j])
                        ladj[i].insert(j);
            lower_ = m_ == 0 ? 0 : static_cast<int>(maximum_clique(ladj, budget).size());
        }

        std::vector<int> run()
        {
            if (best_k_ <= lower_)
                return best_;
            std::vector<int> color(m_, 0);
            search(color, 0, 0);
            return best_;
        }

        std::int64_t nodes() const { return nodes_; }

    private:
        void search(std::vector<int>& color, int colored, int used)
        {
            if (++nodes_ > budget_)
                throw BudgetExceeded("exact colouring exceeded " + std::to_string(budget_) + " nodes");
            if (colored == m_) {
                best_ = color;
                best_k_ = used;
                return;
            }
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int i = 0; i < m_; ++i) {
                if (color[i])
                    continue;
                std::vector<bool> s(used + 2, false);
                int sat = 0, deg = 0;
                for (int j = 0; j < m_; ++j) {
                    if (!local_[i][j])
                        continue;
                    if (color[j] && !s[color[j]]) {
                        s[color[j]] = true;
                        ++sat;
                    }
                    if (!color[j])
                        ++deg;
                }
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = i;
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            for (int c = 1; c <= used + 1 && c < best_k_; ++c) {
                bool ok = true;
                for (int j = 0; j < m_ && ok; ++j)
                    if (local_[pick][j] && color[j] == c)
                        ok = false;
                if (!ok)
                    continue;
                color[pick] = c;
                search(color, colored + 1, std::max(used, c));
                color[pick] = 0;
                if (best_k_ <= lower_)
                    return;
            }
        }

        int m_;
        std::int64_t budget_;
        std::int64_t nodes_ = 0;
        std::vector<std::vector<bool>> local_;
        std::vector<int> best_;
        int best_k_ = 0;
        int lower_ = 0;
    };

} // namespace detail

/// Optimal colouring of the subgraph induced by `members` (colours indexed like `members`).
inline std::vector<int> exact_coloring(const std::vector<VertexSet>& adj, const std::vector<Vertex>& members,
                                       std::int64_t budget = default_node_budget)
{
    return detail::ExactColoring(adj, members, budget).run();
}

} // namespace mixedcolor

#endif
