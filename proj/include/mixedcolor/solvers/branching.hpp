#ifndef MIXEDCOLOR_SOLVERS_BRANCHING_HPP
#define MIXEDCOLOR_SOLVERS_BRANCHING_HPP

// Branching over the maximal independent sets of the inrank-0 vertices:
// colour class 1 is such a set, and the rest of the graph is coloured recursively.

#include "mixedcolor/errors.hpp"
#include "mixedcolor/graph.hpp"
#include "mixedcolor/solvers/common.hpp"
#include "mixedcolor/vertex_set.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace mixedcolor {

namespace detail {

    // Bron-Kerbosch with pivoting on the complement: maximal independent sets of G[within].
    inline void maximal_independent_sets(const std::vector<VertexSet>& edge_adj, const VertexSet& within,
                                         std::vector<VertexSet>& out)
    {
        auto non_adj = [&](int v) {
            VertexSet s = within - edge_adj[v];
            s.erase(v);
            return s;
        };
        auto rec = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
            if (p.empty() && x.empty()) {
                out.push_back(r);
                return;
            }
            int pivot = -1, best = -1;
            VertexSet px = p | x;
            for (int u = px.first(); u != -1; u = px.next(u + 1)) {
                int cnt = (p & non_adj(u)).count();
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
            VertexSet cand = p - non_adj(pivot);
            for (int v = cand.first(); v != -1; v = cand.next(v + 1)) {
                VertexSet nv = non_adj(v);
                VertexSet r2 = r;
                r2.insert(v);
                self(self, r2, p & nv, x & nv);
                p.erase(v);
                x.insert(v);
            }
        };
        rec(rec, VertexSet(within.universe()), within, VertexSet(within.universe()));
    }

    class Brancher {
    public:
        Brancher(const MixedGraph& g, const SolveOptions& opt) : g_(g), opt_(opt)
        {
            const int n = g.size();
            edge_adj_.assign(n, VertexSet(n));
            in_adj_.assign(n, VertexSet(n));
            for (const auto& e : g.edges()) {
                edge_adj_[e.u].insert(e.v);
                edge_adj_[e.v].insert(e.u);
            }
            for (const auto& a : g.arcs())
                in_adj_[a.head].insert(a.tail);
        }

        /// Maximal independent sets among the residual vertices without residual in-arcs,
        /// larger sets first, then lexicographic.
        std::vector<VertexSet> branches(const VertexSet& residual) const
        {
            VertexSet sources(g_.size());
            for (int v = residual.first(); v != -1; v = residual.next(v + 1))
                if ((in_adj_[v] & residual).empty())
                    sources.insert(v);
            std::vector<VertexSet> sets;
            maximal_independent_sets(edge_adj_, sources, sets);
            std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
                int ca = a.count(), cb = b.count();
                if (ca != cb)
                    return ca > cb;
                return a.members() < b.members();
            });
            return sets;
        }

        /// Colours `residual` with k colours; fills classes[0..] on success.
        bool solve(const VertexSet& residual, int k, std::vector<VertexSet>& classes)
        {
            if (++nodes_ > opt_.budget)
                throw BudgetExceeded("branching exceeded " + std::to_string(opt_.budget) + " nodes");
            if (residual.empty())
                return true;
            if (k <= 0)
                return false;
            auto it = failed_.find(residual);
            if (it != failed_.end() && it->second >= k)
                return false;
            auto sets = branches(residual);
            report(residual, static_cast<std::int64_t>(sets.size()));
            for (const auto& s : sets) {
                classes.push_back(s);
                if (solve(residual - s, k - 1, classes))
                    return true;
                classes.pop_back();
            }
            auto& f = failed_[residual];
            f = std::max(f, k);
            return false;
        }

        void report(const VertexSet& residual, std::int64_t fanout)
        {
            max_fanout_ = std::max(max_fanout_, fanout);
            if (opt_.on_fanout) {
                std::lock_guard lock(*observer_mutex_);
                opt_.on_fanout(residual, fanout);
            }
        }

        std::int64_t nodes() const { return nodes_; }
        std::int64_t max_fanout() const { return max_fanout_; }
        std::mutex* observer_mutex_ = nullptr;

    private:
        const MixedGraph& g_;
        const SolveOptions& opt_;
        std::vector<VertexSet> edge_adj_, in_adj_;
        std::unordered_map<VertexSet, int, VertexSetHash> failed_; ///< residual -> largest k known to fail
        std::int64_t nodes_ = 0;
        std::int64_t max_fanout_ = 0;
    };

    inline Coloring classes_to_coloring(int n, const std::vector<VertexSet>& classes)
    {
        Coloring c(std::vector<int>(n, 0));
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (int v = classes[i].first(); v != -1; v = classes[i].next(v + 1))
                c[v] = static_cast<int>(i) + 1;
        return c;
    }

} // namespace detail

/// With threads > 1 the root branches run concurrently; the first successful
/// branch in enumeration order supplies the witness, so output is schedule-independent.
inline SolveResult branching_decide(const MixedGraph& g, int k, const SolveOptions& opt = {})
{
    detail::Stopwatch clock;
    SolveResult res;
    std::mutex observer_mutex;
    VertexSet all(g.size(), true);
    std::vector<VertexSet> classes;

    if (opt.threads <= 1 || g.empty() || k <= 0) {
        detail::Brancher b(g, opt);
        b.observer_mutex_ = &observer_mutex;
        res.decision = b.solve(all, k, classes);
        res.stats.nodes = b.nodes();
        res.stats.max_fanout = b.max_fanout();
    }
    else {
        detail::Brancher root(g, opt);
        root.observer_mutex_ = &observer_mutex;
        auto sets = root.branches(all);
        root.report(all, static_cast<std::int64_t>(sets.size()));
        std::vector<std::vector<VertexSet>> found(sets.size());
        std::vector<char> ok(sets.size(), 0);
        std::vector<std::int64_t> nodes(sets.size(), 0), fan(sets.size(), 0);
        std::size_t next = 0;
        while (next < sets.size()) {
            std::size_t end = std::min(sets.size(), next + static_cast<std::size_t>(opt.threads));
            std::vector<std::future<void>> jobs;
            for (std::size_t i = next; i < end; ++i)
                jobs.push_back(std::async(std::launch::async, [&, i] {
                    detail::Brancher b(g, opt);
                    b.observer_mutex_ = &observer_mutex;
                    std::vector<VertexSet> cls{sets[i]};
                    ok[i] = b.solve(all - sets[i], k - 1, cls);
                    if (ok[i])
                        found[i] = std::move(cls);
                    nodes[i] = b.nodes();
                    fan[i] = b.max_fanout();
                }));
            for (auto& j : jobs)
                j.get();
            bool any = false;
            for (std::size_t i = next; i < end && !any; ++i)
                if (ok[i]) {
                    any = true;
                    classes = found[i];
                }
            next = end;
            if (any)
                break;
        }
        res.decision = !classes.empty();
        res.stats.nodes = 1;
        for (auto x : nodes)
            res.stats.nodes += x;
        res.stats.max_fanout = static_cast<std::int64_t>(sets.size());
        for (auto x : fan)
            res.stats.max_fanout = std::max(res.stats.max_fanout, x);
    }
    if (res.decision)
        res.witness = detail::classes_to_coloring(g.size(), classes);
    res.stats.seconds = clock.seconds();
    return res;
}

} // namespace mixedcolor

#endif
