#ifndef MIXEDCOLOR_SOLVERS_BRUTE_FORCE_HPP
#define MIXEDCOLOR_SOLVERS_BRUTE_FORCE_HPP

// Reference decider: backtracking over vertices in topological order,
// colours ascending, with c(v) <= k - outrank(v).

#include "mixedcolor/bounds.hpp"
#include "mixedcolor/errors.hpp"
#include "mixedcolor/graph.hpp"
#include "mixedcolor/solvers/common.hpp"

#include <algorithm>
#include <vector>

namespace mixedcolor {

inline constexpr int default_brute_force_cap = 10;

inline SolveResult brute_force_decide(const MixedGraph& g, int k, const SolveOptions& opt = {})
{
    detail::Stopwatch clock;
    SolveResult res;
    const int n = g.size();
    const auto& order = g.topological_order();
    const auto out_rank = outrank(g);
    std::vector<int> color(n, 0);
    std::int64_t nodes = 0;

    auto place = [&](auto&& self, int idx) -> bool {
        if (++nodes > opt.budget)
            throw BudgetExceeded("brute force exceeded " + std::to_string(opt.budget) + " nodes");
        if (idx == n)
            return true;
        Vertex v = order[idx];
        int low = 1;
        for (Vertex u : g.in_neighbors(v))
            low = std::max(low, color[u] + 1);
        for (int c = low; c <= k - out_rank[v]; ++c) {
            bool clash = false;
            for (Vertex w : g.undirected_neighbors(v))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            color[v] = c;
            if (self(self, idx + 1))
                return true;
            color[v] = 0;
        }
        return false;
    };

    res.decision = k >= 0 && place(place, 0);
    if (res.decision)
        res.witness = Coloring(color);
    res.stats.nodes = nodes;
    res.stats.seconds = clock.seconds();
    return res;
}

struct ChiResult {
    int chi = 0;
    Coloring witness;
    SolveStats stats;
};

/// Minimum k by upward search from the combined lower bound. Throws CapExceeded above `cap` vertices.
inline ChiResult brute_force_chi(const MixedGraph& g, int cap = default_brute_force_cap, const SolveOptions& opt = {})
{
    if (g.size() > cap)
        throw CapExceeded("brute force limited to " + std::to_string(cap) + " vertices, got " +
                          std::to_string(g.size()));
    ChiResult out;
    if (g.empty())
        return out;
    for (int k = lower_bounds(g).combined;; ++k) {
        auto r = brute_force_decide(g, k, opt);
        out.stats.nodes += r.stats.nodes;
        out.stats.seconds += r.stats.seconds;
        if (r.decision) {
            out.chi = k;
            out.witness = *r.witness;
            return out;
        }
    }
}

} // namespace mixedcolor

#endif
