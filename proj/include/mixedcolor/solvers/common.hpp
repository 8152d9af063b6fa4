#ifndef MIXEDCOLOR_SOLVERS_COMMON_HPP
#define MIXEDCOLOR_SOLVERS_COMMON_HPP

#include "mixedcolor/graph.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

namespace mixedcolor {

struct SolveStats {
    std::int64_t nodes = 0;          ///< search nodes (backtracking, branching, DP nodes, feasibility nodes)
    std::int64_t preorders = 0;      ///< preorders enumerated (ndm solver)
    std::int64_t programs = 0;       ///< feasibility programs solved (ndm solver)
    std::int64_t max_table = 0;      ///< largest DP table (treewidth solver)
    std::int64_t max_fanout = 0;     ///< largest branching fan-out (branching solver)
    double seconds = 0.0;
};

struct SolveResult {
    bool decision = false;
    std::optional<Coloring> witness; ///< present iff decision is yes
    SolveStats stats;
};

/// Called at every branching node with the residual vertex set and its fan-out.
using FanoutObserver = std::function<void(const VertexSet& residual, std::int64_t fanout)>;

struct SolveOptions {
    std::int64_t budget = 10'000'000;
    int threads = 1;
    FanoutObserver on_fanout;
};

namespace detail {
    class Stopwatch {
    public:
        double seconds() const
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }

    private:
        std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    };

    /// k >= n always suffices: colour along the topological order.
    inline Coloring topological_coloring(const MixedGraph& g)
    {
        Coloring c(std::vector<int>(g.size(), 0));
        int next = 0;
        for (Vertex v : g.topological_order())
            c[v] = ++next;
        return c;
    }
} // namespace detail

} // namespace mixedcolor

#endif
