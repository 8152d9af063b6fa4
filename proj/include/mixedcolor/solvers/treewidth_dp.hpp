#ifndef MIXEDCOLOR_SOLVERS_TREEWIDTH_DP_HPP
#define MIXEDCOLOR_SOLVERS_TREEWIDTH_DP_HPP

// k-colourability by dynamic programming over a nice tree decomposition.
// A table holds every valid colouring of the bag, packed base k into 64 bits
// (digit i = colour - 1 of the i-th bag vertex in ascending order).

#include "mixedcolor/errors.hpp"
#include "mixedcolor/graph.hpp"
#include "mixedcolor/solvers/common.hpp"
#include "mixedcolor/tree_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace mixedcolor {

namespace detail {

    class BagCodec {
    public:
        explicit BagCodec(int k) : k_(k) {}

        std::vector<int> decode(std::uint64_t code, std::size_t size) const
        {
            std::vector<int> colors(size);
            for (std::size_t i = 0; i < size; ++i) {
                colors[i] = static_cast<int>(code % k_) + 1;
                code /= k_;
            }
            return colors;
        }

        std::uint64_t encode(const std::vector<int>& colors) const
        {
            std::uint64_t code = 0;
            for (auto it = colors.rbegin(); it != colors.rend(); ++it)
                code = code * k_ + static_cast<std::uint64_t>(*it - 1);
            return code;
        }

    private:
        std::uint64_t k_;
    };

    inline void sort_unique(std::vector<std::uint64_t>& t)
    {
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
    }

} // namespace detail

/// Decides k-colourability given a tree decomposition of g (validated first).
inline SolveResult tw_dp_decide(const MixedGraph& g, const TreeDecomposition& td, int k, const SolveOptions& opt = {})
{
    detail::Stopwatch clock;
    validate_decomposition(g, td);
    SolveResult res;
    if (g.empty()) {
        res.decision = k >= 0;
        if (res.decision)
            res.witness = Coloring();
        return res;
    }
    if (k <= 0)
        return res;
    // Capacity check: k^(width+1) codes must fit.
    {
        long double cap = 1;
        for (int i = 0; i <= td.width(); ++i)
            cap *= k;
        if (cap > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
            throw CapExceeded("k^(width+1) does not fit the 64-bit bag encoding");
    }

    NiceDecomposition nice = make_nice(td);
    detail::BagCodec codec(k);
    std::vector<std::vector<std::uint64_t>> table(nice.nodes.size());
    std::int64_t work = 0;

    auto compatible = [&](Vertex v, int cv, const std::vector<Vertex>& bag, const std::vector<int>& colors) {
        for (std::size_t i = 0; i < bag.size(); ++i) {
            Vertex u = bag[i];
            if (u == v)
                continue;
            int cu = colors[i];
            if (g.has_edge(u, v) && cu == cv)
                return false;
            if (g.has_arc(u, v) && !(cu < cv))
                return false;
            if (g.has_arc(v, u) && !(cv < cu))
                return false;
        }
        return true;
    };

    for (std::size_t id = 0; id < nice.nodes.size(); ++id) {
        const auto& node = nice.nodes[id];
        auto& out = table[id];
        switch (node.kind) {
        case NiceKind::leaf:
            out.push_back(0);
            break;
        case NiceKind::introduce: {
            const auto& child = nice.nodes[node.children[0]];
            std::size_t pos = std::lower_bound(node.bag.begin(), node.bag.end(), node.vertex) - node.bag.begin();
            for (std::uint64_t code : table[node.children[0]]) {
                auto colors = codec.decode(code, child.bag.size());
                colors.insert(colors.begin() + static_cast<long>(pos), 0);
                for (int c = 1; c <= k; ++c) {
                    colors[pos] = c;
                    if (compatible(node.vertex, c, node.bag, colors))
                        out.push_back(codec.encode(colors));
                }
            }
            break;
        }
        case NiceKind::forget: {
            const auto& child = nice.nodes[node.children[0]];
            std::size_t pos =
                std::lower_bound(child.bag.begin(), child.bag.end(), node.vertex) - child.bag.begin();
            for (std::uint64_t code : table[node.children[0]]) {
                auto colors = codec.decode(code, child.bag.size());
                colors.erase(colors.begin() + static_cast<long>(pos));
                out.push_back(codec.encode(colors));
            }
            detail::sort_unique(out);
            break;
        }
        case NiceKind::join: {
            const auto& a = table[node.children[0]];
            const auto& b = table[node.children[1]];
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
            break;
        }
        }
        if (node.kind == NiceKind::introduce)
            detail::sort_unique(out);
        work += static_cast<std::int64_t>(out.size());
        res.stats.max_table = std::max<std::int64_t>(res.stats.max_table, static_cast<std::int64_t>(out.size()));
        if (work > opt.budget)
            throw BudgetExceeded("treewidth DP exceeded " + std::to_string(opt.budget) + " table entries");
    }
    res.stats.nodes = work;
    res.decision = !table[nice.root()].empty();
    if (!res.decision) {
        res.stats.seconds = clock.seconds();
        return res;
    }

    // Top-down reconstruction: keep one surviving assignment per node.
    Coloring c(std::vector<int>(g.size(), 0));
    std::vector<std::uint64_t> chosen(nice.nodes.size(), 0);
    std::vector<bool> assigned(nice.nodes.size(), false);
    chosen[nice.root()] = table[nice.root()].front();
    assigned[nice.root()] = true;
    for (int id = nice.root(); id >= 0; --id) {
        if (!assigned[id])
            continue;
        const auto& node = nice.nodes[id];
        auto colors = codec.decode(chosen[id], node.bag.size());
        for (std::size_t i = 0; i < node.bag.size(); ++i)
            c[node.bag[i]] = colors[i];
        switch (node.kind) {
        case NiceKind::leaf:
            break;
        case NiceKind::introduce: {
            std::size_t pos = std::lower_bound(node.bag.begin(), node.bag.end(), node.vertex) - node.bag.begin();
            auto sub = colors;
            sub.erase(sub.begin() + static_cast<long>(pos));
            chosen[node.children[0]] = codec.encode(sub);
            assigned[node.children[0]] = true;
            break;
        }
        case NiceKind::forget: {
            int ch = node.children[0];
            const auto& child = nice.nodes[ch];
            std::size_t pos =
                std::lower_bound(child.bag.begin(), child.bag.end(), node.vertex) - child.bag.begin();
            for (int x = 1; x <= k; ++x) {
                auto ext = colors;
                ext.insert(ext.begin() + static_cast<long>(pos), x);
                auto code = codec.encode(ext);
                if (std::binary_search(table[ch].begin(), table[ch].end(), code)) {
                    chosen[ch] = code;
                    assigned[ch] = true;
                    break;
                }
            }
            break;
        }
        case NiceKind::join:
            for (int ch : node.children) {
                chosen[ch] = chosen[id];
                assigned[ch] = true;
            }
            break;
        }
    }
    res.witness = c;
    res.stats.seconds = clock.seconds();
    return res;
}

inline SolveResult tw_dp_decide(const MixedGraph& g, int k, const SolveOptions& opt = {})
{
    return tw_dp_decide(g, min_fill_decomposition(g), k, opt);
}

} // namespace mixedcolor

#endif
