#ifndef MIXEDCOLOR_ORACLES_HPP
#define MIXEDCOLOR_ORACLES_HPP

// Exhaustive solvers for the source problems of the reductions. Exponential;
// meant for cross-checking small instances.

#include "mixedcolor/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mixedcolor {

inline bool is_supersequence(const std::string& super, const std::string& sub)
{
    std::size_t i = 0;
    for (char ch : super)
        if (i < sub.size() && sub[i] == ch)
            ++i;
    return i == sub.size();
}

/// Lexicographically first binary string of length k containing every input
/// string as a subsequence. Padding makes "length <= k" and "length k" equivalent.
inline std::optional<std::string> find_common_supersequence(const SuperstringInstance& inst)
{
    validate(inst);
    if (inst.k > 24)
        throw std::invalid_argument("supersequence enumeration limited to length 24");
    for (std::uint32_t mask = 0; mask < (1U << inst.k); ++mask) {
        std::string s(inst.k, '0');
        for (int i = 0; i < inst.k; ++i)
            if (mask >> (inst.k - 1 - i) & 1U)
                s[i] = '1';
        bool ok = true;
        for (const auto& str : inst.strings)
            ok = ok && is_supersequence(s, str);
        if (ok)
            return s;
    }
    return std::nullopt;
}

/// 1-based time slot per task in tasks() order, or nullopt. Tasks on the same
/// machine get distinct slots; t before t' means slot(t) < slot(t').
inline std::optional<std::vector<int>> find_schedule(const SchedulingInstance& inst)
{
    auto index = validate(inst);
    const int tasks = static_cast<int>(index.size());
    const int m1 = static_cast<int>(inst.tasks_m1.size());
    std::vector<std::pair<int, int>> before;
    for (const auto& [a, b] : inst.precedence)
        before.push_back({index[a], index[b]});
    std::vector<int> slot(tasks, 0);
    auto fits = [&](int t) {
        for (int s = 0; s < t; ++s)
            if ((s < m1) == (t < m1) && slot[s] == slot[t])
                return false;
        for (auto [a, b] : before)
            if (a <= t && b <= t && slot[a] >= slot[b])
                return false;
        return true;
    };
    auto place = [&](auto&& self, int t) -> bool {
        if (t == tasks)
            return true;
        for (int s = 1; s <= inst.deadline; ++s) {
            slot[t] = s;
            if (fits(t) && self(self, t + 1))
                return true;
        }
        return false;
    };
    if (!place(place, 0))
        return std::nullopt;
    return slot;
}

/// Backtracking in vertex order over each list in the given order.
inline std::optional<std::vector<int>> find_list_coloring(const ListColoringInstance& inst)
{
    validate(inst);
    const auto& g = inst.graph;
    std::vector<int> color(g.size(), 0);
    auto assign = [&](auto&& self, Vertex v) -> bool {
        if (v == g.size())
            return true;
        for (int c : inst.lists[v]) {
            bool clash = false;
            for (Vertex u : g.undirected_neighbors(v))
                clash = clash || color[u] == c;
            if (clash)
                continue;
            color[v] = c;
            if (self(self, v + 1))
                return true;
        }
        color[v] = 0;
        return false;
    };
    if (!assign(assign, 0))
        return std::nullopt;
    return color;
}

/// One vertex per class, pairwise adjacent; members listed by class. nullopt if none.
inline std::optional<std::vector<Vertex>> find_multicolored_clique(const MixedGraph& g,
                                                                   const std::vector<int>& class_of)
{
    int classes = 0;
    for (int c : class_of)
        classes = std::max(classes, c + 1);
    std::vector<std::vector<Vertex>> members(classes);
    for (Vertex v = 0; v < g.size(); ++v)
        members[class_of[v]].push_back(v);
    std::vector<Vertex> pick;
    auto extend = [&](auto&& self, int c) -> bool {
        if (c == classes)
            return true;
        for (Vertex v : members[c]) {
            bool ok = true;
            for (Vertex u : pick)
                ok = ok && g.has_edge(u, v);
            if (!ok)
                continue;
            pick.push_back(v);
            if (self(self, c + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;
    return pick;
}

} // namespace mixedcolor

#endif
