#ifndef MIXEDCOLOR_SOLVERS_PREORDER_ILP_HPP
#define MIXEDCOLOR_SOLVERS_PREORDER_ILP_HPP

// k-colourability parameterised by the number of vertex types.
// Every type gets a half-open colour interval [c_{p-}, c_{p+}) over an ascending
// endpoint sequence; arcs between types force disjoint, ordered intervals. For each
// admissible endpoint preorder a feasibility program counts, per interval and per
// edge-free set of types, how many colours those types share exclusively.

#include "mixedcolor/bounds.hpp"
#include "mixedcolor/errors.hpp"
#include "mixedcolor/feasibility.hpp"
#include "mixedcolor/graph.hpp"
#include "mixedcolor/parameters.hpp"
#include "mixedcolor/solvers/common.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace mixedcolor {

/// Types of a graph after merging every independent type into a single vertex.
struct TypeStructure {
    int count = 0;
    std::vector<std::vector<Vertex>> members;
    std::vector<int> demand;            ///< colours needed: |C| for cliques, 1 for independent types
    std::vector<std::uint32_t> edge_to; ///< bitmask of types joined by edges
    std::vector<std::uint32_t> arc_to;  ///< bitmask of types reached by an arc
    std::vector<std::uint32_t> arc_from;
};

inline constexpr int max_type_count = 24;

inline TypeStructure type_structure(const MixedGraph& g)
{
    auto part = mixed_neighborhood_partition(g);
    TypeStructure ts;
    ts.count = part.count();
    if (ts.count > max_type_count)
        throw CapExceeded("type solver supports at most " + std::to_string(max_type_count) + " types");
    ts.members = part.classes;
    ts.edge_to.assign(ts.count, 0);
    ts.arc_to.assign(ts.count, 0);
    ts.arc_from.assign(ts.count, 0);
    for (int t = 0; t < ts.count; ++t)
        ts.demand.push_back(part.class_kinds[t] == ClassKind::clique ? static_cast<int>(part.classes[t].size()) : 1);
    for (const auto& e : g.edges()) {
        int a = part.class_of[e.u], b = part.class_of[e.v];
        if (a != b) {
            ts.edge_to[a] |= 1U << b;
            ts.edge_to[b] |= 1U << a;
        }
    }
    for (const auto& a : g.arcs()) {
        int s = part.class_of[a.tail], t = part.class_of[a.head];
        ts.arc_to[s] |= 1U << t;
        ts.arc_from[t] |= 1U << s;
    }
    return ts;
}

/// The graph with each independent type of two or more vertices contracted to its smallest member.
inline MixedGraph merge_independent_types(const MixedGraph& g)
{
    auto part = mixed_neighborhood_partition(g);
    VertexSet keep(g.size(), true);
    for (int t = 0; t < part.count(); ++t)
        if (part.class_kinds[t] == ClassKind::independent)
            for (std::size_t i = 1; i < part.classes[t].size(); ++i)
                keep.erase(part.classes[t][i]);
    return induced_subgraph(g, keep);
}

/// Endpoint positions 1..endpoint_count per type, p_minus < p_plus.
struct TypeEndpointPreorder {
    int endpoint_count = 0;
    std::vector<int> p_minus;
    std::vector<int> p_plus;

    bool proper(const TypeStructure& ts) const
    {
        for (int s = 0; s < ts.count; ++s)
            for (int t = 0; t < ts.count; ++t)
                if ((ts.arc_to[s] >> t & 1U) && p_plus[s] > p_minus[t])
                    return false;
        return true;
    }
};

enum class PreorderMode {
    canonical, ///< one preorder per ordering of the upper endpoints of non-sink types
    full       ///< every weak order of all 2m endpoints
};

enum class ProgramForm {
    reduced, ///< variables forced to zero are never created
    full     ///< every subset variable plus explicit zero constraints
};

namespace detail {

    // Ordered partitions of the non-sink types into blocks that respect arcs.
    // Upper endpoint of a non-sink in block b is b+1; sinks close at r+2;
    // lower endpoints sit at the latest upper endpoint of a predecessor.
    inline void canonical_preorders(const TypeStructure& ts,
                                    const std::function<void(const TypeEndpointPreorder&)>& emit)
    {
        const int m = ts.count;
        if (m == 0) {
            emit({});
            return;
        }
        std::uint32_t nonsink = 0;
        for (int t = 0; t < m; ++t)
            if (ts.arc_to[t])
                nonsink |= 1U << t;
        std::vector<int> block(m, 0);
        auto rec = [&](auto&& self, std::uint32_t placed, int blocks) -> void {
            std::uint32_t rest = nonsink & ~placed;
            if (rest == 0) {
                TypeEndpointPreorder p;
                p.endpoint_count = blocks + 2;
                p.p_plus.assign(m, blocks + 2);
                p.p_minus.assign(m, 1);
                for (int t = 0; t < m; ++t)
                    if (nonsink >> t & 1U)
                        p.p_plus[t] = block[t] + 1;
                for (int t = 0; t < m; ++t)
                    for (int s = 0; s < m; ++s)
                        if (ts.arc_from[t] >> s & 1U)
                            p.p_minus[t] = std::max(p.p_minus[t], p.p_plus[s]);
                emit(p);
                return;
            }
            // Types whose non-sink predecessors are all placed.
            std::uint32_t ready = 0;
            for (int t = 0; t < m; ++t)
                if ((rest >> t & 1U) && (ts.arc_from[t] & nonsink & ~placed) == 0)
                    ready |= 1U << t;
            for (std::uint32_t sub = ready; sub; sub = (sub - 1) & ready) {
                for (int t = 0; t < m; ++t)
                    if (sub >> t & 1U)
                        block[t] = blocks + 1;
                self(self, placed | sub, blocks + 1);
            }
        };
        rec(rec, 0, 0);
    }

    // All weak orders of the 2m endpoint tokens, as surjections onto 1..r.
    inline void full_preorders(const TypeStructure& ts, const std::function<void(const TypeEndpointPreorder&)>& emit)
    {
        const int m = ts.count;
        if (m == 0) {
            emit({});
            return;
        }
        const int tokens = 2 * m;
        std::vector<int> pos(tokens, 0);
        for (int r = 2; r <= tokens; ++r) {
            auto rec = [&](auto&& self, int idx, std::uint32_t used) -> void {
                if (idx == tokens) {
                    if (used != (r >= 32 ? ~0U : ((1U << r) - 1)))
                        return;
                    TypeEndpointPreorder p;
                    p.endpoint_count = r;
                    for (int t = 0; t < m; ++t) {
                        p.p_minus.push_back(pos[2 * t] + 1);
                        p.p_plus.push_back(pos[2 * t + 1] + 1);
                    }
                    if (p.proper(ts))
                        emit(p);
                    return;
                }
                for (int v = 0; v < r; ++v) {
                    if (idx % 2 == 1 && v <= pos[idx - 1])
                        continue; // p_minus < p_plus
                    pos[idx] = v;
                    self(self, idx + 1, used | (1U << v));
                }
            };
            rec(rec, 0, 0);
        }
    }

} // namespace detail

inline std::vector<TypeEndpointPreorder> enumerate_preorders(const TypeStructure& ts,
                                                              PreorderMode mode = PreorderMode::canonical)
{
    std::vector<TypeEndpointPreorder> out;
    auto emit = [&](const TypeEndpointPreorder& p) { out.push_back(p); };
    if (mode == PreorderMode::canonical)
        detail::canonical_preorders(ts, emit);
    else
        detail::full_preorders(ts, emit);
    return out;
}

/// The program for one preorder together with its variable layout.
struct PreorderProgram {
    FeasibilityProgram program;
    std::vector<int> endpoint_var;                                  ///< c_1..c_l
    std::vector<std::vector<std::pair<std::uint32_t, int>>> shares; ///< per interval: (type mask, variable)
};

inline PreorderProgram build_preorder_program(const TypeStructure& ts, const TypeEndpointPreorder& p, int k,
                                              ProgramForm form = ProgramForm::reduced)
{
    PreorderProgram pp;
    auto& prog = pp.program;
    const int l = p.endpoint_count;
    const int m = ts.count;
    // Endpoints range over 1..k+1: the last interval is half-open and may end just past colour k.
    for (int i = 1; i <= l; ++i)
        pp.endpoint_var.push_back(prog.add_variable("c" + std::to_string(i), 1, k + 1));
    for (int i = 0; i + 1 < l; ++i)
        prog.add_constraint({{pp.endpoint_var[i], 1}, {pp.endpoint_var[i + 1], -1}}, Relation::less_equal, -1);

    auto mask_name = [m](std::uint32_t mask) {
        std::string s = "{";
        bool first = true;
        for (int t = 0; t < m; ++t)
            if (mask >> t & 1U) {
                if (!first)
                    s += ",";
                s += std::to_string(t + 1);
                first = false;
            }
        return s + "}";
    };
    auto edge_free = [&](std::uint32_t mask) {
        for (int t = 0; t < m; ++t)
            if ((mask >> t & 1U) && (ts.edge_to[t] & mask))
                return false;
        return true;
    };

    pp.shares.assign(std::max(0, l - 1), {});
    const std::uint32_t limit = m >= 32 ? 0 : (1U << m);
    for (int i = 1; i < l; ++i) {
        std::uint32_t active = 0;
        for (int t = 0; t < m; ++t)
            if (p.p_minus[t] <= i && i < p.p_plus[t])
                active |= 1U << t;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            if (form == ProgramForm::reduced && (mask == 0 || (mask & ~active) || !edge_free(mask)))
                continue;
            int var = prog.add_variable("x" + mask_name(mask) + "_" + std::to_string(i), 0, k);
            pp.shares[i - 1].emplace_back(mask, var);
        }
        std::vector<Term> cap;
        for (auto [mask, var] : pp.shares[i - 1])
            cap.push_back({var, 1});
        cap.push_back({pp.endpoint_var[i], -1});
        cap.push_back({pp.endpoint_var[i - 1], 1});
        prog.add_constraint(std::move(cap), Relation::less_equal, 0);
    }

    for (int t = 0; t < m; ++t) {
        std::vector<Term> before, within, after;
        for (int i = 1; i < l; ++i)
            for (auto [mask, var] : pp.shares[i - 1]) {
                if (!(mask >> t & 1U))
                    continue;
                if (i < p.p_minus[t])
                    before.push_back({var, 1});
                else if (i < p.p_plus[t])
                    within.push_back({var, 1});
                else
                    after.push_back({var, 1});
            }
        prog.add_constraint(std::move(within), Relation::equal, ts.demand[t]);
        if (form == ProgramForm::full) {
            prog.add_constraint(std::move(before), Relation::equal, 0);
            prog.add_constraint(std::move(after), Relation::equal, 0);
        }
    }
    if (form == ProgramForm::full)
        for (const auto& interval : pp.shares)
            for (auto [mask, var] : interval)
                if (!edge_free(mask))
                    prog.add_constraint({{var, 1}}, Relation::equal, 0);
    return pp;
}

/// Colour sweep: within each interval, subsets in ascending bitmask order take the next free colours.
inline Coloring reconstruct_coloring(const MixedGraph& g, const TypeStructure& ts, const PreorderProgram& pp,
                                     const Assignment& a)
{
    std::vector<std::vector<int>> colors(ts.count);
    for (std::size_t i = 0; i < pp.shares.size(); ++i) {
        auto next = a[pp.endpoint_var[i]];
        for (auto [mask, var] : pp.shares[i]) {
            for (std::int64_t j = 0; j < a[var]; ++j, ++next)
                for (int t = 0; t < ts.count; ++t)
                    if (mask >> t & 1U)
                        colors[t].push_back(static_cast<int>(next));
        }
    }
    Coloring c(std::vector<int>(g.size(), 0));
    for (int t = 0; t < ts.count; ++t) {
        const auto& mem = ts.members[t];
        if (ts.demand[t] == 1 && colors[t].size() == 1) {
            for (Vertex v : mem)
                c[v] = colors[t][0];
        }
        else {
            for (std::size_t i = 0; i < mem.size() && i < colors[t].size(); ++i)
                c[mem[i]] = colors[t][i];
        }
    }
    return c;
}

struct NdmOptions {
    PreorderMode mode = PreorderMode::canonical;
    ProgramForm form = ProgramForm::reduced;
};

inline SolveResult ndm_fpt_decide(const MixedGraph& g, int k, const SolveOptions& opt = {},
                                  const NdmOptions& nopt = {})
{
    detail::Stopwatch clock;
    SolveResult res;
    if (g.empty()) {
        res.decision = k >= 0;
        if (res.decision)
            res.witness = Coloring();
        return res;
    }
    if (k <= 0)
        return res;
    const TypeStructure ts = type_structure(g);
    auto preorders = enumerate_preorders(ts, nopt.mode);
    // At most k+1 endpoint values exist.
    std::erase_if(preorders, [k](const TypeEndpointPreorder& p) { return p.endpoint_count > k + 1; });
    res.stats.preorders = static_cast<std::int64_t>(preorders.size());

    const std::size_t total = preorders.size();
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::int64_t> nodes_at(total, 0);
    std::mutex result_mutex;
    std::optional<Coloring> witness;
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            while (true) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= total || i > best.load())
                    return;
                auto pp = build_preorder_program(ts, preorders[i], k, nopt.form);
                FeasibilityStats fs;
                auto sol = solve_feasibility(pp.program, opt.budget, &fs);
                nodes_at[i] = fs.nodes;
                if (!sol)
                    continue;
                auto c = reconstruct_coloring(g, ts, pp, *sol);
                std::lock_guard lock(result_mutex);
                if (i < best.load()) {
                    best = i;
                    witness = c;
                }
            }
        }
        catch (...) {
            std::lock_guard lock(result_mutex);
            if (!failure)
                failure = std::current_exception();
            cursor = total;
        }
    };
    if (opt.threads <= 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < opt.threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    // Count as a sequential run would: every program up to the first feasible one.
    std::size_t last = std::min(total, best.load() == std::numeric_limits<std::size_t>::max() ? total : best + 1);
    for (std::size_t i = 0; i < last; ++i)
        res.stats.nodes += nodes_at[i];
    res.stats.programs = static_cast<std::int64_t>(last);
    res.decision = witness.has_value();
    if (res.decision) {
        if (!check_proper(g, *witness))
            throw std::logic_error("type solver produced an improper witness");
        res.witness = witness;
    }
    res.stats.seconds = clock.seconds();
    return res;
}

} // namespace mixedcolor

#endif
