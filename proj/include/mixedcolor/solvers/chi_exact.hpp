#ifndef MIXEDCOLOR_SOLVERS_CHI_EXACT_HPP
#define MIXEDCOLOR_SOLVERS_CHI_EXACT_HPP

#include "mixedcolor/bounds.hpp"
#include "mixedcolor/solvers/branching.hpp"
#include "mixedcolor/solvers/brute_force.hpp"
#include "mixedcolor/solvers/common.hpp"
#include "mixedcolor/solvers/preorder_ilp.hpp"
#include "mixedcolor/solvers/treewidth_dp.hpp"

#include <optional>
#include <string>

namespace mixedcolor {

enum class Method { brute, twdp, ndm, branch };

inline std::optional<Method> parse_method(const std::string& s)
{
    if (s == "brute")
        return Method::brute;
    if (s == "twdp")
        return Method::twdp;
    if (s == "ndm")
        return Method::ndm;
    if (s == "branch")
        return Method::branch;
    return std::nullopt;
}

inline const char* method_name(Method m)
{
    switch (m) {
    case Method::brute: return "brute";
    case Method::twdp: return "twdp";
    case Method::ndm: return "ndm";
    case Method::branch: return "branch";
    }
    return "?";
}

/// One k-decision with the chosen method. `td` is used by twdp only (min-fill when absent).
inline SolveResult decide(const MixedGraph& g, int k, Method method, const SolveOptions& opt = {},
                          const std::optional<TreeDecomposition>& td = std::nullopt)
{
    switch (method) {
    case Method::brute: return brute_force_decide(g, k, opt);
    case Method::twdp: return tw_dp_decide(g, td ? *td : min_fill_decomposition(g), k, opt);
    case Method::ndm: return ndm_fpt_decide(g, k, opt);
    case Method::branch: return branching_decide(g, k, opt);
    }
    return {};
}

/// Linear ascent from the combined lower bound; the layering colouring closes the range.
inline ChiResult chi_exact(const MixedGraph& g, Method method, const SolveOptions& opt = {},
                           const std::optional<TreeDecomposition>& td = std::nullopt)
{
    ChiResult out;
    if (g.empty())
        return out;
    std::optional<TreeDecomposition> dec = td;
    if (method == Method::twdp && !dec)
        dec = min_fill_decomposition(g);
    const int lower = lower_bounds(g, opt.budget).combined;
    Coloring upper = layering_coloring(g, exact_layer_limit, opt.budget);
    const int upper_k = upper.color_count();
    for (int k = lower; k < upper_k; ++k) {
        auto r = decide(g, k, method, opt, dec);
        out.stats.nodes += r.stats.nodes;
        out.stats.preorders += r.stats.preorders;
        out.stats.programs += r.stats.programs;
        out.stats.max_table = std::max(out.stats.max_table, r.stats.max_table);
        out.stats.max_fanout = std::max(out.stats.max_fanout, r.stats.max_fanout);
        out.stats.seconds += r.stats.seconds;
        if (r.decision) {
            out.chi = k;
            out.witness = *r.witness;
            return out;
        }
    }
    out.chi = upper_k;
    out.witness = upper;
    return out;
}

} // namespace mixedcolor

#endif
