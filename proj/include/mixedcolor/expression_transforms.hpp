#ifndef MIXEDCOLOR_EXPRESSION_TRANSFORMS_HPP
#define MIXEDCOLOR_EXPRESSION_TRANSFORMS_HPP

#include "mixedcolor/errors.hpp"
#include "mixedcolor/expression.hpp"
#include "mixedcolor/graph.hpp"
#include "mixedcolor/parameters.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mixedcolor {

struct ConstructedExpression {
    MixedExpression expression;
    std::vector<Vertex> correspondence; ///< i-th introduced vertex -> vertex of the source graph
};

/// Expression of width <= ndm+1: one label per type, plus a spare label to grow clique types.
inline ConstructedExpression ndm_expression(const MixedGraph& g)
{
    ConstructedExpression out;
    if (g.empty())
        return out;
    auto part = mixed_neighborhood_partition(g);
    const int w = part.count();
    const int spare = w + 1;
    ExpressionBuilder b;
    int acc = -1;
    for (int t = 0; t < w; ++t) {
        const int lab = t + 1;
        const auto& cls = part.classes[t];
        const bool clique = part.class_kinds[t] == ClassKind::clique;
        int cur = b.intro(lab);
        for (std::size_t i = 1; i < cls.size(); ++i) {
            if (clique) {
                cur = b.unite(cur, b.intro(spare));
                cur = b.edge(lab, spare, cur);
                cur = b.relabel(spare, lab, cur);
            }
            else {
                cur = b.unite(cur, b.intro(lab));
            }
        }
        acc = acc < 0 ? cur : b.unite(acc, cur);
        out.correspondence.insert(out.correspondence.end(), cls.begin(), cls.end());
    }
    // Relations between types: all-or-nothing, so one operation per type pair.
    for (int s = 0; s < w; ++s)
        for (int t = 0; t < w; ++t) {
            Vertex u = part.classes[s][0], v = part.classes[t][0];
            if (s < t && g.has_edge(u, v))
                acc = b.edge(s + 1, t + 1, acc);
            if (s != t && g.has_arc(u, v))
                acc = b.arc(s + 1, t + 1, acc);
        }
    out.expression = b.build(acc);
    return out;
}

/// Width-2 expression for the acyclic tournament with arcs i -> j for all i < j.
inline MixedExpression tournament_expression(int n)
{
    if (n < 1)
        throw std::invalid_argument("tournament needs at least one vertex");
    ExpressionBuilder b;
    int cur = b.intro(1);
    for (int i = 1; i < n; ++i) {
        cur = b.unite(cur, b.intro(2));
        cur = b.arc(1, 2, cur);
        cur = b.relabel(2, 1, cur);
    }
    return b.build(cur);
}

/// Replaces every edge operation on (i,j) by arc operations (i,j) then (j,i).
inline MixedExpression mixed_to_directed(const MixedExpression& e)
{
    if (e.empty())
        return e;
    ExpressionBuilder b;
    std::unordered_map<int, int> map;
    for (int id : e.postorder()) {
        const auto& nd = e.node(id);
        int made = -1;
        switch (nd.kind) {
        case ExprKind::intro: made = b.intro(nd.a); break;
        case ExprKind::unite: made = b.unite(map.at(nd.left), map.at(nd.right)); break;
        case ExprKind::arc: made = b.arc(nd.a, nd.b, map.at(nd.left)); break;
        case ExprKind::relabel: made = b.relabel(nd.a, nd.b, map.at(nd.left)); break;
        case ExprKind::edge: made = b.arc(nd.b, nd.a, b.arc(nd.a, nd.b, map.at(nd.left))); break;
        }
        map[id] = made;
    }
    return b.build(map.at(e.root()));
}

inline constexpr int default_tc_width_cap = 3;

namespace detail {

    // Composite label: current label x plus the label sets I (labels of vertices
    // reaching this one) and O (labels of vertices reached), both reflexive.
    struct Composite {
        int x = 0;
        std::uint32_t in = 0;
        std::uint32_t out = 0;
        auto operator<=>(const Composite&) const = default;
    };

    class ClosureExpressionBuilder {
    public:
        ClosureExpressionBuilder(const MixedExpression& e, int cap) : e_(e)
        {
            std::set<int> labels;
            for (int id : e.postorder()) {
                const auto& nd = e.node(id);
                labels.insert(nd.a);
                if (nd.kind != ExprKind::intro && nd.kind != ExprKind::unite)
                    labels.insert(nd.b);
            }
            labels.erase(0);
            width_ = static_cast<int>(labels.size());
            if (width_ > cap)
                throw WidthCapExceeded("expression width " + std::to_string(width_) + " exceeds cap " +
                                       std::to_string(cap));
            for (int l : labels) {
                index_[l] = static_cast<int>(originals_.size());
                originals_.push_back(l);
            }
            closure_ = transitive_closure(evaluate(e).graph);
        }

        MixedExpression run()
        {
            if (e_.empty())
                return {};
            std::unordered_map<int, int> out_node;
            std::unordered_map<int, std::vector<Vertex>> members; // input node -> vertices of its subtree
            int next_vertex = 0;
            comp_.clear();
            for (int id : e_.postorder()) {
                const auto& nd = e_.node(id);
                int made = -1;
                std::vector<Vertex> vs;
                switch (nd.kind) {
                case ExprKind::intro: {
                    Vertex v = next_vertex++;
                    int x = index_.at(nd.a);
                    comp_.push_back({x, 1U << x, 1U << x});
                    made = b_.intro(encode(comp_[v]));
                    vs.push_back(v);
                    break;
                }
                case ExprKind::unite: {
                    vs = std::move(members[nd.left]);
                    auto& r = members[nd.right];
                    vs.insert(vs.end(), r.begin(), r.end());
                    members.erase(nd.left);
                    members.erase(nd.right);
                    made = b_.unite(out_node.at(nd.left), out_node.at(nd.right));
                    break;
                }
                case ExprKind::relabel:
                    vs = std::move(members[nd.left]);
                    members.erase(nd.left);
                    made = relabel(vs, index_.at(nd.a), index_.at(nd.b), out_node.at(nd.left));
                    break;
                case ExprKind::arc:
                    vs = std::move(members[nd.left]);
                    members.erase(nd.left);
                    made = arc(vs, index_.at(nd.a), index_.at(nd.b), out_node.at(nd.left));
                    break;
                case ExprKind::edge:
                    vs = std::move(members[nd.left]);
                    members.erase(nd.left);
                    made = edge(vs, index_.at(nd.a), index_.at(nd.b), out_node.at(nd.left));
                    break;
                }
                out_node[id] = made;
                members[id] = std::move(vs);
            }
            return b_.build(out_node.at(e_.root()));
        }

    private:
        int encode(const Composite& c) const
        {
            const std::int64_t sets = static_cast<std::int64_t>(c.in) + (static_cast<std::int64_t>(c.out) << width_);
            return static_cast<int>(1 + c.x + width_ * sets);
        }

        std::map<Composite, std::vector<Vertex>> groups(const std::vector<Vertex>& vs) const
        {
            std::map<Composite, std::vector<Vertex>> g;
            for (Vertex v : vs)
                g[comp_[v]].push_back(v);
            return g;
        }

        // Emits one relabel per composite whose code changes; targets are fixed points
        // of `update`, so the burst order does not matter.
        template <class Update>
        int apply_update(const std::vector<Vertex>& vs, int node, Update update)
        {
            for (const auto& [c, group] : groups(vs)) {
                Composite next = update(c);
                if (next == c)
                    continue;
                node = b_.relabel(encode(c), encode(next), node);
                for (Vertex v : group)
                    comp_[v] = next;
            }
            return node;
        }

        int relabel(const std::vector<Vertex>& vs, int from, int to, int node)
        {
            auto swap_bit = [from, to](std::uint32_t s) {
                return (s >> from & 1U) ? ((s & ~(1U << from)) | (1U << to)) : s;
            };
            return apply_update(vs, node, [&](Composite c) {
                if (c.x == from)
                    c.x = to;
                c.in = swap_bit(c.in);
                c.out = swap_bit(c.out);
                return c;
            });
        }

        int arc(const std::vector<Vertex>& vs, int i, int j, int node)
        {
            auto g = groups(vs);
            std::uint32_t reached = 0, reaching = 0;
            for (const auto& [c, group] : g) {
                if (c.in >> j & 1U)
                    reached |= 1U << c.x;
                if (c.out >> i & 1U)
                    reaching |= 1U << c.x;
            }
            for (const auto& [a, ga] : g) {
                if (!(a.out >> i & 1U))
                    continue;
                for (const auto& [bb, gb] : g) {
                    if (!(bb.in >> j & 1U))
                        continue;
                    bool missing = false;
                    for (Vertex u : ga)
                        for (Vertex w : gb)
                            if (!arcs_.contains(key(u, w)))
                                missing = true;
                    if (!missing)
                        continue;
                    node = b_.arc(encode(a), encode(bb), node);
                    for (Vertex u : ga)
                        for (Vertex w : gb)
                            arcs_.insert(key(u, w));
                }
            }
            return apply_update(vs, node, [&](Composite c) {
                if (c.out >> i & 1U)
                    c.out |= reached;
                if (c.in >> j & 1U)
                    c.in |= reaching;
                return c;
            });
        }

        int edge(const std::vector<Vertex>& vs, int i, int j, int node)
        {
            auto g = groups(vs);
            for (const auto& [a, ga] : g) {
                if (a.x != i)
                    continue;
                for (const auto& [bb, gb] : g) {
                    if (bb.x != j)
                        continue;
                    std::size_t directed = 0;
                    for (Vertex u : ga)
                        for (Vertex w : gb)
                            if (closure_.has_arc(u, w) || closure_.has_arc(w, u))
                                ++directed;
                    if (directed == ga.size() * gb.size())
                        continue;
                    if (directed > 0)
                        throw ClosureConflict("edge operation joins vertex pairs of which only some become arcs "
                                              "in the closure");
                    node = b_.edge(encode(a), encode(bb), node);
                }
            }
            return node;
        }

        static std::uint64_t key(Vertex u, Vertex w)
        {
            return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(w);
        }

        const MixedExpression& e_;
        int width_ = 0;
        std::map<int, int> index_;
        std::vector<int> originals_;
        MixedGraph closure_;
        ExpressionBuilder b_;
        std::vector<Composite> comp_;
        std::unordered_set<std::uint64_t> arcs_;
    };

} // namespace detail

/// Expression for the transitive closure, over composite labels (label, I, O);
/// at most width * 4^width labels. Only labels carried by some vertex get operations.
/// Throws WidthCapExceeded, or ClosureConflict when one edge operation covers pairs
/// that the closure splits into arcs and edges.
inline MixedExpression tc_expression(const MixedExpression& e, int width_cap = default_tc_width_cap)
{
    return detail::ClosureExpressionBuilder(e, width_cap).run();
}

} // namespace mixedcolor

#endif
