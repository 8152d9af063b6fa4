#ifndef MIXEDCOLOR_EXPRESSION_HPP
#define MIXEDCOLOR_EXPRESSION_HPP

// Mixed cliquewidth expressions stored as a flat node arena. Children always
// precede their parents, so no recursion is needed to evaluate or print.
//
// Text syntax:  (intro L)  (union A B)  (edge I J A)  (arc I J A)  (relabel I J A)

#include "mixedcolor/errors.hpp"
#include "mixedcolor/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mixedcolor {

enum class ExprKind { intro, unite, edge, arc, relabel };

struct ExprNode {
    ExprKind kind = ExprKind::intro;
    int a = 0;      ///< intro label; first label of edge/arc; relabel source
    int b = 0;      ///< second label of edge/arc; relabel target
    int left = -1;  ///< child (or left operand of a union)
    int right = -1; ///< right operand of a union
    bool operator==(const ExprNode&) const = default;
};

class MixedExpression {
public:
    MixedExpression() = default;
    MixedExpression(std::vector<ExprNode> nodes, int root) : nodes_(std::move(nodes)), root_(root) {}

    const std::vector<ExprNode>& nodes() const { return nodes_; }
    const ExprNode& node(int id) const { return nodes_[id]; }
    int root() const { return root_; }
    bool empty() const { return root_ < 0; }

    /// Node ids reachable from the root, children before parents, left subtrees first.
    std::vector<int> postorder() const
    {
        std::vector<int> out;
        if (root_ < 0)
            return out;
        std::vector<std::pair<int, bool>> stack{{root_, false}};
        while (!stack.empty()) {
            auto [id, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                out.push_back(id);
                continue;
            }
            stack.push_back({id, true});
            const auto& nd = nodes_[id];
            if (nd.right >= 0)
                stack.push_back({nd.right, false});
            if (nd.left >= 0)
                stack.push_back({nd.left, false});
        }
        return out;
    }

    bool operator==(const MixedExpression& o) const = default;

private:
    std::vector<ExprNode> nodes_;
    int root_ = -1;
};

/// Appends nodes; every call returns the new node id. `build(root)` snapshots an expression.
class ExpressionBuilder {
public:
    int intro(int label)
    {
        check_label(label);
        return push({ExprKind::intro, label, 0, -1, -1});
    }
    int unite(int left, int right)
    {
        check_node(left);
        check_node(right);
        return push({ExprKind::unite, 0, 0, left, right});
    }
    int edge(int i, int j, int child) { return relation(ExprKind::edge, i, j, child); }
    int arc(int i, int j, int child) { return relation(ExprKind::arc, i, j, child); }
    int relabel(int from, int to, int child)
    {
        check_label(from);
        check_label(to);
        check_node(child);
        return push({ExprKind::relabel, from, to, child, -1});
    }

    /// Copies the subtree of `other` rooted at `id` into this builder.
    int import(const MixedExpression& other, int id)
    {
        std::unordered_map<int, int> map;
        for (int x : subtree_order(other, id)) {
            auto nd = other.node(x);
            if (nd.left >= 0)
                nd.left = map.at(nd.left);
            if (nd.right >= 0)
                nd.right = map.at(nd.right);
            map[x] = push(nd);
        }
        return map.at(id);
    }

    MixedExpression build(int root) const
    {
        check_node(root);
        return MixedExpression(nodes_, root);
    }

    int size() const { return static_cast<int>(nodes_.size()); }

private:
    static std::vector<int> subtree_order(const MixedExpression& e, int id)
    {
        return MixedExpression(e.nodes(), id).postorder();
    }

    int relation(ExprKind kind, int i, int j, int child)
    {
        check_label(i);
        check_label(j);
        check_node(child);
        if (i == j)
            throw std::invalid_argument("edge/arc operation needs two distinct labels");
        return push({kind, i, j, child, -1});
    }
    void check_label(int l) const
    {
        if (l < 1)
            throw std::invalid_argument("labels are positive integers");
    }
    void check_node(int id) const
    {
        if (id < 0 || id >= size())
            throw std::invalid_argument("unknown expression node");
    }
    int push(ExprNode n)
    {
        nodes_.push_back(n);
        return size() - 1;
    }

    std::vector<ExprNode> nodes_;
};

/// Number of distinct labels used anywhere in the expression.
inline int width(const MixedExpression& e)
{
    std::set<int> labels;
    for (int id : e.postorder()) {
        const auto& nd = e.node(id);
        switch (nd.kind) {
        case ExprKind::intro: labels.insert(nd.a); break;
        case ExprKind::unite: break;
        default:
            labels.insert(nd.a);
            labels.insert(nd.b);
        }
    }
    return static_cast<int>(labels.size());
}

struct LabeledGraph {
    MixedGraph graph;
    std::vector<int> label; ///< final label per vertex
};

namespace detail {

    // Bottom-up fold shared by strict and relaxed evaluation.
    // Vertices are numbered by left-to-right introduce order.
    struct EvalTrace {
        int n = 0;
        std::vector<int> label;
        std::vector<Edge> edges;
        std::vector<Arc> arcs;
    };

    inline EvalTrace run_expression(const MixedExpression& e, bool relaxed)
    {
        EvalTrace t;
        auto order = e.postorder();
        for (int id : order)
            if (e.node(id).kind == ExprKind::intro)
                ++t.n;
        t.label.assign(t.n, 0);
        // Relation store: pair key -> kind (0 edge, 1 arc low->high, 2 arc high->low, 3 both arcs).
        std::unordered_map<std::uint64_t, int> rel;
        auto key = [](Vertex a, Vertex b) {
            auto [lo, hi] = std::minmax(a, b);
            return (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
        };
        using LabelMap = std::map<int, std::vector<Vertex>>;
        std::unordered_map<int, LabelMap> state;
        int next_vertex = 0;
        for (int id : order) {
            const auto& nd = e.node(id);
            switch (nd.kind) {
            case ExprKind::intro: {
                Vertex v = next_vertex++;
                t.label[v] = nd.a;
                state[id][nd.a].push_back(v);
                break;
            }
            case ExprKind::unite: {
                auto l = std::move(state[nd.left]);
                auto r = std::move(state[nd.right]);
                state.erase(nd.left);
                state.erase(nd.right);
                if (l.size() < r.size())
                    std::swap(l, r);
                for (auto& [lab, vs] : r) {
                    auto& dst = l[lab];
                    dst.insert(dst.end(), vs.begin(), vs.end());
                }
                state[id] = std::move(l);
                break;
            }
            case ExprKind::relabel: {
                auto m = std::move(state[nd.left]);
                state.erase(nd.left);
                auto it = m.find(nd.a);
                if (it != m.end() && nd.a != nd.b) {
                    auto vs = std::move(it->second);
                    m.erase(it);
                    auto& dst = m[nd.b];
                    for (Vertex v : vs)
                        t.label[v] = nd.b;
                    dst.insert(dst.end(), vs.begin(), vs.end());
                }
                state[id] = std::move(m);
                break;
            }
            case ExprKind::edge:
            case ExprKind::arc: {
                auto m = std::move(state[nd.left]);
                state.erase(nd.left);
                auto ia = m.find(nd.a), ib = m.find(nd.b);
                if (ia != m.end() && ib != m.end()) {
                    for (Vertex u : ia->second)
                        for (Vertex w : ib->second) {
                            auto k = key(u, w);
                            auto found = rel.find(k);
                            auto pair_text = [&] {
                                return "{" + std::to_string(u + 1) + "," + std::to_string(w + 1) + "}";
                            };
                            if (nd.kind == ExprKind::edge) {
                                if (found == rel.end())
                                    rel[k] = 0;
                                else if (found->second == 0)
                                    continue;
                                else if (relaxed && found->second != 0)
                                    found->second = 3;
                                else
                                    throw ConflictingRelation("edge parallel to an arc on " + pair_text());
                            }
                            else {
                                int dir = u < w ? 1 : 2;
                                if (found == rel.end())
                                    rel[k] = dir;
                                else if (found->second == dir || found->second == 3)
                                    continue;
                                else if (relaxed)
                                    found->second = 3;
                                else if (found->second == 0)
                                    throw ConflictingRelation("arc parallel to an edge on " + pair_text());
                                else
                                    throw ConflictingRelation("opposite arcs on " + pair_text());
                            }
                        }
                }
                state[id] = std::move(m);
                break;
            }
            }
        }
        for (auto [k, kind] : rel) {
            Vertex lo = static_cast<Vertex>(k >> 32), hi = static_cast<Vertex>(k & 0xffffffffU);
            if (kind == 0)
                t.edges.push_back({lo, hi});
            if (kind == 1 || kind == 3)
                t.arcs.push_back({lo, hi});
            if (kind == 2 || kind == 3)
                t.arcs.push_back({hi, lo});
        }
        std::sort(t.edges.begin(), t.edges.end());
        std::sort(t.arcs.begin(), t.arcs.end());
        return t;
    }

} // namespace detail

/// Throws ConflictingRelation (parallel/opposite relation) or DirectedCycleError.
inline LabeledGraph evaluate(const MixedExpression& e)
{
    auto t = detail::run_expression(e, false);
    return {MixedGraph::create(t.n, std::move(t.edges), std::move(t.arcs)), std::move(t.label)};
}

/// Arc set of the evaluation with opposite arcs allowed; an edge counts as both arcs.
inline std::vector<Arc> evaluate_arcs_relaxed(const MixedExpression& e)
{
    auto t = detail::run_expression(e, true);
    std::vector<Arc> out = t.arcs;
    for (const auto& ed : t.edges) {
        out.push_back({ed.u, ed.v});
        out.push_back({ed.v, ed.u});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline void print_expression(std::ostream& out, const MixedExpression& e)
{
    if (e.empty())
        return;
    // Work items: node ids (>= 0) or a closing parenthesis (-1) / separating space (-2).
    std::vector<int> work{e.root()};
    while (!work.empty()) {
        int item = work.back();
        work.pop_back();
        if (item == -1) {
            out << ')';
            continue;
        }
        if (item == -2) {
            out << ' ';
            continue;
        }
        const auto& nd = e.node(item);
        switch (nd.kind) {
        case ExprKind::intro: out << "(intro " << nd.a << ')'; break;
        case ExprKind::unite:
            out << "(union ";
            work.insert(work.end(), {-1, nd.right, -2, nd.left});
            break;
        case ExprKind::edge:
        case ExprKind::arc:
        case ExprKind::relabel: {
            const char* op = nd.kind == ExprKind::edge ? "edge" : nd.kind == ExprKind::arc ? "arc" : "relabel";
            out << '(' << op << ' ' << nd.a << ' ' << nd.b << ' ';
            work.insert(work.end(), {-1, nd.left});
            break;
        }
        }
    }
}

inline std::string to_string(const MixedExpression& e)
{
    std::ostringstream out;
    print_expression(out, e);
    return out.str();
}

/// Parses the s-expression syntax; throws ParseError.
inline MixedExpression parse_expression(const std::string& src)
{
    std::vector<std::string> tok;
    for (std::size_t i = 0; i < src.size();) {
        char ch = src[i];
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n')
                ++i;
        }
        else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        }
        else if (ch == '(' || ch == ')') {
            tok.emplace_back(1, ch);
            ++i;
        }
        else {
            std::size_t j = i;
            while (j < src.size() && !std::isspace(static_cast<unsigned char>(src[j])) && src[j] != '(' &&
                   src[j] != ')')
                ++j;
            tok.push_back(src.substr(i, j - i));
            i = j;
        }
    }

    struct Frame {
        std::string op;
        std::vector<int> nums;
        std::vector<int> kids;
    };
    ExpressionBuilder b;
    std::vector<Frame> stack;
    int root = -1;
    auto number = [](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || v < 1)
            throw ParseError("expected a positive label, got '" + s + "'");
        return v;
    };
    for (std::size_t i = 0; i < tok.size(); ++i) {
        const auto& t = tok[i];
        if (t == "(") {
            if (root >= 0 && stack.empty())
                throw ParseError("trailing content after expression");
            if (i + 1 >= tok.size() || tok[i + 1] == "(" || tok[i + 1] == ")")
                throw ParseError("expected an operator after '('");
            stack.push_back({tok[++i], {}, {}});
        }
        else if (t == ")") {
            if (stack.empty())
                throw ParseError("unbalanced ')'");
            Frame f = std::move(stack.back());
            stack.pop_back();
            int id = -1;
            try {
                if (f.op == "intro" && f.nums.size() == 1 && f.kids.empty())
                    id = b.intro(f.nums[0]);
                else if (f.op == "union" && f.nums.empty() && f.kids.size() == 2)
                    id = b.unite(f.kids[0], f.kids[1]);
                else if (f.op == "edge" && f.nums.size() == 2 && f.kids.size() == 1)
                    id = b.edge(f.nums[0], f.nums[1], f.kids[0]);
                else if (f.op == "arc" && f.nums.size() == 2 && f.kids.size() == 1)
                    id = b.arc(f.nums[0], f.nums[1], f.kids[0]);
                else if (f.op == "relabel" && f.nums.size() == 2 && f.kids.size() == 1)
                    id = b.relabel(f.nums[0], f.nums[1], f.kids[0]);
                else
                    throw ParseError("malformed '" + f.op + "' term");
            }
            catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what());
            }
            if (stack.empty()) {
                if (root >= 0)
                    throw ParseError("more than one top-level expression");
                root = id;
            }
            else {
                stack.back().kids.push_back(id);
            }
        }
        else {
            if (stack.empty())
                throw ParseError("token '" + t + "' outside parentheses");
            if (!stack.back().kids.empty())
                throw ParseError("labels must precede sub-expressions");
            stack.back().nums.push_back(number(t));
        }
    }
    if (!stack.empty())
        throw ParseError("unbalanced '('");
    if (root < 0)
        throw ParseError("empty expression");
    return b.build(root);
}

inline MixedExpression load_expression_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_expression(ss.str());
}

} // namespace mixedcolor

#endif
