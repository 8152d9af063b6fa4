#ifndef MIXEDCOLOR_TREE_DECOMPOSITION_HPP
#define MIXEDCOLOR_TREE_DECOMPOSITION_HPP

// Tree decompositions: PACE .td I/O, a min-fill heuristic, validation and
// conversion to nice form (leaf / introduce / forget / join).

#include "mixedcolor/errors.hpp"
#include "mixedcolor/graph.hpp"
#include "mixedcolor/undirected.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mixedcolor {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;          ///< each sorted ascending
    std::vector<std::pair<int, int>> tree_edges;    ///< between bag indices

    int width() const
    {
        int w = 0;
        for (const auto& b : bags)
            w = std::max(w, static_cast<int>(b.size()));
        return w - 1;
    }
};

/// Throws InvalidDecomposition when the bags do not form a tree decomposition of g.
inline void validate_decomposition(const MixedGraph& g, const TreeDecomposition& td)
{
    const int nb = static_cast<int>(td.bags.size());
    const int n = g.size();
    if (n > 0 && nb == 0)
        throw InvalidDecomposition("no bags");
    for (const auto& b : td.bags)
        for (Vertex v : b)
            if (v < 0 || v >= n)
                throw InvalidDecomposition("bag vertex out of range");
    if (nb > 0 && static_cast<int>(td.tree_edges.size()) != nb - 1)
        throw InvalidDecomposition("tree needs exactly bags-1 edges");
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb || a == b)
            throw InvalidDecomposition("tree edge references unknown bag");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (nb > 0) {
        std::vector<bool> seen(nb, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != nb)
            throw InvalidDecomposition("decomposition tree is disconnected");
    }
    std::vector<std::vector<int>> holders(n);
    for (int i = 0; i < nb; ++i)
        for (Vertex v : td.bags[i])
            holders[v].push_back(i);
    for (Vertex v = 0; v < n; ++v) {
        if (holders[v].empty())
            throw InvalidDecomposition("vertex " + std::to_string(v + 1) + " in no bag");
        // Bags holding v must induce a connected subtree.
        std::vector<bool> has(nb, false), seen(nb, false);
        for (int i : holders[v])
            has[i] = true;
        std::vector<int> stack{holders[v][0]};
        seen[holders[v][0]] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (has[y] && !seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != holders[v].size())
            throw InvalidDecomposition("bags containing vertex " + std::to_string(v + 1) + " are not connected");
    }
    auto together = [&](Vertex a, Vertex b) {
        for (int i : holders[a])
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), b))
                return true;
        return false;
    };
    for (const auto& e : g.edges())
        if (!together(e.u, e.v))
            throw InvalidDecomposition("edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                                       "} in no bag");
    for (const auto& a : g.arcs())
        if (!together(a.tail, a.head))
            throw InvalidDecomposition("arc (" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) +
                                       ") in no bag");
}

/// Elimination by minimum fill-in (ties: smallest id) on the underlying graph.
inline TreeDecomposition min_fill_decomposition(const MixedGraph& g)
{
    const int n = g.size();
    TreeDecomposition td;
    if (n == 0)
        return td;
    auto adj = undirected_adjacency(g);
    VertexSet alive(n, true);
    std::vector<int> position(n, -1);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        long best_fill = -1;
        for (int v = alive.first(); v != -1; v = alive.next(v + 1)) {
            auto nb = (adj[v] & alive).members();
            long fill = 0;
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!adj[nb[i]].contains(nb[j]))
                        ++fill;
            if (pick == -1 || fill < best_fill) {
                pick = v;
                best_fill = fill;
            }
        }
        auto nb = (adj[pick] & alive).members();
        for (Vertex a : nb)
            for (Vertex b : nb)
                if (a != b)
                    adj[a].insert(b);
        std::vector<Vertex> bag = nb;
        bag.push_back(pick);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
        position[pick] = step;
        order.push_back(pick);
        alive.erase(pick);
    }
    // Bag i links to the bag of its earliest-eliminated later neighbour.
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        int target = -1;
        for (Vertex u : td.bags[i])
            if (u != order[i] && (target == -1 || position[u] < target))
                target = position[u];
        if (target == -1)
            roots.push_back(i);
        else
            td.tree_edges.emplace_back(i, target);
    }
    for (std::size_t r = 1; r < roots.size(); ++r)
        td.tree_edges.emplace_back(roots[r - 1], roots[r]);
    return td;
}

/// PACE 2017 format: `s td <bags> <max bag size> <n>`, `b <id> <v...>`, `<id> <id>`; `c` comments.
inline TreeDecomposition load_decomposition(std::istream& in)
{
    TreeDecomposition td;
    std::string line;
    int line_no = 0;
    bool header = false;
    long nb = 0;
    std::vector<bool> filled;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty() || tok[0] == "c")
            continue;
        auto where = "line " + std::to_string(line_no) + ": ";
        if (tok[0] == "s") {
            if (header || tok.size() != 5 || tok[1] != "td")
                throw ParseError(where + "expected a single 's td <bags> <maxbag> <n>' header");
            nb = detail::parse_int(tok[2], line_no);
            if (nb < 0)
                throw ParseError(where + "negative bag count");
            td.bags.assign(nb, {});
            filled.assign(nb, false);
            header = true;
        }
        else if (!header) {
            throw ParseError(where + "content before header");
        }
        else if (tok[0] == "b") {
            if (tok.size() < 2)
                throw ParseError(where + "bag line without id");
            long id = detail::parse_int(tok[1], line_no);
            if (id < 1 || id > nb || filled[id - 1])
                throw ParseError(where + "bad or repeated bag id");
            filled[id - 1] = true;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                long v = detail::parse_int(tok[i], line_no);
                if (v < 1)
                    throw ParseError(where + "vertex ids are 1-based");
                td.bags[id - 1].push_back(static_cast<Vertex>(v - 1));
            }
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
        }
        else {
            if (tok.size() != 2)
                throw ParseError(where + "expected '<bag> <bag>'");
            long a = detail::parse_int(tok[0], line_no);
            long b = detail::parse_int(tok[1], line_no);
            if (a < 1 || a > nb || b < 1 || b > nb)
                throw ParseError(where + "tree edge references unknown bag");
            td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
    }
    if (!header)
        throw ParseError("missing 's td' header");
    return td;
}

inline TreeDecomposition load_decomposition_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return load_decomposition(in);
}

inline void save_decomposition(std::ostream& out, const TreeDecomposition& td, int n)
{
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i])
            out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges)
        out << a + 1 << ' ' << b + 1 << '\n';
}

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
    NiceKind kind = NiceKind::leaf;
    std::vector<Vertex> bag; ///< sorted
    Vertex vertex = -1;      ///< introduced or forgotten vertex
    std::vector<int> children;
};

/// Nodes are stored children-before-parents; the last node is the root with an empty bag.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root() const { return static_cast<int>(nodes.size()) - 1; }
};

/// Converts a (validated) decomposition into nice form rooted at bag 0.
inline NiceDecomposition make_nice(const TreeDecomposition& td)
{
    NiceDecomposition nd;
    auto add = [&](NiceNode node) {
        nd.nodes.push_back(std::move(node));
        return static_cast<int>(nd.nodes.size()) - 1;
    };
    auto introduce = [&](int child, Vertex v) {
        auto bag = nd.nodes[child].bag;
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        return add({NiceKind::introduce, std::move(bag), v, {child}});
    };
    auto forget = [&](int child, Vertex v) {
        auto bag = nd.nodes[child].bag;
        bag.erase(std::find(bag.begin(), bag.end(), v));
        return add({NiceKind::forget, std::move(bag), v, {child}});
    };
    // Morph the bag at node `cur` into `target` by forgets then introduces.
    auto morph = [&](int cur, const std::vector<Vertex>& target) {
        auto have = nd.nodes[cur].bag;
        for (Vertex v : have)
            if (!std::binary_search(target.begin(), target.end(), v))
                cur = forget(cur, v);
        for (Vertex v : target)
            if (!std::binary_search(have.begin(), have.end(), v))
                cur = introduce(cur, v);
        return cur;
    };

    if (td.bags.empty()) {
        add({NiceKind::leaf, {}, -1, {}});
        return nd;
    }
    const int nb = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // Iterative post-order from bag 0.
    std::vector<int> parent(nb, -1), order;
    std::vector<bool> seen(nb, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = x;
                stack.push_back(y);
            }
    }
    std::vector<std::vector<int>> kids(nb);
    for (int x : order)
        if (parent[x] >= 0)
            kids[parent[x]].push_back(x);
    std::vector<int> built(nb, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        const auto& bag = td.bags[x];
        std::vector<int> branches;
        for (int c : kids[x])
            branches.push_back(morph(built[c], bag));
        if (branches.empty())
            branches.push_back(morph(add({NiceKind::leaf, {}, -1, {}}), bag));
        int cur = branches[0];
        for (std::size_t i = 1; i < branches.size(); ++i)
            cur = add({NiceKind::join, bag, -1, {cur, branches[i]}});
        built[x] = cur;
    }
    morph(built[0], {});
    return nd;
}

} // namespace mixedcolor

#endif
