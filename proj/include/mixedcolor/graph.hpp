#ifndef MIXEDCOLOR_GRAPH_HPP
#define MIXEDCOLOR_GRAPH_HPP

// Mixed graphs: a vertex set with disjoint undirected edges and directed arcs.
// Vertices are 0-based internally; the text formats are 1-based.

#include "mixedcolor/errors.hpp"
#include "mixedcolor/vertex_set.hpp"

#include <algorithm>
#include <compare>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mixedcolor {

using Vertex = int;

/// Undirected edge, normalised so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Directed arc tail -> head.
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    auto operator<=>(const Arc&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class MixedGraph {
public:
    MixedGraph() = default;

    /// Validates and builds. Throws LoopError, DuplicateRelation, DirectedCycleError,
    /// or std::out_of_range for ids outside 0..n-1.
    static MixedGraph create(int n, std::vector<Edge> edges, std::vector<Arc> arcs)
    {
        if (n < 0)
            throw std::out_of_range("negative vertex count");
        MixedGraph g;
        g.n_ = n;
        auto check_range = [n](Vertex v) {
            if (v < 0 || v >= n)
                throw std::out_of_range("vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(n));
        };

        // pair -> 0 edge, 1 arc low->high, 2 arc high->low
        std::map<std::pair<Vertex, Vertex>, int> seen;
        auto pair_name = [](Vertex a, Vertex b) {
            return "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
        };
        for (auto& e : edges) {
            check_range(e.u);
            check_range(e.v);
            if (e.u == e.v)
                throw LoopError("loop edge at vertex " + std::to_string(e.u + 1));
            e = make_edge(e.u, e.v);
            if (!seen.emplace(std::pair{e.u, e.v}, 0).second)
                throw DuplicateRelation("parallel relation on " + pair_name(e.u, e.v));
        }
        for (const auto& a : arcs) {
            check_range(a.tail);
            check_range(a.head);
            if (a.tail == a.head)
                throw LoopError("loop arc at vertex " + std::to_string(a.tail + 1));
            auto key = std::minmax(a.tail, a.head);
            int kind = a.tail < a.head ? 1 : 2;
            auto [it, fresh] = seen.emplace(std::pair{key.first, key.second}, kind);
            if (!fresh) {
                if (it->second != 0 && it->second != kind)
                    throw DirectedCycleError("opposite arcs on " + pair_name(a.tail, a.head));
                throw DuplicateRelation("parallel relation on " + pair_name(a.tail, a.head));
            }
        }

        std::sort(edges.begin(), edges.end());
        std::sort(arcs.begin(), arcs.end());
        g.edges_ = std::move(edges);
        g.arcs_ = std::move(arcs);
        g.out_.assign(n, {});
        g.in_.assign(n, {});
        g.und_.assign(n, {});
        for (const auto& e : g.edges_) {
            g.und_[e.u].push_back(e.v);
            g.und_[e.v].push_back(e.u);
        }
        for (const auto& a : g.arcs_) {
            g.out_[a.tail].push_back(a.head);
            g.in_[a.head].push_back(a.tail);
        }
        for (int v = 0; v < n; ++v) {
            std::sort(g.out_[v].begin(), g.out_[v].end());
            std::sort(g.in_[v].begin(), g.in_[v].end());
            std::sort(g.und_[v].begin(), g.und_[v].end());
        }

        // Kahn with a min-heap: smallest available id first.
        std::vector<int> indeg(n);
        for (int v = 0; v < n; ++v)
            indeg[v] = static_cast<int>(g.in_[v].size());
        std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0)
                ready.push(v);
        while (!ready.empty()) {
            Vertex v = ready.top();
            ready.pop();
            g.topo_.push_back(v);
            for (Vertex w : g.out_[v])
                if (--indeg[w] == 0)
                    ready.push(w);
        }
        if (static_cast<int>(g.topo_.size()) != n)
            throw DirectedCycleError("arc set contains a directed cycle");
        return g;
    }

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
    std::span<const Vertex> undirected_neighbors(Vertex v) const { return und_[v]; }

    bool has_edge(Vertex a, Vertex b) const { return std::binary_search(und_[a].begin(), und_[a].end(), b); }
    bool has_arc(Vertex tail, Vertex head) const
    {
        return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
    }
    /// Joined by an edge or an arc in either direction.
    bool adjacent(Vertex a, Vertex b) const { return has_edge(a, b) || has_arc(a, b) || has_arc(b, a); }

    /// Deterministic topological order (smallest id first among available vertices).
    const std::vector<Vertex>& topological_order() const { return topo_; }

    bool operator==(const MixedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_, in_, und_;
    std::vector<Vertex> topo_;
};

/// Total map vertex -> colour; colours are >= 1, 0 marks "unassigned".
struct Coloring {
    std::vector<int> colors;

    Coloring() = default;
    explicit Coloring(std::vector<int> c) : colors(std::move(c)) {}

    int size() const { return static_cast<int>(colors.size()); }
    int operator[](Vertex v) const { return colors[v]; }
    int& operator[](Vertex v) { return colors[v]; }

    /// Largest colour, i.e. the k of the k-colouring. 0 for the empty colouring.
    int color_count() const { return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()); }

    int distinct_colors() const
    {
        auto c = colors;
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

    /// Order-preserving renumbering of the used colours to 1..distinct. Keeps properness.
    Coloring compacted() const
    {
        auto used = colors;
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        Coloring out = *this;
        for (auto& c : out.colors)
            c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin()) + 1;
        return out;
    }

    bool operator==(const Coloring&) const = default;
};

/// Partition by inrank (length of the longest directed path ending at a vertex).
struct Layering {
    std::vector<std::vector<Vertex>> layers;
    std::vector<int> inrank;

    int maxrank() const { return layers.empty() ? 0 : static_cast<int>(layers.size()) - 1; }
};

inline const std::vector<Vertex>& topological_order(const MixedGraph& g) { return g.topological_order(); }

/// Per-vertex reachability sets (excluding the vertex itself).
inline std::vector<VertexSet> reachability(const MixedGraph& g)
{
    const int n = g.size();
    std::vector<VertexSet> reach(n, VertexSet(n));
    const auto& order = g.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        for (Vertex w : g.out_neighbors(v)) {
            reach[v].insert(w);
            reach[v] |= reach[w];
        }
    }
    return reach;
}

/// Adds every transitive arc and drops edges parallel to an arc.
inline MixedGraph transitive_closure(const MixedGraph& g)
{
    const int n = g.size();
    auto reach = reachability(g);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = reach[u].first(); w != -1; w = reach[u].next(w + 1))
            arcs.push_back({u, w});
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!reach[e.u].contains(e.v) && !reach[e.v].contains(e.u))
            edges.push_back(e);
    return MixedGraph::create(n, std::move(edges), std::move(arcs));
}

inline Layering layering(const MixedGraph& g)
{
    Layering out;
    out.inrank.assign(g.size(), 0);
    for (Vertex v : g.topological_order())
        for (Vertex w : g.out_neighbors(v))
            out.inrank[w] = std::max(out.inrank[w], out.inrank[v] + 1);
    if (g.empty())
        return out;
    int top = *std::max_element(out.inrank.begin(), out.inrank.end());
    out.layers.assign(top + 1, {});
    for (Vertex v = 0; v < g.size(); ++v)
        out.layers[out.inrank[v]].push_back(v);
    return out;
}

/// Length (in arcs) of the longest directed path.
inline int maxrank(const MixedGraph& g) { return layering(g).maxrank(); }

/// Length of the longest directed path starting at each vertex.
inline std::vector<int> outrank(const MixedGraph& g)
{
    std::vector<int> r(g.size(), 0);
    const auto& order = g.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (Vertex w : g.out_neighbors(*it))
            r[*it] = std::max(r[*it], r[w] + 1);
    return r;
}

inline MixedGraph underlying_undirected(const MixedGraph& g)
{
    std::vector<Edge> edges = g.edges();
    for (const auto& a : g.arcs())
        edges.push_back(make_edge(a.tail, a.head));
    return MixedGraph::create(g.size(), std::move(edges), {});
}

/// Arcs of D(G): every arc plus both orientations of every edge. Sorted.
inline std::vector<Arc> corresponding_digraph(const MixedGraph& g)
{
    std::vector<Arc> out = g.arcs();
    for (const auto& e : g.edges()) {
        out.push_back({e.u, e.v});
        out.push_back({e.v, e.u});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Subgraph induced by `keep`; vertex i of the result is keep.members()[i].
inline MixedGraph induced_subgraph(const MixedGraph& g, const VertexSet& keep)
{
    std::vector<int> index(g.size(), -1);
    int next = 0;
    for (Vertex v = keep.first(); v != -1; v = keep.next(v + 1))
        index[v] = next++;
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (const auto& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.push_back(make_edge(index[e.u], index[e.v]));
    for (const auto& a : g.arcs())
        if (index[a.tail] >= 0 && index[a.head] >= 0)
            arcs.push_back({index[a.tail], index[a.head]});
    return MixedGraph::create(next, std::move(edges), std::move(arcs));
}

inline MixedGraph induced_subgraph(const MixedGraph& g, std::span<const Vertex> keep)
{
    VertexSet s(g.size());
    for (Vertex v : keep)
        s.insert(v);
    return induced_subgraph(g, s);
}

// ---------------------------------------------------------------------------
// Text formats

namespace detail {
    inline std::string trim_comment(const std::string& line)
    {
        auto hash = line.find('#');
        std::string s = hash == std::string::npos ? line : line.substr(0, hash);
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return {};
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    inline long parse_int(const std::string& tok, int line_no)
    {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.empty())
            throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
        return v;
    }
} // namespace detail

/// Reads the extended DIMACS format:
///   p mixed <n> <num_edges> <num_arcs>
///   e <u> <v>
///   a <u> <v>
inline MixedGraph load_graph(std::istream& in)
{
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long n = 0, want_edges = 0, want_arcs = 0;
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = detail::trim_comment(line);
        if (s.empty())
            continue;
        std::istringstream ls(s);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        auto where = "line " + std::to_string(line_no) + ": ";
        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(where + "duplicate header");
            if (tok.size() != 5 || tok[1] != "mixed")
                throw ParseError(where + "expected 'p mixed <n> <edges> <arcs>'");
            n = detail::parse_int(tok[2], line_no);
            want_edges = detail::parse_int(tok[3], line_no);
            want_arcs = detail::parse_int(tok[4], line_no);
            if (n < 0 || want_edges < 0 || want_arcs < 0)
                throw ParseError(where + "negative count in header");
            have_header = true;
        }
        else if (tok[0] == "e" || tok[0] == "a") {
            if (!have_header)
                throw ParseError(where + "relation before header");
            if (tok.size() != 3)
                throw ParseError(where + "expected '" + tok[0] + " <u> <v>'");
            long u = detail::parse_int(tok[1], line_no);
            long v = detail::parse_int(tok[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(where + "vertex id outside 1.." + std::to_string(n));
            if (tok[0] == "e")
                edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
            else
                arcs.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
        }
        else {
            throw ParseError(where + "unknown line kind '" + tok[0] + "'");
        }
    }
    if (!have_header)
        throw ParseError("missing 'p mixed' header");
    if (static_cast<long>(edges.size()) != want_edges || static_cast<long>(arcs.size()) != want_arcs)
        throw ParseError("header announces " + std::to_string(want_edges) + " edges and " +
                         std::to_string(want_arcs) + " arcs, found " + std::to_string(edges.size()) + " and " +
                         std::to_string(arcs.size()));
    return MixedGraph::create(static_cast<int>(n), std::move(edges), std::move(arcs));
}

inline MixedGraph load_graph(const std::string& text)
{
    std::istringstream in(text);
    return load_graph(in);
}

inline MixedGraph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return load_graph(in);
}

inline void save_graph(std::ostream& out, const MixedGraph& g)
{
    out << "p mixed " << g.size() << ' ' << g.edges().size() << ' ' << g.arcs().size() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (const auto& a : g.arcs())
        out << "a " << a.tail + 1 << ' ' << a.head + 1 << '\n';
}

inline std::string to_text(const MixedGraph& g)
{
    std::ostringstream out;
    save_graph(out, g);
    return out.str();
}

/// Certificate: one "<vertex> <color>" line per vertex.
inline void save_coloring(std::ostream& out, const Coloring& c)
{
    for (Vertex v = 0; v < c.size(); ++v)
        out << v + 1 << ' ' << c[v] << '\n';
}

/// Missing vertices are left at colour 0 (check_proper reports them).
inline Coloring load_coloring(std::istream& in, int n)
{
    Coloring c(std::vector<int>(n, 0));
    std::vector<bool> seen(n, false);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = detail::trim_comment(line);
        if (s.empty())
            continue;
        std::istringstream ls(s);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError("line " + std::to_string(line_no) + ": expected '<vertex> <color>'");
        long v = detail::parse_int(a, line_no);
        long col = detail::parse_int(b, line_no);
        if (v < 1 || v > n)
            throw ParseError("line " + std::to_string(line_no) + ": vertex outside 1.." + std::to_string(n));
        if (col < 1)
            throw ParseError("line " + std::to_string(line_no) + ": colours must be positive");
        if (seen[v - 1])
            throw ParseError("line " + std::to_string(line_no) + ": vertex " + a + " coloured twice");
        seen[v - 1] = true;
        c[static_cast<Vertex>(v - 1)] = static_cast<int>(col);
    }
    return c;
}

} // namespace mixedcolor

#endif
