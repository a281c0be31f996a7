#include <berge/graph.hh>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

using std::uint64_t;
using std::vector;

namespace berge {


Graph::Graph(unsigned n) :
    _n(n),
    _words((n + 63) / 64),
    _rows(std::size_t{n} * _words, 0),
    _degrees(n, 0)
{
}

auto Graph::complete(unsigned n) -> Graph
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

auto Graph::cycle(unsigned n) -> Graph
{
    Graph g(n);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

auto Graph::petersen() -> Graph
{
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

auto Graph::from_edges(unsigned n, std::span<const GraphEdge> edges) -> Graph
{
    Graph g(n);
    for (auto & [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

auto Graph::check(Vertex u, Vertex v) const -> void
{
    if (u >= _n || v >= _n)
        throw std::invalid_argument("graph vertex out of range");
    if (u == v)
        throw std::invalid_argument("graph loops are not allowed (vertex " + std::to_string(u) + ")");
}

auto Graph::add_edge(Vertex u, Vertex v) -> bool
{
    check(u, v);
    if (adjacent(u, v))
        return false;
    _rows[u * _words + (v >> 6)] |= uint64_t{1} << (v & 63);
    _rows[v * _words + (u >> 6)] |= uint64_t{1} << (u & 63);
    ++_degrees[u];
    ++_degrees[v];
    ++_edge_count;
    return true;
}

auto Graph::remove_edge(Vertex u, Vertex v) -> bool
{
    check(u, v);
    if (! adjacent(u, v))
        return false;
    _rows[u * _words + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
    _rows[v * _words + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
    --_degrees[u];
    --_degrees[v];
    --_edge_count;
    return true;
}

auto Graph::neighbours(Vertex v) const -> VertexSet
{
    VertexSet result;
    result.reserve(_degrees[v]);
    auto r = row(v);
    for (unsigned w = 0; w < _words; ++w)
        for (uint64_t bits = r[w]; bits; bits &= bits - 1)
            result.push_back(w * 64 + std::countr_zero(bits));
    return result;
}

auto Graph::edges() const -> vector<GraphEdge>
{
    vector<GraphEdge> result;
    result.reserve(_edge_count);
    for (Vertex u = 0; u < _n; ++u)
        for (auto v : neighbours(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::degree_sequence() const -> vector<unsigned>
{
    auto d = _degrees;
    std::sort(d.begin(), d.end());
    return d;
}

auto is_connected(const Graph & g) -> bool
{
    if (g.size() == 0)
        return true;
    vector<bool> seen(g.size(), false);
    vector<Vertex> stack{0};
    seen[0] = true;
    unsigned count = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbours(v))
            if (! seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.size();
}

auto articulation_points(const Graph & g) -> VertexSet
{
    const unsigned n = g.size();
    vector<int> disc(n, -1), low(n, 0);
    vector<bool> cut(n, false);
    int timer = 0;

    // iterative Tarjan; frames hold (vertex, parent, neighbour list, next index)
    struct Frame {
        Vertex v;
        int parent;
        VertexSet nbrs;
        std::size_t next;
        unsigned children;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, g.neighbours(root), 0, 0});
        while (! stack.empty()) {
            auto & top = stack.back();
            if (top.next < top.nbrs.size()) {
                auto w = top.nbrs[top.next++];
                if (disc[w] == -1) {
                    ++top.children;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, static_cast<int>(top.v), g.neighbours(w), 0, 0});
                }
                else if (static_cast<int>(w) != top.parent)
                    low[top.v] = std::min(low[top.v], disc[w]);
            }
            else {
                auto done = top;
                stack.pop_back();
                if (stack.empty()) {
                    if (done.children > 1)
                        cut[done.v] = true;
                }
                else {
                    auto & parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (parent.parent != -1 && low[done.v] >= disc[parent.v])
                        cut[parent.v] = true;
                }
            }
        }
    }

    VertexSet result;
    for (Vertex v = 0; v < n; ++v)
        if (cut[v])
            result.push_back(v);
    return result;
}

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    VertexSet result;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
    return result;
}

auto set_contains(const VertexSet & s, Vertex v) -> bool
{
    return std::binary_search(s.begin(), s.end(), v);
}

}
