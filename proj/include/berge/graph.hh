#pragma once

#include <berge/hypercore.hh>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace berge {

using VertexSet = std::vector<Vertex>; // sorted ascending, no repeats
using GraphEdge = std::pair<Vertex, Vertex>; // first < second

/// Simple undirected graph on [0, n). Each row of the adjacency matrix is a
/// bitset, so neighbourhoods come out sorted and set operations are word-wide.
class Graph {
public:
    explicit Graph(unsigned n = 0);

    static auto complete(unsigned n) -> Graph;
    static auto cycle(unsigned n) -> Graph;
    static auto petersen() -> Graph;
    static auto from_edges(unsigned n, std::span<const GraphEdge> edges) -> Graph;

    auto size() const -> unsigned { return _n; }
    auto edge_count() const -> std::uint64_t { return _edge_count; }

    /// Returns false if the edge was already present. Throws on loops or
    /// out-of-range vertices.
    auto add_edge(Vertex u, Vertex v) -> bool;
    auto remove_edge(Vertex u, Vertex v) -> bool;

    auto adjacent(Vertex u, Vertex v) const -> bool
    {
        return (_rows[u * _words + (v >> 6)] >> (v & 63)) & 1;
    }

    auto degree(Vertex v) const -> unsigned { return _degrees[v]; }
    auto neighbours(Vertex v) const -> VertexSet;
    auto row(Vertex v) const -> std::span<const std::uint64_t>
    {
        return {_rows.data() + v * _words, _words};
    }
    auto words_per_row() const -> unsigned { return _words; }

    /// Edges as (u, v) with u < v, in lexicographic order.
    auto edges() const -> std::vector<GraphEdge>;

    auto degree_sequence() const -> std::vector<unsigned>; // ascending

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a._n == b._n && a._rows == b._rows;
    }

private:
    unsigned _n;
    unsigned _words;
    std::vector<std::uint64_t> _rows;
    std::vector<unsigned> _degrees;
    std::uint64_t _edge_count = 0;

    auto check(Vertex u, Vertex v) const -> void;
};

auto is_connected(const Graph & g) -> bool;

/// Vertices whose removal disconnects a connected graph.
auto articulation_points(const Graph & g) -> VertexSet;

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_contains(const VertexSet & s, Vertex v) -> bool;

}
