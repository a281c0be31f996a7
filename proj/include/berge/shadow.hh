#pragma once

// Multi-coloring of the shadow graph. For a pair {u, v} the list L(uv) holds
// every color used on an edge containing both; color i is good for the pair
// when at least `good_threshold` color-i edges contain it, and L*(uv) is the
// set of good colors. Everything else here is built from L* and the color
// degrees d_i(x).

#include <berge/graph.hh>
#include <berge/hypercore.hh>

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace berge {

using ColorSet = std::bitset<max_colors + 1>; // bit c set for color c

auto make_color_set(std::initializer_list<Color> colors) -> ColorSet;
auto colors_in(const ColorSet & s) -> std::vector<Color>;

/// C(4r, r-1), saturating at the largest 64-bit value.
auto default_d_bound(unsigned r) -> std::uint64_t;

/// Number of color-i edges containing x.
auto color_degree(Vertex x, Color i, const Coloring & coloring) -> std::uint64_t;

class ColorProfile {
public:
    /// Counts colors on every pair in one pass over the edges. The threshold
    /// defaults to r - 1. The coloring must outlive the profile.
    explicit ColorProfile(const Coloring & coloring, std::optional<std::uint64_t> good_threshold = std::nullopt);

    auto coloring() const -> const Coloring & { return *_coloring; }
    auto params() const -> const HyperParams & { return _coloring->params(); }
    auto n() const -> unsigned { return params().n(); }
    auto k() const -> unsigned { return params().k(); }
    auto good_threshold() const -> std::uint64_t { return _threshold; }

    /// Number of color-i edges containing both u and v.
    auto pair_count(Vertex u, Vertex v, Color i) const -> std::uint64_t;
    auto list_colors(Vertex u, Vertex v) const -> ColorSet; // L(uv)
    auto good_colors(Vertex u, Vertex v) const -> ColorSet; // L*(uv)
    auto is_good(Vertex u, Vertex v, Color i) const -> bool;

    auto color_degree(Vertex x, Color i) const -> std::uint64_t;

private:
    const Coloring * _coloring;
    std::uint64_t _threshold;
    std::vector<std::uint32_t> _pair_counts; // [pair * k + (color - 1)]
    std::vector<ColorSet> _good;
    std::vector<std::uint64_t> _degrees; // [x * k + (color - 1)]

    auto pair_slot(Vertex u, Vertex v) const -> std::size_t;
};

/// L*(uv). Throws std::invalid_argument when u == v.
auto good_colors(Vertex u, Vertex v, const ColorProfile & profile) -> ColorSet;

struct USets {
    VertexSet common;  // U_I(x): every color of I good on xy
    VertexSet missing; // U-bar_I(x): no color of I good on xy
};

/// Throws std::invalid_argument for an empty I.
auto u_sets(Vertex x, const ColorSet & colors, const ColorProfile & profile) -> USets;

/// S avoids W when every color i of W is blocked inside S: some x in S has
/// d_i(x) <= d_bound, or some pair of S lacks i as a good color.
auto avoids(const VertexSet & s, const ColorSet & w, const ColorProfile & profile, std::uint64_t d_bound) -> bool;

/// Colors of W that S blocks.
auto blocked_colors(const VertexSet & s, const ColorSet & w, const ColorProfile & profile, std::uint64_t d_bound) -> ColorSet;

/// Greedy search for Q with |Q| <= |P| + 1 avoiding P. Each step adds the
/// vertex that blocks the most still-open colors (ties to the smallest index;
/// while nothing can be blocked by a single addition, the vertex with the most
/// non-good pairs on open colors seeds the set). Best effort: absent means the
/// greedy walk failed, not that no such set exists.
auto find_avoiding_set(const ColorSet & p, const ColorProfile & profile, std::uint64_t d_bound) -> std::optional<VertexSet>;

/// The same greedy walk with a size limit and vertices it may not use.
auto greedy_avoiding_set(const ColorSet & p, const ColorProfile & profile, std::uint64_t d_bound,
    std::size_t size_limit, const VertexSet & excluded) -> std::optional<VertexSet>;

struct PartitionTRQ {
    VertexSet isolated;  // T: degree 0
    VertexSet high;      // R: 2 deg >= n - 1
    VertexSet rest;      // Q
};

auto partition_trq(const Graph & g) -> PartitionTRQ;

/// The graph of pairs lacking color i as a good color (the set W_i).
auto bad_edge_graph(Color i, const ColorProfile & profile) -> Graph;

enum class BreakingStatus {
    found,
    precondition_failed, // K_n minus W_i is Hamiltonian
    budget_exceeded
};

struct BreakingResult {
    BreakingStatus status = BreakingStatus::precondition_failed;
    std::vector<GraphEdge> removed;  // S_i
    Graph removed_graph;             // G_i: spanning subgraph with edge set S_i
    Graph kept_graph;                // G_i^c: K_n minus S_i
    std::uint64_t hamilton_calls = 0;
    std::string diagnostic;
};

/// Smallest S_i within W_i whose removal from K_n leaves a non-Hamiltonian
/// graph. Subsets are tried by increasing size and, within a size, in
/// lexicographic order of W_i's edge list, so the answer is the
/// lexicographically smallest minimum set. `budget` caps the number of
/// Hamiltonicity checks.
auto minimal_breaking_subgraph(Color i, const ColorProfile & profile, std::uint64_t budget) -> BreakingResult;

/// deg(x) + deg(y) >= n - 1 for every edge xy of g.
auto adjacent_degree_sums_hold(const Graph & g) -> bool;

auto to_json(const PartitionTRQ & p) -> nlohmann::json;

/// Per-color counts of pairs where the color is listed, good, and missing.
auto profile_statistics(const ColorProfile & profile) -> nlohmann::json;

}
