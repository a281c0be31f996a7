#pragma once

// The complete r-uniform hypergraph K_n^r, its edge colorings, and
// Berge-cycle certificates.
//
// Edges are r-subsets of {0, ..., n-1} indexed by colex rank: the subset
// {c_1 < c_2 < ... < c_r} has rank sum_j C(c_j, j). Colors are 1-based.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace berge {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint64_t;
using Color = unsigned;

inline constexpr unsigned max_colors = 255;

/// Binomial coefficient, or std::nullopt if it does not fit in 63 bits.
auto checked_binomial(std::uint64_t n, std::uint64_t k) -> std::optional<std::uint64_t>;

/// Binomial coefficient; throws std::overflow_error past 63 bits.
auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;

class HyperParams {
public:
    /// Throws std::invalid_argument unless 2 <= r <= n, 1 <= k <= 255 and C(n, r) < 2^63.
    HyperParams(unsigned n, unsigned r, unsigned k);

    auto n() const -> unsigned { return _n; }
    auto r() const -> unsigned { return _r; }
    auto k() const -> unsigned { return _k; }
    auto edge_count() const -> std::uint64_t { return _edge_count; }

    /// Same (n, r) with a different number of colors.
    auto with_colors(unsigned k) const -> HyperParams;

    friend auto operator==(const HyperParams &, const HyperParams &) -> bool = default;

private:
    unsigned _n, _r, _k;
    std::uint64_t _edge_count;
};

/// Colex rank of a strictly increasing r-subset.
auto rank_edge(std::span<const Vertex> subset, const HyperParams & params) -> EdgeIndex;

/// Inverse of rank_edge.
auto unrank_edge(EdgeIndex index, const HyperParams & params) -> std::vector<Vertex>;

/// Advances a strictly increasing subset of [0, n) to its colex successor.
/// Returns false (leaving the subset unspecified) after the last subset.
auto next_colex(std::span<Vertex> subset, unsigned n) -> bool;

/// All edges containing both u and v, ascending by index. There are C(n-2, r-2) of them.
auto pair_supersets(Vertex u, Vertex v, const HyperParams & params) -> std::vector<EdgeIndex>;

auto edge_contains(EdgeIndex index, Vertex v, const HyperParams & params) -> bool;

class Coloring {
public:
    /// Every edge gets `color`.
    Coloring(const HyperParams & params, Color color);

    /// colors[t] is the color of the edge with rank t. Throws std::invalid_argument
    /// on a length mismatch or a color outside [1, k].
    Coloring(const HyperParams & params, std::span<const Color> colors);

    auto params() const -> const HyperParams & { return _params; }

    auto color_of(EdgeIndex index) const -> Color;
    auto set_color(EdgeIndex index, Color color) -> void;

    /// Number of edges of each color; entry 0 is unused.
    auto class_sizes() const -> std::vector<std::uint64_t>;

    /// Edges of one color, ascending.
    auto edges_of_color(Color color) const -> std::vector<EdgeIndex>;

    /// The same colors over a larger palette.
    auto with_palette(unsigned k) const -> Coloring;

    auto raw() const -> std::span<const std::uint8_t> { return _colors; }

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

private:
    HyperParams _params;
    std::vector<std::uint8_t> _colors;
};

struct BergeCycle {
    std::vector<Vertex> core;
    std::vector<EdgeIndex> edges;
    std::optional<Color> color;

    friend auto operator==(const BergeCycle &, const BergeCycle &) -> bool = default;
};

enum class Violation {
    none,
    core_out_of_range,
    core_repeated_vertex,
    edge_out_of_range,
    duplicate_edge,
    containment,
    wrong_color
};

auto to_string(Violation v) -> std::string;

struct Verdict {
    Violation violation = Violation::none;
    std::size_t position = 0; // 1-based, 0 when valid
    std::string message;

    auto valid() const -> bool { return violation == Violation::none; }
};

/// Checks every Berge-cycle condition in order: the core is a permutation of
/// [0, n); then, position by position, the edge index is in range, is not a
/// repeat of an earlier position, contains v_i and v_{i+1}, and has the cycle's
/// color if one is set. The first failure is reported.
///
/// Throws std::invalid_argument when the core or edge list length differs from n.
auto verify_berge_cycle(const BergeCycle & cycle, const Coloring & coloring) -> Verdict;

/// Rotates the cycle so that position `shift` becomes the first.
auto rotate_cycle(const BergeCycle & cycle, std::size_t shift) -> BergeCycle;

/// Traverses the cycle in the opposite direction.
auto reflect_cycle(const BergeCycle & cycle) -> BergeCycle;

}
