#pragma once

// Turning a core vertex order into a Berge-cycle: every consecutive pair
// {v_i, v_{i+1}} needs its own edge of the target color, which is a system of
// distinct representatives over the per-position candidate lists.

#include <berge/hypercore.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace berge {

struct CandidateTable {
    std::vector<Vertex> core;
    Color color = 1;
    std::vector<std::vector<EdgeIndex>> candidates; // position i covers {core[i], core[i+1 mod n]}
    std::size_t cap = 0;                            // 0 when the lists are complete
};

/// Lists, per position, the edges of `color` containing the position's pair,
/// ascending. A nonzero cap keeps only the lowest `cap` indices per position.
/// Throws std::invalid_argument unless core is a permutation of [0, n).
auto build_candidates(std::span<const Vertex> core, Color color, const Coloring & coloring, std::size_t cap = 0) -> CandidateTable;

/// Perfect matching of positions to distinct candidates by augmenting paths.
/// `augmentations`, when given, is increased by the number of augmenting-path
/// searches performed.
auto extend_matching(const CandidateTable & table, std::uint64_t * augmentations = nullptr) -> std::optional<BergeCycle>;

/// Assigns positions in order. Reserved positions take their reserved edge;
/// every other position takes its lowest-index candidate not already used or
/// reserved. Throws std::invalid_argument if a reserved edge is not a
/// candidate of its position.
auto extend_greedy_ordered(const CandidateTable & table, const std::map<std::size_t, EdgeIndex> & reserved)
    -> std::optional<BergeCycle>;

/// Where the greedy pass got stuck; `position` is 0-based.
struct GreedyFailure {
    std::size_t position;
};

auto extend_greedy_ordered(const CandidateTable & table, const std::map<std::size_t, EdgeIndex> & reserved,
    std::optional<GreedyFailure> & failure) -> std::optional<BergeCycle>;

struct ExtensionOutcome {
    std::optional<BergeCycle> cycle;
    std::size_t cap = 0;       // cap used for the first pass
    bool uncapped_pass = false; // true if the capped pass failed and the full lists were tried
    std::uint64_t augmentations = 0;
};

/// Matching with candidate lists capped at 4n, retried with full lists if the
/// capped instance has no perfect matching.
auto extend_core(std::span<const Vertex> core, Color color, const Coloring & coloring) -> ExtensionOutcome;

}
