#pragma once

// Hamiltonicity engines: the Dirac and Chvatal degree conditions, the
// Bondy-Chvatal closure together with the constructive cycle transfer that
// justifies it, and an exact backtracking cycle finder.

#include <berge/graph.hh>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace berge {

/// A Hamiltonian cycle given as a vertex order; the closing edge is implied.
struct CycleCertificate {
    std::vector<Vertex> order;

    friend auto operator==(const CycleCertificate &, const CycleCertificate &) -> bool = default;
};

auto is_hamiltonian_cycle(const Graph & g, const CycleCertificate & cert) -> bool;

/// Same cycle up to rotation and reflection.
auto same_cycle(const CycleCertificate & a, const CycleCertificate & b) -> bool;

/// Minimum degree at least n/2. Throws std::invalid_argument for n < 3.
auto dirac_check(const Graph & g) -> bool;

/// With degrees d_1 <= ... <= d_n: for every i < n/2, d_i <= i implies
/// d_{n-i} >= n-i. Throws std::invalid_argument for n < 3.
auto chvatal_check(const Graph & g) -> bool;

struct ClosureTrace {
    Graph closure;
    std::vector<GraphEdge> added; // in the order the edges were added
};

/// Repeatedly joins non-adjacent u, v with deg(u) + deg(v) >= n. Pairs are
/// scanned in lexicographic order, or in a shuffled order when a seed is given;
/// the fixpoint does not depend on the order.
auto closure_trace(const Graph & g, std::optional<std::uint64_t> shuffle_seed = std::nullopt) -> ClosureTrace;

auto closure(const Graph & g) -> Graph;

/// Given a Hamiltonian cycle of g + uv, where deg_g(u) + deg_g(v) >= n,
/// returns a Hamiltonian cycle of g. A cycle that does not use uv comes back
/// unchanged. Throws std::invalid_argument if the degree condition fails or
/// the certificate is not a Hamiltonian cycle of g + uv.
auto transfer_cycle(const Graph & g, Vertex u, Vertex v, const CycleCertificate & cert) -> CycleCertificate;

enum class HamiltonStatus {
    found,
    no_cycle,      // search space exhausted
    budget_exhausted
};

auto to_string(HamiltonStatus s) -> std::string;

struct HamiltonOptions {
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    /// Search the closure and carry the cycle back through transfer_cycle.
    bool use_closure = true;
};

struct HamiltonResult {
    HamiltonStatus status = HamiltonStatus::no_cycle;
    std::optional<CycleCertificate> cycle;
    std::uint64_t nodes = 0;
};

/// Exact search. Neighbours are explored in ascending order from vertex 0,
/// so certificates are reproducible. Throws std::invalid_argument for n < 3.
auto find_hamiltonian_cycle(const Graph & g, const HamiltonOptions & options = {}) -> HamiltonResult;

struct EnumerationResult {
    bool complete = true; // false if the budget ran out or the callback stopped
    std::uint64_t cycles = 0;
    std::uint64_t nodes = 0;
};

/// Calls `visit` once per Hamiltonian cycle of g, up to rotation and
/// reflection (each order starts at vertex 0 and has order[1] < order[n-1]).
/// Enumeration stops early when `visit` returns false.
auto for_each_hamiltonian_cycle(const Graph & g,
    const std::function<bool (const CycleCertificate &)> & visit,
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max()) -> EnumerationResult;

}
