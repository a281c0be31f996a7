#pragma once

// End-user search, an independent brute-force oracle, exhaustive enumeration
// of all colorings for small parameters, and coloring generators.

#include <berge/hypercore.hh>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace berge {

enum class SearchVerdict {
    found,
    not_found,
    undecided
};

auto to_string(SearchVerdict v) -> std::string;

struct SearchReport {
    SearchVerdict verdict = SearchVerdict::not_found;
    std::optional<Color> color;
    std::optional<BergeCycle> cycle;
    std::vector<std::string> stages; // one line per step taken
    std::uint64_t nodes = 0;         // backtracking node expansions
    std::uint64_t augmentations = 0; // matching augmenting-path searches
    std::uint64_t cores_tried = 0;   // core orders handed to the extension step

    auto work() const -> std::uint64_t { return nodes + augmentations; }
};

auto to_json(const SearchReport & report) -> nlohmann::json;

inline constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

/// For every color with at least n edges: the graph of pairs covered by some
/// edge of that color is searched for Hamiltonian cycles (the closure decides
/// existence first), and each cycle is offered to the matching extension.
/// When the budget runs out before that enumeration is complete and k = r - 1,
/// the constructive route gets the last quarter of the budget. With an
/// unlimited budget the verdict is exact.
auto find_mono_berge(const Coloring & coloring, std::uint64_t budget = unlimited) -> SearchReport;

/// Tries every color, every core order (vertex 0 first, one direction only),
/// and every assignment of edges by plain backtracking. Never undecided.
/// Throws std::invalid_argument for n > 9.
auto naive_oracle(const Coloring & coloring) -> SearchReport;

/// Raised before any work when the coloring space is too large.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string & what, double estimate) : std::runtime_error(what), _estimate(estimate) {}
    /// k^C(n, r), as a double since it rarely fits an integer.
    auto estimate() const -> double { return _estimate; }

private:
    double _estimate;
};

struct ShardRecord {
    std::uint64_t begin = 0, end = 0; // counter range [begin, end)
    std::uint64_t total = 0, success = 0, failure = 0, pruned = 0;
};

struct ExhaustReport {
    unsigned n = 0, r = 0, k = 0;
    std::uint64_t range_begin = 0, range_end = 0;
    std::uint64_t total = 0, success = 0, failure = 0;
    std::uint64_t pruned = 0; // failures decided by class sizes alone
    /// The first (lexicographically smallest) failing colorings, as color
    /// sequences in colex edge order.
    std::vector<std::vector<Color>> counterexamples;
    std::vector<ShardRecord> shards;
};

auto to_json(const ExhaustReport & report) -> nlohmann::json;

struct ExhaustOptions {
    unsigned shards = 1;
    unsigned threads = 0;                       // 0: one per shard
    std::optional<std::uint64_t> range_begin;   // default 0
    std::optional<std::uint64_t> range_end;     // default k^C(n, r)
    std::uint64_t max_colorings = 1ull << 34;   // infeasibility cap on the range length
    std::size_t keep_counterexamples = 100;
};

/// Enumerates the colorings with counter value in the range, reading the
/// counter as C(n, r) base-k digits with edge 0 the most significant, so
/// counter order is lexicographic order of the color sequences. Each coloring
/// is decided exactly (find_mono_berge with no budget); colorings in which no
/// color has n edges fail without search. The range is split into contiguous
/// shards that run on separate threads and merge in range order, so the
/// report does not depend on the shard count except for its shard records.
auto exhaustive_verify(const HyperParams & params, const ExhaustOptions & options = {}) -> ExhaustReport;

struct GenScheme {
    enum class Kind {
        uniform,
        random,
        vertex_partition,
        digits
    };
    Kind kind = Kind::uniform;
    Color color = 1;               // uniform
    std::uint64_t seed = 0;        // random
    std::vector<Color> classes;    // vertex_partition: class (= color) of each vertex
    std::vector<Color> digits;     // digits: repeated cyclically along colex order
};

/// Random colors are 1 + (mt19937_64 output mod k). Throws
/// std::invalid_argument for colors outside [1, k] or a class list whose
/// length is not n.
auto gen_coloring(const HyperParams & params, const GenScheme & scheme) -> Coloring;

/// 6 r C(4r, r - 1). Throws std::invalid_argument for r < 2 and
/// std::overflow_error when the value does not fit in 64 bits.
auto paper_threshold(unsigned r) -> std::uint64_t;

}
