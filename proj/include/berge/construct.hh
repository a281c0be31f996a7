#pragma once

// The constructive route to a monochromatic Hamiltonian Berge-cycle in a
// coloring with k = r - 1 colors:
//
//   1. find a witness (x, f, y_1..y_{r-1}) under a renaming of the colors,
//   2. build an auxiliary graph on the vertices whose edges carry reserved
//      hyperedges of the target color (f = r - 2: case 1; f <= r - 3: case 2),
//   3. find a Hamiltonian cycle of that graph,
//   4. assign distinct target-color hyperedges along the cycle in order,
//      honouring the reservations.
//
// Colors inside a Witness are "renamed": renamed color j is the original
// color color_perm[j - 1]. Everything reported outside a Witness uses the
// original ids.

#include <berge/extend.hh>
#include <berge/graph.hh>
#include <berge/hamilton.hh>
#include <berge/shadow.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace berge {

struct Witness {
    Vertex x = 0;
    unsigned f = 0;
    std::vector<Vertex> y;               // y[i - 1] is y_i, i = 1..r-1
    std::vector<Color> color_perm;       // renamed j -> original color_perm[j - 1]
    std::vector<std::size_t> ubar_sizes; // |U-bar_i(x)| for renamed i = f+1..r-1

    auto original(Color renamed) const -> Color { return color_perm.at(renamed - 1); }
    auto y_of(unsigned i) const -> Vertex { return y.at(i - 1); }
};

struct WitnessOptions {
    std::uint64_t d_bound = 0;
    /// Cap on avoidance-set candidates examined per (x, color split) after the greedy one.
    std::uint64_t max_avoid_subsets = 100000;
};

/// Searches for a witness with the largest f, trying f = r-2 first. Centres
/// x are tried by decreasing max_i |U-bar_i(x)| (ties to the smaller index);
/// for each x every split of the colors into f avoided ones and r-1-f others
/// is tried in lexicographic order; the others are renamed f+1..r-1 by
/// increasing |U-bar_i(x)|. Avoidance sets come from the greedy walk first,
/// then from lexicographic enumeration. Throws std::invalid_argument unless k = r - 1.
auto witness_search(const ColorProfile & profile, const WitnessOptions & options) -> std::optional<Witness>;
auto witness_search(const ColorProfile & profile, std::uint64_t d_bound) -> std::optional<Witness>;

/// Rechecks every witness invariant straight from the coloring, without a
/// ColorProfile. Returns an empty string when the witness holds, otherwise the
/// first broken invariant.
auto validate_witness(const Witness & w, const Coloring & coloring, std::uint64_t good_threshold, std::uint64_t d_bound) -> std::string;

/// A construction that cannot be completed on this coloring.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string & what, std::optional<Vertex> vertex = std::nullopt) :
        std::runtime_error(what), _vertex(vertex)
    {
    }

    auto vertex() const -> std::optional<Vertex> { return _vertex; }

private:
    std::optional<Vertex> _vertex;
};

struct GammaBundle {
    int case_tag = 1;
    Color target = 1; // original color id
    Vertex x = 0;
    Graph gamma;
    std::map<GraphEdge, EdgeIndex> reserved; // F_1..F_4, keyed by the auxiliary edge
    std::map<GraphEdge, int> edge_class;     // which of E_1..E_5 each edge came from

    VertexSet y_set;                       // Y
    std::map<unsigned, VertexSet> y_minus; // renamed i -> Y_i (case 2)
    std::vector<Vertex> ubar_list;         // u_1 = y_{f+1}, u_2, ..., u_l (case 2)
    VertexSet u_set;                       // U (case 2)
    std::map<unsigned, VertexSet> parts;   // renamed i -> A_i (case 2)
    VertexSet a_vertices, b_vertices;      // A, B (case 2)
    std::vector<unsigned> t, t_prime;
    std::vector<unsigned> gamma1_degrees;  // deg in Gamma_1 of each u_i
    std::vector<Vertex> w_list;            // U_{1..r-1}(x), ascending by Gamma_2 degree
    std::vector<unsigned> gamma2_degrees;  // deg in Gamma_2 of each w_i
    std::size_t w_processed = 0;
    std::vector<std::string> notes;
};

/// Case f = r - 2. Throws std::invalid_argument otherwise.
auto build_gamma_case1(const Witness & w, const ColorProfile & profile) -> GammaBundle;

/// Case f <= r - 3. Throws std::invalid_argument when f > r - 3 or
/// |U-bar_{f+1}| > r - 2, and ConstructionError when U is too small to
/// partition or the greedy steps run out of fresh edges.
auto build_gamma_case2(const Witness & w, const ColorProfile & profile) -> GammaBundle;

/// Reservations are distinct hyperedges, each of the target color, each
/// containing both ends of its auxiliary edge. Returns an empty string when
/// they are, otherwise the first problem.
auto check_reservations(const GammaBundle & bundle, const Coloring & coloring) -> std::string;

enum class ConstructStage {
    witness,
    build,
    hamiltonicity,
    extension,
    done
};

auto to_string(ConstructStage s) -> std::string;

struct ConstructOptions {
    std::optional<std::uint64_t> good_threshold; // default r - 1
    std::optional<std::uint64_t> d_bound;        // default C(4r, r - 1)
    std::uint64_t hamilton_budget = 50'000'000;
    std::uint64_t max_avoid_subsets = 100000;
};

struct ConstructResult {
    ConstructStage stage = ConstructStage::witness;
    std::string diagnostic;
    std::optional<Witness> witness;
    std::optional<GammaBundle> bundle;
    std::optional<Color> color;
    std::optional<BergeCycle> cycle;
    bool chvatal = false;        // chvatal_check on the auxiliary graph
    bool greedy_succeeded = false;
    std::optional<std::size_t> greedy_failed_at; // 0-based position
    std::uint64_t work = 0;      // backtracking nodes + matching augmentations
};

auto constructive_find(const Coloring & coloring, const ConstructOptions & options = {}) -> ConstructResult;
auto constructive_find(const Coloring & coloring, std::uint64_t d_bound) -> ConstructResult;

auto to_json(const Witness & w) -> nlohmann::json;
auto to_json(const GammaBundle & b) -> nlohmann::json;

}
