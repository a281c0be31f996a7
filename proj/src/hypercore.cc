#include <berge/hypercore.hh>

#include <algorithm>
#include <limits>
#include <stdexcept>

using std::optional;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace berge {

using std::to_string;

namespace {
    constexpr uint64_t limit63 = uint64_t{1} << 63;
}

auto checked_binomial(uint64_t n, uint64_t k) -> optional<uint64_t>
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        // exact: result * (n - k + i) is divisible by i
        result = result * (n - k + i) / i;
        if (result >= limit63)
            return std::nullopt;
    }
    return static_cast<uint64_t>(result);
}

auto binomial(uint64_t n, uint64_t k) -> uint64_t
{
    auto b = checked_binomial(n, k);
    if (! b)
        throw std::overflow_error("C(" + to_string(n) + ", " + to_string(k) + ") exceeds 63 bits");
    return *b;
}

HyperParams::HyperParams(unsigned n, unsigned r, unsigned k) :
    _n(n), _r(r), _k(k), _edge_count(0)
{
    if (n < 2)
        throw std::invalid_argument("n must be at least 2");
    if (r < 2 || r > n)
        throw std::invalid_argument("r must satisfy 2 <= r <= n");
    if (k < 1 || k > max_colors)
        throw std::invalid_argument("k must satisfy 1 <= k <= 255");
    auto count = checked_binomial(n, r);
    if (! count)
        throw std::invalid_argument("C(n, r) does not fit in 63 bits");
    _edge_count = *count;
}

auto HyperParams::with_colors(unsigned k) const -> HyperParams
{
    return HyperParams{_n, _r, k};
}

auto rank_edge(span<const Vertex> subset, const HyperParams & params) -> EdgeIndex
{
    if (subset.size() != params.r())
        throw std::invalid_argument("edge must have exactly r vertices");
    EdgeIndex rank = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
        if (subset[j] >= params.n())
            throw std::invalid_argument("vertex " + to_string(subset[j]) + " out of range");
        if (j > 0 && subset[j] <= subset[j - 1])
            throw std::invalid_argument("edge vertices must be strictly increasing");
        rank += binomial(subset[j], j + 1);
    }
    return rank;
}

auto unrank_edge(EdgeIndex index, const HyperParams & params) -> vector<Vertex>
{
    if (index >= params.edge_count())
        throw std::out_of_range("edge index " + to_string(index) + " out of range");
    vector<Vertex> subset(params.r());
    Vertex c = params.n();
    for (unsigned j = params.r(); j >= 1; --j) {
        // largest c with C(c, j) <= index
        do
            --c;
        while (binomial(c, j) > index);
        subset[j - 1] = c;
        index -= binomial(c, j);
    }
    return subset;
}

auto next_colex(span<Vertex> subset, unsigned n) -> bool
{
    const auto r = subset.size();
    for (std::size_t j = 0; j < r; ++j) {
        const Vertex bound = (j + 1 < r) ? subset[j + 1] : n;
        if (subset[j] + 1 < bound) {
            ++subset[j];
            for (std::size_t i = 0; i < j; ++i)
                subset[i] = static_cast<Vertex>(i);
            return true;
        }
    }
    return false;
}

auto pair_supersets(Vertex u, Vertex v, const HyperParams & params) -> vector<EdgeIndex>
{
    if (u == v)
        throw std::invalid_argument("pair_supersets needs two distinct vertices");
    if (u >= params.n() || v >= params.n())
        throw std::invalid_argument("vertex out of range");

    const unsigned n = params.n(), r = params.r();
    vector<Vertex> others;
    for (Vertex w = 0; w < n; ++w)
        if (w != u && w != v)
            others.push_back(w);

    vector<EdgeIndex> result;
    result.reserve(binomial(n - 2, r - 2));
    vector<Vertex> pick(r - 2), edge(r);
    for (unsigned i = 0; i < r - 2; ++i)
        pick[i] = i;
    do {
        for (unsigned i = 0; i < r - 2; ++i)
            edge[i] = others[pick[i]];
        edge[r - 2] = u;
        edge[r - 1] = v;
        std::sort(edge.begin(), edge.end());
        result.push_back(rank_edge(edge, params));
    } while (r > 2 && next_colex(pick, n - 2));

    std::sort(result.begin(), result.end());
    return result;
}

auto edge_contains(EdgeIndex index, Vertex v, const HyperParams & params) -> bool
{
    auto e = unrank_edge(index, params);
    return std::binary_search(e.begin(), e.end(), v);
}

Coloring::Coloring(const HyperParams & params, Color color) :
    _params(params)
{
    if (color < 1 || color > params.k())
        throw std::invalid_argument("color " + to_string(color) + " outside [1, k]");
    _colors.assign(params.edge_count(), static_cast<std::uint8_t>(color));
}

Coloring::Coloring(const HyperParams & params, span<const Color> colors) :
    _params(params)
{
    if (colors.size() != params.edge_count())
        throw std::invalid_argument("expected " + to_string(params.edge_count()) + " colors, got " + to_string(colors.size()));
    _colors.reserve(colors.size());
    for (auto c : colors) {
        if (c < 1 || c > params.k())
            throw std::invalid_argument("color " + to_string(c) + " outside [1, k]");
        _colors.push_back(static_cast<std::uint8_t>(c));
    }
}

auto Coloring::color_of(EdgeIndex index) const -> Color
{
    if (index >= _colors.size())
        throw std::out_of_range("edge index " + to_string(index) + " out of range");
    return _colors[index];
}

auto Coloring::set_color(EdgeIndex index, Color color) -> void
{
    if (index >= _colors.size())
        throw std::out_of_range("edge index " + to_string(index) + " out of range");
    if (color < 1 || color > _params.k())
        throw std::invalid_argument("color " + to_string(color) + " outside [1, k]");
    _colors[index] = static_cast<std::uint8_t>(color);
}

auto Coloring::class_sizes() const -> vector<uint64_t>
{
    vector<uint64_t> sizes(_params.k() + 1, 0);
    for (auto c : _colors)
        ++sizes[c];
    return sizes;
}

auto Coloring::edges_of_color(Color color) const -> vector<EdgeIndex>
{
    vector<EdgeIndex> result;
    for (EdgeIndex t = 0; t < _colors.size(); ++t)
        if (_colors[t] == color)
            result.push_back(t);
    return result;
}

auto Coloring::with_palette(unsigned k) const -> Coloring
{
    auto wider = _params.with_colors(k);
    vector<Color> colors(_colors.begin(), _colors.end());
    return Coloring{wider, colors};
}

auto to_string(Violation v) -> string
{
    switch (v) {
        case Violation::none: return "valid";
        case Violation::core_out_of_range: return "core vertex out of range";
        case Violation::core_repeated_vertex: return "repeated core vertex";
        case Violation::edge_out_of_range: return "edge index out of range";
        case Violation::duplicate_edge: return "duplicate edge";
        case Violation::containment: return "containment";
        case Violation::wrong_color: return "wrong color";
    }
    return "unknown";
}

namespace {
    auto fail(Violation v, std::size_t position, const string & detail) -> Verdict
    {
        return Verdict{v, position, to_string(v) + " at position " + to_string(position) + (detail.empty() ? "" : ": " + detail)};
    }
}

auto verify_berge_cycle(const BergeCycle & cycle, const Coloring & coloring) -> Verdict
{
    const auto & params = coloring.params();
    const std::size_t n = params.n();
    if (cycle.core.size() != n || cycle.edges.size() != n)
        throw std::invalid_argument("cycle length does not match the vertex count " + to_string(n));

    vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = cycle.core[i];
        if (v >= n)
            return fail(Violation::core_out_of_range, i + 1, "vertex " + to_string(v));
        if (seen[v])
            return fail(Violation::core_repeated_vertex, i + 1, "vertex " + to_string(v));
        seen[v] = true;
    }

    vector<EdgeIndex> earlier;
    earlier.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto e = cycle.edges[i];
        if (e >= params.edge_count())
            return fail(Violation::edge_out_of_range, i + 1, "index " + to_string(e));
        if (std::find(earlier.begin(), earlier.end(), e) != earlier.end())
            return fail(Violation::duplicate_edge, i + 1, "index " + to_string(e));
        earlier.push_back(e);

        auto members = unrank_edge(e, params);
        auto a = cycle.core[i], b = cycle.core[(i + 1) % n];
        if (! std::binary_search(members.begin(), members.end(), a) || ! std::binary_search(members.begin(), members.end(), b))
            return fail(Violation::containment, i + 1, "edge " + to_string(e) + " misses {" + to_string(a) + ", " + to_string(b) + "}");

        if (cycle.color && coloring.color_of(e) != *cycle.color)
            return fail(Violation::wrong_color, i + 1, "edge " + to_string(e) + " has color " + to_string(coloring.color_of(e)));
    }
    return Verdict{};
}

auto rotate_cycle(const BergeCycle & cycle, std::size_t shift) -> BergeCycle
{
    BergeCycle result{cycle.core, cycle.edges, cycle.color};
    if (! cycle.core.empty()) {
        shift %= cycle.core.size();
        std::rotate(result.core.begin(), result.core.begin() + shift, result.core.end());
        std::rotate(result.edges.begin(), result.edges.begin() + shift, result.edges.end());
    }
    return result;
}

auto reflect_cycle(const BergeCycle & cycle) -> BergeCycle
{
    const auto n = cycle.core.size();
    BergeCycle result{vector<Vertex>(cycle.core.rbegin(), cycle.core.rend()), vector<EdgeIndex>(n), cycle.color};
    // the pair (v'_i, v'_{i+1}) is (v_{n-1-i}, v_{n-2-i}), originally position n-2-i
    for (std::size_t i = 0; i < n; ++i)
        result.edges[i] = cycle.edges[(2 * n - 2 - i) % n];
    return result;
}

}
