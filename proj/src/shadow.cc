#include <berge/hamilton.hh>
#include <berge/shadow.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

using std::optional;
using std::uint64_t;
using std::vector;

namespace berge {


auto make_color_set(std::initializer_list<Color> colors) -> ColorSet
{
    ColorSet s;
    for (auto c : colors)
        s.set(c);
    return s;
}

auto colors_in(const ColorSet & s) -> vector<Color>
{
    vector<Color> result;
    for (Color c = 1; c <= max_colors; ++c)
        if (s.test(c))
            result.push_back(c);
    return result;
}

auto default_d_bound(unsigned r) -> uint64_t
{
    auto b = checked_binomial(uint64_t{4} * r, r - 1);
    return b ? *b : std::numeric_limits<uint64_t>::max();
}

auto color_degree(Vertex x, Color i, const Coloring & coloring) -> uint64_t
{
    const auto & params = coloring.params();
    if (x >= params.n())
        throw std::out_of_range("vertex out of range");
    if (i < 1 || i > params.k())
        throw std::out_of_range("color out of range");

    vector<Vertex> edge(params.r());
    std::iota(edge.begin(), edge.end(), Vertex{0});
    uint64_t count = 0;
    EdgeIndex t = 0;
    do {
        if (coloring.color_of(t) == i && std::binary_search(edge.begin(), edge.end(), x))
            ++count;
        ++t;
    } while (next_colex(edge, params.n()));
    return count;
}

ColorProfile::ColorProfile(const Coloring & coloring, optional<uint64_t> good_threshold) :
    _coloring(&coloring),
    _threshold(good_threshold.value_or(coloring.params().r() - 1))
{
    const unsigned n = params().n(), r = params().r(), k = params().k();
    const std::size_t pairs = std::size_t{n} * (n - 1) / 2;
    _pair_counts.assign(pairs * k, 0);
    _degrees.assign(std::size_t{n} * k, 0);

    auto raw = coloring.raw();
    vector<Vertex> edge(r);
    std::iota(edge.begin(), edge.end(), Vertex{0});
    EdgeIndex t = 0;
    do {
        const unsigned c = raw[t] - 1u;
        for (unsigned b = 0; b < r; ++b) {
            _degrees[edge[b] * k + c] += 1;
            for (unsigned a = 0; a < b; ++a)
                _pair_counts[pair_slot(edge[a], edge[b]) * k + c] += 1;
        }
        ++t;
    } while (next_colex(edge, n));

    _good.resize(pairs);
    for (std::size_t p = 0; p < pairs; ++p)
        for (unsigned c = 0; c < k; ++c)
            if (_threshold == 0 || _pair_counts[p * k + c] >= _threshold)
                _good[p].set(c + 1);
}

auto ColorProfile::pair_slot(Vertex u, Vertex v) const -> std::size_t
{
    if (u == v)
        throw std::invalid_argument("a pair needs two distinct vertices");
    if (u >= n() || v >= n())
        throw std::out_of_range("vertex out of range");
    if (u > v)
        std::swap(u, v);
    return std::size_t{v} * (v - 1) / 2 + u;
}

auto ColorProfile::pair_count(Vertex u, Vertex v, Color i) const -> uint64_t
{
    if (i < 1 || i > k())
        throw std::out_of_range("color out of range");
    return _pair_counts[pair_slot(u, v) * k() + (i - 1)];
}

auto ColorProfile::list_colors(Vertex u, Vertex v) const -> ColorSet
{
    ColorSet s;
    auto slot = pair_slot(u, v);
    for (unsigned c = 0; c < k(); ++c)
        if (_pair_counts[slot * k() + c] > 0)
            s.set(c + 1);
    return s;
}

auto ColorProfile::good_colors(Vertex u, Vertex v) const -> ColorSet
{
    return _good[pair_slot(u, v)];
}

auto ColorProfile::is_good(Vertex u, Vertex v, Color i) const -> bool
{
    return _good[pair_slot(u, v)].test(i);
}

auto ColorProfile::color_degree(Vertex x, Color i) const -> uint64_t
{
    if (x >= n())
        throw std::out_of_range("vertex out of range");
    if (i < 1 || i > k())
        throw std::out_of_range("color out of range");
    return _degrees[x * k() + (i - 1)];
}

auto good_colors(Vertex u, Vertex v, const ColorProfile & profile) -> ColorSet
{
    return profile.good_colors(u, v);
}

auto u_sets(Vertex x, const ColorSet & colors, const ColorProfile & profile) -> USets
{
    if (colors.none())
        throw std::invalid_argument("u_sets needs a nonempty color set");
    if (x >= profile.n())
        throw std::out_of_range("vertex out of range");

    USets result;
    for (Vertex y = 0; y < profile.n(); ++y) {
        if (y == x)
            continue;
        auto good = profile.good_colors(x, y);
        if ((good & colors) == colors)
            result.common.push_back(y);
        if ((good & colors).none())
            result.missing.push_back(y);
    }
    return result;
}

auto blocked_colors(const VertexSet & s, const ColorSet & w, const ColorProfile & profile, uint64_t d_bound) -> ColorSet
{
    ColorSet blocked;
    for (auto c : colors_in(w)) {
        if (c > profile.k()) {
            // a color outside the palette has degree 0 everywhere
            if (! s.empty())
                blocked.set(c);
            continue;
        }
        bool hit = false;
        for (std::size_t a = 0; a < s.size() && ! hit; ++a) {
            if (profile.color_degree(s[a], c) <= d_bound)
                hit = true;
            for (std::size_t b = a + 1; b < s.size() && ! hit; ++b)
                if (! profile.is_good(s[a], s[b], c))
                    hit = true;
        }
        if (hit)
            blocked.set(c);
    }
    return blocked;
}

auto avoids(const VertexSet & s, const ColorSet & w, const ColorProfile & profile, uint64_t d_bound) -> bool
{
    return blocked_colors(s, w, profile, d_bound) == w;
}

auto find_avoiding_set(const ColorSet & p, const ColorProfile & profile, uint64_t d_bound) -> optional<VertexSet>
{
    return greedy_avoiding_set(p, profile, d_bound, p.count() + 1, {});
}

auto greedy_avoiding_set(const ColorSet & p, const ColorProfile & profile, uint64_t d_bound,
    std::size_t limit, const VertexSet & excluded) -> optional<VertexSet>
{
    VertexSet q;
    ColorSet open = p;
    const unsigned n = profile.n();

    while (open.any()) {
        if (q.size() == limit)
            return std::nullopt;

        optional<Vertex> best;
        std::size_t best_gain = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (set_contains(q, v) || set_contains(excluded, v))
                continue;
            auto with = q;
            with.insert(std::upper_bound(with.begin(), with.end(), v), v);
            auto gain = blocked_colors(with, open, profile, d_bound).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }

        if (! best) {
            // nothing blocks on its own; seed with the vertex that has the most
            // non-good pairs on open colors
            std::size_t best_potential = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (set_contains(q, v) || set_contains(excluded, v))
                    continue;
                ColorSet missing;
                for (Vertex w = 0; w < n; ++w)
                    if (w != v)
                        missing |= open & ~profile.good_colors(v, w);
                if (missing.count() > best_potential) {
                    best_potential = missing.count();
                    best = v;
                }
            }
            if (! best)
                return std::nullopt;
        }

        q.insert(std::upper_bound(q.begin(), q.end(), *best), *best);
        open &= ~blocked_colors(q, open, profile, d_bound);
    }
    return q;
}

auto partition_trq(const Graph & g) -> PartitionTRQ
{
    PartitionTRQ result;
    const unsigned n = g.size();
    for (Vertex v = 0; v < n; ++v) {
        auto d = g.degree(v);
        if (d == 0)
            result.isolated.push_back(v);
        else if (2 * d + 1 >= n)
            result.high.push_back(v);
        else
            result.rest.push_back(v);
    }
    return result;
}

auto bad_edge_graph(Color i, const ColorProfile & profile) -> Graph
{
    if (i < 1 || i > profile.k())
        throw std::out_of_range("color out of range");
    Graph g(profile.n());
    for (Vertex u = 0; u < profile.n(); ++u)
        for (Vertex v = u + 1; v < profile.n(); ++v)
            if (! profile.is_good(u, v, i))
                g.add_edge(u, v);
    return g;
}

auto adjacent_degree_sums_hold(const Graph & g) -> bool
{
    for (auto & [x, y] : g.edges())
        if (g.degree(x) + g.degree(y) + 1 < g.size())
            return false;
    return true;
}

namespace {
    auto is_hamiltonian(const Graph & g) -> bool
    {
        return find_hamiltonian_cycle(g).status == HamiltonStatus::found;
    }
}

auto minimal_breaking_subgraph(Color i, const ColorProfile & profile, uint64_t budget) -> BreakingResult
{
    const unsigned n = profile.n();
    if (n < 3)
        throw std::invalid_argument("minimal_breaking_subgraph needs at least 3 vertices");

    auto bad = bad_edge_graph(i, profile);
    auto w = bad.edges();
    BreakingResult result;

    auto without = [&](const vector<GraphEdge> & removed) {
        auto g = Graph::complete(n);
        for (auto & [u, v] : removed)
            g.remove_edge(u, v);
        return g;
    };

    ++result.hamilton_calls;
    if (is_hamiltonian(without(w))) {
        result.status = BreakingStatus::precondition_failed;
        result.diagnostic = "K_n minus W_" + std::to_string(i) + " is Hamiltonian";
        return result;
    }

    for (std::size_t size = 1; size <= w.size(); ++size) {
        vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            if (result.hamilton_calls >= budget) {
                result.status = BreakingStatus::budget_exceeded;
                result.diagnostic = "budget of " + std::to_string(budget) + " Hamiltonicity checks exhausted at |S| = " + std::to_string(size);
                return result;
            }
            vector<GraphEdge> removed;
            for (auto idx : pick)
                removed.push_back(w[idx]);
            auto kept = without(removed);
            ++result.hamilton_calls;
            if (! is_hamiltonian(kept)) {
                result.status = BreakingStatus::found;
                result.removed_graph = Graph::from_edges(n, removed);
                result.removed = std::move(removed);
                result.kept_graph = std::move(kept);
                return result;
            }

            // next combination in lexicographic order
            std::size_t j = size;
            while (j > 0 && pick[j - 1] == w.size() - size + (j - 1))
                --j;
            if (j == 0)
                break;
            ++pick[j - 1];
            for (std::size_t m = j; m < size; ++m)
                pick[m] = pick[m - 1] + 1;
        }
    }

    throw std::logic_error("minimal_breaking_subgraph: full W_i did not break Hamiltonicity");
}

auto to_json(const PartitionTRQ & p) -> nlohmann::json
{
    return {{"T", p.isolated}, {"R", p.high}, {"Q", p.rest}};
}

auto profile_statistics(const ColorProfile & profile) -> nlohmann::json
{
    const unsigned n = profile.n();
    nlohmann::json colors = nlohmann::json::array();
    for (Color c = 1; c <= profile.k(); ++c) {
        uint64_t listed = 0, good = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (profile.pair_count(u, v, c) > 0)
                    ++listed;
                if (profile.is_good(u, v, c))
                    ++good;
            }
        colors.push_back({{"color", c}, {"listed_pairs", listed}, {"good_pairs", good},
            {"missing_pairs", uint64_t{n} * (n - 1) / 2 - good}});
    }
    return {{"n", n}, {"r", profile.params().r()}, {"k", profile.k()},
        {"good_threshold", profile.good_threshold()}, {"colors", colors}};
}

}
