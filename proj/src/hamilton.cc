#include <berge/hamilton.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

using std::optional;
using std::uint64_t;
using std::vector;

namespace berge {


namespace {
    auto require_order(const Graph & g, const char * what) -> void
    {
        if (g.size() < 3)
            throw std::invalid_argument(std::string(what) + " needs at least 3 vertices");
    }

    auto normalised(const vector<Vertex> & order) -> vector<Vertex>
    {
        const auto n = order.size();
        if (n == 0)
            return order;
        auto at = std::min_element(order.begin(), order.end()) - order.begin();
        vector<Vertex> fwd(n), bwd(n);
        for (std::size_t j = 0; j < n; ++j) {
            fwd[j] = order[(at + j) % n];
            bwd[j] = order[(at + n - j) % n];
        }
        return std::min(fwd, bwd);
    }

    // Backtracking over paths starting at vertex 0, using bitset rows.
    class PathSearch {
    public:
        PathSearch(const Graph & g, uint64_t budget) :
            _g(g), _n(g.size()), _words(g.words_per_row()), _unvisited(_words, 0), _budget(budget)
        {
            for (Vertex v = 0; v < _n; ++v)
                set(_unvisited, v);
        }

        // Runs the search; `on_cycle` returns true to stop.
        template <typename F>
        auto run(F && on_cycle) -> void
        {
            _path.clear();
            _path.push_back(0);
            clear(_unvisited, 0);
            dfs(on_cycle);
        }

        auto nodes() const -> uint64_t { return _nodes; }
        auto out_of_budget() const -> bool { return _out_of_budget; }
        auto path() const -> const vector<Vertex> & { return _path; }

    private:
        const Graph & _g;
        unsigned _n, _words;
        vector<uint64_t> _unvisited;
        vector<Vertex> _path;
        uint64_t _nodes = 0, _budget;
        bool _out_of_budget = false;

        static auto set(vector<uint64_t> & bits, Vertex v) -> void { bits[v >> 6] |= uint64_t{1} << (v & 63); }
        static auto clear(vector<uint64_t> & bits, Vertex v) -> void { bits[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
        static auto test(const vector<uint64_t> & bits, Vertex v) -> bool { return (bits[v >> 6] >> (v & 63)) & 1; }

        auto available_degree(Vertex w, const vector<uint64_t> & avail) const -> unsigned
        {
            auto r = _g.row(w);
            unsigned count = 0;
            for (unsigned i = 0; i < _words; ++i)
                count += std::popcount(r[i] & avail[i]);
            return count;
        }

        // every unvisited vertex reachable from cur through unvisited vertices
        auto remaining_connected(Vertex cur, unsigned remaining) const -> bool
        {
            vector<uint64_t> reached(_words, 0), frontier(_words, 0);
            auto r = _g.row(cur);
            for (unsigned i = 0; i < _words; ++i)
                frontier[i] = reached[i] = r[i] & _unvisited[i];
            unsigned count = 0;
            for (unsigned i = 0; i < _words; ++i)
                count += std::popcount(reached[i]);
            while (count < remaining) {
                vector<uint64_t> next(_words, 0);
                bool any = false;
                for (unsigned i = 0; i < _words; ++i)
                    for (uint64_t bits = frontier[i]; bits; bits &= bits - 1) {
                        auto row = _g.row(i * 64 + std::countr_zero(bits));
                        for (unsigned j = 0; j < _words; ++j)
                            next[j] |= row[j];
                    }
                for (unsigned j = 0; j < _words; ++j) {
                    next[j] &= _unvisited[j] & ~reached[j];
                    if (next[j])
                        any = true;
                    reached[j] |= next[j];
                    count += std::popcount(next[j]);
                }
                if (! any)
                    return false;
                frontier = std::move(next);
            }
            return true;
        }

        template <typename F>
        auto dfs(F & on_cycle) -> bool
        {
            const Vertex start = _path.front(), cur = _path.back();
            const auto depth = _path.size();
            if (depth == _n)
                return _g.adjacent(cur, start) && on_cycle(_path);

            if (_nodes >= _budget) {
                _out_of_budget = true;
                return true;
            }
            ++_nodes;

            auto avail = _unvisited;
            set(avail, cur);
            set(avail, start);

            // A vertex with only two usable neighbours must use both; if one of
            // them is cur, that vertex has to come next.
            optional<Vertex> forced;
            for (unsigned i = 0; i < _words; ++i)
                for (uint64_t bits = _unvisited[i]; bits; bits &= bits - 1) {
                    Vertex w = i * 64 + std::countr_zero(bits);
                    auto a = available_degree(w, avail);
                    if (a < 2)
                        return false;
                    if (a == 2 && depth >= 2 && _g.adjacent(w, cur)) {
                        if (forced)
                            return false;
                        forced = w;
                    }
                }

            const unsigned remaining = _n - depth;
            if (! remaining_connected(cur, remaining))
                return false;

            auto try_next = [&](Vertex w) -> bool {
                clear(_unvisited, w);
                _path.push_back(w);
                if (dfs(on_cycle))
                    return true;
                _path.pop_back();
                set(_unvisited, w);
                return false;
            };

            if (forced)
                return try_next(*forced);

            auto r = _g.row(cur);
            for (unsigned i = 0; i < _words; ++i)
                for (uint64_t bits = r[i] & _unvisited[i]; bits; bits &= bits - 1)
                    if (try_next(i * 64 + std::countr_zero(bits)))
                        return true;
            return false;
        }
    };

    // quick structural refutations; true means certainly non-Hamiltonian
    auto obviously_non_hamiltonian(const Graph & g) -> bool
    {
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.degree(v) < 2)
                return true;
        return ! is_connected(g) || ! articulation_points(g).empty();
    }
}

auto is_hamiltonian_cycle(const Graph & g, const CycleCertificate & cert) -> bool
{
    const auto n = g.size();
    if (cert.order.size() != n || n < 3)
        return false;
    vector<bool> seen(n, false);
    for (auto v : cert.order) {
        if (v >= n || seen[v])
            return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (! g.adjacent(cert.order[i], cert.order[(i + 1) % n]))
            return false;
    return true;
}

auto same_cycle(const CycleCertificate & a, const CycleCertificate & b) -> bool
{
    return a.order.size() == b.order.size() && normalised(a.order) == normalised(b.order);
}

auto dirac_check(const Graph & g) -> bool
{
    require_order(g, "dirac_check");
    for (Vertex v = 0; v < g.size(); ++v)
        if (2 * g.degree(v) < g.size())
            return false;
    return true;
}

auto chvatal_check(const Graph & g) -> bool
{
    require_order(g, "chvatal_check");
    const unsigned n = g.size();
    auto d = g.degree_sequence();
    for (unsigned i = 1; 2 * i < n; ++i)
        if (d[i - 1] <= i && d[n - i - 1] < n - i)
            return false;
    return true;
}

auto closure_trace(const Graph & g, optional<uint64_t> shuffle_seed) -> ClosureTrace
{
    ClosureTrace trace{g, {}};
    auto & h = trace.closure;
    const unsigned n = g.size();

    vector<GraphEdge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::mt19937_64 rng(shuffle_seed.value_or(0));

    bool changed = true;
    while (changed) {
        changed = false;
        if (shuffle_seed)
            std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto & [u, v] : pairs)
            if (! h.adjacent(u, v) && h.degree(u) + h.degree(v) >= n) {
                h.add_edge(u, v);
                trace.added.emplace_back(u, v);
                changed = true;
            }
    }
    return trace;
}

auto closure(const Graph & g) -> Graph
{
    return closure_trace(g).closure;
}

auto transfer_cycle(const Graph & g, Vertex u, Vertex v, const CycleCertificate & cert) -> CycleCertificate
{
    const unsigned n = g.size();
    if (u >= n || v >= n || u == v)
        throw std::invalid_argument("transfer_cycle needs two distinct vertices of the graph");
    if (g.degree(u) + g.degree(v) < n)
        throw std::invalid_argument("transfer_cycle: deg(" + std::to_string(u) + ") + deg(" + std::to_string(v)
            + ") = " + std::to_string(g.degree(u) + g.degree(v)) + " < " + std::to_string(n));

    Graph plus = g;
    plus.add_edge(u, v);
    if (! is_hamiltonian_cycle(plus, cert))
        throw std::invalid_argument("transfer_cycle: certificate is not a Hamiltonian cycle of g + uv");
    if (g.adjacent(u, v))
        return cert;

    const auto & order = cert.order;
    auto at = static_cast<std::size_t>(std::find(order.begin(), order.end(), u) - order.begin());
    bool forward_is_v = order[(at + 1) % n] == v;
    bool backward_is_v = order[(at + n - 1) % n] == v;
    if (! forward_is_v && ! backward_is_v)
        return cert;

    // lay the cycle out as a u-v path c_0 = u, ..., c_{n-1} = v
    vector<Vertex> c(n);
    for (std::size_t j = 0; j < n; ++j)
        c[j] = forward_is_v ? order[(at + n - j) % n] : order[(at + j) % n];

    // crossing pair: c_i ~ v and c_{i+1} ~ u gives
    // u, c_1, ..., c_i, v, c_{n-2}, ..., c_{i+1}
    for (std::size_t i = 1; i + 2 < n; ++i)
        if (g.adjacent(c[i], v) && g.adjacent(c[i + 1], u)) {
            CycleCertificate result;
            result.order.assign(c.begin(), c.begin() + i + 1);
            for (std::size_t j = n - 1; j > i; --j)
                result.order.push_back(c[j]);
            return result;
        }

    throw std::logic_error("transfer_cycle: no crossing pair despite the degree condition");
}

auto to_string(HamiltonStatus s) -> std::string
{
    switch (s) {
        case HamiltonStatus::found: return "found";
        case HamiltonStatus::no_cycle: return "no-cycle";
        case HamiltonStatus::budget_exhausted: return "budget-exhausted";
    }
    return "unknown";
}

namespace {
    auto backtrack(const Graph & g, uint64_t budget) -> HamiltonResult
    {
        HamiltonResult result;
        if (obviously_non_hamiltonian(g))
            return result;

        PathSearch search(g, budget);
        optional<CycleCertificate> found;
        search.run([&](const vector<Vertex> & path) {
            found = CycleCertificate{path};
            return true;
        });
        result.nodes = search.nodes();
        if (found) {
            result.status = HamiltonStatus::found;
            result.cycle = std::move(found);
        }
        else if (search.out_of_budget())
            result.status = HamiltonStatus::budget_exhausted;
        return result;
    }
}

auto find_hamiltonian_cycle(const Graph & g, const HamiltonOptions & options) -> HamiltonResult
{
    require_order(g, "find_hamiltonian_cycle");
    if (! options.use_closure)
        return backtrack(g, options.node_budget);

    auto trace = closure_trace(g);
    HamiltonResult result;
    if (trace.closure.edge_count() == uint64_t{g.size()} * (g.size() - 1) / 2) {
        result.status = HamiltonStatus::found;
        CycleCertificate c;
        c.order.resize(g.size());
        std::iota(c.order.begin(), c.order.end(), Vertex{0});
        result.cycle = std::move(c);
    }
    else
        result = backtrack(trace.closure, options.node_budget);

    if (result.cycle) {
        Graph h = std::move(trace.closure);
        auto cert = std::move(*result.cycle);
        for (auto it = trace.added.rbegin(); it != trace.added.rend(); ++it) {
            h.remove_edge(it->first, it->second);
            cert = transfer_cycle(h, it->first, it->second, cert);
        }
        result.cycle = std::move(cert);
    }
    return result;
}

auto for_each_hamiltonian_cycle(const Graph & g,
    const std::function<bool (const CycleCertificate &)> & visit,
    uint64_t node_budget) -> EnumerationResult
{
    require_order(g, "for_each_hamiltonian_cycle");
    EnumerationResult result;
    if (obviously_non_hamiltonian(g))
        return result;

    PathSearch search(g, node_budget);
    bool stopped = false;
    search.run([&](const vector<Vertex> & path) {
        if (path[1] > path.back())
            return false; // the reflection is visited instead
        ++result.cycles;
        if (! visit(CycleCertificate{path})) {
            stopped = true;
            return true;
        }
        return false;
    });
    result.nodes = search.nodes();
    result.complete = ! stopped && ! search.out_of_budget();
    return result;
}

}
