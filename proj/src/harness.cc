#include <berge/construct.hh>
#include <berge/extend.hh>
#include <berge/hamilton.hh>
#include <berge/harness.hh>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace berge {

using std::to_string;

auto to_string(SearchVerdict v) -> string
{
    switch (v) {
        case SearchVerdict::found: return "found";
        case SearchVerdict::not_found: return "not-found";
        case SearchVerdict::undecided: return "undecided";
    }
    return "unknown";
}

auto to_json(const SearchReport & report) -> nlohmann::json
{
    nlohmann::json j = {{"verdict", to_string(report.verdict)}, {"stages", report.stages},
        {"nodes", report.nodes}, {"augmentations", report.augmentations},
        {"cores_tried", report.cores_tried}, {"work", report.work()}};
    if (report.color)
        j["color"] = *report.color;
    if (report.cycle)
        j["cycle"] = {{"core", report.cycle->core}, {"edges", report.cycle->edges}};
    return j;
}

namespace {
    auto pair_graph(const Coloring & coloring, Color c) -> Graph
    {
        const auto & params = coloring.params();
        Graph g(params.n());
        vector<Vertex> edge(params.r());
        std::iota(edge.begin(), edge.end(), Vertex{0});
        EdgeIndex t = 0;
        do {
            if (coloring.color_of(t) == c)
                for (unsigned b = 0; b < edge.size(); ++b)
                    for (unsigned a = 0; a < b; ++a)
                        g.add_edge(edge[a], edge[b]);
            ++t;
        } while (next_colex(edge, params.n()));
        return g;
    }

    auto remaining(uint64_t budget, uint64_t spent) -> uint64_t
    {
        return spent >= budget ? 0 : budget - spent;
    }
}

auto find_mono_berge(const Coloring & coloring, uint64_t budget) -> SearchReport
{
    SearchReport report;
    const auto & params = coloring.params();
    const unsigned n = params.n();
    if (n < 3) {
        report.stages.push_back("fewer than 3 vertices: K_n^r has fewer than n edges");
        return report;
    }

    // the enumeration phase may use three quarters of a finite budget
    const uint64_t phase = budget == unlimited ? unlimited : budget - budget / 4;
    bool incomplete = false;
    auto sizes = coloring.class_sizes();

    for (Color c = 1; c <= params.k(); ++c) {
        if (sizes[c] < n) {
            report.stages.push_back("color " + to_string(c) + ": " + to_string(sizes[c]) + " edges, fewer than n");
            continue;
        }
        auto g = pair_graph(coloring, c);
        auto decided = find_hamiltonian_cycle(g, HamiltonOptions{remaining(phase, report.work()), true});
        report.nodes += decided.nodes;
        if (decided.status == HamiltonStatus::no_cycle) {
            report.stages.push_back("color " + to_string(c) + ": covered pairs have no Hamiltonian cycle");
            continue;
        }
        if (decided.status == HamiltonStatus::budget_exhausted) {
            report.stages.push_back("color " + to_string(c) + ": budget ran out deciding the pair graph");
            incomplete = true;
            break;
        }

        bool out = false;
        auto visit = [&](const CycleCertificate & cert) {
            ++report.cores_tried;
            auto outcome = extend_core(cert.order, c, coloring);
            report.augmentations += outcome.augmentations;
            if (outcome.cycle) {
                report.cycle = std::move(outcome.cycle);
                return false;
            }
            if (report.work() >= phase) {
                out = true;
                return false;
            }
            return true;
        };
        auto listing = for_each_hamiltonian_cycle(g, visit, remaining(phase, report.work()));
        report.nodes += listing.nodes;
        if (report.cycle) {
            report.verdict = SearchVerdict::found;
            report.color = c;
            report.stages.push_back("color " + to_string(c) + ": extended core " + to_string(report.cores_tried));
            return report;
        }
        if (out || ! listing.complete) {
            report.stages.push_back("color " + to_string(c) + ": budget ran out after " + to_string(listing.cycles) + " cycles");
            incomplete = true;
            break;
        }
        report.stages.push_back("color " + to_string(c) + ": none of " + to_string(listing.cycles) + " cycles extends");
    }

    if (! incomplete)
        return report;

    report.verdict = SearchVerdict::undecided;
    if (params.k() == params.r() - 1) {
        ConstructOptions options;
        options.hamilton_budget = std::max<uint64_t>(1, remaining(budget, report.work()));
        auto built = constructive_find(coloring, options);
        report.nodes += built.work;
        report.stages.push_back("constructive: stopped at " + to_string(built.stage)
            + (built.diagnostic.empty() ? "" : " (" + built.diagnostic + ")"));
        if (built.cycle) {
            report.verdict = SearchVerdict::found;
            report.color = built.color;
            report.cycle = std::move(built.cycle);
        }
    }
    return report;
}

namespace {
    // backtracking assignment of distinct edges to positions
    auto assign(const vector<vector<std::size_t>> & lists, vector<std::size_t> & chosen, vector<bool> & used,
        std::size_t pos) -> bool
    {
        if (pos == lists.size())
            return true;
        for (auto e : lists[pos]) {
            if (used[e])
                continue;
            used[e] = true;
            chosen[pos] = e;
            if (assign(lists, chosen, used, pos + 1))
                return true;
            used[e] = false;
        }
        return false;
    }
}

auto naive_oracle(const Coloring & coloring) -> SearchReport
{
    const auto & params = coloring.params();
    const unsigned n = params.n();
    if (n > 9)
        throw std::invalid_argument("naive_oracle is limited to n <= 9");
    SearchReport report;
    if (n < 3) {
        report.stages.push_back("fewer than 3 vertices");
        return report;
    }

    for (Color c = 1; c <= params.k(); ++c) {
        vector<EdgeIndex> index;
        vector<vector<Vertex>> members;
        for (EdgeIndex t = 0; t < params.edge_count(); ++t)
            if (coloring.color_of(t) == c) {
                index.push_back(t);
                members.push_back(unrank_edge(t, params));
            }
        if (index.size() < n)
            continue;

        auto has = [](const vector<Vertex> & m, Vertex v) { return std::find(m.begin(), m.end(), v) != m.end(); };
        vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), Vertex{0});
        do {
            if (order[1] > order[n - 1])
                continue;
            ++report.cores_tried;
            vector<vector<std::size_t>> lists(n);
            bool empty = false;
            for (unsigned i = 0; i < n && ! empty; ++i) {
                for (std::size_t j = 0; j < index.size(); ++j)
                    if (has(members[j], order[i]) && has(members[j], order[(i + 1) % n]))
                        lists[i].push_back(j);
                empty = lists[i].empty();
            }
            if (empty)
                continue;
            vector<std::size_t> chosen(n);
            vector<bool> used(index.size(), false);
            if (assign(lists, chosen, used, 0)) {
                BergeCycle cycle{order, vector<EdgeIndex>(n), c};
                for (unsigned i = 0; i < n; ++i)
                    cycle.edges[i] = index[chosen[i]];
                report.verdict = SearchVerdict::found;
                report.color = c;
                report.cycle = std::move(cycle);
                return report;
            }
        } while (std::next_permutation(order.begin() + 1, order.end()));
    }
    return report;
}

auto to_json(const ExhaustReport & report) -> nlohmann::json
{
    nlohmann::json counterexamples = nlohmann::json::array();
    for (auto & colors : report.counterexamples) {
        string digits;
        for (auto c : colors)
            digits += (digits.empty() ? "" : " ") + to_string(c);
        counterexamples.push_back(digits);
    }
    nlohmann::json shards = nlohmann::json::array();
    for (auto & s : report.shards)
        shards.push_back({{"begin", s.begin}, {"end", s.end}, {"total", s.total}, {"success", s.success},
            {"failure", s.failure}, {"pruned", s.pruned}});
    return {{"params", {{"n", report.n}, {"r", report.r}, {"k", report.k}}},
        {"total", report.total}, {"success", report.success}, {"failure", report.failure},
        {"pruned", report.pruned}, {"counterexamples", counterexamples},
        {"partition", {{"range_begin", report.range_begin}, {"range_end", report.range_end},
                          {"shard_count", report.shards.size()}, {"shards", shards}}}};
}

namespace {
    struct ShardOutput {
        ShardRecord record;
        vector<vector<Color>> counterexamples;
    };

    auto run_shard(const HyperParams & params, uint64_t begin, uint64_t end, std::size_t keep) -> ShardOutput
    {
        ShardOutput out;
        out.record.begin = begin;
        out.record.end = end;
        if (begin == end)
            return out;

        const auto m = params.edge_count();
        const unsigned k = params.k(), n = params.n();
        vector<Color> digits(m); // 0-based digits, digits[0] most significant
        auto value = begin;
        for (auto i = m; i-- > 0;) {
            digits[i] = value % k;
            value /= k;
        }
        vector<uint64_t> sizes(k, 0);
        for (auto d : digits)
            ++sizes[d];

        vector<Color> colors(m);
        for (auto at = begin; at < end; ++at) {
            ++out.record.total;
            bool reachable = std::any_of(sizes.begin(), sizes.end(), [&](uint64_t s) { return s >= n; });
            bool success = false;
            if (reachable) {
                for (std::size_t i = 0; i < m; ++i)
                    colors[i] = digits[i] + 1;
                success = find_mono_berge(Coloring(params, colors)).verdict == SearchVerdict::found;
            }
            else
                ++out.record.pruned;

            if (success)
                ++out.record.success;
            else {
                ++out.record.failure;
                if (out.counterexamples.size() < keep) {
                    vector<Color> failing(m);
                    for (std::size_t i = 0; i < m; ++i)
                        failing[i] = digits[i] + 1;
                    out.counterexamples.push_back(std::move(failing));
                }
            }

            // increment the counter
            for (auto i = m; i-- > 0;) {
                --sizes[digits[i]];
                if (++digits[i] == k) {
                    digits[i] = 0;
                    ++sizes[0];
                    continue;
                }
                ++sizes[digits[i]];
                break;
            }
        }
        return out;
    }
}

auto exhaustive_verify(const HyperParams & params, const ExhaustOptions & options) -> ExhaustReport
{
    const auto m = params.edge_count();
    const unsigned k = params.k();
    const double estimate = std::pow(static_cast<double>(k), static_cast<double>(m));

    optional<uint64_t> space = 1;
    for (uint64_t i = 0; i < m && space; ++i) {
        if (*space > std::numeric_limits<uint64_t>::max() / k)
            space.reset();
        else
            *space *= k;
    }

    const uint64_t begin = options.range_begin.value_or(0);
    if (! space && ! options.range_end)
        throw InfeasibleError("k^C(n, r) is about " + std::to_string(estimate) + " colorings, beyond a 64-bit counter", estimate);
    const uint64_t end = options.range_end.value_or(space.value_or(0));
    if (space && end > *space)
        throw std::invalid_argument("range end exceeds k^C(n, r)");
    if (begin > end)
        throw std::invalid_argument("range begin exceeds range end");
    if (end - begin > options.max_colorings)
        throw InfeasibleError("range holds " + std::to_string(end - begin) + " colorings (k^C(n, r) is about "
                + std::to_string(estimate) + "), above the cap of " + std::to_string(options.max_colorings),
            estimate);
    if (options.shards == 0)
        throw std::invalid_argument("at least one shard is needed");

    const uint64_t span = end - begin;
    const unsigned shards = options.shards;
    vector<ShardOutput> outputs(shards);
    vector<std::pair<uint64_t, uint64_t>> ranges(shards);
    for (unsigned s = 0; s < shards; ++s)
        ranges[s] = {begin + span / shards * s + std::min<uint64_t>(s, span % shards),
            begin + span / shards * (s + 1) + std::min<uint64_t>(s + 1, span % shards)};

    const unsigned threads = std::max(1u, options.threads == 0 ? shards : std::min(options.threads, shards));
    vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (unsigned s = t; s < shards; s += threads)
                outputs[s] = run_shard(params, ranges[s].first, ranges[s].second, options.keep_counterexamples);
        });
    for (auto & th : pool)
        th.join();

    ExhaustReport report;
    report.n = params.n();
    report.r = params.r();
    report.k = k;
    report.range_begin = begin;
    report.range_end = end;
    for (auto & out : outputs) {
        report.total += out.record.total;
        report.success += out.record.success;
        report.failure += out.record.failure;
        report.pruned += out.record.pruned;
        for (auto & c : out.counterexamples)
            if (report.counterexamples.size() < options.keep_counterexamples)
                report.counterexamples.push_back(std::move(c));
        report.shards.push_back(out.record);
    }
    return report;
}

auto gen_coloring(const HyperParams & params, const GenScheme & scheme) -> Coloring
{
    const unsigned k = params.k();
    auto check = [&](Color c) {
        if (c < 1 || c > k)
            throw std::invalid_argument("color " + to_string(c) + " outside [1, " + to_string(k) + "]");
    };
    const auto m = params.edge_count();
    vector<Color> colors(m);

    switch (scheme.kind) {
        case GenScheme::Kind::uniform:
            check(scheme.color);
            return Coloring(params, scheme.color);

        case GenScheme::Kind::random: {
            std::mt19937_64 rng(scheme.seed);
            for (auto & c : colors)
                c = 1 + static_cast<Color>(rng() % k);
            break;
        }

        case GenScheme::Kind::vertex_partition: {
            if (scheme.classes.size() != params.n())
                throw std::invalid_argument("vertex partition needs one class per vertex");
            for (auto c : scheme.classes)
                check(c);
            vector<Vertex> edge(params.r());
            std::iota(edge.begin(), edge.end(), Vertex{0});
            EdgeIndex t = 0;
            do
                colors[t++] = scheme.classes[edge[0]];
            while (next_colex(edge, params.n()));
            break;
        }

        case GenScheme::Kind::digits: {
            if (scheme.digits.empty())
                throw std::invalid_argument("digit pattern is empty");
            for (auto c : scheme.digits)
                check(c);
            for (EdgeIndex t = 0; t < m; ++t)
                colors[t] = scheme.digits[t % scheme.digits.size()];
            break;
        }
    }
    return Coloring(params, colors);
}

auto paper_threshold(unsigned r) -> uint64_t
{
    if (r < 2)
        throw std::invalid_argument("threshold needs r >= 2");
    auto b = checked_binomial(uint64_t{4} * r, r - 1);
    if (! b)
        throw std::overflow_error("C(4r, r - 1) does not fit in 64 bits");
    unsigned __int128 value = static_cast<unsigned __int128>(6) * r * *b;
    if (value > std::numeric_limits<uint64_t>::max())
        throw std::overflow_error("6 r C(4r, r - 1) does not fit in 64 bits");
    return static_cast<uint64_t>(value);
}

}
