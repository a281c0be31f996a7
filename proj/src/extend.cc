#include <berge/extend.hh>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

using std::optional;
using std::uint64_t;
using std::vector;

namespace berge {


auto build_candidates(std::span<const Vertex> core, Color color, const Coloring & coloring, std::size_t cap) -> CandidateTable
{
    const auto & params = coloring.params();
    const unsigned n = params.n();
    if (core.size() != n)
        throw std::invalid_argument("core must list all " + std::to_string(n) + " vertices");
    vector<bool> seen(n, false);
    for (auto v : core) {
        if (v >= n || seen[v])
            throw std::invalid_argument("core is not a permutation of the vertices");
        seen[v] = true;
    }

    CandidateTable table;
    table.core.assign(core.begin(), core.end());
    table.color = color;
    table.cap = cap;
    table.candidates.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        auto & list = table.candidates[i];
        for (auto e : pair_supersets(core[i], core[(i + 1) % n], params)) {
            if (coloring.color_of(e) != color)
                continue;
            list.push_back(e);
            if (cap != 0 && list.size() == cap)
                break;
        }
    }
    return table;
}

auto extend_matching(const CandidateTable & table, uint64_t * augmentations) -> optional<BergeCycle>
{
    const auto n = table.candidates.size();
    for (auto & list : table.candidates)
        if (list.empty())
            return std::nullopt;

    // compact edge ids
    std::unordered_map<EdgeIndex, std::size_t> id;
    vector<EdgeIndex> edge_of;
    vector<vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto e : table.candidates[i]) {
            auto [it, fresh] = id.emplace(e, edge_of.size());
            if (fresh)
                edge_of.push_back(e);
            adj[i].push_back(it->second);
        }
    if (edge_of.size() < n)
        return std::nullopt;

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    vector<std::size_t> owner(edge_of.size(), none), assigned(n, none);
    vector<unsigned> stamp(edge_of.size(), 0);
    unsigned round = 0;

    // iterative augmenting-path search from position `root`
    auto augment = [&](std::size_t root) -> bool {
        ++round;
        struct Frame {
            std::size_t pos, next;
        };
        vector<Frame> stack{{root, 0}};
        vector<std::size_t> via; // edge taken out of each frame
        while (! stack.empty()) {
            auto & top = stack.back();
            if (top.next == adj[top.pos].size()) {
                stack.pop_back();
                if (! via.empty())
                    via.pop_back();
                continue;
            }
            auto e = adj[top.pos][top.next++];
            if (stamp[e] == round)
                continue;
            stamp[e] = round;
            if (owner[e] == none) {
                via.push_back(e);
                for (std::size_t d = 0; d < stack.size(); ++d) {
                    owner[via[d]] = stack[d].pos;
                    assigned[stack[d].pos] = via[d];
                }
                return true;
            }
            via.push_back(e);
            stack.push_back({owner[e], 0});
        }
        return false;
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (augmentations)
            ++*augmentations;
        if (! augment(i))
            return std::nullopt;
    }

    BergeCycle cycle{table.core, vector<EdgeIndex>(n), table.color};
    for (std::size_t i = 0; i < n; ++i)
        cycle.edges[i] = edge_of[assigned[i]];
    return cycle;
}

auto extend_greedy_ordered(const CandidateTable & table, const std::map<std::size_t, EdgeIndex> & reserved,
    optional<GreedyFailure> & failure) -> optional<BergeCycle>
{
    const auto n = table.candidates.size();
    failure.reset();
    vector<EdgeIndex> taken;
    for (auto & [pos, e] : reserved) {
        if (pos >= n)
            throw std::invalid_argument("reservation for position " + std::to_string(pos) + " is out of range");
        auto & list = table.candidates[pos];
        if (std::find(list.begin(), list.end(), e) == list.end())
            throw std::invalid_argument("reserved edge " + std::to_string(e) + " is not a candidate at position " + std::to_string(pos));
        taken.push_back(e);
    }
    std::sort(taken.begin(), taken.end());
    if (std::adjacent_find(taken.begin(), taken.end()) != taken.end()) {
        failure = GreedyFailure{reserved.begin()->first};
        return std::nullopt;
    }

    BergeCycle cycle{table.core, vector<EdgeIndex>(n), table.color};
    for (std::size_t i = 0; i < n; ++i) {
        if (auto r = reserved.find(i); r != reserved.end()) {
            cycle.edges[i] = r->second;
            continue;
        }
        bool placed = false;
        for (auto e : table.candidates[i]) {
            auto at = std::lower_bound(taken.begin(), taken.end(), e);
            if (at != taken.end() && *at == e)
                continue;
            taken.insert(at, e);
            cycle.edges[i] = e;
            placed = true;
            break;
        }
        if (! placed) {
            failure = GreedyFailure{i};
            return std::nullopt;
        }
    }
    return cycle;
}

auto extend_greedy_ordered(const CandidateTable & table, const std::map<std::size_t, EdgeIndex> & reserved)
    -> optional<BergeCycle>
{
    optional<GreedyFailure> ignored;
    return extend_greedy_ordered(table, reserved, ignored);
}

auto extend_core(std::span<const Vertex> core, Color color, const Coloring & coloring) -> ExtensionOutcome
{
    ExtensionOutcome outcome;
    outcome.cap = 4 * std::size_t{coloring.params().n()};
    auto capped = build_candidates(core, color, coloring, outcome.cap);
    outcome.cycle = extend_matching(capped, &outcome.augmentations);
    if (outcome.cycle)
        return outcome;

    bool truncated = std::any_of(capped.candidates.begin(), capped.candidates.end(),
        [&](const auto & list) { return list.size() == outcome.cap; });
    if (truncated) {
        outcome.uncapped_pass = true;
        auto full = build_candidates(core, color, coloring);
        outcome.cycle = extend_matching(full, &outcome.augmentations);
    }
    return outcome;
}

}
