#include <berge/construct.hh>

#include <algorithm>
#include <numeric>
#include <set>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace berge {

using std::to_string;

namespace {
    auto norm(Vertex a, Vertex b) -> GraphEdge
    {
        return a < b ? GraphEdge{a, b} : GraphEdge{b, a};
    }

    auto insert_sorted(VertexSet & s, Vertex v) -> void
    {
        auto at = std::lower_bound(s.begin(), s.end(), v);
        if (at == s.end() || *at != v)
            s.insert(at, v);
    }

    auto rank_of_set(VertexSet members, const HyperParams & params) -> EdgeIndex
    {
        std::sort(members.begin(), members.end());
        return rank_edge(members, params);
    }

    auto at_least_half(std::size_t size, unsigned n) -> bool
    {
        return 2 * size + 1 >= n;
    }

    // distinct representatives for the non-avoided colors, smallest vertex first
    auto pick_representatives(const vector<const VertexSet *> & pools, const VertexSet & blocked,
        vector<Vertex> & chosen, std::size_t depth = 0) -> bool
    {
        if (depth == pools.size())
            return true;
        for (auto v : *pools[depth]) {
            if (set_contains(blocked, v) || std::find(chosen.begin(), chosen.end(), v) != chosen.end())
                continue;
            chosen.push_back(v);
            if (pick_representatives(pools, blocked, chosen, depth + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    }

    auto next_combination(vector<Vertex> & pick, unsigned universe) -> bool
    {
        const auto size = pick.size();
        std::size_t j = size;
        while (j > 0 && pick[j - 1] == universe - size + (j - 1))
            --j;
        if (j == 0)
            return false;
        ++pick[j - 1];
        for (auto m = j; m < size; ++m)
            pick[m] = pick[m - 1] + 1;
        return true;
    }
}

auto witness_search(const ColorProfile & profile, const WitnessOptions & options) -> optional<Witness>
{
    const unsigned n = profile.n(), r = profile.params().r(), k = profile.k();
    if (k != r - 1)
        throw std::invalid_argument("witness_search needs k = r - 1 colors");

    vector<vector<VertexSet>> ubar(n, vector<VertexSet>(k + 1));
    vector<std::size_t> widest(n, 0);
    for (Vertex x = 0; x < n; ++x)
        for (Color c = 1; c <= k; ++c) {
            ubar[x][c] = u_sets(x, make_color_set({c}), profile).missing;
            widest[x] = std::max(widest[x], ubar[x][c].size());
        }

    vector<Vertex> centres(n);
    std::iota(centres.begin(), centres.end(), Vertex{0});
    std::stable_sort(centres.begin(), centres.end(), [&](Vertex a, Vertex b) { return widest[a] > widest[b]; });

    for (int f = static_cast<int>(r) - 2; f >= 0; --f) {
        for (auto x : centres) {
            if (! at_least_half(widest[x], n))
                continue;

            vector<Vertex> split(f); // indices into colors 1..k, reused as a combination of [0, k)
            std::iota(split.begin(), split.end(), Vertex{0});
            do {
                ColorSet avoided;
                for (auto s : split)
                    avoided.set(s + 1);
                vector<Color> others;
                for (Color c = 1; c <= k; ++c)
                    if (! avoided.test(c))
                        others.push_back(c);
                std::stable_sort(others.begin(), others.end(),
                    [&](Color a, Color b) { return ubar[x][a].size() < ubar[x][b].size(); });
                if (! at_least_half(ubar[x][others.back()].size(), n))
                    continue;
                if (ubar[x][others.front()].empty())
                    continue;

                vector<const VertexSet *> pools;
                for (auto c : others)
                    pools.push_back(&ubar[x][c]);

                auto attempt = [&](VertexSet s) -> optional<Witness> {
                    insert_sorted(s, x);
                    vector<Vertex> reps;
                    if (! pick_representatives(pools, s, reps))
                        return std::nullopt;
                    s.erase(std::find(s.begin(), s.end(), x));

                    Witness w;
                    w.x = x;
                    w.f = static_cast<unsigned>(f);
                    w.y = s;
                    w.y.insert(w.y.end(), reps.begin(), reps.end());
                    w.color_perm = colors_in(avoided);
                    w.color_perm.insert(w.color_perm.end(), others.begin(), others.end());
                    for (auto c : others)
                        w.ubar_sizes.push_back(ubar[x][c].size());
                    return w;
                };

                if (f == 0) {
                    if (auto w = attempt({}))
                        return w;
                    continue;
                }

                if (auto greedy = greedy_avoiding_set(avoided, profile, options.d_bound, f, VertexSet{x})) {
                    auto s = *greedy;
                    for (Vertex v = 0; v < n && s.size() < static_cast<std::size_t>(f); ++v)
                        if (v != x && ! set_contains(s, v))
                            insert_sorted(s, v);
                    if (s.size() == static_cast<std::size_t>(f))
                        if (auto w = attempt(s))
                            return w;
                }

                if (n - 1 < static_cast<unsigned>(f))
                    continue;
                vector<Vertex> pick(f);
                std::iota(pick.begin(), pick.end(), Vertex{0});
                uint64_t examined = 0;
                do {
                    if (examined++ >= options.max_avoid_subsets)
                        break;
                    VertexSet s;
                    for (auto p : pick)
                        s.push_back(p < x ? p : p + 1); // skip x
                    if (avoids(s, avoided, profile, options.d_bound))
                        if (auto w = attempt(s))
                            return w;
                } while (next_combination(pick, n - 1));
            } while (next_combination(split, k));
        }
    }
    return std::nullopt;
}

auto witness_search(const ColorProfile & profile, uint64_t d_bound) -> optional<Witness>
{
    return witness_search(profile, WitnessOptions{d_bound});
}

auto validate_witness(const Witness & w, const Coloring & coloring, uint64_t good_threshold, uint64_t d_bound) -> string
{
    const auto & params = coloring.params();
    const unsigned n = params.n(), r = params.r(), k = params.k();
    if (k != r - 1)
        return "coloring does not have r - 1 colors";
    if (w.f > r - 2)
        return "f exceeds r - 2";
    if (w.y.size() != r - 1)
        return "witness needs r - 1 vertices y_i";
    if (w.x >= n)
        return "x out of range";

    VertexSet all{w.x};
    for (auto v : w.y) {
        if (v >= n)
            return "y vertex out of range";
        all.push_back(v);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return "x and the y_i are not distinct";

    auto perm = w.color_perm;
    std::sort(perm.begin(), perm.end());
    vector<Color> identity(k);
    std::iota(identity.begin(), identity.end(), Color{1});
    if (perm != identity)
        return "color_perm is not a permutation of the colors";

    auto good = [&](Vertex a, Vertex b, Color c) {
        uint64_t count = 0;
        for (auto e : pair_supersets(a, b, params))
            if (coloring.color_of(e) == c)
                ++count;
        return count >= good_threshold;
    };

    vector<std::size_t> sizes;
    for (unsigned i = w.f + 1; i <= r - 1; ++i) {
        auto c = w.original(i);
        std::size_t missing = 0;
        for (Vertex v = 0; v < n; ++v)
            if (v != w.x && ! good(w.x, v, c))
                ++missing;
        sizes.push_back(missing);
        if (good(w.x, w.y_of(i), c))
            return "renamed color " + to_string(i) + " is good on x y_" + to_string(i);
    }
    if (sizes != w.ubar_sizes)
        return "recorded U-bar sizes do not match the coloring";
    if (! std::is_sorted(sizes.begin(), sizes.end()))
        return "U-bar sizes are not ascending";
    if (! at_least_half(sizes.back(), n))
        return "|U-bar_{r-1}(x)| is below (n - 1) / 2";

    for (unsigned j = 1; j <= w.f; ++j) {
        auto c = w.original(j);
        bool blocked = false;
        for (unsigned a = 1; a <= w.f && ! blocked; ++a) {
            if (color_degree(w.y_of(a), c, coloring) <= d_bound)
                blocked = true;
            for (unsigned b = a + 1; b <= w.f && ! blocked; ++b)
                if (! good(w.y_of(a), w.y_of(b), c))
                    blocked = true;
        }
        if (! blocked)
            return "{y_1..y_f} does not avoid renamed color " + to_string(j);
    }
    return "";
}

namespace {
    // target-color edges with their vertices, ascending by index
    struct TargetEdges {
        vector<EdgeIndex> index;
        vector<vector<Vertex>> members;

        TargetEdges(const Coloring & coloring, Color target)
        {
            for (auto e : coloring.edges_of_color(target)) {
                index.push_back(e);
                members.push_back(unrank_edge(e, coloring.params()));
            }
        }
    };

    // Greedy contact step: `count` unused target edges through `centre`, each
    // with a vertex outside `forbidden`, which then joins `forbidden`.
    auto contact_step(const string & step, const TargetEdges & edges, Vertex centre, unsigned count, VertexSet forbidden,
        std::set<EdgeIndex> & used) -> vector<std::pair<EdgeIndex, Vertex>>
    {
        insert_sorted(forbidden, centre);
        vector<std::pair<EdgeIndex, Vertex>> picks;
        for (unsigned j = 0; j < count; ++j) {
            bool found = false;
            for (std::size_t t = 0; t < edges.index.size() && ! found; ++t) {
                const auto & m = edges.members[t];
                if (used.count(edges.index[t]) || ! std::binary_search(m.begin(), m.end(), centre))
                    continue;
                for (auto v : m)
                    if (! set_contains(forbidden, v)) {
                        used.insert(edges.index[t]);
                        insert_sorted(forbidden, v);
                        picks.emplace_back(edges.index[t], v);
                        found = true;
                        break;
                    }
            }
            if (! found)
                throw ConstructionError(step + ": ran out of fresh target-color edges through vertex " + to_string(centre)
                        + " after " + to_string(j) + " of " + to_string(count),
                    centre);
        }
        return picks;
    }

    auto add_reserved(GammaBundle & b, Vertex u, Vertex v, EdgeIndex e, int cls) -> void
    {
        b.gamma.add_edge(u, v);
        b.reserved.emplace(norm(u, v), e);
        b.edge_class.emplace(norm(u, v), cls);
    }
}

auto build_gamma_case1(const Witness & w, const ColorProfile & profile) -> GammaBundle
{
    const auto & coloring = profile.coloring();
    const auto & params = profile.params();
    const unsigned n = params.n(), r = params.r();
    if (w.f != r - 2)
        throw std::invalid_argument("case 1 needs f = r - 2");

    GammaBundle b;
    b.case_tag = 1;
    b.target = w.original(r - 1);
    b.x = w.x;
    b.gamma = Graph(n);
    b.y_set.assign(w.y.begin(), w.y.begin() + (r - 2));
    std::sort(b.y_set.begin(), b.y_set.end());

    VertexSet outside;
    for (Vertex v = 0; v < n; ++v)
        if (! set_contains(b.y_set, v))
            outside.push_back(v);

    for (std::size_t a = 0; a < outside.size(); ++a)
        for (std::size_t c = a + 1; c < outside.size(); ++c) {
            auto members = b.y_set;
            members.push_back(outside[a]);
            members.push_back(outside[c]);
            auto e = rank_of_set(members, params);
            if (coloring.color_of(e) == b.target)
                add_reserved(b, outside[a], outside[c], e, 1);
        }

    for (auto y : b.y_set)
        for (auto v : outside) {
            b.gamma.add_edge(y, v);
            b.edge_class.emplace(norm(y, v), 2);
        }
    return b;
}

auto build_gamma_case2(const Witness & w, const ColorProfile & profile) -> GammaBundle
{
    const auto & coloring = profile.coloring();
    const auto & params = profile.params();
    const unsigned n = params.n(), r = params.r();
    if (w.f + 3 > r)
        throw std::invalid_argument("case 2 needs f <= r - 3");

    const unsigned f = w.f;
    GammaBundle b;
    b.case_tag = 2;
    b.target = w.original(f + 1);
    b.x = w.x;
    b.gamma = Graph(n);
    const Vertex x = w.x;

    for (unsigned i = 1; i <= r - 1; ++i)
        if (i != f + 1)
            b.y_set.push_back(w.y_of(i));
    std::sort(b.y_set.begin(), b.y_set.end());
    for (unsigned i = f + 2; i <= r - 1; ++i) {
        auto yi = b.y_set;
        yi.erase(std::find(yi.begin(), yi.end(), w.y_of(i)));
        b.y_minus[i] = yi;
    }

    auto ubar_target = u_sets(x, make_color_set({b.target}), profile).missing;
    if (ubar_target.size() > r - 2)
        throw std::invalid_argument("|U-bar_{f+1}(x)| = " + to_string(ubar_target.size()) + " exceeds r - 2");
    if (! set_contains(ubar_target, w.y_of(f + 1)))
        throw std::invalid_argument("y_{f+1} is not in U-bar_{f+1}(x)");
    b.ubar_list.push_back(w.y_of(f + 1));
    for (auto u : ubar_target)
        if (u != w.y_of(f + 1))
            b.ubar_list.push_back(u);

    // U and its partition
    for (Vertex v = 0; v < n; ++v) {
        if (v == x || set_contains(b.y_set, v))
            continue;
        auto members = b.y_set;
        members.push_back(x);
        members.push_back(v);
        if (coloring.color_of(rank_of_set(members, params)) == b.target)
            b.u_set.push_back(v);
    }
    const std::size_t big = n / 2 + 1;
    if (b.u_set.size() < big)
        throw ConstructionError("|U| = " + to_string(b.u_set.size()) + " is below floor(n/2) + 1 = " + to_string(big));

    vector<unsigned> balanced;
    for (unsigned i = 1; i <= r - 2; ++i)
        if (i != f + 1)
            balanced.push_back(i);
    for (unsigned i = 1; i <= r - 1; ++i)
        b.parts[i] = {};
    b.parts[r - 1].assign(b.u_set.begin(), b.u_set.begin() + big);
    if (balanced.empty() && b.u_set.size() > big)
        throw ConstructionError("no parts left to absorb the rest of U");
    for (std::size_t j = big; j < b.u_set.size(); ++j)
        b.parts[balanced[(j - big) % balanced.size()]].push_back(b.u_set[j]);

    // E_1
    for (unsigned i = f + 2; i <= r - 1; ++i) {
        auto missing = u_sets(x, make_color_set({w.original(i)}), profile).missing;
        for (auto u : missing) {
            if (u == w.y_of(i) || u == x || set_contains(b.y_set, u))
                continue;
            for (Vertex v = 0; v < n; ++v) {
                if (v == u || v == x || set_contains(b.y_set, v) || b.gamma.adjacent(u, v))
                    continue;
                auto members = b.y_minus[i];
                members.push_back(x);
                members.push_back(u);
                members.push_back(v);
                auto e = rank_of_set(members, params);
                if (coloring.color_of(e) == b.target)
                    add_reserved(b, u, v, e, 1);
            }
        }
    }

    // E_2: every y_i v shares the hyperedge Y + {x, v}
    for (auto & [i, part] : b.parts) {
        if (i == f + 1)
            continue;
        for (auto v : part) {
            auto members = b.y_set;
            members.push_back(x);
            members.push_back(v);
            add_reserved(b, w.y_of(i), v, rank_of_set(members, params), 2);
        }
    }

    std::set<EdgeIndex> used;
    for (auto & [edge, e] : b.reserved)
        used.insert(e);
    TargetEdges target_edges(coloring, b.target);

    auto base_forbidden = set_union(b.y_set, ubar_target);
    insert_sorted(base_forbidden, x);
    const unsigned wide = 2 * r;

    // E_3: lift each u_i above degree 2r
    for (auto u : b.ubar_list)
        b.gamma1_degrees.push_back(b.gamma.degree(u));
    for (std::size_t i = 0; i < b.ubar_list.size(); ++i) {
        auto u = b.ubar_list[i];
        unsigned d = b.gamma1_degrees[i];
        unsigned t = d > wide ? 0 : wide + 1 - d;
        b.t.push_back(t);
        auto forbidden = set_union(base_forbidden, b.gamma.neighbours(u));
        for (auto & [e, v] : contact_step("step u_" + to_string(i + 1), target_edges, u, t, forbidden, used)) {
            add_reserved(b, u, v, e, 3);
            for (auto m : unrank_edge(e, params))
                insert_sorted(b.a_vertices, m);
        }
    }

    // E_4: the same for the first r vertices of U_{1..r-1}(x), by Gamma_2 degree
    ColorSet every;
    for (Color c = 1; c <= profile.k(); ++c)
        every.set(c);
    b.w_list = u_sets(x, every, profile).common;
    Graph gamma2 = b.gamma;
    std::stable_sort(b.w_list.begin(), b.w_list.end(),
        [&](Vertex a, Vertex c) { return gamma2.degree(a) < gamma2.degree(c); });
    for (auto v : b.w_list)
        b.gamma2_degrees.push_back(gamma2.degree(v));
    b.w_processed = std::min<std::size_t>(r, b.w_list.size());
    if (b.w_list.size() < r)
        b.notes.push_back("U_{1..r-1}(x) has " + to_string(b.w_list.size()) + " < r vertices; processed all of them");
    for (std::size_t i = 0; i < b.w_processed; ++i) {
        auto wv = b.w_list[i];
        unsigned d = b.gamma2_degrees[i];
        unsigned t = d > wide ? 0 : wide + 1 - d;
        b.t_prime.push_back(t);
        auto forbidden = set_union(base_forbidden, b.gamma.neighbours(wv));
        for (auto & [e, v] : contact_step("step w_" + to_string(i + 1), target_edges, wv, t, forbidden, used)) {
            add_reserved(b, wv, v, e, 4);
            for (auto m : unrank_edge(e, params))
                insert_sorted(b.b_vertices, m);
        }
    }

    // E_5
    auto away = set_union(set_union(b.y_set, ubar_target), set_union(b.a_vertices, b.b_vertices));
    for (Vertex v = 0; v < n; ++v)
        if (v != x && ! set_contains(away, v) && ! b.gamma.adjacent(x, v)) {
            b.gamma.add_edge(x, v);
            b.edge_class.emplace(norm(x, v), 5);
        }
    return b;
}

auto check_reservations(const GammaBundle & bundle, const Coloring & coloring) -> string
{
    std::set<EdgeIndex> seen;
    for (auto & [edge, e] : bundle.reserved) {
        if (! bundle.gamma.adjacent(edge.first, edge.second))
            return "reservation for a missing edge " + to_string(edge.first) + "-" + to_string(edge.second);
        if (! seen.insert(e).second)
            return "hyperedge " + to_string(e) + " reserved twice";
        if (coloring.color_of(e) != bundle.target)
            return "hyperedge " + to_string(e) + " has the wrong color";
        auto m = unrank_edge(e, coloring.params());
        if (! std::binary_search(m.begin(), m.end(), edge.first) || ! std::binary_search(m.begin(), m.end(), edge.second))
            return "hyperedge " + to_string(e) + " misses an end of " + to_string(edge.first) + "-" + to_string(edge.second);
    }
    return "";
}

auto to_string(ConstructStage s) -> string
{
    switch (s) {
        case ConstructStage::witness: return "witness";
        case ConstructStage::build: return "build";
        case ConstructStage::hamiltonicity: return "hamiltonicity";
        case ConstructStage::extension: return "extension";
        case ConstructStage::done: return "done";
    }
    return "unknown";
}

auto constructive_find(const Coloring & coloring, const ConstructOptions & options) -> ConstructResult
{
    ConstructResult result;
    const auto & params = coloring.params();
    const unsigned n = params.n(), r = params.r();
    if (params.k() != r - 1) {
        result.diagnostic = "the constructive route needs k = r - 1 colors";
        return result;
    }

    const uint64_t d_bound = options.d_bound.value_or(default_d_bound(r));
    ColorProfile profile(coloring, options.good_threshold);
    result.witness = witness_search(profile, WitnessOptions{d_bound, options.max_avoid_subsets});
    if (! result.witness) {
        result.diagnostic = "no witness found";
        return result;
    }
    const auto & w = *result.witness;

    result.stage = ConstructStage::build;
    try {
        result.bundle = (w.f == r - 2) ? build_gamma_case1(w, profile) : build_gamma_case2(w, profile);
    }
    catch (const ConstructionError & e) {
        result.diagnostic = e.what();
        return result;
    }
    catch (const std::invalid_argument & e) {
        result.diagnostic = e.what();
        return result;
    }
    const auto & bundle = *result.bundle;

    result.stage = ConstructStage::hamiltonicity;
    if (n < 3) {
        result.diagnostic = "fewer than 3 vertices";
        return result;
    }
    result.chvatal = chvatal_check(bundle.gamma);
    auto ham = find_hamiltonian_cycle(bundle.gamma, HamiltonOptions{options.hamilton_budget, true});
    result.work += ham.nodes;
    if (! ham.cycle) {
        result.diagnostic = "auxiliary graph: " + to_string(ham.status);
        return result;
    }

    result.stage = ConstructStage::extension;
    auto order = ham.cycle->order;
    if (bundle.case_tag == 2) {
        // the cycle ends at x
        auto at = std::find(order.begin(), order.end(), bundle.x) - order.begin();
        std::rotate(order.begin(), order.begin() + (at + 1) % n, order.end());
    }

    auto table = build_candidates(order, bundle.target, coloring);
    std::map<std::size_t, EdgeIndex> reserved;
    for (std::size_t i = 0; i < n; ++i)
        if (auto it = bundle.reserved.find(norm(order[i], order[(i + 1) % n])); it != bundle.reserved.end())
            reserved.emplace(i, it->second);

    optional<GreedyFailure> failure;
    auto cycle = extend_greedy_ordered(table, reserved, failure);
    result.greedy_succeeded = cycle.has_value();
    if (failure)
        result.greedy_failed_at = failure->position;
    if (! cycle) {
        auto outcome = extend_core(order, bundle.target, coloring);
        result.work += outcome.augmentations;
        cycle = std::move(outcome.cycle);
    }
    if (! cycle) {
        result.diagnostic = "no system of distinct target-color edges along the auxiliary cycle";
        return result;
    }

    auto verdict = verify_berge_cycle(*cycle, coloring);
    if (! verdict.valid()) {
        result.diagnostic = "extension produced an invalid cycle: " + verdict.message;
        return result;
    }

    result.stage = ConstructStage::done;
    result.color = bundle.target;
    result.cycle = std::move(cycle);
    return result;
}

auto constructive_find(const Coloring & coloring, uint64_t d_bound) -> ConstructResult
{
    ConstructOptions options;
    options.d_bound = d_bound;
    return constructive_find(coloring, options);
}

auto to_json(const Witness & w) -> nlohmann::json
{
    return {{"x", w.x}, {"f", w.f}, {"y", w.y}, {"color_perm", w.color_perm}, {"ubar_sizes", w.ubar_sizes}};
}

auto to_json(const GammaBundle & b) -> nlohmann::json
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto & [u, v] : b.gamma.edges()) {
        nlohmann::json e = {{"u", u}, {"v", v}};
        if (auto c = b.edge_class.find({u, v}); c != b.edge_class.end())
            e["class"] = c->second;
        if (auto h = b.reserved.find({u, v}); h != b.reserved.end())
            e["hyperedge"] = h->second;
        edges.push_back(e);
    }
    nlohmann::json y_minus = nlohmann::json::object(), parts = nlohmann::json::object();
    for (auto & [i, s] : b.y_minus)
        y_minus[to_string(i)] = s;
    for (auto & [i, s] : b.parts)
        parts[to_string(i)] = s;

    return {{"case", b.case_tag}, {"target", b.target}, {"x", b.x}, {"n", b.gamma.size()},
        {"edges", edges}, {"Y", b.y_set}, {"Y_i", y_minus}, {"ubar_list", b.ubar_list},
        {"U", b.u_set}, {"A_parts", parts}, {"A", b.a_vertices}, {"B", b.b_vertices},
        {"t", b.t}, {"t_prime", b.t_prime}, {"gamma1_degrees", b.gamma1_degrees},
        {"w_list", b.w_list}, {"gamma2_degrees", b.gamma2_degrees}, {"w_processed", b.w_processed},
        {"notes", b.notes}};
}

}
