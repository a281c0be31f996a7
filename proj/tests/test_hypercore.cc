#include "oracles.hh"

#include <berge/hypercore.hh>

#include <doctest.h>

#include <random>

using namespace berge;

TEST_CASE("binomials")
{
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(20, 4) == 4845);
    CHECK(binomial(3, 5) == 0);
    CHECK(checked_binomial(62, 31).has_value());
    CHECK_FALSE(checked_binomial(70, 35).has_value());
    CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
    for (unsigned n = 0; n <= 30; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == oracle::binomial(n, k));
}

TEST_CASE("parameter validation")
{
    CHECK_NOTHROW(HyperParams(2, 2, 1));
    CHECK_THROWS_AS(HyperParams(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(HyperParams(4, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(HyperParams(5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(HyperParams(5, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(HyperParams(5, 3, 256), std::invalid_argument);
    CHECK_THROWS_AS(HyperParams(200, 100, 2), std::invalid_argument);
    CHECK(HyperParams(6, 3, 2).edge_count() == 20);
}

TEST_CASE("rank and unrank examples")
{
    HyperParams p53(5, 3, 1);
    std::vector<Vertex> a{0, 1, 2}, b{2, 3, 4};
    CHECK(rank_edge(a, p53) == 0);
    CHECK(rank_edge(b, p53) == 9);
    std::vector<Vertex> pair{0, 1};
    CHECK(rank_edge(pair, HyperParams(4, 2, 1)) == 0);

    CHECK(unrank_edge(0, p53) == std::vector<Vertex>{0, 1, 2});
    CHECK(unrank_edge(9, p53) == std::vector<Vertex>{2, 3, 4});
    CHECK(unrank_edge(19, HyperParams(6, 3, 1)) == std::vector<Vertex>{3, 4, 5});
}

TEST_CASE("rank rejects malformed subsets")
{
    HyperParams p(5, 3, 1);
    std::vector<Vertex> unsorted{1, 0, 2}, repeated{0, 0, 2}, short_one{0, 1}, too_big{0, 1, 5};
    CHECK_THROWS_AS(rank_edge(unsorted, p), std::invalid_argument);
    CHECK_THROWS_AS(rank_edge(repeated, p), std::invalid_argument);
    CHECK_THROWS_AS(rank_edge(short_one, p), std::invalid_argument);
    CHECK_THROWS_AS(rank_edge(too_big, p), std::invalid_argument);
    CHECK_THROWS_AS(unrank_edge(10, p), std::out_of_range);
}

TEST_CASE("colex order matches an independent enumeration")
{
    for (unsigned n = 2; n <= 10; ++n)
        for (unsigned r = 2; r <= n; ++r) {
            HyperParams p(n, r, 1);
            auto all = oracle::colex_subsets(n, r);
            REQUIRE(all.size() == p.edge_count());
            std::vector<Vertex> walk(r);
            std::iota(walk.begin(), walk.end(), Vertex{0});
            for (EdgeIndex t = 0; t < all.size(); ++t) {
                CHECK(rank_edge(all[t], p) == t);
                CHECK(unrank_edge(t, p) == all[t]);
                CHECK(walk == all[t]);
                bool more = next_colex(walk, n);
                CHECK(more == (t + 1 < all.size()));
            }
        }
}

TEST_CASE("rank and unrank are inverse on large sampled ranges")
{
    std::mt19937_64 rng(11);
    for (auto [n, r] : {std::pair{40u, 6u}, {60u, 10u}, {30u, 15u}, {100u, 4u}}) {
        HyperParams p(n, r, 1);
        std::uniform_int_distribution<EdgeIndex> pick(0, p.edge_count() - 1);
        for (int i = 0; i < 2000; ++i) {
            auto t = pick(rng);
            auto s = unrank_edge(t, p);
            REQUIRE(s.size() == r);
            CHECK(std::is_sorted(s.begin(), s.end()));
            CHECK(s.back() < n);
            CHECK(rank_edge(s, p) == t);
        }
        auto last = unrank_edge(p.edge_count() - 1, p);
        CHECK(last.front() == n - r);
    }
}

TEST_CASE("pair supersets")
{
    CHECK(pair_supersets(0, 1, HyperParams(6, 3, 1)).size() == 4);
    CHECK(pair_supersets(0, 1, HyperParams(5, 4, 1)).size() == 3);
    CHECK(pair_supersets(0, 1, HyperParams(4, 4, 1)) == std::vector<EdgeIndex>{0});
    CHECK_THROWS_AS(pair_supersets(2, 2, HyperParams(5, 3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(pair_supersets(0, 5, HyperParams(5, 3, 1)), std::invalid_argument);

    for (unsigned n = 3; n <= 8; ++n)
        for (unsigned r = 2; r <= n; ++r) {
            HyperParams p(n, r, 1);
            auto all = oracle::colex_subsets(n, r);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    if (u == v)
                        continue;
                    std::vector<EdgeIndex> expected;
                    for (EdgeIndex t = 0; t < all.size(); ++t)
                        if (oracle::contains(all[t], u) && oracle::contains(all[t], v))
                            expected.push_back(t);
                    auto got = pair_supersets(u, v, p);
                    CHECK(got == expected);
                    CHECK(got.size() == oracle::binomial(n - 2, r - 2));
                }
        }
}

TEST_CASE("edge containment")
{
    HyperParams p(7, 3, 1);
    auto all = oracle::colex_subsets(7, 3);
    for (EdgeIndex t = 0; t < all.size(); ++t)
        for (Vertex v = 0; v < 7; ++v)
            CHECK(edge_contains(t, v, p) == oracle::contains(all[t], v));
}

TEST_CASE("coloring access")
{
    HyperParams p(5, 3, 2);
    Coloring uniform(p, 1);
    for (EdgeIndex t = 0; t < p.edge_count(); ++t)
        CHECK(uniform.color_of(t) == 1);

    std::vector<Color> digits;
    for (EdgeIndex t = 0; t < p.edge_count(); ++t)
        digits.push_back(1 + t % 2);
    Coloring alternating(p, digits);
    CHECK(alternating.color_of(1) == 2);
    CHECK(alternating.class_sizes() == std::vector<std::uint64_t>{0, 5, 5});
    CHECK(alternating.edges_of_color(2) == std::vector<EdgeIndex>{1, 3, 5, 7, 9});

    alternating.set_color(4, 2);
    CHECK(alternating.color_of(4) == 2);
    CHECK_THROWS_AS(alternating.set_color(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(alternating.color_of(10), std::out_of_range);

    std::vector<Color> bad(p.edge_count(), 3), short_list(3, 1);
    CHECK_THROWS_AS(Coloring(p, bad), std::invalid_argument);
    CHECK_THROWS_AS(Coloring(p, short_list), std::invalid_argument);
    CHECK_THROWS_AS(Coloring(p, 0), std::invalid_argument);

    auto wider = alternating.with_palette(3);
    CHECK(wider.params().k() == 3);
    CHECK(wider.color_of(1) == 2);
}

namespace {
    auto uniform43() -> Coloring { return Coloring(HyperParams(4, 3, 1), 1); }

    auto square_cycle() -> BergeCycle
    {
        HyperParams p(4, 3, 1);
        auto rank = [&](std::vector<Vertex> s) { return rank_edge(s, p); };
        return BergeCycle{{0, 1, 2, 3}, {rank({0, 1, 2}), rank({1, 2, 3}), rank({0, 2, 3}), rank({0, 1, 3})}, 1};
    }
}

TEST_CASE("verifier examples")
{
    auto c = uniform43();
    auto cycle = square_cycle();
    CHECK(verify_berge_cycle(cycle, c).valid());

    auto dup = cycle;
    dup.edges[2] = dup.edges[0];
    auto v = verify_berge_cycle(dup, c);
    CHECK(v.violation == Violation::duplicate_edge);
    CHECK(v.position == 3);

    auto missing = cycle;
    std::vector<Vertex> e013{0, 1, 3};
    missing.edges[1] = rank_edge(e013, c.params());
    missing.edges[3] = rank_edge(std::vector<Vertex>{1, 2, 3}, c.params());
    v = verify_berge_cycle(missing, c);
    CHECK(v.violation == Violation::containment);
    CHECK(v.position == 2);
    CHECK(v.message.rfind("containment at position 2", 0) == 0);
}

TEST_CASE("verifier catches every kind of defect")
{
    auto c = uniform43();
    auto base = square_cycle();

    auto repeated = base;
    repeated.core[2] = 0;
    CHECK(verify_berge_cycle(repeated, c).violation == Violation::core_repeated_vertex);
    auto outside = base;
    outside.core[1] = 7;
    CHECK(verify_berge_cycle(outside, c).violation == Violation::core_out_of_range);
    auto range = base;
    range.edges[0] = 4;
    CHECK(verify_berge_cycle(range, c).violation == Violation::edge_out_of_range);

    auto colored = Coloring(HyperParams(4, 3, 2), 1);
    colored.set_color(base.edges[3], 2);
    auto v = verify_berge_cycle(base, colored);
    CHECK(v.violation == Violation::wrong_color);
    CHECK(v.position == 4);
    auto colorless = base;
    colorless.color.reset();
    CHECK(verify_berge_cycle(colorless, colored).valid());

    auto longer = base;
    longer.core.push_back(0);
    CHECK_THROWS_AS(verify_berge_cycle(longer, c), std::invalid_argument);
}

TEST_CASE("rotation and reflection keep a cycle valid")
{
    auto c = uniform43();
    auto base = square_cycle();
    for (std::size_t s = 0; s < 4; ++s) {
        CHECK(verify_berge_cycle(rotate_cycle(base, s), c).valid());
        CHECK(verify_berge_cycle(reflect_cycle(rotate_cycle(base, s)), c).valid());
    }
    CHECK(reflect_cycle(reflect_cycle(base)) == base);
    CHECK(rotate_cycle(base, 4) == base);
}

TEST_CASE("a color class smaller than n cannot carry a certificate")
{
    HyperParams p(4, 3, 2);
    std::vector<Color> colors{1, 1, 1, 2};
    Coloring c(p, colors);
    auto cycle = square_cycle();
    cycle.color = 1;
    CHECK_FALSE(verify_berge_cycle(cycle, c).valid());
}
