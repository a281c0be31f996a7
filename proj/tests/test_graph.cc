#include "oracles.hh"

#include <berge/graph.hh>

#include <doctest.h>

using namespace berge;

TEST_CASE("graph construction and queries")
{
    Graph g(70);
    CHECK(g.add_edge(0, 69));
    CHECK_FALSE(g.add_edge(69, 0));
    CHECK(g.adjacent(69, 0));
    CHECK(g.degree(0) == 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.neighbours(69) == VertexSet{0});
    CHECK(g.remove_edge(0, 69));
    CHECK_FALSE(g.remove_edge(0, 69));
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(3, 70), std::invalid_argument);
}

TEST_CASE("named graphs")
{
    auto k5 = Graph::complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.degree_sequence() == std::vector<unsigned>(5, 4));

    auto c6 = Graph::cycle(6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.adjacent(5, 0));

    auto p = Graph::petersen();
    CHECK(p.size() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.degree_sequence() == std::vector<unsigned>(10, 3));
    // girth 5: no triangles and no 4-cycles
    for (Vertex a = 0; a < 10; ++a)
        for (Vertex b = a + 1; b < 10; ++b) {
            unsigned common = 0;
            for (Vertex c = 0; c < 10; ++c)
                if (p.adjacent(a, c) && p.adjacent(b, c))
                    ++common;
            CHECK(common == (p.adjacent(a, b) ? 0u : 1u));
        }
}

TEST_CASE("edge list round trip")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto g = oracle::random_graph(12, 0.4, rng);
        auto edges = g.edges();
        CHECK(std::is_sorted(edges.begin(), edges.end()));
        CHECK(Graph::from_edges(12, edges) == g);
    }
}

TEST_CASE("connectivity and articulation points against vertex deletion")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        unsigned n = 2 + rng() % 9;
        auto g = oracle::random_graph(n, 0.35, rng);

        // reachability from 0 by repeated relaxation
        auto reach = [](const Graph & h, Vertex skip) {
            std::vector<bool> seen(h.size(), false);
            Vertex start = skip == 0 ? 1 : 0;
            if (start >= h.size())
                return true;
            seen[start] = true;
            for (bool grew = true; grew;) {
                grew = false;
                for (Vertex u = 0; u < h.size(); ++u)
                    for (Vertex v = 0; v < h.size(); ++v)
                        if (seen[u] && ! seen[v] && v != skip && u != skip && h.adjacent(u, v))
                            seen[v] = grew = true;
            }
            for (Vertex v = 0; v < h.size(); ++v)
                if (v != skip && ! seen[v])
                    return false;
            return true;
        };

        bool connected = reach(g, static_cast<Vertex>(n));
        CHECK(is_connected(g) == connected);
        if (! connected)
            continue;
        VertexSet expected;
        for (Vertex v = 0; v < n; ++v)
            if (n > 2 && ! reach(g, v))
                expected.push_back(v);
        CHECK(articulation_points(g) == expected);
    }
}

TEST_CASE("vertex set helpers")
{
    CHECK(set_union({1, 3, 5}, {2, 3, 6}) == VertexSet{1, 2, 3, 5, 6});
    CHECK(set_contains({1, 3, 5}, 3));
    CHECK_FALSE(set_contains({1, 3, 5}, 4));
}
