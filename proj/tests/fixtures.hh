#pragma once

// Hand-built colorings that drive the constructive route into each case.

#include <berge/hypercore.hh>

#include <algorithm>
#include <numeric>
#include <vector>

namespace fixtures {

using namespace berge;

// n = 12, r = 5, k = 4. Every edge containing {0, 1, 2} has color 4; the rest
// cycle through colors 1..3 by colex rank.
inline auto case1_coloring() -> Coloring
{
    HyperParams params(12, 5, 4);
    std::vector<Color> colors(params.edge_count());
    std::vector<Vertex> edge(5);
    std::iota(edge.begin(), edge.end(), Vertex{0});
    EdgeIndex t = 0;
    do {
        bool core = edge[0] == 0 && edge[1] == 1 && edge[2] == 2;
        colors[t] = core ? 4 : 1 + static_cast<Color>(t % 3);
        ++t;
    } while (next_colex(edge, 12));
    return Coloring(params, colors);
}

inline constexpr std::uint64_t case2_d_bound = 0;

// n = 24, r = 5, k = 4, centre x = 0. Vertices 1, 2, 3 form classes 1, 2, 3
// and 4..23 form class 4. An edge through 0 gets the smallest color whose
// class it misses (color 1 when it misses class 1, color 4 when it meets
// every class). Edges avoiding 0 cycle through 1..4 by colex rank.
inline auto case2_class(Vertex v) -> Color
{
    return v <= 3 ? v : 4;
}

inline auto case2_coloring() -> Coloring
{
    HyperParams params(24, 5, 4);
    std::vector<Color> colors(params.edge_count());
    std::vector<Vertex> edge(5);
    std::iota(edge.begin(), edge.end(), Vertex{0});
    EdgeIndex t = 0;
    do {
        if (edge[0] == 0) {
            bool met[5] = {};
            for (std::size_t i = 1; i < edge.size(); ++i)
                met[case2_class(edge[i])] = true;
            Color c = 4;
            for (Color j = 1; j <= 4; ++j)
                if (! met[j]) {
                    c = j;
                    break;
                }
            colors[t] = c;
        }
        else
            colors[t] = 1 + static_cast<Color>(t % 4);
        ++t;
    } while (next_colex(edge, 24));
    return Coloring(params, colors);
}

// n = 8, r = 3, k = 2 with the color fixed by the parity of the vertex sum.
// With good threshold 1 every pair has both colors good, so no witness exists.
inline auto parity_coloring() -> Coloring
{
    HyperParams params(8, 3, 2);
    std::vector<Color> colors(params.edge_count());
    std::vector<Vertex> edge(3);
    std::iota(edge.begin(), edge.end(), Vertex{0});
    EdgeIndex t = 0;
    do {
        colors[t++] = 1 + (edge[0] + edge[1] + edge[2]) % 2;
    } while (next_colex(edge, 8));
    return Coloring(params, colors);
}

}
