#pragma once

#include <vector>

#include "gss/codec.hpp"
#include "gss/random.hpp"

namespace gss::testing {

// Worked 4-vertex example used throughout: edges 1-3, 1-4, 2-3, 3-4 and
// colors (0, 0, 2, 1) from a 3-color palette. Its digit string is
// 0,1,1,1,0,1,0,0,2,1 and its mixed-radix value is 2356.
inline ColoredGraph example1() {
    Graph g(4, {0, 1, 1, 1, 0, 1});
    Coloring c(3, {0, 0, 2, 1});
    return ColoredGraph(std::move(g), std::move(c));
}

inline Graph path3() {
    // edges 1-2 and 2-3
    return Graph(3, {1, 0, 1});
}

inline Graph triangle() {
    return Graph(3, {1, 1, 1});
}

inline Graph complete(std::uint32_t n) {
    return Graph(n, std::vector<std::uint8_t>(Graph::triangle_size(n), 1));
}

inline Graph edgeless(std::uint32_t n) {
    return Graph(n, std::vector<std::uint8_t>(Graph::triangle_size(n), 0));
}

inline Graph cycle(std::uint32_t n) {
    std::vector<std::uint8_t> bits(Graph::triangle_size(n), 0);
    for (std::uint32_t v = 0; v + 1 < n; ++v) {
        bits[Graph::pair_index(v + 1, v)] = 1;
    }
    bits[Graph::pair_index(n - 1, 0)] = 1;
    return Graph(n, std::move(bits));
}

inline Graph random_graph(std::uint32_t n, RandomSource& rng) {
    std::vector<std::uint8_t> bits(Graph::triangle_size(n));
    for (auto& b : bits) {
        b = static_cast<std::uint8_t>(rng.uniform_below(2));
    }
    return Graph(n, std::move(bits));
}

inline ColoredGraph random_colored_graph(std::uint32_t n, std::uint32_t k,
                                         RandomSource& rng) {
    Graph g = random_graph(n, rng);
    std::vector<std::uint32_t> colors(n);
    for (auto& c : colors) {
        c = rng.uniform_digit(k);
    }
    return ColoredGraph(std::move(g), Coloring(k, std::move(colors)));
}

// A graph with a greedy proper coloring over a palette of size >= 2.
inline ColoredGraph random_properly_colored_graph(std::uint32_t n,
                                                  RandomSource& rng) {
    Graph g = random_graph(n, rng);
    std::vector<std::uint32_t> colors(n, 0);
    std::uint32_t k = 2;
    for (std::uint32_t v = 0; v < n; ++v) {
        std::vector<bool> used(n + 1, false);
        for (std::uint32_t u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) {
                used[colors[u]] = true;
            }
        }
        std::uint32_t c = 0;
        while (used[c]) {
            ++c;
        }
        colors[v] = c;
        k = std::max(k, c + 1);
    }
    return ColoredGraph(std::move(g), Coloring(k, std::move(colors)));
}

} // namespace gss::testing
