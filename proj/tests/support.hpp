#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "geodex/graph.hpp"

namespace geodex::testing {

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(rng() % v, v);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
        }
    }
    auto perm = random_permutation(n, rng);
    return relabel(g, perm);
}

// Connected cactus on n vertices with exactly `lengths.size()` cycles of the
// given lengths; the rest of the vertex budget becomes bridges. Blocks are
// hung at uniformly random vertices, then the labels are shuffled.
inline Graph random_cactus_with(std::size_t n, std::vector<std::size_t> lengths, std::mt19937_64& rng) {
    std::size_t used = 1;
    for (auto len : lengths) used += len - 1;
    std::vector<std::size_t> blocks = lengths;
    for (std::size_t i = used; i < n; ++i) blocks.push_back(2);
    std::shuffle(blocks.begin(), blocks.end(), rng);
    Graph g(1);
    for (auto len : blocks) {
        Vertex anchor = rng() % g.order();
        Vertex prev = anchor;
        for (std::size_t i = 1; i < len; ++i) {
            Vertex x = g.add_vertex();
            g.add_edge(prev, x);
            prev = x;
        }
        if (len > 2) g.add_edge(prev, anchor);
    }
    auto perm = random_permutation(g.order(), rng);
    return relabel(g, perm);
}

// k cycles with lengths drawn from [3, max_len], total order n; needs n >= 2k+1.
inline Graph random_cactus(std::size_t n, std::size_t k, std::mt19937_64& rng, std::size_t max_len = 6) {
    std::vector<std::size_t> lengths(k, 3);
    std::size_t spare = n - 1 - 2 * k;
    for (auto& len : lengths) {
        while (spare > 0 && len < max_len && rng() % 2 == 0) {
            ++len;
            --spare;
        }
    }
    return random_cactus_with(n, lengths, rng);
}

}  // namespace geodex::testing
