#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "geodex/bigcount.hpp"
#include "geodex/graph.hpp"

namespace geodex {

// Distance from the BFS source; std::nullopt marks an unreachable vertex.
using Distance = std::optional<std::size_t>;

// Single-source shortest-path counts.
//  - dist[source] == 0 and sigma[source] == 1
//  - reachable v != source: sigma[v] is the sum of sigma[u] over neighbors u
//    one level closer to the source
//  - unreachable v: dist[v] is empty and sigma[v] == 0
struct GeodesicTable {
    Vertex source = 0;
    std::vector<Distance> dist;
    std::vector<BigCount> sigma;
};

GeodesicTable bfs_count(const Graph& g, Vertex source);

// Plain BFS distances without path counting.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

// Number of (u,v)-geodesics. Throws DisconnectedError if v is unreachable.
BigCount gpn_pair(const Graph& g, Vertex u, Vertex v);

// Sum of gpn_pair(g, u, y) over y in targets.
BigCount gpn_to_set(const Graph& g, Vertex u, std::span<const Vertex> targets);

// Total number of geodesics including the n trivial ones. Requires a
// connected graph with at least one vertex; sources are split across
// `workers` threads (0 = worker_count()).
BigCount gpn(const Graph& g, unsigned workers = 0);

inline constexpr std::size_t kBruteForceMaxOrder = 10;

// Independent oracle for gpn: enumerates simple paths by DFS and keeps the
// shortest ones. Distances come from Floyd-Warshall, not from bfs_count.
BigCount gpn_brute(const Graph& g);

bool is_geodetic(const Graph& g);

// Level sets A_0..A_t of the (u,v)-geodesic interval, t = dist(u,v):
// w is in A_i iff dist(u,w) = i and dist(w,v) = t - i. Each level is sorted.
std::vector<std::vector<Vertex>> geodesic_interval(const Graph& g, Vertex u, Vertex v);

}  // namespace geodex
