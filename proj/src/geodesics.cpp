#include "geodex/geodesics.hpp"

#include <string>

#include "geodex/errors.hpp"
#include "geodex/parallel.hpp"

namespace geodex {

namespace {

// BFS over g from source; visits vertices in level order. Returns the
// visiting order; dist is filled for reachable vertices.
std::vector<Vertex> bfs_order(const Graph& g, Vertex source, std::vector<Distance>& dist) {
    dist.assign(g.order(), std::nullopt);
    std::vector<Vertex> order;
    order.reserve(g.order());
    dist[source] = 0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex x = order[head];
        for (Vertex y : g.neighbors(x)) {
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                order.push_back(y);
            }
        }
    }
    return order;
}

// Fast path for gpn: sum of sigma over all vertices reachable from source,
// in 64-bit arithmetic. Returns false on overflow so the caller can redo the
// source with BigCount.
bool source_total_u64(const Graph& g, Vertex source, std::vector<Distance>& dist,
                      std::vector<std::uint64_t>& sigma, unsigned __int128& total) {
    auto order = bfs_order(g, source, dist);
    sigma.assign(g.order(), 0);
    sigma[source] = 1;
    total = 0;
    for (Vertex x : order) {
        if (x != source) {
            std::uint64_t s = 0;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] && *dist[y] + 1 == *dist[x]) {
                    if (__builtin_add_overflow(s, sigma[y], &s)) return false;
                }
            }
            sigma[x] = s;
            total += s;
        }
    }
    if (order.size() != g.order()) throw DisconnectedError("graph not connected");
    return true;
}

BigCount from_u128(unsigned __int128 value) {
    BigCount hi = static_cast<std::uint64_t>(value >> 64);
    return (hi << 64) + static_cast<std::uint64_t>(value);
}

BigCount source_total_big(const Graph& g, Vertex source) {
    auto table = bfs_count(g, source);
    BigCount total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!table.dist[v]) throw DisconnectedError("graph not connected");
        if (v != source) total += table.sigma[v];
    }
    return total;
}

}  // namespace

GeodesicTable bfs_count(const Graph& g, Vertex source) {
    g.check_vertex(source);
    GeodesicTable table;
    table.source = source;
    auto order = bfs_order(g, source, table.dist);
    table.sigma.assign(g.order(), 0);
    table.sigma[source] = 1;
    for (Vertex x : order) {
        if (x == source) continue;
        BigCount s = 0;
        for (Vertex y : g.neighbors(x)) {
            if (table.dist[y] && *table.dist[y] + 1 == *table.dist[x]) s += table.sigma[y];
        }
        table.sigma[x] = std::move(s);
    }
    return table;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    g.check_vertex(source);
    std::vector<Distance> dist;
    bfs_order(g, source, dist);
    return dist;
}

BigCount gpn_pair(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(v);
    auto table = bfs_count(g, u);
    if (!table.dist[v]) {
        throw DisconnectedError("disconnected pair " + std::to_string(u) + ", " + std::to_string(v));
    }
    return table.sigma[v];
}

BigCount gpn_to_set(const Graph& g, Vertex u, std::span<const Vertex> targets) {
    auto table = bfs_count(g, u);
    BigCount total = 0;
    for (Vertex y : targets) {
        g.check_vertex(y);
        if (!table.dist[y]) {
            throw DisconnectedError("disconnected pair " + std::to_string(u) + ", " + std::to_string(y));
        }
        total += table.sigma[y];
    }
    return total;
}

BigCount gpn(const Graph& g, unsigned workers) {
    const std::size_t n = g.order();
    if (n == 0) throw InputError("gpn of the empty graph is undefined");
    if (!is_connected(g)) throw DisconnectedError("graph not connected");

    // Each source sums into its own slot; the final reduction runs in source
    // order so the result does not depend on scheduling.
    std::vector<BigCount> per_source(n);
    parallel_for(n, workers, [&](std::size_t s) {
        thread_local std::vector<Distance> dist;
        thread_local std::vector<std::uint64_t> sigma;
        unsigned __int128 total = 0;
        if (source_total_u64(g, s, dist, sigma, total)) {
            per_source[s] = from_u128(total);
        } else {
            per_source[s] = source_total_big(g, s);
        }
    });

    BigCount ordered = 0;
    for (const auto& t : per_source) ordered += t;
    if ((ordered & 1) != 0) throw ConsistencyError("ordered geodesic sum is odd; symmetry violated");
    return ordered / 2 + n;
}

BigCount gpn_brute(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kBruteForceMaxOrder) {
        throw SizeGuardError("gpn_brute refuses graphs with more than " + std::to_string(kBruteForceMaxOrder) +
                             " vertices");
    }
    if (n == 0) throw InputError("gpn of the empty graph is undefined");

    std::vector<std::vector<Distance>> dist(n, std::vector<Distance>(n));
    for (Vertex u = 0; u < n; ++u) {
        dist[u][u] = 0;
        for (Vertex v : g.neighbors(u)) dist[u][v] = 1;
    }
    for (Vertex m = 0; m < n; ++m) {
        for (Vertex a = 0; a < n; ++a) {
            if (!dist[a][m]) continue;
            for (Vertex b = 0; b < n; ++b) {
                if (!dist[m][b]) continue;
                std::size_t via = *dist[a][m] + *dist[m][b];
                if (!dist[a][b] || via < *dist[a][b]) dist[a][b] = via;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!dist[0][v]) throw DisconnectedError("graph not connected");
    }

    std::uint64_t pairs_total = 0;
    std::vector<bool> on_path(n, false);
    for (Vertex u = 0; u < n; ++u) {
        std::vector<std::uint64_t> hits(n, 0);
        // Explicit DFS stack of (vertex, next neighbor index).
        std::vector<std::pair<Vertex, std::size_t>> stack{{u, 0}};
        on_path[u] = true;
        while (!stack.empty()) {
            auto& [x, idx] = stack.back();
            auto nbrs = g.neighbors(x);
            if (idx == nbrs.size()) {
                on_path[x] = false;
                stack.pop_back();
                continue;
            }
            Vertex y = nbrs[idx++];
            if (on_path[y]) continue;
            std::size_t length = stack.size();  // edges on the path ending at y
            if (length > *dist[u][y]) continue;
            ++hits[y];
            on_path[y] = true;
            stack.emplace_back(y, 0);
        }
        for (Vertex v = u + 1; v < n; ++v) pairs_total += hits[v];
    }
    return BigCount(pairs_total) + n;
}

bool is_geodetic(const Graph& g) {
    if (g.order() == 0) return true;
    if (!is_connected(g)) throw DisconnectedError("graph not connected");
    for (Vertex s = 0; s < g.order(); ++s) {
        auto table = bfs_count(g, s);
        for (const auto& count : table.sigma) {
            if (count != 1) return false;
        }
    }
    return true;
}

std::vector<std::vector<Vertex>> geodesic_interval(const Graph& g, Vertex u, Vertex v) {
    auto from_u = bfs_distances(g, u);
    auto from_v = bfs_distances(g, v);
    if (!from_u[v]) {
        throw DisconnectedError("disconnected pair " + std::to_string(u) + ", " + std::to_string(v));
    }
    const std::size_t t = *from_u[v];
    std::vector<std::vector<Vertex>> levels(t + 1);
    for (Vertex w = 0; w < g.order(); ++w) {
        if (from_u[w] && from_v[w] && *from_u[w] + *from_v[w] == t) levels[*from_u[w]].push_back(w);
    }
    return levels;
}

}  // namespace geodex
