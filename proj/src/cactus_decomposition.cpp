#include <algorithm>
#include <set>

#include "geodex/cactus.hpp"

namespace geodex::cactus {

namespace {

std::string cycle_text(const Cycle& c) {
    std::string out;
    for (Vertex v : c) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

NotCactusError::NotCactusError(Cycle first, Cycle second)
    : InputError("not a cactus: cycles [" + cycle_text(first) + "] and [" + cycle_text(second) + "] share an edge"),
      witness_(std::move(first), std::move(second)) {}

std::size_t CactusDecomposition::square_count() const {
    return static_cast<std::size_t>(
        std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.size() == 4; }));
}

bool CactusDecomposition::is_active(Vertex v) const {
    return std::binary_search(active_vertices.begin(), active_vertices.end(), v);
}

Cycle normalize_cycle(std::span<const Vertex> cycle) {
    const std::size_t len = cycle.size();
    if (len < 3) throw InputError("a cycle needs at least three vertices");
    auto start = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    Vertex next = cycle[(start + 1) % len];
    Vertex prev = cycle[(start + len - 1) % len];
    Cycle out(len);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = next < prev ? cycle[(start + i) % len] : cycle[(start + len - i) % len];
    }
    return out;
}

namespace {

struct DfsForest {
    std::vector<std::optional<Vertex>> parent;
    std::vector<std::size_t> depth;
    std::vector<std::pair<Vertex, Vertex>> back_pairs;
};

DfsForest dfs(const Graph& g) {
    const std::size_t n = g.order();
    DfsForest f;
    f.parent.assign(n, std::nullopt);
    f.depth.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto [x, idx] = stack.back();
            auto nbrs = g.neighbors(x);
            if (idx == nbrs.size()) {
                stack.pop_back();
                continue;
            }
            ++stack.back().second;
            Vertex y = nbrs[idx];
            if (!seen[y]) {
                seen[y] = true;
                f.parent[y] = x;
                f.depth[y] = f.depth[x] + 1;
                stack.emplace_back(y, 0);
            } else if (f.parent[x] != y && f.depth[y] < f.depth[x]) {
                f.back_pairs.emplace_back(x, y);
            }
        }
    }
    return f;
}

}  // namespace

CactusDecomposition decompose(const Graph& g) {
    const std::size_t n = g.order();
    if (!is_connected(g)) throw DisconnectedError("graph not connected");

    auto forest = dfs(g);
    // owner[child] is the cycle owning tree edge child-parent[child]
    std::vector<std::optional<std::size_t>> owner(n);
    std::vector<Cycle> raw;
    for (auto [low, high] : forest.back_pairs) {
        Cycle cycle;
        const std::size_t id = raw.size();
        for (Vertex x = low; x != high; x = *forest.parent[x]) {
            cycle.push_back(x);
            if (owner[x]) {
                Cycle partial = cycle;
                for (Vertex y = *forest.parent[x]; y != high; y = *forest.parent[y]) partial.push_back(y);
                partial.push_back(high);
                throw NotCactusError(raw[*owner[x]], partial);
            }
            owner[x] = id;
        }
        cycle.push_back(high);
        raw.push_back(std::move(cycle));
    }

    CactusDecomposition d;
    d.order = n;
    for (const auto& c : raw) d.cycles.push_back(normalize_cycle(c));
    std::sort(d.cycles.begin(), d.cycles.end());

    for (Vertex x = 0; x < n; ++x) {
        if (forest.parent[x] && !owner[x]) d.bridges.emplace_back(x, *forest.parent[x]);
    }
    std::sort(d.bridges.begin(), d.bridges.end());

    d.squares_at.assign(n, 0);
    d.cycles_at.assign(n, 0);
    for (const auto& c : d.cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            ++d.cycles_at[c[i]];
            if (c.size() == 4) {
                ++d.squares_at[c[i]];
                d.square_edges.emplace_back(c[i], c[(i + 1) % 4]);
            }
        }
    }
    std::sort(d.square_edges.begin(), d.square_edges.end());

    for (Vertex v = 0; v < n; ++v) {
        if (d.cycles_at[v] > 0 && g.degree(v) >= 3) d.active_vertices.push_back(v);
        if (d.squares_at[v] >= 1) d.squared_vertices.push_back(v);
        if (d.squares_at[v] >= 2) d.multisquared_vertices.push_back(v);
        if (d.squares_at[v] == 2) d.bisquared_vertices.push_back(v);
    }

    // Components of G - E_S.
    std::vector<std::optional<std::size_t>> comp(n);
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s]) continue;
        std::vector<Vertex> members{s};
        comp[s] = 0;
        for (std::size_t head = 0; head < members.size(); ++head) {
            Vertex x = members[head];
            for (Vertex y : g.neighbors(x)) {
                if (comp[y] || std::binary_search(d.square_edges.begin(), d.square_edges.end(), Edge(x, y))) continue;
                comp[y] = 0;
                members.push_back(y);
            }
        }
        if (members.size() >= 2) {
            std::sort(members.begin(), members.end());
            d.unipath_structures.push_back(std::move(members));
        }
    }
    return d;
}

bool is_cactus(const Graph& g) {
    try {
        decompose(g);
        return true;
    } catch (const NotCactusError&) {
        return false;
    }
}

}  // namespace geodex::cactus
