#include "geodex/graph.hpp"

#include <algorithm>
#include <string>

#include "geodex/errors.hpp"

namespace geodex {

Graph::Graph(std::size_t order) : adjacency_(order) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v >= order()) {
        throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(order()));
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    auto& ru = adjacency_[u];
    auto it = std::lower_bound(ru.begin(), ru.end(), v);
    if (it != ru.end() && *it == v) {
        throw InputError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    ru.insert(it, v);
    auto& rv = adjacency_[v];
    rv.insert(std::lower_bound(rv.begin(), rv.end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    auto& ru = adjacency_[u];
    auto it = std::lower_bound(ru.begin(), ru.end(), v);
    if (it == ru.end() || *it != v) {
        throw InputError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    ru.erase(it);
    auto& rv = adjacency_[v];
    rv.erase(std::lower_bound(rv.begin(), rv.end(), u));
    --edge_count_;
}

Vertex Graph::add_vertex() {
    adjacency_.emplace_back();
    return adjacency_.size() - 1;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<std::size_t> component_labels(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> label(n, n);
    std::vector<Vertex> stack;
    std::size_t next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != n) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (label[y] == n) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](std::size_t c) { return c == 0; });
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw InputError("permutation size does not match graph order");
    Graph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

}  // namespace geodex
