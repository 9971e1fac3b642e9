#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace geodex {

using Vertex = std::size_t;

// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept sorted,
// so two graphs with the same edge set compare equal. Connectivity is not an
// invariant of the type.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    static Graph from_edges(std::size_t order, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    // Throws InputError on self-loops, duplicates or out-of-range ids.
    void add_edge(Vertex u, Vertex v);
    // Throws InputError if the edge is absent.
    void remove_edge(Vertex u, Vertex v);
    Vertex add_vertex();

    std::vector<Edge> edges() const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);

// Component id per vertex, ids assigned in order of smallest member.
std::vector<std::size_t> component_labels(const Graph& g);

// Result has edge {perm[u], perm[v]} for every edge {u, v} of g.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace geodex
