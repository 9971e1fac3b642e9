#include <algorithm>
#include <array>
#include <limits>
#include <set>

#include "geodex/cactus.hpp"
#include "geodex/geodesics.hpp"

namespace geodex::cactus {

std::string to_string(Lemma lemma) {
    switch (lemma) {
        case Lemma::odd: return "odd";
        case Lemma::girth: return "girth";
        case Lemma::antipodal: return "antipodal";
        case Lemma::unipath: return "unipath";
        case Lemma::bisquare: return "bisquare";
        case Lemma::maximal: return "maximal";
        case Lemma::balance: return "balance";
    }
    return "unknown";
}

namespace {

const Cycle& find_cycle(const CactusDecomposition& d, std::span<const Vertex> cycle) {
    Cycle wanted = normalize_cycle(cycle);
    auto it = std::lower_bound(d.cycles.begin(), d.cycles.end(), wanted);
    if (it == d.cycles.end() || *it != wanted) throw PreconditionError("vertex list is not a cycle of the graph");
    return *it;
}

bool is_square_edge(const CactusDecomposition& d, Vertex a, Vertex b) {
    return std::binary_search(d.square_edges.begin(), d.square_edges.end(), Edge(a, b));
}

Rewrite apply_edits(const Graph& g, std::vector<Edge> removed, std::vector<Edge> added, std::string variant) {
    Rewrite out{g, {}, {}, std::move(variant)};
    for (const Edge& e : removed) out.graph.remove_edge(e.u, e.v);
    for (const Edge& e : added) out.graph.add_edge(e.u, e.v);
    std::sort(removed.begin(), removed.end());
    std::sort(added.begin(), added.end());
    out.removed = std::move(removed);
    out.added = std::move(added);
    return out;
}

// Net edits between two graphs on the same vertex set.
Rewrite diff_rewrite(const Graph& before, Graph after, std::string variant) {
    auto old_edges = before.edges();
    auto new_edges = after.edges();
    Rewrite out{std::move(after), {}, {}, std::move(variant)};
    std::set_difference(old_edges.begin(), old_edges.end(), new_edges.begin(), new_edges.end(),
                        std::back_inserter(out.removed));
    std::set_difference(new_edges.begin(), new_edges.end(), old_edges.begin(), old_edges.end(),
                        std::back_inserter(out.added));
    return out;
}

// Vertices reachable from start in G - blocked.
std::vector<Vertex> component_avoiding(const Graph& g, Vertex start, Vertex blocked) {
    std::vector<bool> seen(g.order(), false);
    seen[blocked] = true;
    seen[start] = true;
    std::vector<Vertex> members{start};
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (Vertex y : g.neighbors(members[head])) {
            if (!seen[y]) {
                seen[y] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// One side of a multisquared vertex u: the component of G - u through one square.
struct Side {
    const Cycle* square = nullptr;
    std::vector<Vertex> vertices;
    BigCount weight;  // gpn(u, vertices)
};

std::vector<Side> sides_at(const Graph& g, const CactusDecomposition& d, Vertex u) {
    auto table = bfs_count(g, u);
    std::vector<Side> sides;
    for (const auto& c : d.cycles) {
        if (c.size() != 4 || std::find(c.begin(), c.end(), u) == c.end()) continue;
        Vertex start = c[0] == u ? c[1] : c[0];
        Side side{&c, component_avoiding(g, start, u), 0};
        for (Vertex y : side.vertices) side.weight += table.sigma[y];
        sides.push_back(std::move(side));
    }
    std::sort(sides.begin(), sides.end(), [](const Side& a, const Side& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.vertices.front() < b.vertices.front();
    });
    return sides;
}

// Squared vertex of `side` farthest from u; ties go to the smallest id.
Vertex farthest_squared(const Graph& g, const CactusDecomposition& d, Vertex u, const std::vector<Vertex>& side) {
    auto dist = bfs_distances(g, u);
    std::optional<Vertex> best;
    for (Vertex v : side) {
        if (d.squares_at[v] == 0) continue;
        if (!best || *dist[v] > *dist[*best]) best = v;
    }
    if (!best) throw ConsistencyError("side of a squared vertex contains no squared vertex");
    return *best;
}

std::size_t triangles_at(const CactusDecomposition& d, Vertex v) {
    return static_cast<std::size_t>(std::count_if(d.cycles.begin(), d.cycles.end(), [&](const Cycle& c) {
        return c.size() == 3 && std::find(c.begin(), c.end(), v) != c.end();
    }));
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

struct Case1Choice {
    Vertex u, w, z;
};

// A bridge u-z whose end u lies on a triangle u v w.
std::optional<Case1Choice> find_triangle_bridge(const CactusDecomposition& d) {
    for (const Edge& b : d.bridges) {
        for (auto [u, z] : {std::pair{b.u, b.v}, std::pair{b.v, b.u}}) {
            for (const auto& c : d.cycles) {
                if (c.size() != 3 || std::find(c.begin(), c.end(), u) == c.end()) continue;
                Vertex w = std::numeric_limits<Vertex>::max();
                for (Vertex x : c) {
                    if (x != u) w = std::min(w, x);
                }
                return Case1Choice{u, w, z};
            }
        }
    }
    return std::nullopt;
}

Rewrite triangle_to_square(const Graph& g, const Case1Choice& c, std::string variant) {
    return apply_edits(g, {Edge(c.u, c.w)}, {Edge(c.w, c.z)}, std::move(variant));
}

struct StructureShape {
    const std::vector<Vertex>* vertices = nullptr;
    std::vector<const Cycle*> triangles;
    std::size_t bridges = 0;
    std::optional<Vertex> squared;
};

std::vector<StructureShape> structure_shapes(const CactusDecomposition& d) {
    std::vector<StructureShape> shapes;
    for (const auto& s : d.unipath_structures) {
        StructureShape shape;
        shape.vertices = &s;
        for (const auto& c : d.cycles) {
            if (c.size() == 3 && contains(s, c[0]) && contains(s, c[1]) && contains(s, c[2])) {
                shape.triangles.push_back(&c);
            }
        }
        for (const Edge& b : d.bridges) {
            if (contains(s, b.u) && contains(s, b.v)) ++shape.bridges;
        }
        for (Vertex v : s) {
            if (d.squares_at[v] > 0) shape.squared = v;
        }
        shapes.push_back(std::move(shape));
    }
    return shapes;
}

// Triangle whose two non-attachment vertices have degree 2; returns (attachment, a, b).
std::optional<std::array<Vertex, 3>> leaf_triangle(const Graph& g, const std::vector<const Cycle*>& triangles) {
    for (const Cycle* t : triangles) {
        for (std::size_t i = 0; i < 3; ++i) {
            Vertex a = (*t)[(i + 1) % 3];
            Vertex b = (*t)[(i + 2) % 3];
            if (g.degree(a) == 2 && g.degree(b) == 2) return std::array<Vertex, 3>{(*t)[i], a, b};
        }
    }
    return std::nullopt;
}

std::optional<Vertex> smallest_leaf(const Graph& g, const std::vector<Vertex>& vertices) {
    for (Vertex v : vertices) {
        if (g.degree(v) == 1) return v;
    }
    return std::nullopt;
}

}  // namespace

Rewrite transform_odd(const Graph& g, std::span<const Vertex> cycle) {
    auto d = decompose(g);
    const Cycle& c = find_cycle(d, cycle);
    const std::size_t len = c.size();
    if (len < 5 || len % 2 == 0) throw PreconditionError("transform_odd needs an odd cycle of length >= 5");
    return apply_edits(g, {Edge(c[0], c[len - 1])}, {Edge(c[1], c[len - 1])}, "odd");
}

Rewrite transform_girth(const Graph& g, std::span<const Vertex> cycle) {
    auto d = decompose(g);
    const Cycle& c = find_cycle(d, cycle);
    const std::size_t len = c.size();
    if (len < 6 || len % 2 != 0) throw PreconditionError("transform_girth needs an even cycle of length >= 6");
    // 1-based v_i = c[i-1]
    auto v = [&](std::size_t i) { return c[i - 1]; };
    const std::size_t h = len / 2;
    return apply_edits(g, {Edge(v(1), v(len)), Edge(v(h), v(h + 1))}, {Edge(v(2), v(len)), Edge(v(h), v(h + 2))},
                       "even");
}

Rewrite transform_antipodal(const Graph& g, std::span<const Vertex> square) {
    auto d = decompose(g);
    const Cycle& c = find_cycle(d, square);
    if (c.size() != 4) throw PreconditionError("transform_antipodal needs a square");
    std::size_t active = 0;
    for (Vertex x : c) active += d.is_active(x) ? 1 : 0;
    const bool antipodal_pair = active == 2 && ((d.is_active(c[0]) && d.is_active(c[2])) ||
                                                (d.is_active(c[1]) && d.is_active(c[3])));
    if (active < 2 || antipodal_pair) throw PreconditionError("square is not multiactive or already antipodal");

    // Label v1..v4 around the square so that v2 and v3 are both active.
    for (std::size_t r = 0; r < 4; ++r) {
        for (int dir : {1, -1}) {
            auto at = [&](int i) { return c[static_cast<std::size_t>((static_cast<int>(r) + dir * i + 8) % 4)]; };
            Vertex v1 = at(0), v2 = at(1), v3 = at(2), v4 = at(3);
            if (!d.is_active(v2) || !d.is_active(v3)) continue;
            std::vector<Edge> removed, added;
            for (Vertex w : g.neighbors(v2)) {
                if (w == v1 || w == v3) continue;
                removed.emplace_back(w, v2);
                added.emplace_back(w, v1);
            }
            for (Vertex z : g.neighbors(v4)) {
                if (z == v1 || z == v3) continue;
                removed.emplace_back(z, v4);
                added.emplace_back(z, v3);
            }
            return apply_edits(g, std::move(removed), std::move(added), "antipodal");
        }
    }
    throw ConsistencyError("multiactive square without two adjacent active corners");
}

Rewrite transform_unipath(const Graph& g, std::span<const Vertex> structure) {
    auto d = decompose(g);
    if (!evaluate_predicates(g, d).antipodal) throw PreconditionError("transform_unipath needs an antipodal cactus");
    std::vector<Vertex> wanted(structure.begin(), structure.end());
    std::sort(wanted.begin(), wanted.end());
    auto it = std::find(d.unipath_structures.begin(), d.unipath_structures.end(), wanted);
    if (it == d.unipath_structures.end()) throw PreconditionError("vertex set is not a unipath structure");
    const auto& h = *it;

    std::vector<Vertex> squared;
    for (Vertex v : h) {
        if (d.squares_at[v] > 0) squared.push_back(v);
    }

    if (squared.size() >= 2) {
        const Vertex anchor = squared.front();
        std::vector<Edge> removed, added;
        for (std::size_t i = 1; i < squared.size(); ++i) {
            for (Vertex x : g.neighbors(squared[i])) {
                if (!is_square_edge(d, squared[i], x)) continue;
                removed.emplace_back(squared[i], x);
                added.emplace_back(anchor, x);
            }
        }
        return apply_edits(g, std::move(removed), std::move(added), "case1");
    }
    if (squared.size() == 1 && d.squares_at[squared.front()] >= 2) {
        const Vertex u = squared.front();
        auto sides = sides_at(g, d, u);
        const Vertex z = farthest_squared(g, d, u, sides.front().vertices);
        std::vector<Edge> removed, added;
        for (Vertex x : g.neighbors(u)) {
            if (is_square_edge(d, u, x)) continue;
            removed.emplace_back(u, x);
            added.emplace_back(z, x);
        }
        return apply_edits(g, std::move(removed), std::move(added), "case2");
    }
    throw PreconditionError("unipath structure is already good");
}

Rewrite transform_bisquare(const Graph& g, Vertex vertex) {
    g.check_vertex(vertex);
    auto d = decompose(g);
    if (!evaluate_predicates(g, d).unipath_resolved) {
        throw PreconditionError("transform_bisquare needs a unipath-resolved cactus");
    }
    if (d.squares_at[vertex] < 3) throw PreconditionError("vertex lies on fewer than three squares");
    auto sides = sides_at(g, d, vertex);
    const auto& lighter = sides.front();
    const auto& moved = sides[1];
    const Vertex z = farthest_squared(g, d, vertex, lighter.vertices);
    std::vector<Edge> removed, added;
    for (Vertex x : g.neighbors(vertex)) {
        if (!contains(moved.vertices, x)) continue;
        removed.emplace_back(vertex, x);
        added.emplace_back(z, x);
    }
    return apply_edits(g, std::move(removed), std::move(added), "bisquare");
}

Rewrite transform_maximal(const Graph& g) {
    auto d = decompose(g);
    auto flags = evaluate_predicates(g, d);
    if (!flags.squared_chain) throw PreconditionError("transform_maximal needs a squared chain");
    if (flags.maximal_square_chain) throw PreconditionError("square chain is already maximal");

    if (auto choice = find_triangle_bridge(d)) return triangle_to_square(g, *choice, "case1");

    // No bridge touches a triangle: one end structure is a tree (k1), the
    // other is built from triangles only (k2).
    auto shapes = structure_shapes(d);
    const StructureShape* k1 = nullptr;
    const StructureShape* k2 = nullptr;
    for (const auto& s : shapes) {
        if (s.triangles.empty() && s.bridges > 0 && !k1) k1 = &s;
        if (!s.triangles.empty() && s.bridges == 0 && !k2) k2 = &s;
    }
    if (!k1 || !k2 || !k1->squared || !k2->squared) {
        throw ConsistencyError("non-maximal squared chain without the expected end structures");
    }
    const Vertex v1 = *k1->squared;

    auto finish_with_case1 = [&](Graph shifted, const std::string& variant) {
        auto d2 = decompose(shifted);
        auto choice = find_triangle_bridge(d2);
        if (!choice) throw ConsistencyError("relocated triangle did not produce a triangle-bridge pair");
        auto step = triangle_to_square(shifted, *choice, variant);
        return diff_rewrite(g, std::move(step.graph), variant);
    };

    if (k2->triangles.size() == 1) {
        const Cycle& t = *k2->triangles.front();
        std::vector<Vertex> others;
        for (Vertex x : t) {
            if (x != *k2->squared) others.push_back(x);
        }
        auto leaf = smallest_leaf(g, *k1->vertices);
        if (!leaf || others.size() != 2) throw ConsistencyError("case 2a shape not found");
        const Vertex w = *leaf;
        const Vertex z = g.neighbors(w).front();
        return apply_edits(g, {Edge(others[0], others[1]), Edge(w, z)}, {Edge(others[0], w), Edge(others[1], w)},
                           "case2a");
    }

    if (k1->vertices->size() >= 3) {
        // Path x-y-w inside the tree k1, and a triangle edge of k2 opposite a
        // vertex shared with another triangle.
        std::optional<std::array<Vertex, 3>> path;
        for (Vertex y : *k1->vertices) {
            std::vector<Vertex> inside;
            for (Vertex x : g.neighbors(y)) {
                if (contains(*k1->vertices, x) && !is_square_edge(d, x, y)) inside.push_back(x);
            }
            if (inside.size() >= 2) {
                path = std::array<Vertex, 3>{inside[0], y, inside[1]};
                break;
            }
        }
        std::optional<Edge> cut;
        for (const Cycle* t : k2->triangles) {
            for (std::size_t i = 0; i < 3 && !cut; ++i) {
                if (triangles_at(d, (*t)[i]) >= 2) cut = Edge((*t)[(i + 1) % 3], (*t)[(i + 2) % 3]);
            }
            if (cut) break;
        }
        if (!path || !cut) throw ConsistencyError("case 2b shape not found");
        Graph shifted = g;
        shifted.remove_edge(cut->u, cut->v);
        shifted.add_edge((*path)[0], (*path)[2]);
        return finish_with_case1(std::move(shifted), "case2b-shift");
    }

    auto tri = leaf_triangle(g, k2->triangles);
    if (!tri) throw ConsistencyError("case 2b leaf triangle not found");
    auto [u, a, b] = *tri;
    Graph shifted = g;
    shifted.remove_edge(u, a);
    shifted.remove_edge(u, b);
    shifted.add_edge(v1, a);
    shifted.add_edge(v1, b);
    return finish_with_case1(std::move(shifted), "case2b-relocate");
}

Rewrite transform_balance(const Graph& g) {
    auto d = decompose(g);
    auto flags = evaluate_predicates(g, d);
    if (!flags.maximal_square_chain) throw PreconditionError("transform_balance needs a maximal square chain");
    if (flags.balanced_square_chain) throw PreconditionError("square chain is already balanced");

    auto [e1, e2] = chain_endpoints(g, d);
    auto structure_of = [&](Vertex v) -> const std::vector<Vertex>* {
        for (const auto& s : d.unipath_structures) {
            if (contains(s, v)) return &s;
        }
        return nullptr;
    };
    auto size_of = [](const std::vector<Vertex>* s) { return s ? s->size() : std::size_t{1}; };
    const std::vector<Vertex>* s1 = structure_of(e1);
    const std::vector<Vertex>* s2 = structure_of(e2);
    if (size_of(s1) < size_of(s2)) {
        std::swap(e1, e2);
        std::swap(s1, s2);
    }
    if (!s1) throw ConsistencyError("unbalanced chain without an end structure");

    const std::size_t n = g.order();
    const std::size_t k = d.cycle_count();
    if (n >= 3 * k + 1) {
        auto leaf = smallest_leaf(g, *s1);
        if (!leaf) throw ConsistencyError("acyclic end structure without a leaf");
        const Vertex parent = g.neighbors(*leaf).front();
        return apply_edits(g, {Edge(*leaf, parent)}, {Edge(*leaf, e2)}, "leaf");
    }
    auto shapes = structure_shapes(d);
    auto shape = std::find_if(shapes.begin(), shapes.end(), [&](const auto& s) { return s.vertices == s1; });
    auto tri = leaf_triangle(g, shape->triangles);
    if (!tri) throw ConsistencyError("triangle end structure without a leaf triangle");
    auto [u, a, b] = *tri;
    return apply_edits(g, {Edge(u, a), Edge(u, b)}, {Edge(e2, a), Edge(e2, b)}, "triangle");
}

}  // namespace geodex::cactus
