#include <algorithm>
#include <functional>

#include "geodex/cactus.hpp"

namespace geodex::cactus {

std::size_t max_square_count(std::size_t n, std::size_t k) {
    if (n >= 3 * k + 1) return k;
    if (n <= 2 * k + 1) return 0;
    return n - 2 * k - 1;
}

namespace {

bool square_is_antipodal_or_not_multiactive(const Cycle& square, const CactusDecomposition& d) {
    std::vector<std::size_t> active_positions;
    for (std::size_t i = 0; i < 4; ++i) {
        if (d.is_active(square[i])) active_positions.push_back(i);
    }
    if (active_positions.size() < 2) return true;
    return active_positions.size() == 2 && active_positions[1] - active_positions[0] == 2;
}

bool structure_is_good(const std::vector<Vertex>& structure, const CactusDecomposition& d) {
    std::size_t squared = 0;
    for (Vertex v : structure) {
        if (d.squares_at[v] == 0) continue;
        if (++squared > 1 || d.squares_at[v] > 1) return false;
    }
    return true;
}

PredicateFlags evaluate(const Graph& g, const CactusDecomposition& d) {
    PredicateFlags f;
    f.girth_restricted =
        std::all_of(d.cycles.begin(), d.cycles.end(), [](const Cycle& c) { return c.size() <= 4; });
    if (!f.girth_restricted) return f;

    f.antipodal = std::all_of(d.cycles.begin(), d.cycles.end(), [&](const Cycle& c) {
        return c.size() != 4 || square_is_antipodal_or_not_multiactive(c, d);
    });
    if (!f.antipodal) return f;

    f.unipath_resolved = std::all_of(d.unipath_structures.begin(), d.unipath_structures.end(),
                                     [&](const auto& s) { return structure_is_good(s, d); });
    if (!f.unipath_resolved) return f;

    f.squared_chain = std::all_of(d.squares_at.begin(), d.squares_at.end(), [](std::size_t c) { return c <= 2; });
    if (!f.squared_chain) return f;

    const std::size_t n = g.order();
    const std::size_t k = d.cycle_count();
    const std::size_t squares = d.square_count();
    f.maximal_square_chain = squares == max_square_count(n, k);
    if (!f.maximal_square_chain) return f;

    if (squares == 0) {
        // k = 0 or n = 2k+1: every member of the class has the same gpn.
        f.balanced_square_chain = true;
        return f;
    }
    auto [first, second] = largest_unipath_components(g, d);
    const std::size_t slack = n >= 3 * k + 1 ? 1 : 2;
    f.balanced_square_chain = first - second <= slack;
    return f;
}

}  // namespace

std::pair<std::size_t, std::size_t> largest_unipath_components(const Graph& g, const CactusDecomposition& d) {
    std::vector<std::size_t> sizes;
    std::vector<bool> in_structure(g.order(), false);
    for (const auto& s : d.unipath_structures) {
        sizes.push_back(s.size());
        for (Vertex v : s) in_structure[v] = true;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_structure[v]) sizes.push_back(1);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return {sizes.empty() ? 0 : sizes[0], sizes.size() < 2 ? 0 : sizes[1]};
}

std::pair<Vertex, Vertex> chain_endpoints(const Graph& g, const CactusDecomposition& d) {
    std::vector<const Cycle*> squares;
    for (const auto& c : d.cycles) {
        if (c.size() == 4) squares.push_back(&c);
    }
    if (squares.empty()) throw PreconditionError("square chain has no squares");
    auto antipode = [](const Cycle& sq, Vertex v) {
        auto pos = static_cast<std::size_t>(std::find(sq.begin(), sq.end(), v) - sq.begin());
        return sq[(pos + 2) % 4];
    };
    if (squares.size() == 1) {
        const Cycle& sq = *squares.front();
        std::vector<Vertex> active;
        for (Vertex v : sq) {
            if (g.degree(v) >= 3) active.push_back(v);
        }
        Vertex a = active.empty() ? sq.front() : active.front();
        return {a, antipode(sq, a)};
    }
    std::vector<Vertex> ends;
    for (const Cycle* sq : squares) {
        std::vector<Vertex> shared;
        for (Vertex v : *sq) {
            if (d.squares_at[v] >= 2) shared.push_back(v);
        }
        if (shared.size() == 1) ends.push_back(antipode(*sq, shared.front()));
    }
    if (ends.size() != 2) throw PreconditionError("squares do not form a chain");
    return {ends[0], ends[1]};
}

PredicateFlags evaluate_predicates(const Graph& g) { return evaluate(g, decompose(g)); }
PredicateFlags evaluate_predicates(const Graph& g, const CactusDecomposition& d) { return evaluate(g, d); }

bool is_girth_restricted(const Graph& g) { return evaluate_predicates(g).girth_restricted; }
bool is_antipodal_cactus(const Graph& g) { return evaluate_predicates(g).antipodal; }
bool is_unipath_resolved(const Graph& g) { return evaluate_predicates(g).unipath_resolved; }
bool is_squared_chain(const Graph& g) { return evaluate_predicates(g).squared_chain; }
bool is_maximal_square_chain(const Graph& g) { return evaluate_predicates(g).maximal_square_chain; }
bool is_balanced_square_chain(const Graph& g) { return evaluate_predicates(g).balanced_square_chain; }

}  // namespace geodex::cactus
