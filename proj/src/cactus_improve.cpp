#include <algorithm>
#include <functional>

#include "geodex/cactus.hpp"
#include "geodex/geodesics.hpp"

namespace geodex::cactus {

namespace {

constexpr std::size_t kMaxImproveSteps = 100000;

struct Planned {
    Lemma lemma;
    std::function<Rewrite()> apply;
};

bool structure_is_bad(const std::vector<Vertex>& s, const CactusDecomposition& d) {
    std::size_t squared = 0;
    for (Vertex v : s) {
        if (d.squares_at[v] == 0) continue;
        if (++squared > 1 || d.squares_at[v] > 1) return true;
    }
    return false;
}

std::optional<Planned> plan_next(const Graph& g, const CactusDecomposition& d) {
    for (const auto& c : d.cycles) {
        if (c.size() >= 5 && c.size() % 2 == 1) return Planned{Lemma::odd, [&g, c] { return transform_odd(g, c); }};
    }
    for (const auto& c : d.cycles) {
        if (c.size() >= 6) return Planned{Lemma::girth, [&g, c] { return transform_girth(g, c); }};
    }
    auto flags = evaluate_predicates(g, d);
    if (!flags.antipodal) {
        for (const auto& c : d.cycles) {
            if (c.size() != 4) continue;
            std::size_t active = 0;
            for (Vertex x : c) active += d.is_active(x) ? 1 : 0;
            const bool opposite = active == 2 && ((d.is_active(c[0]) && d.is_active(c[2])) ||
                                                  (d.is_active(c[1]) && d.is_active(c[3])));
            if (active >= 2 && !opposite) {
                return Planned{Lemma::antipodal, [&g, c] { return transform_antipodal(g, c); }};
            }
        }
        throw ConsistencyError("non-antipodal cactus without an offending square");
    }
    if (!flags.unipath_resolved) {
        for (const auto& s : d.unipath_structures) {
            if (structure_is_bad(s, d)) return Planned{Lemma::unipath, [&g, s] { return transform_unipath(g, s); }};
        }
        throw ConsistencyError("unresolved cactus without an offending structure");
    }
    if (!flags.squared_chain) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (d.squares_at[v] >= 3) return Planned{Lemma::bisquare, [&g, v] { return transform_bisquare(g, v); }};
        }
        throw ConsistencyError("non-chain cactus without a vertex on three squares");
    }
    if (!flags.maximal_square_chain) return Planned{Lemma::maximal, [&g] { return transform_maximal(g); }};
    if (!flags.balanced_square_chain) return Planned{Lemma::balance, [&g] { return transform_balance(g); }};
    return std::nullopt;
}

}  // namespace

ImproveResult improve_to_extremal(const Graph& g, const ImproveOptions& options) {
    auto d = decompose(g);
    const std::size_t n = g.order();
    const std::size_t k = d.cycle_count();
    ImproveResult result{g, {}, {}};
    if (k == 0) {
        result.note = "trees of a given order all have the same gpn";
        return result;
    }
    if (n == 2 * k + 1) {
        result.note = "n = 2k+1: every cactus in the class is geodetic, all tie";
        return result;
    }

    BigCount current = gpn(g);
    for (std::size_t step = 0;; ++step) {
        if (step >= kMaxImproveSteps) throw ConsistencyError("improvement did not terminate");
        auto planned = plan_next(result.graph, d);
        if (!planned) break;
        if (options.stop_before && planned->lemma >= *options.stop_before) {
            result.note = "stopped before " + to_string(planned->lemma);
            return result;
        }
        Rewrite r = planned->apply();
        auto next = decompose(r.graph);
        if (r.graph.order() != n || next.cycle_count() != k) {
            throw ConsistencyError(to_string(planned->lemma) + " changed the cactus class");
        }
        BigCount after = gpn(r.graph);
        const bool may_tie = planned->lemma == Lemma::unipath && r.variant == "case1";
        if (after < current || (after == current && !may_tie)) {
            throw ConsistencyError(to_string(planned->lemma) + " (" + r.variant + ") did not increase gpn: " +
                                   to_decimal(current) + " -> " + to_decimal(after));
        }
        result.steps.push_back({planned->lemma, r.variant, r.removed, r.added, current, after});
        current = after;
        result.graph = std::move(r.graph);
        d = std::move(next);
    }
    result.note = result.steps.empty() ? "already a balanced square chain" : "reached a balanced square chain";
    return result;
}

Graph gen_balanced_square_chain(std::size_t n, std::size_t k) {
    if (k == 0 || n <= 2 * k + 1) throw PreconditionError("balanced square chain needs k >= 1 and n > 2k+1");
    const std::size_t squares = max_square_count(n, k);
    const std::size_t triangles = k - squares;
    Graph g(n);
    Vertex next = 1;
    Vertex end = 0;
    for (std::size_t i = 0; i < squares; ++i) {
        Vertex a = next++, b = next++, far = next++;
        g.add_edge(end, a);
        g.add_edge(end, b);
        g.add_edge(a, far);
        g.add_edge(b, far);
        end = far;
    }
    const Vertex other_end = end;
    if (n >= 3 * k + 1) {
        const std::size_t rest = n - next;
        for (auto [anchor, length] : {std::pair{Vertex{0}, (rest + 1) / 2}, std::pair{other_end, rest / 2}}) {
            Vertex tip = anchor;
            for (std::size_t i = 0; i < length; ++i) {
                g.add_edge(tip, next);
                tip = next++;
            }
        }
    } else {
        for (auto [anchor, count] :
             {std::pair{Vertex{0}, (triangles + 1) / 2}, std::pair{other_end, triangles / 2}}) {
            Vertex tip = anchor;
            for (std::size_t i = 0; i < count; ++i) {
                Vertex x = next++, y = next++;
                g.add_edge(tip, x);
                g.add_edge(tip, y);
                g.add_edge(x, y);
                tip = y;
            }
        }
    }
    return g;
}

}  // namespace geodex::cactus
