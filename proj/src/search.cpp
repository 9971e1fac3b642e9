#include <random>

#include "geodex/enumeration.hpp"
#include "geodex/errors.hpp"
#include "geodex/geodesics.hpp"
#include "geodex/graph_io.hpp"

namespace geodex::enumeration {

namespace {

// True if u still reaches v once the edge u-v is ignored.
bool reaches_without_edge(const Graph& g, Vertex u, Vertex v) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (x == u && y == v) continue;
            if (y == v) return true;
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    return false;
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(rng() % v, v);
    return g;
}

// G_{3,t} with the n - 3t leftover vertices joined to the last block's
// neighbor block, i.e. added to the last block.
Graph sjoin_seed(std::size_t n) {
    const std::size_t t = n / 3;
    Graph g = families::gen_sequential_join(3, t);
    for (std::size_t extra = 3 * t; extra < n; ++extra) {
        Vertex x = g.add_vertex();
        for (Vertex w = 3 * (t - 2); w < 3 * (t - 1); ++w) g.add_edge(x, w);
    }
    return g;
}

bool try_toggle(Graph& g, Vertex u, Vertex v) {
    if (g.has_edge(u, v)) {
        if (!reaches_without_edge(g, u, v)) return false;
        g.remove_edge(u, v);
    } else {
        g.add_edge(u, v);
    }
    return true;
}

}  // namespace

SearchReport local_search_max(std::size_t n, std::uint64_t seed, std::size_t budget) {
    if (n < 3) throw InputError("local_search_max needs n >= 3");
    std::mt19937_64 rng(seed);
    const bool have_sjoin = n / 3 >= 2;
    const std::size_t plateau = n * (n - 1);

    SearchReport report;
    report.seed = seed;
    report.budget = budget;
    if (have_sjoin) report.sjoin_value = families::formula_sjoin(3, n / 3);

    auto restart = [&](std::size_t index) {
        if (have_sjoin && index % 2 == 0) {
            Graph g = sjoin_seed(n);
            // Later restarts from the family are perturbed a little.
            for (std::size_t i = 0; index > 0 && i < n / 2; ++i) {
                Vertex u = rng() % n, v = rng() % n;
                if (u != v) try_toggle(g, u, v);
            }
            return g;
        }
        return random_tree(n, rng);
    };

    Graph current = restart(0);
    BigCount value = gpn(current);
    report.best_graph = current;
    BigCount best = value;
    std::size_t stale = 0;
    for (std::size_t step = 0; step < budget; ++step) {
        Vertex u = rng() % n, v = rng() % n;
        if (u == v) continue;
        Graph candidate = current;
        if (!try_toggle(candidate, u, v)) continue;
        BigCount candidate_value = gpn(candidate);
        if (candidate_value > value) {
            current = std::move(candidate);
            value = candidate_value;
            ++report.accepted_moves;
            stale = 0;
            if (value > best) {
                best = value;
                report.best_graph = current;
            }
        } else if (++stale >= plateau) {
            current = restart(++report.restarts);
            value = gpn(current);
            stale = 0;
            if (value > best) {
                best = value;
                report.best_graph = current;
            }
        }
    }

    report.best.n = n;
    report.best.objective = Objective::max;
    report.best.extremal_value = best;
    report.best.instances_scanned = budget + report.restarts + 1;
    report.best.witnesses.push_back(n <= kMaxCanonicalOrder ? canonical_form(report.best_graph)
                                                            : io::render_graph6(report.best_graph));
    report.beats_sjoin = have_sjoin && best > *report.sjoin_value;
    return report;
}

}  // namespace geodex::enumeration
