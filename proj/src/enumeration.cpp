#include <algorithm>
#include <map>
#include <mutex>

#include "geodex/cactus.hpp"
#include "geodex/enumeration.hpp"
#include "geodex/errors.hpp"
#include "geodex/geodesics.hpp"
#include "geodex/graph_io.hpp"
#include "geodex/parallel.hpp"

namespace geodex::enumeration {

namespace {

using ClassMap = std::map<CanonicalForm, Graph>;

// Canonicalizes every candidate produced by expand(parent, sink) for each
// parent, in parallel, and merges the classes.
template <typename Expand>
std::vector<Graph> grow(const std::vector<Graph>& parents, Expand expand, ClassMap& classes) {
    std::mutex lock;
    parallel_for(parents.size(), worker_count(), [&](std::size_t i) {
        ClassMap local;
        expand(parents[i], [&](const Graph& candidate) {
            Graph c = canonical_graph(candidate);
            auto form = io::render_graph6(c);
            local.emplace(std::move(form), std::move(c));
        });
        std::lock_guard guard(lock);
        classes.merge(local);
    });
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [form, g] : classes) out.push_back(g);
    return out;
}

std::vector<Graph> sorted_classes(ClassMap& classes) {
    std::vector<Graph> out;
    for (auto& [form, g] : classes) out.push_back(g);
    return out;
}

Graph with_new_vertex(const Graph& g) {
    Graph h(g.order() + 1);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
    return h;
}

class CactusTable {
public:
    const std::vector<Graph>& get(std::size_t n, std::size_t k) {
        auto key = std::pair{n, k};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<Graph> result = build(n, k);
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    std::vector<Graph> build(std::size_t n, std::size_t k) {
        if (n == 0 || n < 2 * k + 1) return {};
        if (n == 1) return {Graph(1)};
        ClassMap classes;
        // Leaf block is a pendant edge.
        grow(get(n - 1, k), [](const Graph& p, auto sink) {
            for (Vertex v = 0; v < p.order(); ++v) {
                Graph h = with_new_vertex(p);
                h.add_edge(v, p.order());
                sink(h);
            }
        }, classes);
        // Leaf block is a cycle of length len hanging at one vertex.
        if (k > 0) {
            for (std::size_t len = 3; len <= n; ++len) {
                grow(get(n - len + 1, k - 1), [len](const Graph& p, auto sink) {
                    for (Vertex v = 0; v < p.order(); ++v) {
                        Graph h = p;
                        Vertex prev = v;
                        for (std::size_t i = 1; i < len; ++i) {
                            Vertex x = h.add_vertex();
                            h.add_edge(prev, x);
                            prev = x;
                        }
                        h.add_edge(prev, v);
                        sink(h);
                    }
                }, classes);
            }
        }
        return sorted_classes(classes);
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<Graph>> memo_;
};

}  // namespace

std::vector<Graph> enum_connected(std::size_t n, bool allow_large) {
    if (n == 0) throw InputError("enum_connected needs n >= 1");
    const std::size_t limit = allow_large ? kMaxConnectedOrderLarge : kMaxConnectedOrder;
    if (n > limit) {
        throw SizeGuardError("enum_connected supports n <= " + std::to_string(kMaxConnectedOrder) +
                             (allow_large ? "" : " (n = 8 with the large flag)"));
    }
    std::vector<Graph> level{Graph(1)};
    for (std::size_t m = 2; m <= n; ++m) {
        ClassMap classes;
        // Every connected graph has a non-cut vertex, so deleting one gives a
        // connected graph on m-1 vertices.
        level = grow(level, [](const Graph& p, auto sink) {
            const std::size_t old = p.order();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << old); ++mask) {
                Graph h = with_new_vertex(p);
                for (Vertex v = 0; v < old; ++v) {
                    if (mask >> v & 1u) h.add_edge(v, old);
                }
                sink(h);
            }
        }, classes);
    }
    return level;
}

std::vector<Graph> enum_cacti(std::size_t n, std::size_t k) {
    if (n == 0) throw InputError("enum_cacti needs n >= 1");
    if (n > kMaxCactusOrder) throw SizeGuardError("enum_cacti supports n <= " + std::to_string(kMaxCactusOrder));
    CactusTable table;
    return table.get(n, k);
}

std::string to_string(Objective objective) { return objective == Objective::max ? "max" : "min"; }

Objective parse_objective(const std::string& name) {
    if (name == "max") return Objective::max;
    if (name == "min") return Objective::min;
    throw InputError("objective must be 'max' or 'min'");
}

ExtremalReport extremal_gpn(const std::vector<Graph>& graphs, Objective objective, unsigned workers) {
    if (graphs.empty()) throw InputError("extremal search over an empty set of graphs");
    const std::size_t n = graphs.front().order();
    for (const auto& g : graphs) {
        if (g.order() != n) throw InputError("extremal search mixes graph orders");
    }
    std::vector<BigCount> values(graphs.size());
    parallel_for(graphs.size(), workers == 0 ? worker_count() : workers,
                 [&](std::size_t i) { values[i] = gpn(graphs[i], 1); });

    ExtremalReport report;
    report.n = n;
    report.objective = objective;
    report.instances_scanned = graphs.size();
    report.extremal_value = objective == Objective::max ? *std::max_element(values.begin(), values.end())
                                                        : *std::min_element(values.begin(), values.end());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (values[i] == report.extremal_value) report.witnesses.push_back(canonical_form(graphs[i]));
    }
    std::sort(report.witnesses.begin(), report.witnesses.end());
    report.witnesses.erase(std::unique(report.witnesses.begin(), report.witnesses.end()), report.witnesses.end());
    return report;
}

ExtremalReport argmax_gpn(const std::vector<Graph>& graphs, unsigned workers) {
    return extremal_gpn(graphs, Objective::max, workers);
}

ExtremalReport argmin_gpn(const std::vector<Graph>& graphs, unsigned workers) {
    return extremal_gpn(graphs, Objective::min, workers);
}

BoundSweep verify_bounds(std::size_t n, unsigned workers) {
    if (n > kMaxConnectedOrder) throw SizeGuardError("verify_bounds is exhaustive and supports n <= 7");
    auto classes = enum_connected(n);
    BoundSweep sweep;
    sweep.n = n;
    sweep.rows.resize(classes.size());
    parallel_for(classes.size(), workers == 0 ? worker_count() : workers, [&](std::size_t i) {
        sweep.rows[i] = {io::render_graph6(classes[i]), families::evaluate_bounds(gpn(classes[i], 1), n)};
    });
    for (const auto& row : sweep.rows) {
        if (!row.verdict.paper_bound_holds) ++sweep.paper_violations;
        if (!row.verdict.safe_bound_holds) ++sweep.safe_violations;
        if (row.verdict.margin_note.find("safe: holds with equality") != std::string::npos) ++sweep.safe_equalities;
    }
    return sweep;
}

BipartiteReport bipartite_experiment(std::size_t n) {
    if (n < 2) throw InputError("bipartite_experiment needs n >= 2");
    if (n > kMaxBipartiteOrder) throw SizeGuardError("bipartite_experiment supports n <= 14");
    BipartiteReport report;
    report.n = n;
    auto add_row = [&](std::string label, std::size_t a, std::size_t b, const Graph& g) {
        BipartiteRow row{std::move(label), a, b, is_connected(g), std::nullopt};
        if (row.connected) {
            row.gpn_value = gpn(g);
            if (report.best_label.empty() || *row.gpn_value > report.best_value) {
                report.best_label = row.label;
                report.best_value = *row.gpn_value;
            }
        }
        report.rows.push_back(std::move(row));
    };
    for (std::size_t a = 1; a <= n / 2; ++a) {
        add_row("K_{" + std::to_string(a) + "," + std::to_string(n - a) + "}", a, n - a,
                families::gen_complete_bipartite(a, n - a));
    }
    if (n % 2 == 0) {
        const std::size_t m = n / 2;
        Graph g = families::gen_complete_bipartite(m, m);
        for (Vertex i = 0; i < m; ++i) g.remove_edge(i, m + i);
        add_row("K_{" + std::to_string(m) + "," + std::to_string(m) + "}-M", m, m, g);
    }
    return report;
}

}  // namespace geodex::enumeration
