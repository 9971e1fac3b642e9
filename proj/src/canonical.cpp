#include <algorithm>
#include <map>
#include <set>

#include "geodex/enumeration.hpp"
#include "geodex/errors.hpp"
#include "geodex/graph_io.hpp"

namespace geodex::enumeration {

namespace {

using Coloring = std::vector<std::size_t>;

// Refines until stable. New colors are ranks of (old color, sorted neighbor
// colors), so the result does not depend on vertex ids.
void refine(const Graph& g, Coloring& colors) {
    const std::size_t n = g.order();
    std::size_t classes = std::set<std::size_t>(colors.begin(), colors.end()).size();
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    std::vector<std::size_t> order(n);
    while (true) {
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = colors[v];
            sig[v].second.clear();
            for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colors[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
        std::size_t rank = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
            colors[order[i]] = rank;
        }
        const std::size_t now = n == 0 ? 0 : rank + 1;
        if (now == classes) return;
        classes = now;
    }
}

bool twins(const Graph& g, Vertex u, Vertex v) {
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::vector<Vertex> a, b;
    for (Vertex x : nu) if (x != v) a.push_back(x);
    for (Vertex x : nv) if (x != u) b.push_back(x);
    return a == b;
}

struct Search {
    const Graph& g;
    std::vector<bool> best;
    bool have_best = false;

    void leaf(const Coloring& colors) {
        const std::size_t n = g.order();
        std::vector<Vertex> at(n);
        for (Vertex v = 0; v < n; ++v) at[colors[v]] = v;
        std::vector<bool> bits;
        bits.reserve(n * n / 2);
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) bits.push_back(g.has_edge(at[i], at[j]));
        }
        if (!have_best || bits < best) {
            best = std::move(bits);
            have_best = true;
        }
    }

    void run(Coloring colors) {
        refine(g, colors);
        const std::size_t n = g.order();
        std::map<std::size_t, std::vector<Vertex>> cells;
        for (Vertex v = 0; v < n; ++v) cells[colors[v]].push_back(v);
        if (cells.size() == n) {
            leaf(colors);
            return;
        }
        const std::vector<Vertex>* target = nullptr;
        for (const auto& [color, members] : cells) {
            if (members.size() > 1 && (!target || members.size() < target->size())) target = &members;
        }
        std::vector<Vertex> tried;
        for (Vertex v : *target) {
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
            tried.push_back(v);
            Coloring next(n);
            for (Vertex w = 0; w < n; ++w) next[w] = 2 * colors[w] + (w == v ? 0 : 1);
            run(std::move(next));
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder) {
        throw SizeGuardError("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
    }
    const std::size_t n = g.order();
    Search search{g, {}, false};
    search.run(Coloring(n, 0));
    Graph out(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if (search.best[bit]) out.add_edge(i, j);
        }
    }
    return out;
}

CanonicalForm canonical_form(const Graph& g) { return io::render_graph6(canonical_graph(g)); }

}  // namespace geodex::enumeration
