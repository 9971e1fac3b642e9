#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "geodex/cactus.hpp"
#include "geodex/enumeration.hpp"
#include "geodex/families.hpp"
#include "geodex/geodesics.hpp"
#include "support.hpp"

using namespace geodex;
using namespace geodex::cactus;

namespace {

Graph from(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void add_square(Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(c, d);
    g.add_edge(d, a);
}

void check_class_preserved(const Graph& before, const Graph& after) {
    CHECK(after.order() == before.order());
    CHECK(is_connected(after));
    REQUIRE(is_cactus(after));
    CHECK(decompose(after).cycle_count() == decompose(before).cycle_count());
}

}  // namespace

TEST_CASE("cactus recognition") {
    CHECK_FALSE(is_cactus(families::gen_complete(4)));
    try {
        decompose(families::gen_complete(4));
        FAIL("expected NotCactusError");
    } catch (const NotCactusError& e) {
        auto [a, b] = e.witness();
        CHECK(a.size() >= 3);
        CHECK(b.size() >= 3);
        CHECK(a != b);
    }
    CHECK_THROWS_AS(decompose(Graph(2)), DisconnectedError);
}

TEST_CASE("decomposition of C_5 with a pendant") {
    auto g = families::gen_cycle(5);
    g.add_vertex();
    g.add_edge(2, 5);
    auto d = decompose(g);
    CHECK(d.cycle_count() == 1);
    CHECK(d.cycles[0] == Cycle{0, 1, 2, 3, 4});
    CHECK(d.bridges == std::vector<Edge>{Edge(2, 5)});
    CHECK(d.active_vertices == std::vector<Vertex>{2});
}

TEST_CASE("two squares sharing a vertex") {
    Graph g(7);
    add_square(g, 0, 1, 2, 3);
    add_square(g, 0, 4, 5, 6);
    auto d = decompose(g);
    CHECK(d.cycle_count() == 2);
    CHECK(d.bridges.empty());
    CHECK(d.bisquared_vertices == std::vector<Vertex>{0});
    CHECK(d.square_edges.size() == 8);
    CHECK(d.unipath_structures.empty());
}

TEST_CASE("cycle normalization") {
    std::vector<Vertex> c{4, 2, 7, 1, 9};
    CHECK(normalize_cycle(c) == Cycle{1, 7, 2, 4, 9});
}

TEST_CASE("max square count") {
    CHECK(max_square_count(9, 2) == 2);
    CHECK(max_square_count(7, 2) == 2);
    CHECK(max_square_count(8, 3) == 1);
    CHECK(max_square_count(7, 3) == 0);
}

TEST_CASE("predicates on simple shapes") {
    Graph triangles(5);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}) triangles.add_edge(u, v);
    auto f = evaluate_predicates(triangles);
    CHECK(f.girth_restricted);
    CHECK(f.squared_chain);
    CHECK(f.balanced_square_chain);
    CHECK_FALSE(is_girth_restricted(families::gen_cycle(6)));
    CHECK_FALSE(is_balanced_square_chain(families::gen_cycle(6)));
    CHECK_THROWS_AS(is_girth_restricted(families::gen_complete(4)), NotCactusError);
}

TEST_CASE("balanced square chain constructions") {
    auto g92 = gen_balanced_square_chain(9, 2);
    auto f = evaluate_predicates(g92);
    CHECK(f.balanced_square_chain);
    CHECK(gpn(g92) == 71);
    auto d = decompose(g92);
    CHECK(d.square_count() == 2);
    CHECK(d.bridges.size() == 2);

    auto g72 = gen_balanced_square_chain(7, 2);
    CHECK(decompose(g72).bridges.empty());
    CHECK(is_balanced_square_chain(g72));

    auto g83 = gen_balanced_square_chain(8, 3);
    auto d83 = decompose(g83);
    CHECK(d83.square_count() == 1);
    CHECK(d83.cycle_count() == 3);
    CHECK(gpn(g83) == 46);
    CHECK(is_balanced_square_chain(g83));

    CHECK_THROWS_AS(gen_balanced_square_chain(5, 2), PreconditionError);
}

TEST_CASE("balanced chains match enumerated maxima") {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t n = 2 * k + 2; n <= 10; ++n) {
            auto best = enumeration::argmax_gpn(enumeration::enum_cacti(n, k));
            CHECK(gpn(gen_balanced_square_chain(n, k)) == best.extremal_value);
        }
    }
}

TEST_CASE("transform_odd") {
    auto c5 = families::gen_cycle(5);
    auto r = transform_odd(c5, decompose(c5).cycles[0]);
    check_class_preserved(c5, r.graph);
    // a 4-cycle with a pendant: 10 unique pairs, 3 pairs with two geodesics, 5 trivial
    CHECK(gpn_brute(r.graph) == 18);
    CHECK(gpn(r.graph) == 18);
    CHECK(decompose(r.graph).cycles[0].size() == 4);

    auto c7 = families::gen_cycle(7);
    CHECK(gpn(transform_odd(c7, decompose(c7).cycles[0]).graph) > gpn(c7));

    CHECK_THROWS_AS(transform_odd(families::gen_cycle(4), std::vector<Vertex>{0, 1, 2, 3}), PreconditionError);
    CHECK_THROWS_AS(transform_odd(c5, std::vector<Vertex>{0, 1, 2}), PreconditionError);
}

TEST_CASE("transform_girth") {
    auto c6 = families::gen_cycle(6);
    auto r = transform_girth(c6, decompose(c6).cycles[0]);
    check_class_preserved(c6, r.graph);
    CHECK(decompose(r.graph).cycles[0].size() == 4);
    CHECK(decompose(r.graph).bridges.size() == 2);
    CHECK(gpn_brute(r.graph) > gpn_brute(c6));

    Graph g = families::gen_cycle(10);
    std::size_t steps = 0;
    while (decompose(g).cycles[0].size() > 4) {
        auto next = transform_girth(g, decompose(g).cycles[0]);
        CHECK(gpn(next.graph) > gpn(g));
        g = next.graph;
        ++steps;
    }
    CHECK(steps == 3);
}

TEST_CASE("transform_antipodal") {
    // pendants on adjacent corners 0 and 1
    Graph g = from(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
    auto r = transform_antipodal(g, std::vector<Vertex>{0, 1, 2, 3});
    check_class_preserved(g, r.graph);
    CHECK(gpn(r.graph) > gpn(g));
    CHECK(is_antipodal_cactus(r.graph));

    Graph three = from(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}});
    auto r3 = transform_antipodal(three, std::vector<Vertex>{0, 1, 2, 3});
    auto d = decompose(r3.graph);
    std::vector<Vertex> active;
    for (Vertex v : d.cycles[0]) {
        if (d.is_active(v)) active.push_back(v);
    }
    REQUIRE(active.size() == 2);
    CHECK(gpn(r3.graph) > gpn(three));

    Graph opposite = from(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}});
    CHECK_THROWS_AS(transform_antipodal(opposite, std::vector<Vertex>{0, 1, 2, 3}), PreconditionError);
}

TEST_CASE("transform_unipath case 1 keeps gpn") {
    Graph g(9);
    add_square(g, 0, 1, 2, 3);
    add_square(g, 4, 5, 6, 7);
    g.add_edge(0, 8);
    g.add_edge(8, 4);
    auto r = transform_unipath(g, std::vector<Vertex>{0, 4, 8});
    CHECK(r.variant == "case1");
    check_class_preserved(g, r.graph);
    CHECK(gpn(r.graph) == gpn(g));
    CHECK(gpn_brute(r.graph) == gpn_brute(g));
    CHECK(is_antipodal_cactus(r.graph));
}

TEST_CASE("transform_unipath case 2 raises gpn") {
    Graph g(9);
    add_square(g, 0, 1, 2, 3);
    add_square(g, 0, 4, 5, 6);
    g.add_edge(0, 7);
    g.add_edge(7, 8);
    auto r = transform_unipath(g, std::vector<Vertex>{0, 7, 8});
    CHECK(r.variant == "case2");
    check_class_preserved(g, r.graph);
    CHECK(gpn(r.graph) > gpn(g));
    CHECK(is_unipath_resolved(r.graph));

    Graph good(6);
    add_square(good, 0, 1, 2, 3);
    good.add_edge(0, 4);
    good.add_edge(4, 5);
    CHECK_THROWS_AS(transform_unipath(good, std::vector<Vertex>{0, 4, 5}), PreconditionError);
}

TEST_CASE("transform_bisquare") {
    Graph g(10);
    add_square(g, 0, 1, 2, 3);
    add_square(g, 0, 4, 5, 6);
    add_square(g, 0, 7, 8, 9);
    auto r = transform_bisquare(g, 0);
    check_class_preserved(g, r.graph);
    CHECK(gpn(r.graph) > gpn(g));
    CHECK(is_squared_chain(r.graph));

    Graph four(13);
    add_square(four, 0, 1, 2, 3);
    add_square(four, 0, 4, 5, 6);
    add_square(four, 0, 7, 8, 9);
    add_square(four, 0, 10, 11, 12);
    auto r4 = transform_bisquare(four, 0);
    CHECK(gpn(r4.graph) > gpn(four));
    CHECK(decompose(r4.graph).squares_at[0] == 3);

    Graph two(7);
    add_square(two, 0, 1, 2, 3);
    add_square(two, 0, 4, 5, 6);
    CHECK_THROWS_AS(transform_bisquare(two, 0), PreconditionError);
}

TEST_CASE("transform_maximal case 1") {
    Graph g = from(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    auto r = transform_maximal(g);
    CHECK(r.variant == "case1");
    CHECK(gpn(g) == 10);
    CHECK(gpn_brute(r.graph) == 12);
    CHECK(is_maximal_square_chain(r.graph));
    CHECK_THROWS_AS(transform_maximal(r.graph), PreconditionError);
}

TEST_CASE("transform_maximal case 2a") {
    Graph g(8);
    add_square(g, 0, 1, 2, 3);
    for (auto [u, v] : {std::pair{0, 4}, {4, 5}, {5, 0}, {2, 6}, {6, 7}}) g.add_edge(u, v);
    auto r = transform_maximal(g);
    CHECK(r.variant == "case2a");
    check_class_preserved(g, r.graph);
    CHECK(decompose(r.graph).square_count() == 2);
    CHECK(gpn(r.graph) > gpn(g));
}

TEST_CASE("transform_maximal case 2b with a two-vertex tree end") {
    Graph g(9);
    add_square(g, 0, 1, 2, 3);
    for (auto [u, v] : {std::pair{0, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 0}, {2, 8}}) g.add_edge(u, v);
    auto r = transform_maximal(g);
    CHECK(r.variant == "case2b-relocate");
    check_class_preserved(g, r.graph);
    CHECK(decompose(r.graph).square_count() == 2);
    CHECK(gpn(r.graph) > gpn(g));
}

TEST_CASE("transform_maximal case 2b with a larger tree end") {
    Graph g(10);
    add_square(g, 0, 1, 2, 3);
    for (auto [u, v] : {std::pair{0, 4}, {4, 5}, {5, 0}, {5, 6}, {6, 7}, {7, 5}, {2, 8}, {8, 9}}) g.add_edge(u, v);
    auto r = transform_maximal(g);
    CHECK(r.variant == "case2b-shift");
    check_class_preserved(g, r.graph);
    CHECK(decompose(r.graph).square_count() == 2);
    CHECK(gpn(r.graph) > gpn(g));
}

TEST_CASE("transform_balance") {
    Graph g(9);
    add_square(g, 0, 1, 2, 3);
    add_square(g, 2, 4, 5, 6);
    g.add_edge(0, 7);
    g.add_edge(7, 8);
    CHECK(is_maximal_square_chain(g));
    CHECK_FALSE(is_balanced_square_chain(g));
    auto r = transform_balance(g);
    CHECK(gpn(r.graph) > gpn(g));
    CHECK(is_balanced_square_chain(r.graph));
}

TEST_CASE("random cacti satisfy the decomposition invariants") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        std::size_t k = rng() % 5;
        std::size_t n = 2 * k + 1 + rng() % 10;
        auto g = testing::random_cactus(n, k, rng, 7);
        auto d = decompose(g);
        CHECK(d.cycle_count() == k);
        CHECK(d.cycle_count() == g.size() - g.order() + 1);
        std::map<Edge, int> owners;
        for (const auto& c : d.cycles) {
            for (std::size_t j = 0; j < c.size(); ++j) ++owners[Edge(c[j], c[(j + 1) % c.size()])];
        }
        for (const Edge& b : d.bridges) ++owners[b];
        CHECK(owners.size() == g.size());
        for (auto& [e, count] : owners) CHECK(count == 1);
    }
}

TEST_CASE("odd-cycle cacti sit exactly on the geodetic floor") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) {
        std::size_t k = 1 + rng() % 3;
        std::vector<std::size_t> lengths;
        for (std::size_t j = 0; j < k; ++j) lengths.push_back(3 + 2 * (rng() % 3));
        std::size_t used = 1;
        for (auto len : lengths) used += len - 1;
        auto g = testing::random_cactus_with(used + rng() % 4, lengths, rng);
        CHECK(gpn(g) == binomial(static_cast<unsigned>(g.order() + 1), 2));
        lengths[0] = 4 + 2 * (rng() % 2);
        used = 1;
        for (auto len : lengths) used += len - 1;
        auto even = testing::random_cactus_with(used, lengths, rng);
        CHECK(gpn(even) > binomial(static_cast<unsigned>(even.order() + 1), 2));
    }
}

TEST_CASE("improve_to_extremal reaches a balanced chain and is idempotent") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        std::size_t k = 1 + rng() % 4;
        std::size_t n = 2 * k + 2 + rng() % (14 - 2 * k - 1);
        auto g = testing::random_cactus(n, k, rng);
        auto result = improve_to_extremal(g);
        CHECK(is_balanced_square_chain(result.graph));
        BigCount last = gpn(g);
        for (const auto& s : result.steps) {
            CHECK(s.gpn_before == last);
            CHECK(s.gpn_after >= s.gpn_before);
            last = s.gpn_after;
        }
        CHECK(gpn(result.graph) == gpn(gen_balanced_square_chain(n, k)));
        CHECK(improve_to_extremal(result.graph).steps.empty());
    }
}

TEST_CASE("improve_to_extremal leaves tied classes alone") {
    auto tree = families::gen_path(6);
    auto r = improve_to_extremal(tree);
    CHECK(r.steps.empty());
    CHECK(r.graph == tree);
    Graph bowtie = from(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    CHECK(improve_to_extremal(bowtie).steps.empty());
    CHECK_FALSE(improve_to_extremal(bowtie).note.empty());
}

TEST_CASE("stop_before halts ahead of the named lemma") {
    auto c7 = families::gen_cycle(7);
    ImproveOptions opts;
    opts.stop_before = Lemma::antipodal;
    auto r = improve_to_extremal(c7, opts);
    CHECK(is_girth_restricted(r.graph));
    for (const auto& s : r.steps) CHECK(s.lemma < Lemma::antipodal);
}
