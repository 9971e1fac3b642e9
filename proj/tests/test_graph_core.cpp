#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "geodex/enumeration.hpp"
#include "geodex/errors.hpp"
#include "geodex/families.hpp"
#include "geodex/geodesics.hpp"
#include "geodex/parallel.hpp"
#include "support.hpp"

using namespace geodex;
using families::gen_complete;
using families::gen_cycle;
using families::gen_path;

namespace {

Graph petersen() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace

TEST_CASE("graph mutation rejects loops, duplicates and bad ids") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK_THROWS_AS(g.remove_edge(1, 2), InputError);
    g.remove_edge(1, 0);
    CHECK(g.size() == 0);
    CHECK(g.add_vertex() == 3);
}

TEST_CASE("neighbor lists stay sorted so equal edge sets compare equal") {
    Graph a(4), b(4);
    a.add_edge(0, 3);
    a.add_edge(0, 1);
    b.add_edge(1, 0);
    b.add_edge(3, 0);
    CHECK(a == b);
    CHECK(a.neighbors(0)[0] == 1);
}

TEST_CASE("bfs_count on the 4-cycle") {
    auto t = bfs_count(gen_cycle(4), 0);
    std::vector<Distance> dist{0, 1, 2, 1};
    CHECK(t.dist == dist);
    CHECK(t.sigma == std::vector<BigCount>{1, 1, 2, 1});
}

TEST_CASE("bfs_count marks unreachable vertices") {
    Graph g(3);
    g.add_edge(0, 1);
    auto t = bfs_count(g, 0);
    CHECK_FALSE(t.dist[2].has_value());
    CHECK(t.sigma[2] == 0);
}

TEST_CASE("gpn_pair") {
    CHECK(gpn_pair(gen_cycle(4), 0, 2) == 2);
    CHECK(gpn_pair(gen_cycle(4), 1, 1) == 1);
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(gpn_pair(g, 0, 2), DisconnectedError);
}

TEST_CASE("gpn of small named graphs") {
    // values checked against an independent all-shortest-paths count
    CHECK(gpn(gen_cycle(4)) == 12);
    CHECK(gpn(gen_cycle(5)) == 15);
    CHECK(gpn(gen_cycle(6)) == 24);
    CHECK(gpn(gen_complete(4)) == 10);
    CHECK(gpn(gen_path(1)) == 1);
    CHECK(gpn(petersen()) == 55);
    CHECK(gpn(families::gen_complete_bipartite(3, 3)) == 33);
}

TEST_CASE("gpn rejects disconnected graphs") {
    CHECK_THROWS_AS(gpn(Graph(2)), DisconnectedError);
    CHECK_THROWS_AS(gpn(Graph(0)), InputError);
}

TEST_CASE("gpn_to_set sums pair counts") {
    Graph c6 = gen_cycle(6);
    std::vector<Vertex> targets{1, 2, 3};
    CHECK(gpn_to_set(c6, 0, targets) == 1 + 1 + 2);
}

TEST_CASE("geodetic graphs") {
    CHECK(is_geodetic(petersen()));
    CHECK(is_geodetic(gen_cycle(7)));
    CHECK_FALSE(is_geodetic(gen_cycle(4)));
    CHECK(is_geodetic(gen_path(6)));
}

TEST_CASE("geodesic interval levels") {
    auto levels = geodesic_interval(gen_cycle(6), 0, 3);
    REQUIRE(levels.size() == 4);
    CHECK(levels[1] == std::vector<Vertex>{1, 5});
    CHECK(levels[2] == std::vector<Vertex>{2, 4});
}

TEST_CASE("brute-force oracle agrees on every class up to six vertices") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& g : enumeration::enum_connected(n)) CHECK(gpn(g) == gpn_brute(g));
    }
}

TEST_CASE("brute-force oracle agrees on random graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        auto g = testing::random_connected(7 + rng() % 3, 0.1 + 0.1 * (i % 6), rng);
        CHECK(gpn(g) == gpn_brute(g));
    }
}

TEST_CASE("gpn_brute size guard") { CHECK_THROWS_AS(gpn_brute(gen_path(11)), SizeGuardError); }

TEST_CASE("gpn is invariant under relabeling") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto g = testing::random_connected(12, 0.25, rng);
        auto perm = testing::random_permutation(12, rng);
        CHECK(gpn(g) == gpn(relabel(g, perm)));
    }
}

TEST_CASE("gpn is the same at every worker count") {
    std::mt19937_64 rng(5);
    auto g = testing::random_connected(60, 0.08, rng);
    BigCount one = gpn(g, 1);
    CHECK(gpn(g, 2) == one);
    CHECK(gpn(g, 7) == one);
}

TEST_CASE("big counts leave the 64-bit range without loss") {
    // a chain of m squares has 2^m geodesics between its ends
    const std::size_t squares = 80;
    Graph g(3 * squares + 1);
    for (std::size_t i = 0; i < squares; ++i) {
        Vertex s = 3 * i;
        g.add_edge(s, s + 1);
        g.add_edge(s, s + 2);
        g.add_edge(s + 1, s + 3);
        g.add_edge(s + 2, s + 3);
    }
    CHECK(gpn_pair(g, 0, 3 * squares) == power(2, squares));
    // the overflow fallback must agree with plain big-integer accumulation
    BigCount ordered = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        for (const auto& sigma : bfs_count(g, s).sigma) ordered += sigma;
    }
    CHECK(gpn(g) == (ordered - g.order()) / 2 + g.order());
}

TEST_CASE("worker_count honours the environment") {
    setenv("GEODEX_WORKERS", "3", 1);
    CHECK(worker_count() == 3);
    unsetenv("GEODEX_WORKERS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("parallel_for rethrows worker exceptions") {
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                        if (i == 7) throw ConsistencyError("boom");
                    }),
                    ConsistencyError);
}
