#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "geodex/cactus.hpp"
#include "geodex/enumeration.hpp"
#include "geodex/errors.hpp"
#include "geodex/families.hpp"
#include "geodex/geodesics.hpp"
#include "geodex/graph_io.hpp"
#include "support.hpp"

using namespace geodex;
using namespace geodex::enumeration;

namespace {

// Independent isomorphism oracle: smallest adjacency bitmask over all vertex
// permutations. Only usable for tiny n.
std::uint32_t brute_certificate(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint32_t best = ~std::uint32_t{0};
    do {
        std::uint32_t mask = 0;
        std::size_t bit = 0;
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i, ++bit) {
                if (g.has_edge(perm[i], perm[j])) mask |= std::uint32_t{1} << bit;
            }
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Raw edge-subset enumeration with connectivity filter and brute dedup.
std::multiset<BigCount> raw_class_values(std::size_t n) {
    std::vector<Edge> pairs;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    std::map<std::uint32_t, BigCount> classes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (mask >> b & 1u) g.add_edge(pairs[b].u, pairs[b].v);
        }
        if (!is_connected(g)) continue;
        auto cert = brute_certificate(g);
        if (!classes.count(cert)) classes.emplace(cert, gpn(g));
    }
    std::multiset<BigCount> out;
    for (auto& [cert, value] : classes) out.insert(value);
    return out;
}

std::set<CanonicalForm> forms(const std::vector<Graph>& graphs) {
    std::set<CanonicalForm> out;
    for (const auto& g : graphs) out.insert(canonical_form(g));
    return out;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    Graph p3a(3), p3b(3);
    p3a.add_edge(0, 1);
    p3a.add_edge(1, 2);
    p3b.add_edge(1, 0);
    p3b.add_edge(0, 2);
    CHECK(canonical_form(p3a) == canonical_form(p3b));
    CHECK(canonical_form(families::gen_cycle(4)) != canonical_form(families::gen_path(4)));

    Graph k4e = families::gen_complete(4);
    k4e.remove_edge(0, 1);
    Graph other = families::gen_complete(4);
    other.remove_edge(2, 3);
    CHECK(canonical_form(k4e) == canonical_form(other));

    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        auto g = testing::random_connected(6 + rng() % 7, 0.3, rng);
        auto perm = testing::random_permutation(g.order(), rng);
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }
}

TEST_CASE("canonical form separates what the brute certificate separates") {
    auto all = enum_connected(6);
    std::set<std::uint32_t> certs;
    for (const auto& g : all) certs.insert(brute_certificate(g));
    CHECK(certs.size() == all.size());
}

TEST_CASE("canonical form size guard") {
    CHECK_THROWS_AS(canonical_form(families::gen_path(kMaxCanonicalOrder + 1)), SizeGuardError);
}

TEST_CASE("connected class counts") {
    std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(enum_connected(n).size() == expected[n - 1]);
    CHECK_THROWS_AS(enum_connected(8), SizeGuardError);
    CHECK_THROWS_AS(enum_connected(0), InputError);
}

TEST_CASE("enumeration output is sorted by canonical form and canonically labeled") {
    auto all = enum_connected(5);
    std::vector<CanonicalForm> f;
    for (const auto& g : all) {
        f.push_back(io::render_graph6(g));
        CHECK(canonical_form(g) == f.back());
    }
    CHECK(std::is_sorted(f.begin(), f.end()));
}

TEST_CASE("enumeration agrees with raw edge-subset enumeration") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::multiset<BigCount> ours;
        for (const auto& g : enum_connected(n)) ours.insert(gpn(g));
        CHECK(ours == raw_class_values(n));
    }
}

TEST_CASE("cacti agree with the filtered connected classes") {
    for (std::size_t n = 1; n <= 7; ++n) {
        std::map<std::size_t, std::vector<Graph>> by_k;
        for (const auto& g : enum_connected(n)) {
            if (cactus::is_cactus(g)) by_k[cactus::decompose(g).cycle_count()].push_back(g);
        }
        for (std::size_t k = 0; 2 * k + 1 <= n; ++k) CHECK(forms(enum_cacti(n, k)) == forms(by_k[k]));
    }
}

TEST_CASE("cactus enumeration examples") {
    CHECK(enum_cacti(5, 0).size() == 3);
    CHECK(enum_cacti(5, 2).size() == 1);
    CHECK(enum_cacti(4, 2).empty());
    std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (std::size_t n = 1; n <= 12; ++n) CHECK(enum_cacti(n, 0).size() == trees[n - 1]);
    CHECK_THROWS_AS(enum_cacti(13, 1), SizeGuardError);
}

TEST_CASE("argmin over connected graphs is the set of geodetic classes") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto all = enum_connected(n);
        auto r = argmin_gpn(all);
        CHECK(r.extremal_value == binomial(static_cast<unsigned>(n + 1), 2));
        std::vector<CanonicalForm> geodetic;
        for (const auto& g : all) {
            if (is_geodetic(g)) geodetic.push_back(canonical_form(g));
        }
        std::sort(geodetic.begin(), geodetic.end());
        CHECK(r.witnesses == geodetic);
    }
    CHECK(argmin_gpn(enum_connected(5)).witnesses.size() == 10);
}

TEST_CASE("extremal cacti") {
    auto r = argmax_gpn(enum_cacti(9, 2));
    CHECK(r.extremal_value == 71);
    CHECK(r.witnesses == std::vector<CanonicalForm>{canonical_form(cactus::gen_balanced_square_chain(9, 2))});
    auto low = argmin_gpn(enum_cacti(7, 2));
    CHECK(low.extremal_value == 28);
    CHECK_THROWS_AS(argmax_gpn({}), InputError);
}

TEST_CASE("bound sweep") {
    auto two = verify_bounds(2);
    CHECK(two.paper_violations == 1);
    CHECK(two.safe_violations == 0);
    CHECK(two.safe_equalities == 1);
    auto four = verify_bounds(4);
    CHECK(four.rows.size() == 6);
    CHECK(four.safe_violations == 0);
    CHECK_THROWS_AS(verify_bounds(8), SizeGuardError);
}

TEST_CASE("local search") {
    auto six = local_search_max(6, 1, 300);
    CHECK(six.best.extremal_value >= 33);
    CHECK(local_search_max(3, 5, 50).best.extremal_value == 6);
    auto a = local_search_max(9, 42, 400);
    auto b = local_search_max(9, 42, 400);
    CHECK(a.best.extremal_value == b.best.extremal_value);
    CHECK(a.best.witnesses == b.best.witnesses);
    CHECK(a.restarts == b.restarts);
    CHECK(a.sjoin_value == families::formula_sjoin(3, 3));
    CHECK_FALSE(local_search_max(5, 1, 20).sjoin_value.has_value());
}

TEST_CASE("bipartite experiment") {
    auto six = bipartite_experiment(6);
    REQUIRE(six.rows.size() == 4);
    CHECK(*six.rows[2].gpn_value == 33);
    CHECK(*six.rows[3].gpn_value == 24);
    CHECK(six.best_label == "K_{3,3}");
    auto four = bipartite_experiment(4);
    CHECK(*four.rows[1].gpn_value == 12);
    CHECK_FALSE(four.rows[2].connected);
}

TEST_CASE("unicyclic class counts") {
    // number of connected unicyclic graphs on n = 3..12 vertices
    std::vector<std::size_t> expected{1, 2, 5, 13, 33, 89, 240, 657, 1806, 5026};
    for (std::size_t n = 3; n <= 12; ++n) CHECK(enum_cacti(n, 1).size() == expected[n - 3]);
}

TEST_CASE("maximizers are exactly the balanced square chains up to ten vertices") {
    for (std::size_t n = 4; n <= 10; ++n) {
        for (std::size_t k = 1; 2 * k + 1 < n; ++k) {
            auto all = enum_cacti(n, k);
            auto high = argmax_gpn(all);
            std::set<CanonicalForm> balanced;
            for (const auto& g : all) {
                if (cactus::is_balanced_square_chain(g)) balanced.insert(canonical_form(g));
            }
            CHECK(std::set<CanonicalForm>(high.witnesses.begin(), high.witnesses.end()) == balanced);
        }
    }
}
