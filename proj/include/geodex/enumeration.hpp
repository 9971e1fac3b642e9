#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodex/bigcount.hpp"
#include "geodex/families.hpp"
#include "geodex/graph.hpp"

namespace geodex::enumeration {

// graph6 string of the canonically relabeled graph.
using CanonicalForm = std::string;

inline constexpr std::size_t kMaxCanonicalOrder = 12;

// Individualization-refinement search; twins are branched on once.
// Throws SizeGuardError above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

// The canonically relabeled graph itself (decode of canonical_form).
Graph canonical_graph(const Graph& g);

inline constexpr std::size_t kMaxConnectedOrder = 7;
inline constexpr std::size_t kMaxConnectedOrderLarge = 8;

// One representative per isomorphism class of connected graphs, each in
// canonical labeling, sorted by canonical form. n = 8 needs allow_large.
std::vector<Graph> enum_connected(std::size_t n, bool allow_large = false);

inline constexpr std::size_t kMaxCactusOrder = 12;

// Connected cacti with exactly k cycles, same conventions. Empty for n < 2k+1.
std::vector<Graph> enum_cacti(std::size_t n, std::size_t k);

enum class Objective { max, min };

std::string to_string(Objective objective);
Objective parse_objective(const std::string& name);

struct ExtremalReport {
    std::size_t n = 0;
    std::optional<std::size_t> k;
    Objective objective = Objective::max;
    BigCount extremal_value;
    std::vector<CanonicalForm> witnesses;  // sorted, deduplicated
    std::size_t instances_scanned = 0;
};

// Throws InputError on an empty input. All graphs must share one order.
ExtremalReport argmax_gpn(const std::vector<Graph>& graphs, unsigned workers = 0);
ExtremalReport argmin_gpn(const std::vector<Graph>& graphs, unsigned workers = 0);
ExtremalReport extremal_gpn(const std::vector<Graph>& graphs, Objective objective, unsigned workers = 0);

struct BoundClassRow {
    CanonicalForm form;
    families::BoundVerdict verdict;
};

struct BoundSweep {
    std::size_t n = 0;
    std::vector<BoundClassRow> rows;
    std::size_t paper_violations = 0;
    std::size_t safe_violations = 0;
    std::size_t safe_equalities = 0;
};

BoundSweep verify_bounds(std::size_t n, unsigned workers = 0);

struct SearchReport {
    ExtremalReport best;  // one witness: canonical form for n <= 12, plain graph6 above
    Graph best_graph;
    std::optional<BigCount> sjoin_value;  // gpn(G_{3,floor(n/3)}) when floor(n/3) >= 2
    bool beats_sjoin = false;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::size_t restarts = 0;
    std::size_t accepted_moves = 0;
};

// Hill climbing over single-edge toggles that keep the graph connected.
// `budget` counts evaluated moves. Deterministic for fixed arguments.
SearchReport local_search_max(std::size_t n, std::uint64_t seed, std::size_t budget);

struct BipartiteRow {
    std::string label;  // "K_{a,b}" or "K_{m,m}-M"
    std::size_t a = 0;
    std::size_t b = 0;
    bool connected = false;
    std::optional<BigCount> gpn_value;
};

struct BipartiteReport {
    std::size_t n = 0;
    std::vector<BipartiteRow> rows;
    std::string best_label;
    BigCount best_value;
};

inline constexpr std::size_t kMaxBipartiteOrder = 14;
BipartiteReport bipartite_experiment(std::size_t n);

}  // namespace geodex::enumeration
