#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geodex/bigcount.hpp"
#include "geodex/errors.hpp"
#include "geodex/graph.hpp"

namespace geodex::cactus {

using Cycle = std::vector<Vertex>;

// Thrown by decompose() on a graph with two edge-sharing cycles.
class NotCactusError : public InputError {
public:
    NotCactusError(Cycle first, Cycle second);

    const std::pair<Cycle, Cycle>& witness() const noexcept { return witness_; }

private:
    std::pair<Cycle, Cycle> witness_;
};

// Cycles are listed in cyclic order starting at their smallest vertex and
// heading towards its smaller cycle neighbor; the list itself is sorted.
struct CactusDecomposition {
    std::size_t order = 0;
    std::vector<Cycle> cycles;
    std::vector<Edge> bridges;
    std::vector<Edge> square_edges;
    std::vector<std::size_t> squares_at;  // per vertex: number of squares through it
    std::vector<std::size_t> cycles_at;   // per vertex: number of cycles through it
    std::vector<Vertex> squared_vertices;
    std::vector<Vertex> active_vertices;  // cyclic, degree >= 3
    std::vector<Vertex> multisquared_vertices;
    std::vector<Vertex> bisquared_vertices;
    // Non-trivial components of G - E_S, each sorted, ordered by smallest member.
    std::vector<std::vector<Vertex>> unipath_structures;

    std::size_t cycle_count() const noexcept { return cycles.size(); }
    std::size_t square_count() const;
    bool is_active(Vertex v) const;
};

// Both require a connected graph.
bool is_cactus(const Graph& g);
CactusDecomposition decompose(const Graph& g);

// Rotates and orients a cycle to the canonical order used throughout.
Cycle normalize_cycle(std::span<const Vertex> cycle);

// Square-count target of a maximal square chain on n vertices with k cycles.
std::size_t max_square_count(std::size_t n, std::size_t k);

// Structural predicates, each presupposing the previous one: a predicate
// returns false (not an error) when an earlier link of the chain fails.
// Non-cactus input throws NotCactusError.
bool is_girth_restricted(const Graph& g);
bool is_antipodal_cactus(const Graph& g);
bool is_unipath_resolved(const Graph& g);
bool is_squared_chain(const Graph& g);
bool is_maximal_square_chain(const Graph& g);
bool is_balanced_square_chain(const Graph& g);

struct PredicateFlags {
    bool girth_restricted = false;
    bool antipodal = false;
    bool unipath_resolved = false;
    bool squared_chain = false;
    bool maximal_square_chain = false;
    bool balanced_square_chain = false;
};

PredicateFlags evaluate_predicates(const Graph& g);
PredicateFlags evaluate_predicates(const Graph& g, const CactusDecomposition& d);

// Sizes of the two largest components of G - E_S, counting the trivial
// components (single vertices) as size 1. Only meaningful for squared chains.
std::pair<std::size_t, std::size_t> largest_unipath_components(const Graph& g, const CactusDecomposition& d);

// Free antipodal endpoints of the square chain (requires at least one square).
std::pair<Vertex, Vertex> chain_endpoints(const Graph& g, const CactusDecomposition& d);

enum class Lemma { odd, girth, antipodal, unipath, bisquare, maximal, balance };

std::string to_string(Lemma lemma);

// Output of one graph rewrite. `variant` names the case taken, e.g.
// "case1" or "case2" for transform_unipath.
struct Rewrite {
    Graph graph;
    std::vector<Edge> removed;
    std::vector<Edge> added;
    std::string variant;
};

// Odd cycle of length >= 5: drop v1 v_g, add v2 v_g.
Rewrite transform_odd(const Graph& g, std::span<const Vertex> cycle);
// Even cycle of length >= 6: shrink it by two.
Rewrite transform_girth(const Graph& g, std::span<const Vertex> cycle);
// Multiactive, non-antipodal square: move the outside attachments of two
// adjacent corners so that the active corners end up antipodal.
Rewrite transform_antipodal(const Graph& g, std::span<const Vertex> square);
// Non-good unipath structure of an antipodal cactus. Case 1 (several squared
// vertices) gathers all squares at one vertex and keeps gpn; case 2 (one
// squared vertex on several squares) re-hangs the structure at the far end
// of the lighter side and raises gpn.
Rewrite transform_unipath(const Graph& g, std::span<const Vertex> structure);
// Vertex on three or more squares in a unipath-resolved cactus: re-anchor one
// square at the far end of the lighter side.
Rewrite transform_bisquare(const Graph& g, Vertex vertex);
// Squared chain that is not maximal: gain one square.
Rewrite transform_maximal(const Graph& g);
// Maximal square chain that is not balanced: move a leaf (or a leaf triangle)
// from the larger end structure to the other end.
Rewrite transform_balance(const Graph& g);

struct TransformStep {
    Lemma lemma = Lemma::odd;
    std::string variant;
    std::vector<Edge> removed;
    std::vector<Edge> added;
    BigCount gpn_before;
    BigCount gpn_after;
};

struct ImproveResult {
    Graph graph;
    std::vector<TransformStep> steps;
    std::string note;
};

struct ImproveOptions {
    // Stop as soon as the next step would use this lemma (or a later one).
    std::optional<Lemma> stop_before;
};

// Applies the lemma chain odd -> girth -> antipodal -> unipath -> bisquare ->
// maximal -> balance until the graph is a balanced square chain. gpn never
// decreases along the steps; a failed invariant throws ConsistencyError.
ImproveResult improve_to_extremal(const Graph& g, const ImproveOptions& options = {});

// Requires k >= 1 and n > 2k+1. Square i occupies a chain position; the
// remaining vertices form pendant paths (n >= 3k+1) or triangle chains
// (n < 3k+1) split as evenly as possible between the two ends.
Graph gen_balanced_square_chain(std::size_t n, std::size_t k);

}  // namespace geodex::cactus
