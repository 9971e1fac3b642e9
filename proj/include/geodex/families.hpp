#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geodex/bigcount.hpp"
#include "geodex/graph.hpp"

namespace geodex::families {

enum class FamilyKind {
    sequential_join,
    hypercube,
    grid,
    path,
    cycle,
    complete,
    complete_bipartite,
    balanced_square_chain,
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<std::size_t> parameters;
};

std::string to_string(FamilyKind kind);
// Accepts the CLI names: sjoin, cube, grid, path, cycle, complete, bipartite, chain.
FamilyKind parse_family_kind(const std::string& name);

// Throws InputError when the parameter count or values are outside the
// family's domain.
Graph make_family(const FamilySpec& spec);

// t blocks of k independent vertices, block i on ids [i*k, (i+1)*k), every
// vertex joined to every vertex of the neighboring blocks.
Graph gen_sequential_join(std::size_t k, std::size_t t);

inline constexpr std::size_t kMaxHypercubeDimension = 20;
Graph gen_hypercube(std::size_t r);

// Vertex (a, b), 0 <= a < r, 0 <= b < s, has id a*s + b.
Graph gen_grid(std::size_t r, std::size_t s);
Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
// Parts [0, a) and [a, a+b).
Graph gen_complete_bipartite(std::size_t a, std::size_t b);

// Closed forms. Every division is checked for a zero remainder; a nonzero
// remainder throws ConsistencyError.
BigCount formula_sjoin(std::size_t k, std::size_t t);
BigCount formula_cube(std::size_t r);
BigCount formula_grid(std::size_t r, std::size_t s);

// Sum over 1<=a<=r, 1<=b<=s of C(a+b, a), by direct summation.
BigCount grid_binomial_double_sum(std::size_t r, std::size_t s);
// Closed form of the same sum: C(r+s+2, r+1) - r - s - 2.
BigCount grid_binomial_closed_form(std::size_t r, std::size_t s);

// gpn <= (1/3) C(n,2) 3^{(n-2)/3} + n, decided in integers by cubing.
bool check_paper_bound(const BigCount& gpn_value, std::size_t n);
// gpn <= (1/3) C(n,2) 3^{(n-2)/3} + (2/3) C(n,2) + n, same technique.
bool check_safe_bound(const BigCount& gpn_value, std::size_t n);

// Floating-point value of the stated bound, for reports only.
double paper_bound_estimate(std::size_t n);

struct BoundVerdict {
    std::size_t n = 0;
    BigCount gpn_value;
    bool paper_bound_holds = false;
    bool safe_bound_holds = false;
    std::string margin_note;
};

BoundVerdict evaluate_bounds(const BigCount& gpn_value, std::size_t n);

struct AsymptoticsRow {
    std::string family;       // "G_{3,t}", "Q_r", "R_{m,m}", "G_{2,t}", "bound"
    std::string parameters;
    std::size_t vertices = 0;
    std::optional<BigCount> exact;
    double estimate = 0.0;  // reported with a "~" marker, never compared for acceptance
    std::string note;
};

struct AsymptoticsReport {
    std::size_t n = 0;
    std::vector<AsymptoticsRow> rows;
};

AsymptoticsReport asymptotics_report(std::size_t n);

// Smallest n from which 4 * 2^{n/2} < (9/4) * 3^{n/3} holds (the comparison
// of the two-block and three-block estimates), decided exactly.
std::size_t estimate_crossover();

// Smallest multiple of 6 from which formula_sjoin(3, n/3) > formula_sjoin(2, n/2)
// holds for every multiple of 6 up to `limit`.
std::size_t exact_block_crossover(std::size_t limit = 600);

}  // namespace geodex::families
