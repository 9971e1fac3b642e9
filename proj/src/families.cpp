#include "geodex/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "geodex/cactus.hpp"
#include "geodex/errors.hpp"

namespace geodex::families {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InputError(message);
}

BigCount exact_div(const BigCount& num, const BigCount& den, const char* what) {
    BigCount q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw ConsistencyError(std::string("non-integral intermediate in ") + what);
    return q;
}

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::sequential_join: return "sjoin";
        case FamilyKind::hypercube: return "cube";
        case FamilyKind::grid: return "grid";
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::complete: return "complete";
        case FamilyKind::complete_bipartite: return "bipartite";
        case FamilyKind::balanced_square_chain: return "chain";
    }
    return "unknown";
}

FamilyKind parse_family_kind(const std::string& name) {
    for (auto kind : {FamilyKind::sequential_join, FamilyKind::hypercube, FamilyKind::grid, FamilyKind::path,
                      FamilyKind::cycle, FamilyKind::complete, FamilyKind::complete_bipartite,
                      FamilyKind::balanced_square_chain}) {
        if (to_string(kind) == name) return kind;
    }
    throw InputError("unknown family '" + name + "'");
}

Graph make_family(const FamilySpec& spec) {
    const auto& p = spec.parameters;
    auto arity = [&](std::size_t expected) {
        require(p.size() == expected, "family " + to_string(spec.kind) + " takes " + std::to_string(expected) +
                                          " parameter(s), got " + std::to_string(p.size()));
    };
    switch (spec.kind) {
        case FamilyKind::sequential_join: arity(2); return gen_sequential_join(p[0], p[1]);
        case FamilyKind::hypercube: arity(1); return gen_hypercube(p[0]);
        case FamilyKind::grid: arity(2); return gen_grid(p[0], p[1]);
        case FamilyKind::path: arity(1); return gen_path(p[0]);
        case FamilyKind::cycle: arity(1); return gen_cycle(p[0]);
        case FamilyKind::complete: arity(1); return gen_complete(p[0]);
        case FamilyKind::complete_bipartite: arity(2); return gen_complete_bipartite(p[0], p[1]);
        case FamilyKind::balanced_square_chain: arity(2); return cactus::gen_balanced_square_chain(p[0], p[1]);
    }
    throw InputError("unknown family");
}

Graph gen_sequential_join(std::size_t k, std::size_t t) {
    require(k >= 1 && t >= 1, "sequential join needs k >= 1 and t >= 1");
    Graph g(k * t);
    for (std::size_t block = 0; block + 1 < t; ++block) {
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) g.add_edge(block * k + a, (block + 1) * k + b);
        }
    }
    return g;
}

Graph gen_hypercube(std::size_t r) {
    if (r > kMaxHypercubeDimension) {
        throw SizeGuardError("hypercube dimension " + std::to_string(r) + " exceeds the limit of " +
                             std::to_string(kMaxHypercubeDimension));
    }
    const std::size_t n = std::size_t{1} << r;
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t bit = 0; bit < r; ++bit) {
            Vertex w = v ^ (std::size_t{1} << bit);
            if (v < w) g.add_edge(v, w);
        }
    }
    return g;
}

Graph gen_grid(std::size_t r, std::size_t s) {
    require(r >= 1 && s >= 1, "grid needs r >= 1 and s >= 1");
    Graph g(r * s);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < s; ++b) {
            if (a + 1 < r) g.add_edge(a * s + b, (a + 1) * s + b);
            if (b + 1 < s) g.add_edge(a * s + b, a * s + b + 1);
        }
    }
    return g;
}

Graph gen_path(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph gen_cycle(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    Graph g = gen_path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph gen_complete(std::size_t n) {
    require(n >= 1, "complete graph needs n >= 1");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
    require(a >= 1 && b >= 1, "complete bipartite graph needs both parts non-empty");
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    }
    return g;
}

BigCount formula_sjoin(std::size_t k, std::size_t t) {
    require(k >= 2 && t >= 2, "formula_sjoin is stated for k, t >= 2; use a direct gpn count instead");
    const BigCount K = k;
    const BigCount km1 = k - 1;
    BigCount geometric = exact_div(power(K, static_cast<unsigned>(t + 2)) - K * K * K, km1, "formula_sjoin");
    BigCount inner = geometric + K * K * K * (K - 2) * (t - 1);
    return exact_div(inner, km1, "formula_sjoin") + K * t;
}

BigCount formula_cube(std::size_t r) {
    require(r >= 1, "formula_cube needs r >= 1");
    const auto rr = static_cast<unsigned>(r);
    // sum_{d=1}^{r} 2^{r-1} r!/(r-d)!, built as a falling factorial
    BigCount falling = 1;
    BigCount sum = 0;
    for (unsigned d = 1; d <= rr; ++d) {
        falling *= rr - d + 1;
        sum += falling;
    }
    return power(2, rr - 1) * sum + power(2, rr);
}

BigCount formula_grid(std::size_t r, std::size_t s) {
    require(r >= 1 && s >= 1, "formula_grid needs r, s >= 1");
    BigCount rs_term = BigCount(r) * s * (r + s + 4);
    BigCount half = exact_div(rs_term, 2, "formula_grid");
    return 2 * binomial(static_cast<unsigned>(r + s + 2), static_cast<unsigned>(r + 1)) - 2 * BigCount(r) -
           2 * BigCount(s) - 4 - half;
}

BigCount grid_binomial_double_sum(std::size_t r, std::size_t s) {
    BigCount total = 0;
    for (std::size_t a = 1; a <= r; ++a) {
        for (std::size_t b = 1; b <= s; ++b) total += binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(a));
    }
    return total;
}

BigCount grid_binomial_closed_form(std::size_t r, std::size_t s) {
    return binomial(static_cast<unsigned>(r + s + 2), static_cast<unsigned>(r + 1)) - r - s - 2;
}

namespace {

enum class Comparison { below, equal, above };

// Compares x against C(n,2) * 3^{(n-2)/3} with x >= 0, via
// x^3 * 3 against C(n,2)^3 * 3^{n-1}.
Comparison compare_with_root_term(const BigCount& x, std::size_t n) {
    const BigCount c = binomial(static_cast<unsigned>(n), 2);
    BigCount lhs = 3 * x * x * x;
    BigCount rhs = c * c * c * power(3, static_cast<unsigned>(n - 1));
    if (lhs < rhs) return Comparison::below;
    if (lhs == rhs) return Comparison::equal;
    return Comparison::above;
}

Comparison paper_comparison(const BigCount& gpn_value, std::size_t n) {
    BigCount d = gpn_value - n;
    if (d < 0) return Comparison::below;
    if (d == 0) return n >= 2 ? Comparison::below : Comparison::equal;
    return compare_with_root_term(3 * d, n);
}

Comparison safe_comparison(const BigCount& gpn_value, std::size_t n) {
    BigCount e = 3 * (gpn_value - n) - 2 * binomial(static_cast<unsigned>(n), 2);
    if (e < 0) return Comparison::below;
    if (e == 0) return n >= 2 ? Comparison::below : Comparison::equal;
    return compare_with_root_term(e, n);
}

const char* describe(Comparison c) {
    switch (c) {
        case Comparison::below: return "holds";
        case Comparison::equal: return "holds with equality";
        case Comparison::above: return "violated";
    }
    return "";
}

}  // namespace

bool check_paper_bound(const BigCount& gpn_value, std::size_t n) {
    require(n >= 1, "bound check needs n >= 1");
    return paper_comparison(gpn_value, n) != Comparison::above;
}

bool check_safe_bound(const BigCount& gpn_value, std::size_t n) {
    require(n >= 1, "bound check needs n >= 1");
    return safe_comparison(gpn_value, n) != Comparison::above;
}

double paper_bound_estimate(std::size_t n) {
    double c = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    return c / 3.0 * std::pow(3.0, (static_cast<double>(n) - 2.0) / 3.0) + static_cast<double>(n);
}

BoundVerdict evaluate_bounds(const BigCount& gpn_value, std::size_t n) {
    require(n >= 1, "bound check needs n >= 1");
    BoundVerdict verdict;
    verdict.n = n;
    verdict.gpn_value = gpn_value;
    auto paper = paper_comparison(gpn_value, n);
    auto safe = safe_comparison(gpn_value, n);
    verdict.paper_bound_holds = paper != Comparison::above;
    verdict.safe_bound_holds = safe != Comparison::above;
    verdict.margin_note = std::string("paper-stated: ") + describe(paper) + "; safe: " + describe(safe);
    return verdict;
}

namespace {

std::string params(std::initializer_list<std::size_t> values) {
    std::ostringstream out;
    bool first = true;
    for (auto v : values) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    return out.str();
}

std::size_t floor_log2(std::size_t n) {
    std::size_t r = 0;
    while ((std::size_t{2} << r) <= n) ++r;
    return r;
}

std::size_t ceil_sqrt(std::size_t n) {
    std::size_t m = 0;
    while (m * m < n) ++m;
    return m;
}

}  // namespace

AsymptoticsReport asymptotics_report(std::size_t n) {
    require(n >= 3, "asymptotics report needs n >= 3");
    const double nd = static_cast<double>(n);
    AsymptoticsReport report;
    report.n = n;

    for (std::size_t k : {std::size_t{3}, std::size_t{2}}) {
        const std::size_t t = n / k;
        AsymptoticsRow row;
        row.family = "G_{" + std::to_string(k) + ",t}";
        row.parameters = params({k, t});
        row.vertices = k * t;
        row.estimate = std::pow(static_cast<double>(k) / (k - 1.0), 2) * std::pow(static_cast<double>(k), nd / k);
        if (t >= 2) {
            row.exact = formula_sjoin(k, t);
        } else {
            row.note = "out of formula domain (t >= 2); G_{k,1} is disconnected";
        }
        report.rows.push_back(std::move(row));
    }

    {
        const std::size_t r = floor_log2(n);
        AsymptoticsRow row;
        row.family = "Q_r";
        row.parameters = params({r});
        row.vertices = std::size_t{1} << r;
        row.exact = formula_cube(r);
        row.estimate = std::pow(2.0, static_cast<double>(r) - 1.0) * std::tgamma(static_cast<double>(r) + 1.0) *
                           std::numbers::e +
                       std::pow(2.0, static_cast<double>(r));
        report.rows.push_back(std::move(row));
    }

    {
        const std::size_t m = ceil_sqrt(n);
        AsymptoticsRow row;
        row.family = "R_{m,m}";
        row.parameters = params({m, m});
        row.vertices = m * m;
        row.exact = formula_grid(m, m);
        const double md = static_cast<double>(m);
        row.estimate = 2.0 / std::sqrt(std::numbers::pi * md) * std::pow(2.0, 2.0 * md);
        report.rows.push_back(std::move(row));
    }

    {
        AsymptoticsRow row;
        row.family = "bound";
        row.parameters = params({n});
        row.vertices = n;
        row.estimate = paper_bound_estimate(n);
        row.note = "upper bound; irrational unless n = 2 mod 3";
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::size_t estimate_crossover() {
    // 4 * 2^{n/2} < (9/4) * 3^{n/3}  <=>  2^{24+3n} < 3^{12+2n} after raising to the 6th power.
    // The ratio of the two sides grows by 9/8 per step, so the first hit is final.
    for (unsigned n = 1; n < 10000; ++n) {
        if (power(2, 24 + 3 * n) < power(3, 12 + 2 * n)) return n;
    }
    throw ConsistencyError("no crossover found");
}

std::size_t exact_block_crossover(std::size_t limit) {
    std::size_t candidate = 0;
    for (std::size_t n = 6; n <= limit; n += 6) {
        bool three_wins = formula_sjoin(3, n / 3) > formula_sjoin(2, n / 2);
        if (!three_wins) {
            candidate = 0;
        } else if (candidate == 0) {
            candidate = n;
        }
    }
    return candidate;
}

}  // namespace geodex::families
