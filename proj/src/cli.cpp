#include "geodex/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geodex/bigcount.hpp"
#include "geodex/cactus.hpp"
#include "geodex/enumeration.hpp"
#include "geodex/errors.hpp"
#include "geodex/families.hpp"
#include "geodex/geodesics.hpp"
#include "geodex/graph_io.hpp"

namespace geodex::cli {

namespace {

using json = nlohmann::json;

// Largest order for which `formula --cross-check` runs the direct count.
constexpr std::size_t kCrossCheckMaxOrder = 4096;

struct Report {
    explicit Report(std::string name) : command(std::move(name)) {}

    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> notes;
    // Table projected by --csv; falls back to scalar results when empty.
    json rows = json::array();
    bool consistency_failure = false;
};

std::string dec(const BigCount& x) { return to_decimal(x); }

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

json flags_json(const cactus::PredicateFlags& f) {
    return {{"girth_restricted", f.girth_restricted},
            {"antipodal", f.antipodal},
            {"unipath_resolved", f.unipath_resolved},
            {"squared_chain", f.squared_chain},
            {"maximal_square_chain", f.maximal_square_chain},
            {"balanced_square_chain", f.balanced_square_chain}};
}

json extremal_json(const enumeration::ExtremalReport& r) {
    json out{{"n", r.n},
             {"objective", enumeration::to_string(r.objective)},
             {"extremal_value", dec(r.extremal_value)},
             {"witnesses", r.witnesses},
             {"instances_scanned", r.instances_scanned}};
    out["k"] = r.k ? json(*r.k) : json(nullptr);
    return out;
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void write_csv(const Report& report, std::ostream& out) {
    if (!report.rows.empty()) {
        std::vector<std::string> columns;
        for (auto& [key, value] : report.rows.front().items()) columns.push_back(key);
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
        out << "\n";
        for (const auto& row : report.rows) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                out << (i ? "," : "") << (row.contains(columns[i]) ? csv_cell(row[columns[i]]) : "");
            }
            out << "\n";
        }
        return;
    }
    out << "key,value\n";
    for (auto& [key, value] : report.results.items()) {
        if (value.is_structured()) continue;
        out << key << "," << csv_cell(value) << "\n";
    }
}

void write_json(const Report& report, std::ostream& out) {
    json body{{"schema", kReportSchema},
              {"command", report.command},
              {"inputs", report.inputs},
              {"results", report.results},
              {"notes", report.notes}};
    if (!report.rows.empty()) body["results"]["rows"] = report.rows;
    out << body.dump(2) << "\n";
}

std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

class GraphLoader {
public:
    GraphLoader(std::istream& in, const std::string& format) : in_(in), format_(format) {}

    Graph load(const std::string& source) const {
        if (source.rfind("g6:", 0) == 0) return io::parse_graph6(source.substr(3));
        auto format = io::parse_format_name(format_);
        if (source == "-") return io::parse_graph(read_all(in_), format);
        std::ifstream file(source, std::ios::binary);
        if (!file) throw InputError("cannot open graph file '" + source + "'");
        return io::parse_graph(read_all(file), format);
    }

private:
    std::istream& in_;
    const std::string& format_;
};

void require_connected(const Graph& g) {
    if (g.order() == 0) throw InputError("graph has no vertices");
    if (!is_connected(g)) throw DisconnectedError("graph is disconnected; gpn is defined for connected graphs");
}

std::optional<std::size_t> as_count(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return std::nullopt;
    }
    return std::stoull(s);
}

json params_json(const std::vector<std::size_t>& p) { return json(p); }

Report cmd_gpn(const Graph& g, bool brute) {
    require_connected(g);
    Report r{"gpn"};
    r.results = {{"n", g.order()}, {"m", g.size()}, {"gpn", dec(gpn(g))}};
    if (brute) {
        BigCount b = gpn_brute(g);
        bool match = b == gpn(g);
        r.results["brute"] = dec(b);
        r.results["cross_check"] = match ? "match" : "mismatch";
        r.consistency_failure = !match;
    }
    return r;
}

Report cmd_pair(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    Report r{"pair"};
    auto dist = bfs_distances(g, u);
    if (!dist[v]) throw DisconnectedError("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not connected");
    r.results = {{"u", u}, {"v", v}, {"distance", *dist[v]}, {"geodesics", dec(gpn_pair(g, u, v))}};
    json levels = json::array();
    for (const auto& level : geodesic_interval(g, u, v)) levels.push_back(level);
    r.results["interval_levels"] = levels;
    return r;
}

Report cmd_geodetic(const Graph& g) {
    require_connected(g);
    Report r{"geodetic"};
    const std::size_t n = g.order();
    r.results = {{"n", n}, {"geodetic", is_geodetic(g)}, {"gpn", dec(gpn(g))}, {"floor", dec(binomial(n + 1, 2))}};
    return r;
}

Report cmd_family(const std::string& kind, const std::vector<std::size_t>& params, io::GraphFormat format) {
    families::FamilySpec spec{families::parse_family_kind(kind), params};
    Graph g = families::make_family(spec);
    Report r{"family"};
    r.inputs = {{"kind", families::to_string(spec.kind)}, {"parameters", params_json(params)}};
    std::string text = io::render_graph(g, format);
    if (!text.empty() && text.back() == '\n' && format != io::GraphFormat::edge_list) text.pop_back();
    r.results = {{"n", g.order()}, {"m", g.size()}, {"graph", text}};
    return r;
}

struct FormulaCase {
    std::string family;
    std::vector<std::size_t> params;
};

json formula_row(const FormulaCase& c, bool cross_check, bool& mismatch) {
    BigCount value;
    Graph g;
    if (c.family == "sjoin") {
        if (c.params.size() != 2) throw InputError("sjoin takes k and t");
        value = families::formula_sjoin(c.params[0], c.params[1]);
    } else if (c.family == "cube") {
        if (c.params.size() != 1) throw InputError("cube takes r");
        value = families::formula_cube(c.params[0]);
    } else if (c.family == "grid") {
        if (c.params.size() != 2) throw InputError("grid takes r and s");
        value = families::formula_grid(c.params[0], c.params[1]);
    } else {
        throw InputError("formula family must be sjoin, cube, grid or sweep");
    }
    json row{{"family", c.family}, {"parameters", params_json(c.params)}, {"formula", dec(value)}};
    if (!cross_check) {
        row["cross_check"] = "not requested";
        return row;
    }
    families::FamilySpec spec{families::parse_family_kind(c.family), c.params};
    g = families::make_family(spec);
    if (g.order() > kCrossCheckMaxOrder) {
        row["cross_check"] = "skipped: order above " + std::to_string(kCrossCheckMaxOrder);
        return row;
    }
    BigCount direct = gpn(g);
    row["direct"] = dec(direct);
    row["cross_check"] = direct == value ? "match" : "mismatch";
    if (direct != value) mismatch = true;
    return row;
}

Report cmd_formula(const std::string& family, const std::vector<std::size_t>& params, bool cross_check) {
    Report r{"formula"};
    r.inputs = {{"family", family}, {"parameters", params_json(params)}, {"cross_check", cross_check}};
    bool mismatch = false;
    if (family == "sweep") {
        const std::size_t top = params.empty() ? 5 : params[0];
        if (params.size() > 1) throw InputError("formula sweep takes at most one bound");
        for (std::size_t k = 2; k <= top; ++k) {
            for (std::size_t t = 2; t <= top; ++t) r.rows.push_back(formula_row({"sjoin", {k, t}}, cross_check, mismatch));
        }
        for (std::size_t d = 1; d <= top; ++d) r.rows.push_back(formula_row({"cube", {d}}, cross_check, mismatch));
        for (std::size_t a = 1; a <= top; ++a) {
            for (std::size_t b = 1; b <= top; ++b) r.rows.push_back(formula_row({"grid", {a, b}}, cross_check, mismatch));
        }
        r.results["cases"] = r.rows.size();
    } else {
        json row = formula_row({family, params}, cross_check, mismatch);
        r.results = row;
        if (family == "grid") {
            BigCount lhs = families::grid_binomial_double_sum(params[0], params[1]);
            BigCount rhs = families::grid_binomial_closed_form(params[0], params[1]);
            r.results["binomial_identity"] = lhs == rhs ? "holds" : "fails";
            if (lhs != rhs) mismatch = true;
        }
    }
    r.results["mismatches"] = mismatch ? "yes" : "none";
    r.consistency_failure = mismatch;
    r.notes.push_back("formula values are closed forms; direct values come from BFS path counting");
    return r;
}

json verdict_json(const families::BoundVerdict& v) {
    return {{"n", v.n},
            {"gpn", dec(v.gpn_value)},
            {"paper-stated", v.paper_bound_holds ? "holds" : "violated"},
            {"safe", v.safe_bound_holds ? "holds" : "violated"},
            {"margin", v.margin_note}};
}

Report cmd_bound(const std::string& target, const GraphLoader& loader) {
    Report r{"bound"};
    r.notes.push_back("paper-stated: gpn <= (1/3) C(n,2) 3^((n-2)/3) + n");
    r.notes.push_back("safe: gpn <= (1/3) C(n,2) 3^((n-2)/3) + (2/3) C(n,2) + n");
    if (auto n = as_count(target)) {
        auto sweep = enumeration::verify_bounds(*n);
        r.inputs = {{"n", *n}};
        for (const auto& row : sweep.rows) {
            json j = verdict_json(row.verdict);
            j["graph6"] = row.form;
            r.rows.push_back(j);
        }
        r.results = {{"n", *n},
                     {"classes", sweep.rows.size()},
                     {"paper_stated_violations", sweep.paper_violations},
                     {"safe_violations", sweep.safe_violations},
                     {"safe_equalities", sweep.safe_equalities}};
        r.consistency_failure = sweep.safe_violations > 0;
        return r;
    }
    Graph g = loader.load(target);
    require_connected(g);
    r.inputs = {{"graph", io::render_graph6(g)}};
    r.results = verdict_json(families::evaluate_bounds(gpn(g), g.order()));
    return r;
}

Report cmd_asymptotics(std::size_t n) {
    Report r{"asymptotics"};
    r.inputs = {{"n", n}};
    auto rep = families::asymptotics_report(n);
    for (const auto& row : rep.rows) {
        std::ostringstream est;
        est.precision(6);
        est << "~" << row.estimate;
        r.rows.push_back({{"family", row.family},
                          {"parameters", row.parameters},
                          {"vertices", row.vertices},
                          {"exact", row.exact ? json(dec(*row.exact)) : json(nullptr)},
                          {"estimate", est.str()},
                          {"note", row.note}});
    }
    r.results = {{"n", n},
                 {"estimate_crossover", families::estimate_crossover()},
                 {"exact_block_crossover", families::exact_block_crossover()}};
    r.notes.push_back("estimate columns are floating-point and informative only");
    return r;
}

Report cmd_cactus_check(const Graph& g) {
    require_connected(g);
    Report r{"cactus check"};
    r.inputs = {{"graph", io::render_graph6(g)}};
    try {
        auto d = cactus::decompose(g);
        json cycles = json::array();
        for (const auto& c : d.cycles) cycles.push_back(c);
        r.results = {{"cactus", true},
                     {"n", g.order()},
                     {"cycles", cycles},
                     {"cycle_count", d.cycle_count()},
                     {"square_count", d.square_count()},
                     {"max_square_count", cactus::max_square_count(g.order(), d.cycle_count())},
                     {"bridges", edges_json(d.bridges)},
                     {"unipath_structures", d.unipath_structures},
                     {"predicates", flags_json(cactus::evaluate_predicates(g, d))},
                     {"gpn", dec(gpn(g))}};
    } catch (const cactus::NotCactusError& e) {
        r.results = {{"cactus", false}, {"witness", {e.witness().first, e.witness().second}}};
    }
    return r;
}

Report cmd_cactus_improve(const Graph& g) {
    require_connected(g);
    Report r{"cactus improve"};
    r.inputs = {{"graph", io::render_graph6(g)}};
    auto result = cactus::improve_to_extremal(g);
    for (const auto& s : result.steps) {
        r.rows.push_back({{"lemma", cactus::to_string(s.lemma)},
                          {"variant", s.variant},
                          {"removed", edges_json(s.removed)},
                          {"added", edges_json(s.added)},
                          {"gpn_before", dec(s.gpn_before)},
                          {"gpn_after", dec(s.gpn_after)}});
    }
    r.results = {{"steps", result.steps.size()},
                 {"initial_gpn", dec(gpn(g))},
                 {"final_gpn", dec(gpn(result.graph))},
                 {"final_graph", io::render_graph6(result.graph)},
                 {"final_predicates", flags_json(cactus::evaluate_predicates(result.graph))}};
    r.notes.push_back(result.note);
    return r;
}

Report cmd_cactus_balanced(std::size_t n, std::size_t k) {
    Report r{"cactus balanced"};
    r.inputs = {{"n", n}, {"k", k}};
    Graph g = cactus::gen_balanced_square_chain(n, k);
    r.results = {{"graph", io::render_graph6(g)},
                 {"gpn", dec(gpn(g))},
                 {"square_count", cactus::max_square_count(n, k)},
                 {"regime", n >= 3 * k + 1 ? "n >= 3k+1" : "n < 3k+1"},
                 {"predicates", flags_json(cactus::evaluate_predicates(g))}};
    return r;
}

Report cmd_enum(const std::string& what, const std::vector<std::size_t>& args, const std::string& objective,
                bool large, bool list) {
    Report r{"enum " + what};
    std::vector<Graph> graphs;
    std::optional<std::size_t> k;
    if (what == "connected") {
        if (args.size() != 1) throw InputError("enum connected takes n");
        graphs = enumeration::enum_connected(args[0], large);
    } else {
        if (args.size() != 2) throw InputError("enum cacti takes n and k");
        graphs = enumeration::enum_cacti(args[0], args[1]);
        k = args[1];
    }
    r.inputs = {{"n", args[0]}, {"objective", objective}};
    if (k) r.inputs["k"] = *k;
    r.results = {{"classes", graphs.size()}};
    if (list) {
        for (const auto& g : graphs) r.rows.push_back({{"graph6", io::render_graph6(g)}, {"gpn", dec(gpn(g))}});
    }
    if (graphs.empty()) {
        r.notes.push_back("empty class");
        return r;
    }
    auto ext = enumeration::extremal_gpn(graphs, enumeration::parse_objective(objective));
    ext.k = k;
    r.results["extremal"] = extremal_json(ext);
    return r;
}

Report cmd_search(std::size_t n, std::uint64_t seed, std::size_t budget) {
    Report r{"search"};
    r.inputs = {{"n", n}, {"seed", seed}, {"budget", budget}};
    auto s = enumeration::local_search_max(n, seed, budget);
    r.results = {{"best", extremal_json(s.best)},
                 {"best_value", dec(s.best.extremal_value)},
                 {"sjoin_value", s.sjoin_value ? json(dec(*s.sjoin_value)) : json(nullptr)},
                 {"beats_sjoin", s.beats_sjoin},
                 {"restarts", s.restarts},
                 {"accepted_moves", s.accepted_moves}};
    r.notes.push_back("heuristic search; a negative result is evidence, not proof");
    return r;
}

Report cmd_bipartite(std::size_t n) {
    Report r{"bipartite"};
    r.inputs = {{"n", n}};
    auto rep = enumeration::bipartite_experiment(n);
    for (const auto& row : rep.rows) {
        r.rows.push_back({{"graph", row.label},
                          {"a", row.a},
                          {"b", row.b},
                          {"connected", row.connected},
                          {"gpn", row.gpn_value ? json(dec(*row.gpn_value)) : json(nullptr)}});
    }
    r.results = {{"best", rep.best_label}, {"best_value", dec(rep.best_value)}};
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"geodex: geodesic subpath numbers of graphs", "geodex"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_csv = false;
    std::string input_format = "auto";
    auto* json_flag = app.add_flag("--json", "JSON report (default)");
    app.add_flag("--csv", as_csv, "CSV projection of the report")->excludes(json_flag);
    app.add_option("--format", input_format, "graph input format: auto, graph6 or edges");

    GraphLoader loader(in, input_format);
    std::function<Report()> action;

    std::string graph_arg;
    bool brute = false;
    auto* gpn_cmd = app.add_subcommand("gpn", "geodesic subpath number of a graph");
    gpn_cmd->add_option("graph", graph_arg, "file, '-' for stdin, or g6:STRING")->required();
    gpn_cmd->add_flag("--brute", brute, "also run the path-enumeration oracle (n <= 10)");
    gpn_cmd->callback([&] { action = [&] { return cmd_gpn(loader.load(graph_arg), brute); }; });

    std::size_t pu = 0, pv = 0;
    auto* pair_cmd = app.add_subcommand("pair", "number of geodesics between two vertices");
    pair_cmd->add_option("graph", graph_arg)->required();
    pair_cmd->add_option("u", pu)->required();
    pair_cmd->add_option("v", pv)->required();
    pair_cmd->callback([&] { action = [&] { return cmd_pair(loader.load(graph_arg), pu, pv); }; });

    auto* geodetic_cmd = app.add_subcommand("geodetic", "is every pair joined by a unique geodesic");
    geodetic_cmd->add_option("graph", graph_arg)->required();
    geodetic_cmd->callback([&] { action = [&] { return cmd_geodetic(loader.load(graph_arg)); }; });

    std::string kind;
    std::vector<std::size_t> params;
    std::string emit_format = "graph6";
    auto* family_cmd = app.add_subcommand("family", "emit a member of a named family");
    family_cmd->add_option("kind", kind, "sjoin, cube, grid, path, cycle, complete, bipartite, chain")->required();
    family_cmd->add_option("parameters", params);
    family_cmd->add_option("--emit", emit_format, "graph6 or edges");
    family_cmd->callback([&] {
        action = [&] { return cmd_family(kind, params, io::parse_format_name(emit_format)); };
    });

    bool cross_check = false;
    auto* formula_cmd = app.add_subcommand("formula", "closed-form gpn of a family");
    formula_cmd->add_option("family", kind, "sjoin, cube, grid or sweep")->required();
    formula_cmd->add_option("parameters", params);
    formula_cmd->add_flag("--cross-check", cross_check, "compare against a direct count");
    formula_cmd->callback([&] { action = [&] { return cmd_formula(kind, params, cross_check); }; });

    std::string bound_target;
    auto* bound_cmd = app.add_subcommand("bound", "upper bound check for a graph, or a sweep over all classes of order n");
    bound_cmd->add_option("target", bound_target, "graph or n")->required();
    bound_cmd->callback([&] { action = [&] { return cmd_bound(bound_target, loader); }; });

    std::size_t asym_n = 0;
    auto* asym_cmd = app.add_subcommand("asymptotics", "compare families at a vertex budget");
    asym_cmd->add_option("n", asym_n)->required();
    asym_cmd->callback([&] { action = [&] { return cmd_asymptotics(asym_n); }; });

    auto* cactus_cmd = app.add_subcommand("cactus", "cactus structure and extremal transforms");
    cactus_cmd->require_subcommand(1);
    auto* check_cmd = cactus_cmd->add_subcommand("check", "decomposition and predicate flags");
    check_cmd->add_option("graph", graph_arg)->required();
    check_cmd->callback([&] { action = [&] { return cmd_cactus_check(loader.load(graph_arg)); }; });
    auto* improve_cmd = cactus_cmd->add_subcommand("improve", "rewrite into a balanced square chain");
    improve_cmd->add_option("graph", graph_arg)->required();
    improve_cmd->callback([&] { action = [&] { return cmd_cactus_improve(loader.load(graph_arg)); }; });
    std::size_t cn = 0, ck = 0;
    auto* balanced_cmd = cactus_cmd->add_subcommand("balanced", "the balanced square chain for n and k");
    balanced_cmd->add_option("n", cn)->required();
    balanced_cmd->add_option("k", ck)->required();
    balanced_cmd->callback([&] { action = [&] { return cmd_cactus_balanced(cn, ck); }; });

    std::string objective = "max";
    bool large = false;
    bool list = false;
    std::vector<std::size_t> enum_args;
    auto* enum_cmd = app.add_subcommand("enum", "exhaustive enumeration up to isomorphism");
    enum_cmd->require_subcommand(1);
    for (std::string what : {"connected", "cacti"}) {
        auto* sub = enum_cmd->add_subcommand(what, what == "connected" ? "connected graphs on n vertices"
                                                                       : "cacti on n vertices with k cycles");
        sub->add_option("sizes", enum_args, what == "connected" ? "n" : "n k")->required();
        sub->add_option("--objective", objective, "max or min")->check(CLI::IsMember({"max", "min"}));
        if (what == "connected") sub->add_flag("--large", large, "allow n = 8");
        sub->add_flag("--list", list, "list every class with its gpn");
        sub->callback([&, what] { action = [&, what] { return cmd_enum(what, enum_args, objective, large, list); }; });
    }

    std::size_t sn = 0, budget = 2000;
    std::uint64_t seed = 1;
    auto* search_cmd = app.add_subcommand("search", "hill-climbing search for large gpn");
    search_cmd->add_option("n", sn)->required();
    search_cmd->add_option("--seed", seed);
    search_cmd->add_option("--budget", budget);
    search_cmd->callback([&] { action = [&] { return cmd_search(sn, seed, budget); }; });

    std::size_t bn = 0;
    auto* bip_cmd = app.add_subcommand("bipartite", "complete bipartite graphs and K_{m,m} minus a matching");
    bip_cmd->add_option("n", bn)->required();
    bip_cmd->callback([&] { action = [&] { return cmd_bipartite(bn); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        Report report = action();
        if (as_csv) {
            write_csv(report, out);
        } else {
            write_json(report, out);
        }
        if (report.consistency_failure) {
            err << "geodex: consistency check failed\n";
            return kConsistencyError;
        }
        return kSuccess;
    } catch (const InputError& e) {
        err << "geodex: " << e.what() << "\n";
        return kInputError;
    } catch (const ConsistencyError& e) {
        err << "geodex: internal consistency failure: " << e.what() << "\n";
        return kConsistencyError;
    } catch (const std::exception& e) {
        err << "geodex: " << e.what() << "\n";
        return kConsistencyError;
    }
}

}  // namespace geodex::cli
