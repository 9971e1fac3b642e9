#include "geodex/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "geodex/errors.hpp"

namespace geodex::io {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kMaxGraph6Order = 258047;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::size_t parse_count(const Token& t, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'", line, t.column);
    }
    return value;
}

bool is_lone_integer(std::string_view line) {
    line = trim(strip_comment(line));
    return !line.empty() && std::all_of(line.begin(), line.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

GraphFormat parse_format_name(const std::string& name) {
    if (name == "auto") return GraphFormat::automatic;
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edges" || name == "edge-list") return GraphFormat::edge_list;
    throw InputError("unknown graph format '" + name + "' (expected auto, graph6 or edges)");
}

Graph parse_graph6(std::string_view text) {
    std::size_t offset = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) offset = kGraph6Header.size();
    std::string_view body = text.substr(offset);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);

    auto byte_at = [&](std::size_t i) -> unsigned {
        if (i >= body.size()) throw ParseError("graph6 payload is truncated", 1, offset + body.size() + 1);
        auto c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", 1, offset + i + 1);
        return c - 63u;
    };

    if (body.empty()) throw ParseError("empty graph6 payload", 1, offset + 1);
    std::size_t n = 0;
    std::size_t pos = 0;
    if (body[0] != '~') {
        n = byte_at(0);
        pos = 1;
    } else {
        if (body.size() > 1 && body[1] == '~') throw ParseError("graph6 orders above 258047 are not supported", 1, offset + 2);
        n = (std::size_t{byte_at(1)} << 12) | (std::size_t{byte_at(2)} << 6) | byte_at(3);
        pos = 4;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (body.size() != pos + bytes) {
        std::size_t column = offset + std::min(body.size(), pos + bytes) + 1;
        throw ParseError("graph6 payload has " + std::to_string(body.size() - pos) + " data bytes, expected " +
                             std::to_string(bytes),
                         1, column);
    }
    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            unsigned chunk = byte_at(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
        }
    }
    for (; bit < bytes * 6; ++bit) {
        if ((byte_at(pos + bit / 6) >> (5 - bit % 6)) & 1u) {
            throw ParseError("nonzero padding bit in graph6 payload", 1, offset + pos + bit / 6 + 1);
        }
    }
    return g;
}

std::string render_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxGraph6Order) throw SizeGuardError("graph6 rendering supports at most 258047 vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63u) + 63));
    }
    unsigned chunk = 0;
    std::size_t filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::optional<Graph> g;
    std::size_t line_no = 0;
    while (!text.empty() || line_no == 0) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        auto tokens = tokenize(strip_comment(line));
        if (tokens.empty()) {
            if (text.empty()) break;
            continue;
        }
        if (!g) {
            if (tokens.size() != 1) throw ParseError("header must hold the vertex count only", line_no, tokens[1].column);
            g.emplace(parse_count(tokens[0], line_no));
            continue;
        }
        if (tokens.size() != 2) {
            std::size_t column = tokens.size() > 2 ? tokens[2].column : tokens[0].column + tokens[0].text.size();
            throw ParseError("edge lines must hold exactly two vertex ids", line_no, column);
        }
        std::size_t ids[2];
        for (int i = 0; i < 2; ++i) {
            ids[i] = parse_count(tokens[i], line_no);
            if (ids[i] >= g->order()) {
                throw ParseError("vertex id " + std::to_string(ids[i]) + " is not below n = " +
                                     std::to_string(g->order()),
                                 line_no, tokens[i].column);
            }
        }
        if (ids[0] == ids[1]) throw ParseError("self-loop", line_no, tokens[0].column);
        if (g->has_edge(ids[0], ids[1])) throw ParseError("duplicate edge", line_no, tokens[0].column);
        g->add_edge(ids[0], ids[1]);
    }
    if (!g) throw ParseError("missing vertex-count header", line_no, 1);
    return std::move(*g);
}

std::string render_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::automatic) {
        std::string_view rest = text;
        format = GraphFormat::graph6;
        while (!rest.empty()) {
            auto nl = rest.find('\n');
            std::string_view line = rest.substr(0, nl);
            rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
            if (trim(strip_comment(line)).empty()) continue;
            if (is_lone_integer(line)) format = GraphFormat::edge_list;
            break;
        }
    }
    if (format == GraphFormat::edge_list) return parse_edge_list(text);
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
    auto body = trim(text);
    if (body.find_first_of(" \t\n") != std::string_view::npos) {
        throw ParseError("graph6 input must be a single line", 1, lead + body.find_first_of(" \t\n") + 1);
    }
    return parse_graph6(body);
}

std::string render_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::edge_list) return render_edge_list(g);
    return render_graph6(g) + "\n";
}

}  // namespace geodex::io
