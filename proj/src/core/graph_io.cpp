#include "graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dio {

namespace {

std::vector<std::pair<int, int>> sorted_edges(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edge_count());
    for (int u = 1; u <= g.order(); ++u)
        g.for_each_neighbor(u, [&](int v) {
            if (u < v)
                es.emplace_back(u, v);
        });
    return es; // already lexicographic: u ascending, then v
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        long ids[2];
        int found = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const int column = static_cast<int>(i) + 1;
            if (found == 2)
                throw ParseError("edge list: more than two vertex ids on a line", line_no,
                                 column);
            long value = 0;
            const auto [ptr, ec] =
                std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc{} ||
                (ptr != line.data() + line.size() &&
                 !std::isspace(static_cast<unsigned char>(*ptr))))
                throw ParseError("edge list: expected a vertex id", line_no, column);
            if (value < 1)
                throw ParseError("edge list: vertex ids are 1-based", line_no, column);
            if (value > Graph::kMaxOrder)
                throw ParseError("edge list: vertex id exceeds supported order", line_no,
                                 column);
            ids[found++] = value;
            i = static_cast<std::size_t>(ptr - line.data());
        }
        if (found == 1)
            throw ParseError("edge list: dangling vertex id", line_no,
                             static_cast<int>(line.size()) + 1);
        if (found == 2) {
            if (ids[0] == ids[1])
                throw ParseError("edge list: self-loop", line_no, 1);
            edges.emplace_back(static_cast<int>(ids[0]), static_cast<int>(ids[1]));
            max_id = std::max({max_id, static_cast<int>(ids[0]), static_cast<int>(ids[1])});
        }
        if (eol == text.size())
            break;
    }
    if (max_id == 0)
        throw ParseError("edge list: no edges found; use json for edgeless graphs", 1, 1);
    GraphBuilder b(max_id);
    for (const auto& [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

Graph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what(), 1, static_cast<int>(e.byte));
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("json: expected object with integer field \"n\"", 1, 1);
    const long n = doc["n"].get<long>();
    if (n < 1 || n > Graph::kMaxOrder)
        throw ParseError("json: \"n\" out of supported range", 1, 1);
    GraphBuilder b(static_cast<int>(n));
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw ParseError("json: \"edges\" must be an array", 1, 1);
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("json: each edge must be [u,v]", 1, 1);
            const long u = e[0].get<long>(), v = e[1].get<long>();
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("json: edge endpoint out of range", 1, 1);
            if (u == v)
                throw ParseError("json: self-loop", 1, 1);
            b.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return std::move(b).build();
}

Graph parse_graph6(std::string_view text) {
    // Strip optional header and trailing whitespace/newline.
    std::string_view s = text;
    if (s.starts_with(">>graph6<<"))
        s.remove_prefix(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.remove_suffix(1);
    if (s.empty())
        throw ParseError("graph6: empty input", 1, 1);

    std::size_t at = 0;
    auto take = [&]() -> int {
        if (at >= s.size())
            throw ParseError("graph6: truncated input", 1, static_cast<int>(at) + 1);
        const int c = static_cast<unsigned char>(s[at++]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte out of range", 1, static_cast<int>(at));
        return c - 63;
    };

    long n = 0;
    int first = take();
    if (first < 63) {
        n = first;
    } else {
        // 126 prefix: n in three 6-bit groups (the 258048..2^36 form is not
        // supported; it exceeds the order cap anyway).
        const int a = take();
        if (a == 63)
            throw ParseError("graph6: order too large", 1, 1);
        const int b2 = take(), c = take();
        n = (static_cast<long>(a) << 12) | (b2 << 6) | c;
    }
    if (n < 1 || n > Graph::kMaxOrder)
        throw ParseError("graph6: order out of supported range", 1, 1);

    GraphBuilder b(static_cast<int>(n));
    int bits = 0, have = 0, buffer = 0;
    for (long v = 1; v < n; ++v) {
        for (long u = 0; u < v; ++u) {
            if (have == 0) {
                buffer = take();
                have = 6;
            }
            --have;
            bits = (buffer >> have) & 1;
            if (bits)
                b.add_edge(static_cast<int>(u) + 1, static_cast<int>(v) + 1);
        }
    }
    return std::move(b).build();
}

std::string serialize_edge_list(const Graph& g) {
    std::string out;
    for (const auto& [u, v] : sorted_edges(g)) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::string serialize_json_graph(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.order();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : sorted_edges(g))
        edges.push_back({u, v});
    return doc.dump();
}

std::string serialize_graph6(const Graph& g) {
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int buffer = 0, have = 0;
    for (long v = 1; v < n; ++v) {
        for (long u = 0; u < v; ++u) {
            buffer = (buffer << 1) | (g.has_edge(static_cast<int>(u) + 1,
                                                 static_cast<int>(v) + 1)
                                          ? 1
                                          : 0);
            if (++have == 6) {
                out += static_cast<char>(buffer + 63);
                buffer = 0;
                have = 0;
            }
        }
    }
    if (have > 0)
        out += static_cast<char>((buffer << (6 - have)) + 63);
    return out;
}

std::string serialize_dot(const Graph& g) {
    std::string out = "graph G {\n";
    std::vector<bool> covered(g.order() + 1, false);
    for (const auto& [u, v] : sorted_edges(g)) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        covered[u] = covered[v] = true;
    }
    for (int u = 1; u <= g.order(); ++u)
        if (!covered[u])
            out += "  " + std::to_string(u) + ";\n";
    out += "}\n";
    return out;
}

} // namespace

GraphFormat parse_format(std::string_view name) {
    if (name == "edges" || name == "edge-list" || name == "edgelist")
        return GraphFormat::edges;
    if (name == "json")
        return GraphFormat::json;
    if (name == "graph6" || name == "g6")
        return GraphFormat::graph6;
    if (name == "dot")
        return GraphFormat::dot;
    throw ArgumentError("unknown graph format: " + std::string(name));
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::edges:
        return parse_edge_list(text);
    case GraphFormat::json:
        return parse_json_graph(text);
    case GraphFormat::graph6:
        return parse_graph6(text);
    case GraphFormat::dot:
        throw ArgumentError("dot is an output-only format");
    }
    throw ArgumentError("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    switch (format) {
    case GraphFormat::edges:
        return serialize_edge_list(g);
    case GraphFormat::json:
        return serialize_json_graph(g);
    case GraphFormat::graph6:
        return serialize_graph6(g);
    case GraphFormat::dot:
        return serialize_dot(g);
    }
    throw ArgumentError("unknown graph format");
}

Graph pad_to_order(const Graph& g, int n) {
    if (n < g.order())
        throw ArgumentError("pad_to_order: requested order " + std::to_string(n) +
                            " below graph order " + std::to_string(g.order()));
    if (n == g.order())
        return g;
    GraphBuilder b(n);
    for (int u = 1; u <= g.order(); ++u)
        g.for_each_neighbor(u, [&](int v) {
            if (u < v)
                b.add_edge(u, v);
        });
    return std::move(b).build();
}

} // namespace dio
