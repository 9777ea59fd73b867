#pragma once

#include <arlab/error.hpp>
#include <arlab/graph.hpp>
#include <arlab/labeling.hpp>

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

// Graph file:     {"vertices": N, "edges": [[u, v], ...], "name": "optional tag"}
// Labeling file:  {"labels": [l0, l1, ...]}
// Edges are 0-indexed; labels follow the canonical (sorted) edge order of the
// companion graph. Unknown fields are rejected.

namespace arlab {

namespace detail {

    inline auto line_of(std::string_view text, std::size_t offset) -> std::size_t
    {
        offset = std::min(offset, text.size());
        return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
    }

    /// Source lines of a top-level key and of each element of its array value.
    /// Assumes `text` is already known to be well-formed JSON.
    struct FieldLines
    {
        std::size_t key = 0;
        std::vector<std::size_t> elements;
    };

    inline auto locate(std::string_view text, std::string_view key) -> FieldLines
    {
        FieldLines out;
        int depth = 0;
        bool in_field = false, expect_value = false;
        std::size_t line = 1;
        for (std::size_t i = 0 ; i < text.size() ; ++i) {
            const char c = text[i];
            if (c == '\n')
                ++line;
            else if (c == '"') {
                std::size_t j = i + 1;
                std::string s;
                for ( ; j < text.size() && text[j] != '"' ; ++j) {
                    if (text[j] == '\\')
                        ++j;
                    else
                        s += text[j];
                }
                if (depth == 1 && ! expect_value) {
                    in_field = (s == key);
                    if (in_field)
                        out.key = line;
                }
                else if (depth == 2 && in_field)
                    out.elements.push_back(line);
                i = j;
            }
            else if (c == ':' && depth == 1)
                expect_value = true;
            else if (c == ',' && depth == 1)
                expect_value = false;
            else if (c == '{' || c == '[') {
                if (depth == 2 && in_field)
                    out.elements.push_back(line);
                ++depth;
            }
            else if (c == '}' || c == ']')
                --depth;
            else if (depth == 2 && in_field && c != ',' && ! std::isspace(static_cast<unsigned char>(c))) {
                // scalar element: record once at its first character
                if (i == 0 || text[i - 1] == ',' || text[i - 1] == '[' || std::isspace(static_cast<unsigned char>(text[i - 1])))
                    out.elements.push_back(line);
            }
        }
        return out;
    }

    inline auto parse_json(std::string_view text) -> nlohmann::json
    {
        try {
            return nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(std::string("malformed document: ") + e.what(), line_of(text, e.byte), "");
        }
    }

    inline auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParseError("cannot open " + path, 0, "");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    inline auto write_file(const std::string & path, const std::string & text) -> void
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (! out)
            throw std::runtime_error("cannot write " + path);
        out << text;
    }

    inline auto reject_unknown(const nlohmann::json & doc, std::string_view text, std::initializer_list<std::string_view> allowed) -> void
    {
        if (! doc.is_object())
            throw ParseError("document must be an object", 1, "");
        for (auto & [k, v] : doc.items()) {
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                throw ParseError("unknown field \"" + k + "\"", locate(text, k).key, k);
        }
    }

    inline auto element_line(const FieldLines & lines, std::size_t i) -> std::size_t
    {
        return i < lines.elements.size() ? lines.elements[i] : lines.key;
    }

} // namespace detail

inline auto parse_graph(std::string_view text) -> Graph
{
    const auto doc = detail::parse_json(text);
    detail::reject_unknown(doc, text, { "vertices", "edges", "name" });

    if (! doc.contains("vertices"))
        throw ParseError("missing field", 0, "vertices");
    const auto & vc = doc["vertices"];
    if (! vc.is_number_integer() || vc.get<long long>() < 0)
        throw ParseError("expected a nonnegative integer", detail::locate(text, "vertices").key, "vertices");
    const auto n = vc.get<long long>();
    if (n > 1'000'000)
        throw ParseError("vertex count too large", detail::locate(text, "vertices").key, "vertices");

    if (! doc.contains("edges"))
        throw ParseError("missing field", 0, "edges");
    const auto & arr = doc["edges"];
    const auto lines = detail::locate(text, "edges");
    if (! arr.is_array())
        throw ParseError("expected an array", lines.key, "edges");

    std::vector<Edge> edges;
    std::vector<std::pair<Edge, std::size_t>> seen;
    for (std::size_t i = 0 ; i < arr.size() ; ++i) {
        const auto field = "edges[" + std::to_string(i) + "]";
        const auto line = detail::element_line(lines, i);
        const auto & e = arr[i];
        if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
            throw ParseError("expected a pair of vertex indices", line, field);
        const auto u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || u >= n)
            throw ParseError("vertex out of range", line, field + "[0]");
        if (v < 0 || v >= n)
            throw ParseError("vertex out of range", line, field + "[1]");
        if (u == v)
            throw ParseError("self-loop", line, field);
        Edge canon{ static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)) };
        edges.push_back(canon);
        seen.emplace_back(canon, i);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1 ; i < seen.size() ; ++i)
        if (seen[i].first == seen[i - 1].first) {
            const auto idx = std::max(seen[i].second, seen[i - 1].second);
            throw ParseError("duplicate edge", detail::element_line(lines, idx), "edges[" + std::to_string(idx) + "]");
        }

    std::string name;
    if (doc.contains("name")) {
        if (! doc["name"].is_string())
            throw ParseError("expected a string", detail::locate(text, "name").key, "name");
        name = doc["name"].get<std::string>();
    }
    return Graph(static_cast<int>(n), std::move(edges), std::move(name));
}

inline auto format_graph(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << "{\n  \"vertices\": " << g.vertex_count() << ",\n";
    if (! g.name().empty())
        out << "  \"name\": " << nlohmann::json(g.name()).dump() << ",\n";
    out << "  \"edges\": [";
    for (std::size_t e = 0 ; e < g.edges().size() ; ++e)
        out << (e ? ",\n    " : "\n    ") << "[" << g.edges()[e].first << ", " << g.edges()[e].second << "]";
    out << (g.edges().empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

inline auto load_graph(const std::string & path) -> Graph { return parse_graph(detail::read_file(path)); }
inline auto save_graph(const Graph & g, const std::string & path) -> void { detail::write_file(path, format_graph(g)); }

inline auto parse_labeling(std::string_view text) -> Labeling
{
    const auto doc = detail::parse_json(text);
    detail::reject_unknown(doc, text, { "labels" });
    if (! doc.contains("labels"))
        throw ParseError("missing field", 0, "labels");
    const auto & arr = doc["labels"];
    const auto lines = detail::locate(text, "labels");
    if (! arr.is_array())
        throw ParseError("expected an array", lines.key, "labels");
    Labeling out;
    for (std::size_t i = 0 ; i < arr.size() ; ++i) {
        const auto & l = arr[i];
        if (! l.is_number_integer() || l.get<long long>() < 1)
            throw ParseError("expected a positive integer", detail::element_line(lines, i), "labels[" + std::to_string(i) + "]");
        out.labels.push_back(l.get<Value>());
    }
    return out;
}

inline auto format_labeling(const Labeling & l) -> std::string
{
    std::ostringstream out;
    out << "{\n  \"labels\": [";
    for (std::size_t i = 0 ; i < l.labels.size() ; ++i)
        out << (i ? ", " : "") << l.labels[i];
    out << "]\n}\n";
    return out.str();
}

inline auto load_labeling(const std::string & path) -> Labeling { return parse_labeling(detail::read_file(path)); }
inline auto save_labeling(const Labeling & l, const std::string & path) -> void { detail::write_file(path, format_labeling(l)); }

} // namespace arlab
