#pragma once

#include <arlab/dss.hpp>
#include <arlab/graph.hpp>
#include <arlab/io.hpp>
#include <arlab/labeling.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arlab {

/// Two edges carrying the same label.
struct DuplicateLabel
{
    std::size_t first_edge;
    std::size_t second_edge;
    Value label;
};

/// Two disjoint sets of edges at `vertex` whose labels have equal sums.
struct SubsetSumClash
{
    Vertex vertex;
    std::vector<std::size_t> first_edges;
    std::vector<std::size_t> second_edges;
    Value sum;
};

struct Verdict
{
    std::optional<std::variant<DuplicateLabel, SubsetSumClash>> failure;

    auto ok() const -> bool { return ! failure.has_value(); }
    explicit operator bool() const { return ok(); }
};

inline auto describe(const Verdict & v, const Labeling & l) -> std::string
{
    if (v.ok())
        return "AR-labeling";
    if (auto d = std::get_if<DuplicateLabel>(&*v.failure))
        return "not injective: edges " + std::to_string(d->first_edge) + " and " + std::to_string(d->second_edge)
            + " both carry label " + std::to_string(d->label);
    const auto & c = std::get<SubsetSumClash>(*v.failure);
    auto list = [&](const std::vector<std::size_t> & es) {
        std::string s = "{";
        for (std::size_t i = 0 ; i < es.size() ; ++i)
            s += (i ? "," : "") + std::to_string(l[es[i]]);
        return s + "}";
    };
    return "vertex " + std::to_string(c.vertex) + " is not an AR-vertex: " + list(c.first_edges) + " and "
        + list(c.second_edges) + " both sum to " + std::to_string(c.sum);
}

namespace detail {
    inline auto check_alignment(const Graph & g, const Labeling & l) -> void
    {
        if (l.size() != static_cast<std::size_t>(g.edge_count()))
            throw InvalidInput("labeling has " + std::to_string(l.size()) + " labels but the graph has "
                    + std::to_string(g.edge_count()) + " edges");
        for (auto x : l.labels)
            if (x < 1)
                throw InvalidInput("labels must be positive");
    }

    inline auto labels_at(const Graph & g, const Labeling & l, Vertex v) -> std::vector<Value>
    {
        std::vector<Value> out;
        for (auto e : g.incident_edges(v))
            out.push_back(l[e]);
        return out;
    }
}

/// True iff the labels on the edges at `v` have distinct subset sums.
inline auto is_ar_vertex(const Graph & g, const Labeling & l, Vertex v) -> bool
{
    detail::check_alignment(g, l);
    const auto labels = detail::labels_at(g, l, v);
    if (labels.empty())
        return true;
    std::vector<Value> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    return is_dss(labels);
}

/**
 * Checks injectivity, then every vertex in ascending order. The first
 * violation found is returned with an explicit certificate; for a vertex the
 * colliding subsets are recovered by brute force over its incident labels.
 */
inline auto is_ar_labeling(const Graph & g, const Labeling & l) -> Verdict
{
    detail::check_alignment(g, l);
    std::vector<std::pair<Value, std::size_t>> by_label;
    for (std::size_t e = 0 ; e < l.size() ; ++e)
        by_label.emplace_back(l[e], e);
    std::sort(by_label.begin(), by_label.end());
    for (std::size_t i = 1 ; i < by_label.size() ; ++i)
        if (by_label[i].first == by_label[i - 1].first)
            return { DuplicateLabel{ by_label[i - 1].second, by_label[i].second, by_label[i].first } };

    for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
        const auto labels = detail::labels_at(g, l, v);
        if (labels.empty() || is_dss(labels))
            continue;
        const auto clash = find_collision(labels);
        if (! clash)
            throw std::logic_error("bitset and brute-force DSS tests disagree");
        auto edges_for = [&](const std::vector<Value> & values) {
            std::vector<std::size_t> out;
            for (auto x : values)
                for (auto e : g.incident_edges(v))
                    if (l[e] == x)
                        out.push_back(e);
            return out;
        };
        Value sum = 0;
        for (auto x : clash->first)
            sum += x;
        return { SubsetSumClash{ v, edges_for(clash->first), edges_for(clash->second), sum } };
    }
    return {};
}

/// With x and y already at a vertex, z can join iff z ≠ x + y and z ≠ |x − y|.
inline auto third_label_feasible(Value x, Value y, Value z) -> bool
{
    if (x < 1 || y < 1 || z < 1)
        throw InvalidInput("third_label_feasible: labels must be positive");
    if (x == y || y == z || x == z)
        throw InvalidInput("third_label_feasible: labels must be distinct");
    return z != x + y && z != (x > y ? x - y : y - x);
}

inline auto verify_files(const std::string & graph_path, const std::string & labeling_path) -> Verdict
{
    const auto g = load_graph(graph_path);
    const auto l = load_labeling(labeling_path);
    return is_ar_labeling(g, l);
}

} // namespace arlab
