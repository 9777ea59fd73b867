#pragma once

#include <arlab/error.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace arlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph. Edges are stored as (u, v) with u < v, sorted
 * lexicographically; that canonical order is what labelings are aligned to.
 *
 * Family constructors number vertices centers first:
 *  - star(n):          center 0, leaves 1..n
 *  - bistar(a, b):     centers 0 and 1; leaves of 0 are 2..a+1, leaves of 1 follow
 *  - path(n), cycle(n): 0..n−1 in order
 *  - complete_bipartite(m, n): first part 0..m−1, second part m..m+n−1
 *  - complete_multipartite(sizes): consecutive blocks in the given order
 *  - wheel(n):         hub 0, rim 1..n−1 in cycle order
 */
class Graph
{
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges, std::string name = {}, bool edge_transitive = false)
        : vertex_count_(vertex_count), edges_(std::move(edges)), name_(std::move(name)), edge_transitive_(edge_transitive)
    {
        if (vertex_count_ < 0)
            throw InvalidInput("graph: negative vertex count");
        for (auto & [u, v] : edges_) {
            if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
                throw InvalidInput("graph: endpoint out of range in edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
            if (u == v)
                throw InvalidInput("graph: self-loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()) ; dup != edges_.end())
            throw InvalidInput("graph: duplicate edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");

        incident_.assign(static_cast<std::size_t>(vertex_count_), {});
        for (std::size_t e = 0 ; e < edges_.size() ; ++e) {
            incident_[static_cast<std::size_t>(edges_[e].first)].push_back(e);
            incident_[static_cast<std::size_t>(edges_[e].second)].push_back(e);
        }
    }

    auto vertex_count() const -> int { return vertex_count_; }
    auto edge_count() const -> int { return static_cast<int>(edges_.size()); }
    auto edges() const -> const std::vector<Edge> & { return edges_; }
    auto edge(std::size_t e) const -> const Edge & { return edges_.at(e); }
    auto name() const -> const std::string & { return name_; }

    /// Set only by family constructors whose automorphism group acts
    /// transitively on edges (stars, cycles, complete and complete bipartite).
    auto edge_transitive() const -> bool { return edge_transitive_; }

    auto degree(Vertex v) const -> int { return static_cast<int>(incident_edges(v).size()); }

    auto incident_edges(Vertex v) const -> const std::vector<std::size_t> &
    {
        if (v < 0 || v >= vertex_count_)
            throw InvalidInput("graph: vertex " + std::to_string(v) + " out of range");
        return incident_[static_cast<std::size_t>(v)];
    }

    auto max_degree() const -> int
    {
        int d = 0;
        for (auto & inc : incident_)
            d = std::max(d, static_cast<int>(inc.size()));
        return d;
    }

    /// Index of edge {u, v} in canonical order, or edge_count() if absent.
    auto find_edge(Vertex u, Vertex v) const -> std::size_t
    {
        Edge key{ std::min(u, v), std::max(u, v) };
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        return (it != edges_.end() && *it == key) ? static_cast<std::size_t>(it - edges_.begin()) : edges_.size();
    }

    /// Equal vertex count and edge set; names are ignored.
    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::string name_;
    bool edge_transitive_ = false;
    std::vector<std::vector<std::size_t>> incident_;
};

namespace detail {
    inline auto require(bool ok, const std::string & what) -> void
    {
        if (! ok)
            throw InvalidInput(what);
    }
}

inline auto star(int n) -> Graph
{
    detail::require(n >= 1, "star: need n >= 1");
    std::vector<Edge> e;
    for (int i = 1 ; i <= n ; ++i)
        e.emplace_back(0, i);
    return Graph(n + 1, std::move(e), "star " + std::to_string(n), true);
}

inline auto bistar(int a, int b) -> Graph
{
    detail::require(a >= 1 && b >= 1, "bistar: need a, b >= 1");
    std::vector<Edge> e{ { 0, 1 } };
    for (int i = 0 ; i < a ; ++i)
        e.emplace_back(0, 2 + i);
    for (int i = 0 ; i < b ; ++i)
        e.emplace_back(1, 2 + a + i);
    return Graph(a + b + 2, std::move(e), "bistar " + std::to_string(a) + " " + std::to_string(b));
}

inline auto path(int n) -> Graph
{
    detail::require(n >= 2, "path: need n >= 2");
    std::vector<Edge> e;
    for (int i = 0 ; i + 1 < n ; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, std::move(e), "path " + std::to_string(n), n <= 3);
}

inline auto cycle(int n) -> Graph
{
    detail::require(n >= 3, "cycle: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0 ; i + 1 < n ; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e), "cycle " + std::to_string(n), true);
}

inline auto complete(int n) -> Graph
{
    detail::require(n >= 1, "complete: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j)
            e.emplace_back(i, j);
    return Graph(n, std::move(e), "complete " + std::to_string(n), true);
}

inline auto complete_bipartite(int m, int n) -> Graph
{
    detail::require(m >= 1 && n >= 1, "complete_bipartite: need m, n >= 1");
    std::vector<Edge> e;
    for (int i = 0 ; i < m ; ++i)
        for (int j = 0 ; j < n ; ++j)
            e.emplace_back(i, m + j);
    return Graph(m + n, std::move(e), "bipartite " + std::to_string(m) + " " + std::to_string(n), true);
}

inline auto complete_multipartite(const std::vector<int> & parts) -> Graph
{
    detail::require(parts.size() >= 2, "complete_multipartite: need at least 2 parts");
    std::vector<int> start{ 0 };
    std::string name = "multipartite ";
    for (std::size_t p = 0 ; p < parts.size() ; ++p) {
        detail::require(parts[p] >= 1, "complete_multipartite: every part needs a vertex");
        start.push_back(start.back() + parts[p]);
        name += (p ? "," : "") + std::to_string(parts[p]);
    }
    std::vector<Edge> e;
    for (std::size_t p = 0 ; p < parts.size() ; ++p)
        for (std::size_t q = p + 1 ; q < parts.size() ; ++q)
            for (int u = start[p] ; u < start[p + 1] ; ++u)
                for (int v = start[q] ; v < start[q + 1] ; ++v)
                    e.emplace_back(u, v);
    return Graph(start.back(), std::move(e), name);
}

/// W_n: hub 0 joined to the rim cycle 1..n−1.
inline auto wheel(int n) -> Graph
{
    detail::require(n >= 4, "wheel: need n >= 4");
    std::vector<Edge> e;
    for (int i = 1 ; i < n ; ++i)
        e.emplace_back(0, i);
    for (int i = 1 ; i + 1 < n ; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(1, n - 1);
    return Graph(n, std::move(e), "wheel " + std::to_string(n), n == 4);
}

} // namespace arlab
