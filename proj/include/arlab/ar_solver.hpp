#pragma once

#include <arlab/ar_check.hpp>
#include <arlab/dss.hpp>
#include <arlab/es.hpp>
#include <arlab/graph.hpp>
#include <arlab/labeling.hpp>
#include <arlab/search.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arlab {

enum class Tri { yes, no, unknown };

inline auto to_string(Tri t) -> std::string
{
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        case Tri::unknown: return "unknown";
    }
    return "?";
}

/// Refutation / search record for one decision "is there an AR-labeling into {1..k}?".
struct SearchLog
{
    Value k = 0;
    Tri found = Tri::unknown;
    bool refuted_by_bound = false;
    std::uint64_t nodes = 0;
    std::uint64_t dss_prunes = 0;
    std::uint64_t lookahead_prunes = 0;
    double seconds = 0;
};

/// Lower bound on the largest label at a vertex of degree d.
inline auto es_need(int degree) -> Value
{
    return degree <= 0 ? 0 : es_lower_bound(degree);
}

/**
 * Necessary condition for an AR-labeling into {1..k}. Every vertex v needs
 * an incident label of at least ES(deg v), and a label value sits on one edge
 * so it serves at most two vertices. Returns false (k refuted) iff for some
 * threshold t more than 2·(k − t + 1) vertices need a label ≥ t.
 */
inline auto counting_prune(const Graph & g, Value k) -> bool
{
    if (k < 1)
        throw InvalidInput("counting_prune: k must be positive");
    std::vector<Value> needs;
    for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
        if (g.degree(v) > 0)
            needs.push_back(es_need(g.degree(v)));
    std::sort(needs.begin(), needs.end(), std::greater<>());
    // #{need ≥ t} only changes at need values, where the capacity is smallest
    for (std::size_t i = 0 ; i < needs.size() ; ++i) {
        const Value t = needs[i];
        if (i + 1 < needs.size() && needs[i + 1] == t)
            continue;
        const auto demand = static_cast<Value>(i + 1);
        if (demand > 2 * (k - t + 1))
            return false;
    }
    return true;
}

/// Smallest k not ruled out by injectivity, ES(Δ) or the counting argument.
inline auto ari_lower_bound(const Graph & g) -> Value
{
    if (g.edge_count() < 1)
        throw InvalidInput("ari_lower_bound: graph has no edges");
    Value k = std::max<Value>(g.edge_count(), es_need(g.max_degree()));
    while (! counting_prune(g, k))
        ++k;
    return k;
}

/// ES(m) if published, otherwise the Conway–Guy value; any m labels forming
/// a DSS set give an AR-labeling.
inline auto ari_upper_bound(const Graph & g) -> Value
{
    const int m = g.edge_count();
    if (m <= static_cast<int>(known_es_values.size()))
        return m == 0 ? 0 : known_es_values[static_cast<std::size_t>(m - 1)];
    return conway_guy_u(m);
}

namespace detail {

    /**
     * Backtracking over edges in a fixed order. Each vertex keeps the
     * subset-sum bitmap of its assigned labels; a label is tried only if it
     * extends both endpoint bitmaps without a collision. After each
     * assignment the two endpoints are checked ahead: enough unused labels
     * must still fit, one of them must reach ES(deg), and the largest
     * candidates must be able to lift the vertex's label sum to 2^deg − 1.
     */
    class LabelSearch
    {
    public:
        LabelSearch(const Graph & g, Value k, const std::vector<std::optional<Value>> & fixed,
                const Deadline & deadline, const std::atomic<bool> & cancel)
            : g_(g), k_(k), poll_(deadline, &cancel),
              labels_(static_cast<std::size_t>(g.edge_count()), 0),
              used_(static_cast<std::size_t>(k) + 1, 0),
              remaining_(static_cast<std::size_t>(g.vertex_count()), 0),
              need_(static_cast<std::size_t>(g.vertex_count()), 0),
              sum_(static_cast<std::size_t>(g.vertex_count()), 0),
              top_(static_cast<std::size_t>(g.vertex_count()), 0),
              offset_(static_cast<std::size_t>(g.vertex_count()) + 1, 0)
        {
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
                const auto d = static_cast<std::size_t>(g.degree(v));
                remaining_[static_cast<std::size_t>(v)] = static_cast<int>(d);
                need_[static_cast<std::size_t>(v)] = es_need(static_cast<int>(d));
                const std::size_t w = words_for_bits(d * static_cast<std::uint64_t>(k) + 1);
                offset_[static_cast<std::size_t>(v) + 1] = offset_[static_cast<std::size_t>(v)] + w;
                width_ = std::max(width_, w);
            }
            occ_.assign(offset_.back(), 0);
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                occ_[offset_[static_cast<std::size_t>(v)]] = 1;

            std::vector<std::size_t> free;
            for (std::size_t e = 0 ; e < labels_.size() ; ++e) {
                if (e < fixed.size() && fixed[e]) {
                    if (! place_fixed(e, *fixed[e]))
                        infeasible_ = true;
                }
                else
                    free.push_back(e);
            }
            auto weight = [&](std::size_t e) { return g.degree(g.edge(e).first) + g.degree(g.edge(e).second); };
            std::stable_sort(free.begin(), free.end(), [&](auto a, auto b) { return weight(a) > weight(b); });
            order_ = std::move(free);
            chain_twins(fixed);
            trail_.assign((order_.size() + 1) * 2 * width_, 0);
            if (! infeasible_)
                for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                    if (! lookahead(v))
                        infeasible_ = true;
        }

        auto infeasible() const -> bool { return infeasible_; }
        auto free_edges() const -> std::size_t { return order_.size(); }

        /// Labels the first free edge may take, in the order they are tried.
        auto root_candidates() const -> std::vector<Value>
        {
            std::vector<Value> out;
            if (order_.empty())
                return out;
            for (Value l = 1 ; l <= k_ ; ++l)
                if (! used_[static_cast<std::size_t>(l)])
                    out.push_back(l);
            if (head_[0])
                std::reverse(out.begin(), out.end());
            return out;
        }

        /// Search with the first free edge forced to `first` (or the full tree).
        auto run(std::optional<Value> first) -> BranchResult
        {
            if (infeasible_)
                return BranchResult::exhausted;
            if (order_.empty())
                return BranchResult::found;
            if (first)
                return try_label(0, *first);
            return descend(0);
        }

        auto labeling() const -> Labeling { return Labeling{ labels_ }; }

        std::uint64_t nodes = 0, dss_prunes = 0, lookahead_prunes = 0;

    private:
        // Vertices with the same neighbourhood can be permuted freely. For a
        // class of such twins, edges to one reference neighbour c get
        // decreasing labels in search order. Chosen classes and their
        // references are kept disjoint so the permutations commute, and a
        // class touching the first edge only through (c, x) keeps that edge
        // on top, which the max-label root restriction relies on.
        auto chain_twins(const std::vector<std::optional<Value>> & fixed) -> void
        {
            const auto n = static_cast<std::size_t>(g_.vertex_count());
            sibling_.assign(order_.size(), no_sibling);
            head_.assign(order_.size(), 0);
            if (order_.empty())
                return;
            std::vector<char> pinned(n, 0);
            for (std::size_t e = 0 ; e < fixed.size() && e < labels_.size() ; ++e)
                if (fixed[e]) {
                    pinned[static_cast<std::size_t>(g_.edge(e).first)] = 1;
                    pinned[static_cast<std::size_t>(g_.edge(e).second)] = 1;
                }
            std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
            for (Vertex v = 0 ; v < g_.vertex_count() ; ++v) {
                if (g_.degree(v) == 0)
                    continue;
                std::vector<Vertex> nb;
                for (auto e : g_.incident_edges(v)) {
                    const auto [a, b] = g_.edge(e);
                    nb.push_back(a == v ? b : a);
                }
                std::sort(nb.begin(), nb.end());
                classes[nb].push_back(v);
            }
            std::vector<std::pair<Vertex, std::vector<Vertex>>> picks;
            for (auto & [nb, members] : classes)
                if (members.size() >= 2)
                    picks.push_back({ nb.front(), members });
            std::stable_sort(picks.begin(), picks.end(), [](auto & x, auto & y) { return x.second.size() > y.second.size(); });

            const auto [r0, r1] = g_.edge(order_[0]);
            std::vector<char> in_class(n, 0), is_ref(n, 0);
            std::vector<std::size_t> position(labels_.size(), no_sibling);
            for (std::size_t d = 0 ; d < order_.size() ; ++d)
                position[order_[d]] = d;
            for (auto & [c, members] : picks) {
                bool ok = ! in_class[static_cast<std::size_t>(c)];
                for (auto x : members) {
                    const auto i = static_cast<std::size_t>(x);
                    ok = ok && ! pinned[i] && ! is_ref[i] && ! in_class[i];
                    if ((x == r0 || x == r1) && ! (c == r0 || c == r1))
                        ok = false;
                }
                if (! ok)
                    continue;
                is_ref[static_cast<std::size_t>(c)] = 1;
                std::vector<std::size_t> depths;
                for (auto x : members) {
                    in_class[static_cast<std::size_t>(x)] = 1;
                    depths.push_back(position[g_.find_edge(c, x)]);
                }
                std::sort(depths.begin(), depths.end());
                for (std::size_t j = 1 ; j < depths.size() ; ++j)
                    sibling_[depths[j]] = depths[j - 1];
                head_[depths[0]] = 1;
            }
        }

        auto occ(Vertex v) -> std::span<Word>
        {
            const auto i = static_cast<std::size_t>(v);
            return { occ_.data() + offset_[i], offset_[i + 1] - offset_[i] };
        }

        auto place_fixed(std::size_t e, Value l) -> bool
        {
            const auto [u, v] = g_.edge(e);
            if (l < 1 || l > k_ || used_[static_cast<std::size_t>(l)])
                return false;
            if (! bits::can_extend(occ(u), static_cast<std::uint64_t>(l)) || ! bits::can_extend(occ(v), static_cast<std::uint64_t>(l)))
                return false;
            assign(e, l);
            return true;
        }

        auto assign(std::size_t e, Value l) -> void
        {
            const auto [u, v] = g_.edge(e);
            labels_[e] = l;
            used_[static_cast<std::size_t>(l)] = 1;
            for (auto w : { u, v }) {
                const auto i = static_cast<std::size_t>(w);
                bits::extend(occ(w), static_cast<std::uint64_t>(l));
                --remaining_[i];
                sum_[i] += l;
                top_[i] = std::max(top_[i], l);
            }
        }

        auto lookahead(Vertex w) -> bool
        {
            const auto i = static_cast<std::size_t>(w);
            const int r = remaining_[i];
            if (r == 0)
                return true;
            const int d = g_.degree(w);
            const Value target = d < 62 ? (Value{ 1 } << d) - 1 : std::numeric_limits<Value>::max();
            auto bitmap = occ(w);
            int count = 0;
            Value best_sum = sum_[i];
            bool reaches = top_[i] >= need_[i];
            for (Value a = k_ ; a >= 1 ; --a) {
                if (used_[static_cast<std::size_t>(a)] || ! bits::can_extend(bitmap, static_cast<std::uint64_t>(a)))
                    continue;
                if (a >= need_[i])
                    reaches = true;
                if (count < r)
                    best_sum += a;
                ++count;
                if (count >= r && reaches)
                    break;
            }
            return count >= r && reaches && best_sum >= target;
        }

        auto try_label(std::size_t depth, Value l) -> BranchResult
        {
            const std::size_t e = order_[depth];
            const auto [u, v] = g_.edge(e);
            if (used_[static_cast<std::size_t>(l)])
                return BranchResult::exhausted;
            if (! bits::can_extend(occ(u), static_cast<std::uint64_t>(l)) || ! bits::can_extend(occ(v), static_cast<std::uint64_t>(l))) {
                ++dss_prunes;
                return BranchResult::exhausted;
            }
            auto ou = occ(u), ov = occ(v);
            Word * save = trail_.data() + depth * 2 * width_;
            std::copy(ou.begin(), ou.end(), save);
            std::copy(ov.begin(), ov.end(), save + width_);
            const Value top_u = top_[static_cast<std::size_t>(u)], top_v = top_[static_cast<std::size_t>(v)];

            assign(e, l);
            BranchResult r = BranchResult::exhausted;
            if (lookahead(u) && lookahead(v))
                r = descend(depth + 1);
            else
                ++lookahead_prunes;
            if (r == BranchResult::found)
                return r;

            std::copy(save, save + ou.size(), ou.begin());
            std::copy(save + width_, save + width_ + ov.size(), ov.begin());
            for (auto [w, t] : { std::pair{ u, top_u }, std::pair{ v, top_v } }) {
                const auto i = static_cast<std::size_t>(w);
                ++remaining_[i];
                sum_[i] -= l;
                top_[i] = t;
            }
            used_[static_cast<std::size_t>(l)] = 0;
            labels_[e] = 0;
            return r;
        }

        auto descend(std::size_t depth) -> BranchResult
        {
            ++nodes;
            if (poll_.tick())
                return BranchResult::timed_out;
            if (depth == order_.size())
                return BranchResult::found;
            Value cap = k_;
            if (sibling_[depth] != no_sibling)
                cap = labels_[order_[sibling_[depth]]] - 1;
            // a chain head carries the largest label of its class: try big ones first
            const bool down = head_[depth];
            for (Value i = 1 ; i <= cap ; ++i) {
                const Value l = down ? cap + 1 - i : i;
                if (used_[static_cast<std::size_t>(l)])
                    continue;
                auto r = try_label(depth, l);
                if (r != BranchResult::exhausted)
                    return r;
            }
            return BranchResult::exhausted;
        }

        const Graph & g_;
        Value k_;
        DeadlinePoll poll_;
        std::vector<Value> labels_;
        std::vector<char> used_;
        std::vector<int> remaining_;
        std::vector<Value> need_, sum_, top_;
        std::vector<std::size_t> offset_;
        std::size_t width_ = 1;
        std::vector<Word> occ_;
        std::vector<Word> trail_;
        std::vector<std::size_t> order_;
        static constexpr std::size_t no_sibling = static_cast<std::size_t>(-1);
        std::vector<std::size_t> sibling_;
        std::vector<char> head_;
        bool infeasible_ = false;
    };

} // namespace detail

struct FindResult
{
    Tri found = Tri::unknown;
    std::optional<Labeling> labeling;
    SearchLog log;
};

namespace detail {

    /// `max_label_used`: the caller knows every AR-labeling into {1..k} uses
    /// label k, which licenses the symmetry-breaking restriction.
    inline auto find_labeling(const Graph & g, Value k, const SearchConfig & cfg, const Deadline & deadline,
            const std::vector<std::optional<Value>> & fixed, bool max_label_used) -> FindResult
    {
        const auto start = Clock::now();
        FindResult out;
        out.log.k = k;
        auto finish = [&](Tri t) {
            out.found = t;
            out.log.found = t;
            out.log.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            return out;
        };

        if (k < g.edge_count())
            return finish(Tri::no);
        if (g.edge_count() == 0) {
            out.labeling = Labeling{};
            return finish(Tri::yes);
        }
        if (! counting_prune(g, k)) {
            out.log.refuted_by_bound = true;
            return finish(Tri::no);
        }

        std::atomic<bool> never{ false };
        std::vector<Value> roots;
        {
            LabelSearch probe(g, k, fixed, deadline, never);
            if (probe.infeasible())
                return finish(Tri::no);
            if (probe.free_edges() == 0) {
                out.labeling = probe.labeling();
                return finish(Tri::yes);
            }
            roots = probe.root_candidates();
        }
        const bool has_fixed = std::any_of(fixed.begin(), fixed.end(), [](auto & f) { return f.has_value(); });
        if (cfg.symmetry_breaking && max_label_used && g.edge_transitive() && ! has_fixed)
            roots = { k };

        std::vector<std::optional<Labeling>> witnesses(roots.size());
        SearchStats stats;
        auto outcome = run_branches(roots.size(), cfg.threads, [&](std::size_t i, const std::atomic<bool> & cancel) {
            LabelSearch s(g, k, fixed, deadline, cancel);
            auto r = s.run(roots[i]);
            if (r == BranchResult::found)
                witnesses[i] = s.labeling();
            stats.nodes += s.nodes;
            stats.dss_prunes += s.dss_prunes;
            stats.lookahead_prunes += s.lookahead_prunes;
            return r;
        });
        out.log.nodes = stats.nodes;
        out.log.dss_prunes = stats.dss_prunes;
        out.log.lookahead_prunes = stats.lookahead_prunes;

        if (outcome.result == BranchResult::found) {
            out.labeling = witnesses[outcome.found_index];
            if (! is_ar_labeling(g, *out.labeling).ok() || out.labeling->max_label() > k)
                throw std::logic_error("solver produced an invalid labeling");
            return finish(Tri::yes);
        }
        return finish(outcome.result == BranchResult::timed_out ? Tri::unknown : Tri::no);
    }

} // namespace detail

/**
 * Decides whether g has an AR-labeling with labels from {1..k}: yes with a
 * verified witness, no after exhausting the search, unknown on timeout.
 * k below the edge count is answered no without search.
 */
inline auto find_ar_labeling(const Graph & g, Value k, const SearchConfig & cfg = {}) -> FindResult
{
    const Deadline deadline(cfg.budget);
    const bool forced = k == g.edge_count() || (g.edge_count() > 0 && k <= ari_lower_bound(g));
    return detail::find_labeling(g, k, cfg, deadline, {}, forced);
}

enum class AriStatus { exact, bounds_only_timeout };

struct AriResult
{
    Graph graph;
    AriStatus status = AriStatus::bounds_only_timeout;
    Value lower = 0;
    Value upper = 0;
    std::optional<Labeling> witness;
    std::vector<SearchLog> attempts;

    auto exact() const -> bool { return status == AriStatus::exact; }
    auto value() const -> Value
    {
        if (! exact())
            throw std::logic_error("AR-index only bounded");
        return lower;
    }
};

/// ARI(g) by iterative deepening from the lower bound. Exact only when every
/// smaller k was refuted by exhausted search or by the bounds.
inline auto ari(const Graph & g, const SearchConfig & cfg = {}) -> AriResult
{
    const Deadline deadline(cfg.budget);
    AriResult out;
    out.graph = g;
    out.lower = ari_lower_bound(g);
    out.upper = ari_upper_bound(g);
    for (Value k = out.lower ; k <= out.upper ; ++k) {
        auto r = detail::find_labeling(g, k, cfg, deadline, {}, true);
        out.attempts.push_back(r.log);
        if (r.found == Tri::yes) {
            out.status = AriStatus::exact;
            out.lower = out.upper = k;
            out.witness = std::move(r.labeling);
            return out;
        }
        if (r.found == Tri::unknown) {
            out.lower = k;
            return out;
        }
    }
    throw std::logic_error("ari: no labeling within the ES(m) upper bound");
}

struct Decision
{
    Tri answer = Tri::unknown;
    std::optional<Labeling> witness;
    std::vector<SearchLog> log;
};

/// AR-graph: an AR-labeling into {1..m} exists.
inline auto is_ar_graph(const Graph & g, const SearchConfig & cfg = {}) -> Decision
{
    auto r = find_ar_labeling(g, g.edge_count(), cfg);
    return { r.found, std::move(r.labeling), { r.log } };
}

/// Almost AR-graph: not an AR-graph, but an AR-labeling into {1..m + 1} exists.
inline auto is_almost_ar(const Graph & g, const SearchConfig & cfg = {}) -> Decision
{
    const Deadline deadline(cfg.budget);
    auto base = detail::find_labeling(g, g.edge_count(), cfg, deadline, {}, true);
    if (base.found != Tri::no)
        return { base.found == Tri::yes ? Tri::no : Tri::unknown, std::nullopt, { base.log } };
    auto next = detail::find_labeling(g, g.edge_count() + 1, cfg, deadline, {}, true);
    return { next.found, std::move(next.labeling), { base.log, next.log } };
}

/**
 * Necessary condition for K_{m,n} (m ≤ n) to be an AR-graph: the m vertices
 * of degree n need m pairwise-disjoint n-element DSS subsets of {1..mn}.
 * Those m·n labels are all of {1..mn}, so this is an exact cover; we branch
 * on the smallest uncovered value, which must be the minimum of the next set.
 */
inline auto disjoint_dss_cover(int m, int n, const Deadline & deadline = {}) -> std::optional<std::vector<DssSet>>
{
    if (m < 1 || n < 1 || m > n)
        throw InvalidInput("disjoint_dss_cover: need 1 <= m <= n");
    const Value cap = static_cast<Value>(m) * n;
    if (cap > 64)
        throw UnsupportedSize("disjoint_dss_cover: m*n must be at most 64");

    std::vector<std::vector<std::uint64_t>> by_min(static_cast<std::size_t>(cap) + 1);
    for_each_dss_set(static_cast<std::size_t>(n), cap, [&](const DssSet & s) {
        std::uint64_t mask = 0;
        for (auto x : s.elements())
            mask |= std::uint64_t{ 1 } << (x - 1);
        by_min[static_cast<std::size_t>(s[0])].push_back(mask);
        return true;
    });

    const std::uint64_t all = cap == 64 ? ~std::uint64_t{ 0 } : (std::uint64_t{ 1 } << cap) - 1;
    std::vector<std::uint64_t> chosen;
    DeadlinePoll poll(deadline);
    auto cover = [&](auto & self, std::uint64_t covered) -> bool {
        if (covered == all)
            return true;
        if (poll.tick())
            return false;
        const auto smallest = static_cast<std::size_t>(std::countr_one(covered)) + 1;
        for (auto mask : by_min[smallest]) {
            if (mask & covered)
                continue;
            chosen.push_back(mask);
            if (self(self, covered | mask))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    const bool ok = cover(cover, 0);
    if (poll.stopped())
        throw UnsupportedSize("disjoint_dss_cover: budget exhausted");
    if (! ok)
        return std::nullopt;

    std::vector<DssSet> out;
    for (auto mask : chosen) {
        std::vector<Value> elems;
        for (Value x = 1 ; x <= cap ; ++x)
            if (mask & (std::uint64_t{ 1 } << (x - 1)))
                elems.push_back(x);
        out.emplace_back(std::move(elems));
    }
    return out;
}

struct WheelLabeling
{
    Labeling labeling;
    bool greedy = false;        ///< built by the matching-then-greedy rim pass
    SearchLog fallback;         ///< backtracking record when greedy was not used or failed
};

/**
 * AR-labeling of W_n (hub 0, rim 1..n−1) with largest label ES(n−1). The
 * spokes carry an ES(n−1) witness, so the hub is an AR-vertex. Rim vertices
 * have degree 3, and with spoke s and one rim label a already present, a
 * further label fits iff it avoids s + a and |s − a|. For n ≥ 8 the rim is
 * filled greedily: a maximum matching of rim edges first, then the rest, each
 * taking the smallest unused feasible label. If that fails, or for n < 8, the
 * rim is found by backtracking with the spokes fixed.
 */
inline auto label_wheel(int n, const SearchConfig & cfg = {}, const EsTable & table = EsTable::known()) -> WheelLabeling
{
    if (n < 6)
        throw InvalidInput("label_wheel: need n >= 6");
    const auto spokes = table.exact_witness(n - 1);
    if (! spokes)
        throw UnsupportedSize("label_wheel: ES(" + std::to_string(n - 1) + ") is not available");
    const Graph g = wheel(n);
    const Value cap = spokes->max();

    std::vector<std::optional<Value>> fixed(static_cast<std::size_t>(g.edge_count()));
    for (int i = 1 ; i < n ; ++i)
        fixed[g.find_edge(0, i)] = (*spokes)[static_cast<std::size_t>(i - 1)];

    WheelLabeling out;
    if (n >= 8) {
        const int rim = n - 1;
        std::vector<std::size_t> rim_order;
        for (int i = 1 ; i + 1 <= rim ; i += 2)
            rim_order.push_back(g.find_edge(i, i + 1));
        for (int i = 2 ; i + 1 <= rim ; i += 2)
            rim_order.push_back(g.find_edge(i, i + 1));
        rim_order.push_back(g.find_edge(1, rim));

        std::vector<Value> labels(static_cast<std::size_t>(g.edge_count()), 0);
        std::vector<char> used(static_cast<std::size_t>(cap) + 1, 0);
        for (std::size_t e = 0 ; e < fixed.size() ; ++e)
            if (fixed[e]) {
                labels[e] = *fixed[e];
                used[static_cast<std::size_t>(*fixed[e])] = 1;
            }
        auto at = [&](Vertex v) {
            std::vector<Value> ls;
            for (auto e : g.incident_edges(v))
                if (labels[e])
                    ls.push_back(labels[e]);
            return ls;
        };
        bool ok = true;
        for (auto e : rim_order) {
            const auto [u, v] = g.edge(e);
            const auto su = sum_bitset(at(u)), sv = sum_bitset(at(v));
            Value pick = 0;
            for (Value l = 1 ; l <= cap && ! pick ; ++l)
                if (! used[static_cast<std::size_t>(l)] && su.can_extend(static_cast<std::uint64_t>(l))
                        && sv.can_extend(static_cast<std::uint64_t>(l)))
                    pick = l;
            if (! pick) {
                ok = false;
                break;
            }
            labels[e] = pick;
            used[static_cast<std::size_t>(pick)] = 1;
        }
        if (ok && is_ar_labeling(g, Labeling{ labels }).ok()) {
            out.labeling = Labeling{ labels };
            out.greedy = true;
            return out;
        }
    }

    auto r = detail::find_labeling(g, cap, cfg, Deadline(cfg.budget), fixed, false);
    out.fallback = r.log;
    if (r.found != Tri::yes)
        throw UnsupportedSize("label_wheel: no rim labeling found for W_" + std::to_string(n)
                + (r.found == Tri::unknown ? " within budget" : ""));
    out.labeling = *r.labeling;
    return out;
}

struct EmbedResult
{
    Tri status = Tri::unknown;
    Graph graph;
    Labeling labeling;
    int pendant = -1;           ///< vertex attached to vertex 0, or -1 if g was already AR
    int path_length = 0;        ///< vertices in the attached path
};

/**
 * Builds an AR-graph containing g as an induced subgraph. If g is not AR,
 * attach a pendant vertex p to vertex 0 (giving G′); if G′ is not AR either,
 * let l = ARI(G′) − m(G′), hang a path of l new vertices off p, and give its l
 * edges the labels of {1..ARI(G′)} unused by the optimal labeling of G′.
 */
inline auto embed_in_ar_graph(const Graph & g, const SearchConfig & cfg = {}) -> EmbedResult
{
    const Deadline deadline(cfg.budget);
    auto remaining = [&] {
        SearchConfig sub = cfg;
        sub.budget = deadline.remaining();
        return sub;
    };

    EmbedResult out;
    auto base = is_ar_graph(g, remaining());
    if (base.answer == Tri::unknown)
        return out;
    if (base.answer == Tri::yes) {
        out = { Tri::yes, g, *base.witness, -1, 0 };
        return out;
    }
    if (g.vertex_count() == 0)
        throw InvalidInput("embed_in_ar_graph: empty graph");

    const Vertex p = g.vertex_count();
    auto edges = g.edges();
    edges.emplace_back(0, p);
    const Graph with_pendant(p + 1, edges, g.name().empty() ? "" : g.name() + " + pendant");

    auto index = ari(with_pendant, remaining());
    if (! index.exact())
        return out;
    const Value l = index.value() - with_pendant.edge_count();

    std::map<Edge, Value> assigned;
    std::vector<char> used(static_cast<std::size_t>(index.value()) + 1, 0);
    for (std::size_t e = 0 ; e < with_pendant.edges().size() ; ++e) {
        assigned[with_pendant.edge(e)] = (*index.witness)[e];
        used[static_cast<std::size_t>((*index.witness)[e])] = 1;
    }
    std::vector<Value> spare;
    for (Value x = 1 ; x <= index.value() ; ++x)
        if (! used[static_cast<std::size_t>(x)])
            spare.push_back(x);

    Vertex prev = p;
    for (Value i = 0 ; i < l ; ++i) {
        const Vertex next = p + 1 + static_cast<Vertex>(i);
        edges.emplace_back(prev, next);
        assigned[{ prev, next }] = spare[static_cast<std::size_t>(i)];
        prev = next;
    }
    Graph h(p + 1 + static_cast<int>(l), edges, g.name().empty() ? "" : g.name() + " embedded");
    Labeling labels;
    for (auto & e : h.edges())
        labels.labels.push_back(assigned.at(e));
    if (! is_ar_labeling(h, labels).ok() || labels.max_label() > h.edge_count())
        throw std::logic_error("embedding produced an invalid labeling");
    out = { Tri::yes, std::move(h), std::move(labels), p, static_cast<int>(l) };
    return out;
}

} // namespace arlab
