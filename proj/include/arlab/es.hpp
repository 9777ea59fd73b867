#pragma once

#include <arlab/dss.hpp>
#include <arlab/error.hpp>
#include <arlab/search.hpp>

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace arlab {

/// ES(1..9) as published; OEIS A276661.
inline constexpr std::array<Value, 9> known_es_values{ 1, 2, 4, 7, 13, 24, 44, 84, 161 };

/// Largest n for which es() runs a search; beyond it records are bound-only.
inline constexpr int max_searched_es = 9;

/// ⌈(2^n − 1)/n⌉. The 2^n distinct subset sums all lie in [0, n·max].
inline auto erdos_counting_lb(int n) -> Value
{
    if (n < 1)
        throw InvalidInput("erdos_counting_lb: n must be at least 1");
    if (n > 62)
        throw RangeError("erdos_counting_lb: 2^n overflows");
    const Value num = (Value{ 1 } << n) - 1;
    return (num + n - 1) / n;
}

/// ⌈2^n / (4√n)⌉, evaluated exactly as the least c with 16·c²·n ≥ 4^n.
inline auto erdos_moser_lb(int n) -> Value
{
    if (n < 1)
        throw InvalidInput("erdos_moser_lb: n must be at least 1");
    if (n > 56)
        throw RangeError("erdos_moser_lb: 4^n overflows");
    using Wide = unsigned __int128;
    const Wide target = Wide{ 1 } << (2 * n);
    auto ok = [&](Value c) { return Wide(16) * Wide(c) * Wide(c) * Wide(n) >= target; };
    auto c = static_cast<Value>(std::ldexp(1.0L, n) / (4.0L * std::sqrt(static_cast<long double>(n))));
    c = std::max<Value>(c - 2, 0);
    while (! ok(c))
        ++c;
    return c;
}

namespace detail {

    // nearest integer to √(2k): the largest r with r(r − 1) ≤ 2k − 1
    inline auto conway_guy_offset(Value k) -> Value
    {
        auto r = static_cast<Value>(std::sqrt(2.0 * static_cast<double>(k)));
        while (r > 0 && r * (r - 1) > 2 * k - 1)
            --r;
        while ((r + 1) * r <= 2 * k - 1)
            ++r;
        return r;
    }

    inline auto conway_guy_prefix(int n) -> std::vector<Value>
    {
        if (n < 0)
            throw InvalidInput("conway_guy: n must be nonnegative");
        std::vector<Value> u{ 0, 1 };
        for (Value k = 1 ; static_cast<int>(u.size()) <= n ; ++k) {
            const Value prev = u[static_cast<std::size_t>(k)];
            if (prev > std::numeric_limits<Value>::max() / 2)
                throw RangeError("conway_guy: value overflows 64 bits");
            u.push_back(2 * prev - u[static_cast<std::size_t>(k - conway_guy_offset(k))]);
        }
        u.resize(static_cast<std::size_t>(n) + 1);
        return u;
    }

} // namespace detail

/// u(n) of the Conway–Guy sequence: 0, 1, 2, 4, 7, 13, 24, 44, 84, 161, 309, ...
inline auto conway_guy_u(int n) -> Value
{
    return detail::conway_guy_prefix(n).back();
}

/// {u(n) − u(n − i) : i = 1..n}, re-verified as DSS before returning.
inline auto conway_guy_set(int n) -> DssSet
{
    if (n < 1)
        throw InvalidInput("conway_guy_set: n must be at least 1");
    if (n > 24)
        throw RangeError("conway_guy_set: verification bitmap too large for n > 24");
    const auto u = detail::conway_guy_prefix(n);
    std::vector<Value> elements;
    for (int i = 1 ; i <= n ; ++i)
        elements.push_back(u[static_cast<std::size_t>(n)] - u[static_cast<std::size_t>(n - i)]);
    std::sort(elements.begin(), elements.end());
    if (! is_dss(elements))
        throw std::logic_error("conway_guy_set(" + std::to_string(n) + ") failed DSS verification");
    return DssSet(std::move(elements));
}

enum class EsStatus { computed, known, bound_only };

inline auto to_string(EsStatus s) -> std::string
{
    switch (s) {
        case EsStatus::computed: return "computed";
        case EsStatus::known: return "known";
        case EsStatus::bound_only: return "bound-only";
    }
    return "?";
}

/**
 * ES(n) or the best interval for it. For computed and known records
 * lower == upper == ES(n) and the witness is an n-element DSS set with that
 * maximum. For bound-only records every maximum below `lower` has been
 * refuted (or ruled out analytically) and `witness`, when present, attains
 * `upper`.
 */
struct EsRecord
{
    int n = 0;
    EsStatus status = EsStatus::bound_only;
    Value lower = 0;
    Value upper = 0;
    std::optional<DssSet> witness;
    std::uint64_t nodes = 0;

    auto exact() const -> bool { return status != EsStatus::bound_only; }
    auto value() const -> Value
    {
        if (! exact())
            throw std::logic_error("ES(" + std::to_string(n) + ") is only bounded");
        return lower;
    }
};

/// Best lower bound available without search: the published value for n ≤ 9,
/// the counting and second-moment bounds beyond.
inline auto es_lower_bound(int n) -> Value
{
    if (n <= 0)
        return 0;
    if (n <= static_cast<int>(known_es_values.size()))
        return known_es_values[static_cast<std::size_t>(n - 1)];
    return std::max(erdos_counting_lb(n), erdos_moser_lb(n));
}

namespace detail {

    // Depth-first search for an n-element DSS set with maximum exactly `top`.
    // Elements are chosen in decreasing order; `floor[r]` is a lower bound on
    // ES(r), so the r-th smallest element of any solution is at least floor[r].
    class EsSearch
    {
    public:
        EsSearch(int n, Value top, const std::vector<Value> & floor, const Deadline & deadline,
                const std::atomic<bool> & cancel, SearchStats & stats)
            : n_(n), floor_(floor), width_(words_for_bits(static_cast<std::uint64_t>(top) * n + 1)),
              stack_((static_cast<std::size_t>(n) + 1) * width_, 0), poll_(deadline, &cancel), stats_(stats)
        {
            stack_[0] = 1;
            chosen_.reserve(static_cast<std::size_t>(n));
            push(top);
        }

        /// Candidates for the second-largest element, largest first.
        auto second_candidates() const -> std::vector<Value>
        {
            std::vector<Value> out;
            if (n_ < 2)
                return out;
            for (Value a = chosen_.back() - 1 ; a >= lowest_allowed(n_ - 1) ; --a)
                out.push_back(a);
            return out;
        }

        auto run_from(std::optional<Value> second) -> BranchResult
        {
            if (n_ == 1)
                return BranchResult::found;
            if (second) {
                if (! fits(*second))
                    return BranchResult::exhausted;
                push(*second);
                auto r = descend();
                if (r != BranchResult::found)
                    pop();
                return r;
            }
            return descend();
        }

        auto witness() const -> std::vector<Value> { return chosen_; }
        auto nodes() const -> std::uint64_t { return nodes_; }

    private:
        auto occ(std::size_t depth) -> std::span<Word> { return { stack_.data() + depth * width_, width_ }; }

        // smallest value the next element (the r-th smallest overall) may take
        auto lowest_allowed(int r) const -> Value
        {
            // r distinct values ≤ a sum to at most r·a − r(r−1)/2, and the r
            // smallest elements of a DSS set sum to at least 2^r − 1.
            const Value need = (Value{ 1 } << r) - 1 + static_cast<Value>(r) * (r - 1) / 2;
            return std::max<Value>({ floor_[static_cast<std::size_t>(r)], (need + r - 1) / r, 1 });
        }

        auto fits(Value a) -> bool
        {
            return bits::can_extend(occ(chosen_.size()), static_cast<std::uint64_t>(a));
        }

        auto push(Value a) -> void
        {
            const std::size_t d = chosen_.size();
            auto from = occ(d);
            auto to = occ(d + 1);
            std::copy(from.begin(), from.end(), to.begin());
            bits::extend(to, static_cast<std::uint64_t>(a));
            chosen_.push_back(a);
        }

        auto pop() -> void { chosen_.pop_back(); }

        auto descend() -> BranchResult
        {
            ++nodes_;
            if (poll_.tick())
                return BranchResult::timed_out;
            const int r = n_ - static_cast<int>(chosen_.size());
            if (r == 0)
                return BranchResult::found;
            const std::size_t d = chosen_.size();
            auto cur = occ(d);
            const Value lo = lowest_allowed(r);
            for (Value a = chosen_.back() - 1 ; a >= lo ; --a) {
                if (! bits::can_extend(cur, static_cast<std::uint64_t>(a))) {
                    ++dss_prunes_;
                    continue;
                }
                push(a);
                auto res = descend();
                if (res == BranchResult::found)
                    return res;
                pop();
                if (res == BranchResult::timed_out)
                    return res;
            }
            return BranchResult::exhausted;
        }

    public:
        ~EsSearch()
        {
            stats_.nodes += nodes_;
            stats_.dss_prunes += dss_prunes_;
        }

    private:
        int n_;
        const std::vector<Value> & floor_;
        std::size_t width_;
        std::vector<Word> stack_;
        std::vector<Value> chosen_;
        DeadlinePoll poll_;
        SearchStats & stats_;
        std::uint64_t nodes_ = 0;
        std::uint64_t dss_prunes_ = 0;
    };

    inline auto decide_es_at(int n, Value top, const std::vector<Value> & floor, const Deadline & deadline,
            unsigned threads, SearchStats & stats, std::vector<Value> & witness) -> BranchResult
    {
        std::atomic<bool> never{ false };
        std::vector<Value> seconds;
        {
            EsSearch probe(n, top, floor, deadline, never, stats);
            seconds = probe.second_candidates();
            if (n == 1) {
                witness = probe.witness();
                return BranchResult::found;
            }
        }
        std::vector<std::vector<Value>> found(seconds.size());
        auto outcome = run_branches(seconds.size(), threads, [&](std::size_t i, const std::atomic<bool> & cancel) {
            EsSearch s(n, top, floor, deadline, cancel, stats);
            auto r = s.run_from(seconds[i]);
            if (r == BranchResult::found)
                found[i] = s.witness();
            return r;
        });
        if (outcome.result == BranchResult::found)
            witness = found[outcome.found_index];
        return outcome.result;
    }

} // namespace detail

/**
 * Exact ES(1..n) by branch-and-bound. Each ES(j) is used as a prefix bound
 * for the larger searches; candidate maxima are tried upward from the
 * analytic lower bound. Once the budget runs out, that record and all later
 * ones are bound-only, with `lower` the smallest maximum not yet refuted.
 * Values past max_searched_es are never searched.
 */
inline auto es_sequence(int n, const SearchConfig & cfg = {}) -> std::vector<EsRecord>
{
    if (n < 1)
        throw InvalidInput("es: n must be at least 1");
    if (n > 24)
        throw RangeError("es: n too large");
    const Deadline deadline(cfg.budget);
    SearchStats stats;

    std::vector<Value> floor(static_cast<std::size_t>(n) + 1, 0);
    std::vector<EsRecord> out;
    bool exhausted_budget = false;
    for (int j = 1 ; j <= n ; ++j) {
        EsRecord rec;
        rec.n = j;
        const Value start = std::max({ erdos_counting_lb(j), erdos_moser_lb(j), floor[static_cast<std::size_t>(j - 1)] + 1 });
        rec.upper = conway_guy_u(j);
        rec.lower = start;
        const bool search = ! exhausted_budget && j <= max_searched_es;
        for (Value top = start ; search && top <= rec.upper ; ++top) {
            std::vector<Value> witness;
            auto r = detail::decide_es_at(j, top, floor, deadline, cfg.threads, stats, witness);
            if (r == BranchResult::found) {
                rec.status = EsStatus::computed;
                rec.lower = rec.upper = top;
                rec.witness = DssSet(std::move(witness));
                break;
            }
            rec.lower = top;
            if (r == BranchResult::timed_out)
                exhausted_budget = true;
            else if (top == rec.upper)
                throw std::logic_error("es: Conway-Guy bound not attained by search");
        }
        if (! rec.exact())
            rec.witness = conway_guy_set(j);
        rec.nodes = stats.nodes.load();
        floor[static_cast<std::size_t>(j)] = rec.lower;
        out.push_back(std::move(rec));
    }
    return out;
}

inline auto es(int n, const SearchConfig & cfg = {}) -> EsRecord
{
    return es_sequence(n, cfg).back();
}

/// Records for n = 1..n_max.
class EsTable
{
public:
    /// The nine published values, each with its Conway–Guy witness.
    static auto known() -> EsTable
    {
        EsTable t;
        for (int n = 1 ; n <= static_cast<int>(known_es_values.size()) ; ++n) {
            EsRecord r;
            r.n = n;
            r.status = EsStatus::known;
            r.lower = r.upper = known_es_values[static_cast<std::size_t>(n - 1)];
            r.witness = conway_guy_set(n);
            if (r.witness->max() != r.lower)
                throw std::logic_error("Conway-Guy witness does not attain the published ES value");
            t.records_[n] = std::move(r);
        }
        return t;
    }

    auto contains(int n) const -> bool { return records_.contains(n); }
    auto at(int n) const -> const EsRecord & { return records_.at(n); }
    auto set(EsRecord r) -> void { records_[r.n] = std::move(r); }
    auto records() const -> const std::map<int, EsRecord> & { return records_; }

    /// Exact witness for ES(n), if this table has one.
    auto exact_witness(int n) const -> std::optional<DssSet>
    {
        auto it = records_.find(n);
        if (it == records_.end() || ! it->second.exact())
            return std::nullopt;
        return it->second.witness;
    }

private:
    std::map<int, EsRecord> records_;
};

/**
 * Builds records 1..n_max. Searched values that do not complete within the
 * budget fall back to the published list (n ≤ 9) or stay bound-only.
 */
inline auto es_table(int n_max, const SearchConfig & cfg = {}) -> EsTable
{
    if (n_max < 1)
        throw InvalidInput("es_table: n_max must be at least 1");
    const auto known = EsTable::known();
    EsTable table;
    auto searched = es_sequence(std::min(n_max, 24), cfg);
    Value prev_lower = 0;
    for (int n = 1 ; n <= n_max ; ++n) {
        EsRecord rec;
        if (n <= 24)
            rec = std::move(searched[static_cast<std::size_t>(n - 1)]);
        else {
            rec.n = n;
            rec.lower = std::max({ erdos_counting_lb(n), erdos_moser_lb(n), prev_lower + 1 });
            rec.upper = conway_guy_u(n);
        }
        if (! rec.exact() && known.contains(n))
            rec = known.at(n);
        if (! rec.exact())
            rec.lower = std::max(rec.lower, prev_lower + 1);
        prev_lower = rec.lower;
        table.set(std::move(rec));
    }
    return table;
}

} // namespace arlab
