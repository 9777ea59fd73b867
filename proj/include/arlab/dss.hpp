#pragma once

#include <arlab/error.hpp>
#include <arlab/sum_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arlab {

using Value = std::int64_t;

namespace detail {

    inline auto check_elements(std::span<const Value> elements) -> void
    {
        std::vector<Value> sorted(elements.begin(), elements.end());
        std::sort(sorted.begin(), sorted.end());
        Value total = 0;
        for (std::size_t i = 0 ; i < sorted.size() ; ++i) {
            if (sorted[i] < 1)
                throw InvalidInput("elements must be positive, got " + std::to_string(sorted[i]));
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw InvalidInput("duplicate element " + std::to_string(sorted[i]));
            if (sorted[i] > std::numeric_limits<Value>::max() - total)
                throw RangeError("sum of elements overflows 64 bits");
            total += sorted[i];
        }
    }

} // namespace detail

/// Two disjoint nonempty subsets with the same sum.
struct SubsetCollision
{
    std::vector<Value> first;
    std::vector<Value> second;
};

/**
 * Brute-force collision search over all 2^n subsets, for extracting a
 * certificate once a set is known not to be DSS. The common part of the two
 * colliding subsets is removed, so the returned pair is disjoint. n is
 * limited to 24.
 */
inline auto find_collision(std::span<const Value> elements) -> std::optional<SubsetCollision>
{
    detail::check_elements(elements);
    const std::size_t n = elements.size();
    if (n > 24)
        throw InvalidInput("find_collision: at most 24 elements");
    std::unordered_map<Value, std::uint32_t> seen;
    seen.reserve(std::size_t{ 1 } << n);
    for (std::uint32_t mask = 0 ; mask < (std::uint32_t{ 1 } << n) ; ++mask) {
        Value s = 0;
        for (std::size_t i = 0 ; i < n ; ++i)
            if (mask & (1U << i))
                s += elements[i];
        auto [it, fresh] = seen.emplace(s, mask);
        if (! fresh) {
            const std::uint32_t common = it->second & mask;
            SubsetCollision c;
            for (std::size_t i = 0 ; i < n ; ++i) {
                if ((it->second & ~common) & (1U << i))
                    c.first.push_back(elements[i]);
                if ((mask & ~common) & (1U << i))
                    c.second.push_back(elements[i]);
            }
            return c;
        }
    }
    return std::nullopt;
}

/// Subset-sum occupancy of a set of distinct positive integers.
inline auto sum_bitset(std::span<const Value> elements) -> SumBitset
{
    detail::check_elements(elements);
    SumBitset occ;
    for (auto e : elements)
        occ.extend(static_cast<std::uint64_t>(e));
    return occ;
}

/// True iff all 2^n subset sums of `elements` are distinct (empty subset included).
inline auto is_dss(std::span<const Value> elements) -> bool
{
    if (elements.empty())
        throw InvalidInput("is_dss: empty set");
    detail::check_elements(elements);
    const auto total = std::accumulate(elements.begin(), elements.end(), std::uint64_t{ 0 });
    if (total > max_bitset_sum) {
        if (elements.size() > 24)
            throw UnsupportedSize("is_dss: sum too large for the bitset and too many elements for enumeration");
        return ! find_collision(elements);
    }
    SumBitset occ;
    for (auto e : elements) {
        if (! occ.can_extend(static_cast<std::uint64_t>(e)))
            return false;
        occ.extend(static_cast<std::uint64_t>(e));
    }
    return true;
}

inline auto is_dss(std::initializer_list<Value> elements) -> bool
{
    return is_dss(std::span<const Value>(elements.begin(), elements.size()));
}

/// Incremental DSS test: `occupancy` must describe a DSS set not containing `label`.
inline auto can_extend(const SumBitset & occupancy, Value label) -> bool
{
    if (label < 1)
        throw InvalidInput("can_extend: label must be positive");
    return occupancy.can_extend(static_cast<std::uint64_t>(label));
}

/// A strictly increasing set of positive integers with distinct subset sums.
class DssSet
{
public:
    /// Sorts, validates and DSS-checks; throws InvalidInput if any fails.
    explicit DssSet(std::vector<Value> elements) : elements_(std::move(elements))
    {
        std::sort(elements_.begin(), elements_.end());
        if (! is_dss(elements_))
            throw InvalidInput("set does not have distinct subset sums");
    }

    auto elements() const -> std::span<const Value> { return elements_; }
    auto size() const -> std::size_t { return elements_.size(); }
    auto max() const -> Value { return elements_.back(); }
    auto operator[](std::size_t i) const -> Value { return elements_[i]; }

    friend auto operator==(const DssSet &, const DssSet &) -> bool = default;
    friend auto operator<=>(const DssSet & a, const DssSet & b)
    {
        return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                b.elements_.begin(), b.elements_.end());
    }

private:
    struct Trusted {};
    DssSet(std::vector<Value> elements, Trusted) : elements_(std::move(elements)) {}

    std::vector<Value> elements_;

    friend auto for_each_dss_set(std::size_t, Value, const std::function<bool (const DssSet &)> &) -> void;
};

/**
 * Visits every `size`-element DSS subset of {1..cap} in lexicographic order.
 * The visitor returns false to stop early.
 */
inline auto for_each_dss_set(std::size_t size, Value cap, const std::function<bool (const DssSet &)> & visit) -> void
{
    if (size < 1)
        throw InvalidInput("enumerate: size must be at least 1");
    if (cap < 1 || static_cast<std::uint64_t>(cap) < size)
        throw InvalidInput("enumerate: size exceeds cap");
    if (cap > std::numeric_limits<Value>::max() / static_cast<Value>(size))
        throw RangeError("enumerate: cap too large");

    const std::size_t width = words_for_bits(static_cast<std::uint64_t>(cap) * size + 1);
    std::vector<Word> stack((size + 1) * width, 0);
    stack[0] = 1;
    std::vector<Value> chosen;
    chosen.reserve(size);

    bool stop = false;
    auto recurse = [&](auto & self, Value from) -> void {
        const std::size_t depth = chosen.size();
        if (depth == size) {
            if (! visit(DssSet(chosen, DssSet::Trusted{})))
                stop = true;
            return;
        }
        std::span<const Word> occ(stack.data() + depth * width, width);
        std::span<Word> next(stack.data() + (depth + 1) * width, width);
        const Value last = cap - static_cast<Value>(size - depth - 1);
        for (Value a = from ; a <= last && ! stop ; ++a) {
            if (! bits::can_extend(occ, static_cast<std::uint64_t>(a)))
                continue;
            std::copy(occ.begin(), occ.end(), next.begin());
            bits::extend(next, static_cast<std::uint64_t>(a));
            chosen.push_back(a);
            self(self, a + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 1);
}

/// All `size`-element DSS subsets of {1..cap}, lexicographically sorted.
inline auto enumerate_dss_sets(std::size_t size, Value cap) -> std::vector<DssSet>
{
    std::vector<DssSet> out;
    for_each_dss_set(size, cap, [&](const DssSet & s) {
        out.push_back(s);
        return true;
    });
    return out;
}

} // namespace arlab
