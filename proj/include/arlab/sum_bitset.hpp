#pragma once

#include <arlab/error.hpp>

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace arlab {

using Word = std::uint64_t;
inline constexpr std::uint64_t bits_per_word = 64;
/// Largest subset sum an occupancy bitset will hold (512 MiB of bits).
inline constexpr std::uint64_t max_bitset_sum = std::uint64_t{ 1 } << 32;

inline constexpr auto words_for_bits(std::uint64_t bits) -> std::size_t
{
    return static_cast<std::size_t>((bits + bits_per_word - 1) / bits_per_word);
}

namespace bits {

    // Word i of (src << shift), reading only src[0 .. i].
    inline auto shifted_word(std::span<const Word> src, std::size_t i, std::uint64_t shift) -> Word
    {
        const std::uint64_t q = shift / bits_per_word, r = shift % bits_per_word;
        if (i < q)
            return 0;
        const std::size_t j = i - q;
        Word w = src[j] << r;
        if (r != 0 && j > 0)
            w |= src[j - 1] >> (bits_per_word - r);
        return w;
    }

    /// True iff `occ & (occ << label)` is empty, i.e. adding `label` to the
    /// underlying set creates no repeated subset sum.
    inline auto can_extend(std::span<const Word> occ, std::uint64_t label) -> bool
    {
        const std::size_t first = static_cast<std::size_t>(label / bits_per_word);
        for (std::size_t i = first ; i < occ.size() ; ++i)
            if (occ[i] & shifted_word(occ, i, label))
                return false;
        return true;
    }

    /// occ |= occ << label, in place. The span must already be wide enough to
    /// hold the new total.
    inline auto extend(std::span<Word> occ, std::uint64_t label) -> void
    {
        const std::size_t first = static_cast<std::size_t>(label / bits_per_word);
        for (std::size_t i = occ.size() ; i-- > first ; )
            occ[i] |= shifted_word(occ, i, label);
    }

    inline auto count(std::span<const Word> occ) -> std::uint64_t
    {
        std::uint64_t c = 0;
        for (auto w : occ)
            c += static_cast<std::uint64_t>(std::popcount(w));
        return c;
    }

    inline auto test(std::span<const Word> occ, std::uint64_t s) -> bool
    {
        const auto i = static_cast<std::size_t>(s / bits_per_word);
        return i < occ.size() && ((occ[i] >> (s % bits_per_word)) & 1U);
    }

} // namespace bits

/**
 * Occupancy bitmap of the subset sums of a finite set of positive integers.
 * Bit s is set iff some subset sums to s; bit 0 (empty subset) is always set
 * and the highest set bit is the total. The set is DSS exactly when the
 * population count is 2^size.
 */
class SumBitset
{
public:
    SumBitset() : words_(1, Word{ 1 }) {}

    auto total() const -> std::uint64_t { return total_; }
    auto size() const -> std::size_t { return size_; }
    auto count() const -> std::uint64_t { return bits::count(words_); }
    auto test(std::uint64_t s) const -> bool { return s <= total_ && bits::test(words_, s); }
    auto words() const -> std::span<const Word> { return words_; }

    /// True when every subset of the `size()` inserted labels has its own sum.
    auto distinct() const -> bool
    {
        return size_ < 64 && count() == (std::uint64_t{ 1 } << size_);
    }

    auto can_extend(std::uint64_t label) const -> bool
    {
        if (label == 0)
            throw InvalidInput("can_extend: label must be positive");
        return bits::can_extend(words_, label);
    }

    /// Adds `label` to the underlying multiset, growing to total + label + 1 bits.
    auto extend(std::uint64_t label) -> void
    {
        if (label == 0)
            throw InvalidInput("sum bitset: elements must be positive");
        if (label > std::numeric_limits<std::uint64_t>::max() - total_ - 1)
            throw RangeError("sum bitset: total overflows 64 bits");
        if (total_ + label > max_bitset_sum)
            throw UnsupportedSize("sum bitset: total " + std::to_string(total_ + label) + " exceeds bitset limit");
        total_ += label;
        words_.resize(words_for_bits(total_ + 1), 0);
        bits::extend(words_, label);
        ++size_;
    }

    auto extended(std::uint64_t label) const -> SumBitset
    {
        SumBitset copy = *this;
        copy.extend(label);
        return copy;
    }

    /// All set bits in increasing order.
    auto sums() const -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> out;
        for (std::uint64_t s = 0 ; s <= total_ ; ++s)
            if (bits::test(words_, s))
                out.push_back(s);
        return out;
    }

    friend auto operator==(const SumBitset &, const SumBitset &) -> bool = default;

private:
    std::vector<Word> words_;
    std::uint64_t total_ = 0;
    std::size_t size_ = 0;
};

} // namespace arlab
