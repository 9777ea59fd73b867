#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace arlab {

using Clock = std::chrono::steady_clock;
using Budget = std::chrono::milliseconds;

/// Wall-clock limit. A default-constructed deadline never expires.
class Deadline
{
public:
    Deadline() = default;
    explicit Deadline(Budget budget) : end_(Clock::now() + budget), bounded_(true) {}

    auto expired() const -> bool { return bounded_ && Clock::now() >= end_; }
    auto remaining() const -> Budget
    {
        if (! bounded_)
            return Budget::max();
        return std::max(Budget::zero(), std::chrono::duration_cast<Budget>(end_ - Clock::now()));
    }

private:
    Clock::time_point end_{};
    bool bounded_ = false;
};

struct SearchConfig
{
    Budget budget = std::chrono::minutes(10);
    unsigned threads = 1;
    bool symmetry_breaking = false;
};

/// Shared node / prune counters, reported in refutation logs.
struct SearchStats
{
    std::atomic<std::uint64_t> nodes{ 0 };
    std::atomic<std::uint64_t> dss_prunes{ 0 };
    std::atomic<std::uint64_t> lookahead_prunes{ 0 };

    SearchStats() = default;
    SearchStats(const SearchStats & o)
        : nodes(o.nodes.load()), dss_prunes(o.dss_prunes.load()), lookahead_prunes(o.lookahead_prunes.load())
    {
    }
    auto operator=(const SearchStats & o) -> SearchStats &
    {
        nodes = o.nodes.load();
        dss_prunes = o.dss_prunes.load();
        lookahead_prunes = o.lookahead_prunes.load();
        return *this;
    }
};

enum class BranchResult { exhausted, found, timed_out };

/// Cheap periodic deadline polling for tight search loops.
class DeadlinePoll
{
public:
    explicit DeadlinePoll(const Deadline & deadline, const std::atomic<bool> * cancel = nullptr)
        : deadline_(deadline), cancel_(cancel)
    {
    }

    /// True once the deadline has passed or the shared cancel flag is up.
    auto tick() -> bool
    {
        if (stopped_)
            return true;
        if ((count_++ & 0x3ff) == 0)
            stopped_ = deadline_.expired() || (cancel_ && cancel_->load(std::memory_order_relaxed));
        return stopped_;
    }

    auto stopped() const -> bool { return stopped_; }

private:
    const Deadline & deadline_;
    const std::atomic<bool> * cancel_;
    std::uint64_t count_ = 0;
    bool stopped_ = false;
};

struct BranchOutcome
{
    BranchResult result = BranchResult::exhausted;
    std::size_t found_index = 0;
};

/**
 * Runs `count` independent root branches, serially when threads <= 1.
 *
 * The winning branch is the lowest-indexed one that found a solution, so a
 * parallel run reports the same branch as a serial run whenever no branch
 * times out. Branches above the current winner are skipped. The callback gets
 * the branch index and a flag it must poll; the flag rises when a lower
 * branch has already won.
 */
inline auto run_branches(std::size_t count, unsigned threads,
        const std::function<BranchResult (std::size_t, const std::atomic<bool> &)> & branch) -> BranchOutcome
{
    std::atomic<std::size_t> best{ std::numeric_limits<std::size_t>::max() };
    std::atomic<bool> timed_out{ false };

    if (threads <= 1 || count <= 1) {
        std::atomic<bool> never{ false };
        for (std::size_t i = 0 ; i < count ; ++i) {
            auto r = branch(i, never);
            if (r == BranchResult::found)
                return { BranchResult::found, i };
            if (r == BranchResult::timed_out)
                return { BranchResult::timed_out, 0 };
        }
        return {};
    }

    std::atomic<std::size_t> next{ 0 };
    std::vector<std::thread> workers;
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
    std::mutex flags_mutex;
    std::vector<std::unique_ptr<std::atomic<bool>>> flags;
    flags.reserve(count);
    for (std::size_t i = 0 ; i < count ; ++i)
        flags.push_back(std::make_unique<std::atomic<bool>>(false));

    for (unsigned t = 0 ; t < n ; ++t)
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || i > best.load())
                    return;
                auto r = branch(i, *flags[i]);
                if (r == BranchResult::found) {
                    std::size_t cur = best.load();
                    while (i < cur && ! best.compare_exchange_weak(cur, i))
                        ;
                    std::lock_guard lock(flags_mutex);
                    for (std::size_t j = i + 1 ; j < count ; ++j)
                        flags[j]->store(true);
                }
                else if (r == BranchResult::timed_out && i < best.load())
                    timed_out = true;
            }
        });
    for (auto & w : workers)
        w.join();

    if (best.load() != std::numeric_limits<std::size_t>::max())
        return { BranchResult::found, best.load() };
    if (timed_out)
        return { BranchResult::timed_out, 0 };
    return {};
}

} // namespace arlab
