#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sclean/skewtri.hpp"

namespace sclean {

/// Which matrices of T_n(R, sigma) a sweep visits: all of them, or a
/// fixed-seed uniform sample when the ring is larger than the limit.
struct SweepPlan {
    std::uint64_t total = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> sample;

    std::uint64_t count() const { return exhaustive ? total : sample.size(); }
    std::uint64_t index_at(std::uint64_t pos) const { return exhaustive ? pos : sample[pos]; }
};

SweepPlan plan_sweep(const TriRing& ring, std::uint64_t exhaustive_limit, std::uint64_t sample_size,
                     std::uint64_t seed);

struct SweepResult {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    /// Least matrix index that failed, independent of worker count.
    std::optional<std::uint64_t> first_failure;
};

/// Evaluates `passes` on every planned matrix. Work is split into contiguous
/// ranges over `threads` workers (0 = hardware concurrency); the predicate
/// must be safe to call concurrently.
SweepResult run_sweep(const TriRing& ring, const SweepPlan& plan,
                      const std::function<bool(const TriMatrix&)>& passes, unsigned threads = 0);

}  // namespace sclean
