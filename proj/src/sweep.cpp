#include "sclean/sweep.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace sclean {

SweepPlan plan_sweep(const TriRing& ring, std::uint64_t exhaustive_limit, std::uint64_t sample_size,
                     std::uint64_t seed) {
    SweepPlan plan;
    plan.total = ring.size();
    plan.seed = seed;
    if (plan.total <= exhaustive_limit) return plan;

    plan.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, plan.total - 1);
    plan.sample.resize(sample_size);
    for (auto& idx : plan.sample) idx = pick(rng);
    return plan;
}

SweepResult run_sweep(const TriRing& ring, const SweepPlan& plan,
                      const std::function<bool(const TriMatrix&)>& passes, unsigned threads) {
    const std::uint64_t count = plan.count();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count / 4096, 1)));

    std::vector<SweepResult> partial(threads);
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&](unsigned w) {
        const std::uint64_t begin = count * w / threads;
        const std::uint64_t end = count * (w + 1) / threads;
        auto& out = partial[w];
        try {
            for (std::uint64_t pos = begin; pos < end; ++pos) {
                const auto idx = plan.index_at(pos);
                ++out.checked;
                if (!passes(ring.from_index(idx))) {
                    ++out.failures;
                    if (!out.first_failure || idx < *out.first_failure) out.first_failure = idx;
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    if (error) std::rethrow_exception(error);

    SweepResult total;
    for (const auto& p : partial) {
        total.checked += p.checked;
        total.failures += p.failures;
        if (p.first_failure && (!total.first_failure || *p.first_failure < *total.first_failure)) {
            total.first_failure = p.first_failure;
        }
    }
    return total;
}

}  // namespace sclean
