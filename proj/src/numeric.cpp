#include "mixdisc/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numbers>
#include <thread>

#include "mixdisc/errors.hpp"

namespace mixdisc {

namespace {
std::atomic<int> g_threads{0};
}

int default_thread_count() {
    int n = g_threads.load(std::memory_order_relaxed);
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_thread_count(int n) { g_threads.store(n, std::memory_order_relaxed); }

BlockGrid block_grid(std::uint64_t total) {
    if (total == 0) return {1, 0};
    std::uint64_t block = 1024;
    const std::uint64_t max_blocks = 1 << 14;
    if ((total + block - 1) / block > max_blocks) block = (total + max_blocks - 1) / max_blocks;
    return {block, static_cast<std::size_t>((total + block - 1) / block)};
}

BlockGrid blocked_for(std::uint64_t total, int threads,
                      const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& work) {
    const BlockGrid grid = block_grid(total);
    if (grid.blocks == 0) return grid;
    if (threads <= 0) threads = default_thread_count();
    const std::uint64_t block = grid.block_size;

    if (threads == 1 || grid.blocks == 1) {
        for (std::size_t b = 0; b < grid.blocks; ++b)
            work(b, b * block, std::min<std::uint64_t>(total, (b + 1) * block));
        return grid;
    }

    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= grid.blocks) return;
            work(b, b * block, std::min<std::uint64_t>(total, (b + 1) * block));
        }
    };
    std::vector<std::thread> pool;
    int nworkers = std::min<int>(threads, static_cast<int>(grid.blocks));
    pool.reserve(static_cast<std::size_t>(nworkers) - 1);
    for (int t = 1; t < nworkers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    return grid;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r < 9.0e15 ? std::round(r) : r;
}

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        // r * num / i is integral at every step; guard the product.
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            throw ResourceError("binomial coefficient overflows 64 bits");
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= static_cast<double>(i);
    return r;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double reciprocal_falling_factorial(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r /= static_cast<double>(n - i);
    return r;
}

std::uint64_t next_subset_mask(std::uint64_t mask) {
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    return (((r ^ mask) >> 2) / c) | r;
}

std::uint64_t subset_mask_at_rank(int n, int k, std::uint64_t rank) {
    // Increasing-mask (colex) order: pick the largest element greedily.
    std::uint64_t mask = 0;
    for (int j = k; j >= 1; --j) {
        int c = j - 1;
        while (c + 1 < n && binomial_u64(c + 1, j) <= rank) ++c;
        rank -= binomial_u64(c, j);
        mask |= (std::uint64_t{1} << c);
        n = c;
    }
    return mask;
}

double wrap_angle(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a > std::numbers::pi) a -= two_pi;
    if (a <= -std::numbers::pi) a += two_pi;
    return a;
}

}  // namespace mixdisc
