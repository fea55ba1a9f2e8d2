#ifndef MIXDISC_NUMERIC_HPP
#define MIXDISC_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>

namespace mixdisc {

using Complex = std::complex<double>;

/// Neumaier compensated accumulator. Summation order is part of the
/// contract: results are reproducible for a fixed order of add() calls.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexKahanSum {
public:
    void add(const Complex& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

/// Process-wide default worker count (0 = hardware concurrency).
int default_thread_count();
void set_default_thread_count(int n);

/// Block grid covering [0, total): fixed block size, capped block count.
/// Depends only on `total`, never on the thread count, so any reduction
/// keyed by block index is bit-reproducible.
struct BlockGrid {
    std::uint64_t block_size;
    std::size_t blocks;
};
BlockGrid block_grid(std::uint64_t total);

/// Runs `work(block_index, begin, end)` over the grid on a pool of
/// `threads` workers (0 = process default).  Returns the grid used.
BlockGrid blocked_for(std::uint64_t total, int threads,
                      const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& work);

// --- small combinatorics kernel ---------------------------------------

/// C(n, k) as a double (exact for values representable in 53 bits).
double binomial(int n, int k);

/// C(n, k) in unsigned 64-bit arithmetic; throws ResourceError on overflow.
std::uint64_t binomial_u64(int n, int k);

/// n! as a double (inf for n > 170).
double factorial(int n);

/// ln n!
double log_factorial(int n);

/// 1 / (n (n-1) ... (n-k+1)) = (n-k)!/n!
double reciprocal_falling_factorial(int n, int k);

/// Next mask with the same popcount (Gosper's hack); masks enumerate
/// k-subsets in increasing numeric order.
std::uint64_t next_subset_mask(std::uint64_t mask);

/// The rank-th k-subset of {0..n-1} in increasing mask order.
std::uint64_t subset_mask_at_rank(int n, int k, std::uint64_t rank);

/// Wraps an angle difference into (-pi, pi].
double wrap_angle(double a);

}  // namespace mixdisc

#endif
