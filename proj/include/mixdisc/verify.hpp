#ifndef MIXDISC_VERIFY_HPP
#define MIXDISC_VERIFY_HPP

#include <cstdint>

#include "mixdisc/matrix.hpp"

namespace mixdisc {

/// Outcome of a sampled nonvanishing check: evaluations of the exact
/// quantity over random instances, with the smallest normalized modulus
/// seen and the number of values within 1e-12 of zero.
struct ZeroFreeReport {
    int n;
    std::uint64_t evaluations;
    double min_abs_normalized;  // min |value| / reference scale
    std::uint64_t violations;
    bool pass;
};

/// D(I + z_1 Q_1, ..., I + z_n Q_n) over random tuples with ||Q_k|| <=
/// gamma0 and points of the closed unit polydisc (boundary when
/// `boundary` is set; `grid` phases per sample).  Normalized by n!.
ZeroFreeReport verify_zero_free_polydisc(int n, int samples, int grid, std::uint64_t seed,
                                         bool boundary = true);

/// D(I + z Q_1, ..., I + z Q_n) over random doubly stochastic tuples and
/// z on a polar grid of the open disc |z| < alpha0 n / 4.  Normalized by n!.
ZeroFreeReport verify_zero_free_ds(int n, int samples, int grid, std::uint64_t seed);

/// phi(z) = sum_S (det B_S)^m z^|S| over random ||B|| < 1 and z on a polar
/// grid of the closed unit disc.
ZeroFreeReport verify_zero_free_minor_sums(int n, int m, int samples, int grid,
                                           std::uint64_t seed);

}  // namespace mixdisc

#endif
