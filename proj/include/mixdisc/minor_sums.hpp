#ifndef MIXDISC_MINOR_SUMS_HPP
#define MIXDISC_MINOR_SUMS_HPP

#include <span>

#include "mixdisc/matrix.hpp"
#include "mixdisc/taylor.hpp"

namespace mixdisc {

struct MinorSumOptions {
    std::uint64_t max_terms = std::uint64_t{1} << 26;
    int max_degree = 4096;
    int threads = 0;
};

/// Derivatives at 0 of phi(z) = sum_S (det B_S)^m z^|S|, in normalized
/// form: entry k-1 = sum over |S| = k of (det B_S)^m, g0 = 1.
DerivativeSequence phi_derivatives(const ComplexMatrix& b, int m, int up_to,
                                   const MinorSumOptions& opts = {});

/// ln sum_S (det B_S)^m within eps for ||B|| < rho < 1; the zero-free disc
/// of phi gives beta = rho^(-m).
ApproxResult approx_log_minor_power_sum(const ComplexMatrix& b, int m, double rho, double eps,
                                        const MinorSumOptions& opts = {});

/// Coordinate matrix of the vectors (row k = x_k).  Links rank-2 tuples to
/// minor power sums: D(e_1 x e_1 + x_1 x x_1, ..., e_n x e_n + x_n x x_n)
/// equals sum_S (det B_S)^2.
ComplexMatrix rank_two_matrix(std::span<const Eigen::VectorXd> xs);

}  // namespace mixdisc

#endif
