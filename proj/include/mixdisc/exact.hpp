#ifndef MIXDISC_EXACT_HPP
#define MIXDISC_EXACT_HPP

#include <span>

#include "mixdisc/matrix.hpp"

namespace mixdisc {

/// Desk-scale guardrails for the exponential-time oracles.
struct ExactLimits {
    int mixed_disc_max_n = 14;
    int permanent_max_n = 20;
    int minor_sum_max_n = 20;
    double padded_max_terms = 1e9;  // C(n,k) * 2^k budget
};

enum class MixedDiscMethod {
    /// Inclusion-exclusion over the 2^n subset sums (default; feasible to n ~ 14).
    Polarization,
    /// Direct double sum over permutation pairs (n <= 5).
    PermutationSum,
};

/// Mixed discriminant D(A_1, ..., A_n) of n matrices of dimension n:
/// the coefficient of t_1...t_n in det(t_1 A_1 + ... + t_n A_n).
Complex mixed_discriminant(const ComplexTuple& t,
                           MixedDiscMethod method = MixedDiscMethod::Polarization,
                           const ExactLimits& limits = {});
Complex mixed_discriminant(const SymmetricTuple& t,
                           MixedDiscMethod method = MixedDiscMethod::Polarization,
                           const ExactLimits& limits = {});

/// Permanent by Ryser's inclusion-exclusion with Gray-code row-sum updates.
Complex permanent(const ComplexMatrix& b, const ExactLimits& limits = {});

/// D(I, ..., I, A_1, ..., A_k) with n-k identity slots, all matrices n x n:
///   (n-k)! * sum over k-subsets W of the k-dimensional mixed discriminants
///   of the W-principal submatrices.
Complex padded_mixed_discriminant(int n, std::span<const ComplexMatrix> as,
                                  const ExactLimits& limits = {});

/// padded_mixed_discriminant / n!, assembled without forming n!.
Complex padded_mixed_discriminant_normalized(int n, std::span<const ComplexMatrix> as,
                                             const ExactLimits& limits = {});

/// Sum of (det B_S)^m over all 2^n principal submatrices, empty set -> 1.
Complex minor_power_sum(const ComplexMatrix& b, int m, const ExactLimits& limits = {});

namespace detail {
/// Mixed discriminant of k raw matrices of dimension k via polarization.
/// k = 0 yields 1.
Complex mixed_disc_polarization(std::span<const Eigen::MatrixXcd> as);
}  // namespace detail

}  // namespace mixdisc

#endif
