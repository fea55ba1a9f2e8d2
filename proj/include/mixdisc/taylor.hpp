#ifndef MIXDISC_TAYLOR_HPP
#define MIXDISC_TAYLOR_HPP

#include <vector>

#include "mixdisc/numeric.hpp"

namespace mixdisc {

/// Derivatives of a nonvanishing function g at 0 in normalized form:
/// normalized[k-1] = g^(k)(0) / (k! g(0)).  log_g0 carries ln g(0) so the
/// raw value never has to be representable (g(0) = n! overflows doubles
/// near n = 171).
struct DerivativeSequence {
    Complex g0;
    Complex log_g0;
    std::vector<Complex> normalized;

    /// From the raw value g(0) != 0 (principal-branch log).
    static DerivativeSequence from_g0(Complex g0, std::vector<Complex> normalized);

    /// From ln g(0) directly; g0 is exp(log_g0) when representable.
    static DerivativeSequence from_log_g0(Complex log_g0, std::vector<Complex> normalized);

    int order() const { return static_cast<int>(normalized.size()); }
};

/// Result of a Taylor-interpolated logarithm. truncation_bound is the
/// rigorous tail bound n / (beta^m (beta-1) (m+1)), valid whenever g has
/// degree <= n and no root of modulus < beta; beta <= 1 marks an
/// unvalidated evaluation (bound = infinity).
struct ApproxResult {
    Complex log_value;
    int degree;
    double truncation_bound;
    double beta;
};

/// Tail bound n / (beta^m (beta-1) (m+1)).
double taylor_tail_bound(int n, double beta, int m);

/// Smallest m >= 0 with taylor_tail_bound(n, beta, m) <= eps.
int degree_for_accuracy(int n, double beta, double eps);

/// Taylor coefficients f^(k)(0)/k! of f = ln g for k = 1..m, by forward
/// substitution of the triangular convolution between the g- and
/// f-coefficients.
std::vector<Complex> log_derivatives(const DerivativeSequence& d);

/// Degree-m Taylor polynomial of ln g evaluated at 1:
/// ln g(0) + sum_k f^(k)(0)/k!.
ApproxResult taylor_log_at_one(const DerivativeSequence& d, int n, double beta);

}  // namespace mixdisc

#endif
