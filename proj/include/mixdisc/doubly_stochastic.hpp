#ifndef MIXDISC_DOUBLY_STOCHASTIC_HPP
#define MIXDISC_DOUBLY_STOCHASTIC_HPP

#include "mixdisc/approx.hpp"
#include "mixdisc/matrix.hpp"
#include "mixdisc/taylor.hpp"

namespace mixdisc {

struct DsMemberCheck {
    int index;
    double trace;
    double min_eigenvalue;
    bool ok;
};

struct DsCheckReport {
    std::vector<DsMemberCheck> members;
    double sum_deviation;  // ||sum Q_k - I|| in operator norm
    double max_trace_deviation;
    double min_eigenvalue;
    bool pass;
};

/// A tuple is doubly stochastic when each member is PSD with unit trace
/// and the members sum to the identity, all within tol.
DsCheckReport is_doubly_stochastic(const SymmetricTuple& t, double tol);

struct ScalingOptions {
    double tol = 1e-10;
    int max_iter = 10000;
};

/// Factorization A_k = xi_k T Q_k T with T symmetric positive definite and
/// (Q_k) doubly stochastic; then D(A) = (prod xi_k) (det T)^2 D(Q).
struct ScalingResult {
    SymmetricMatrix transform;  // T
    std::vector<double> scales;
    SymmetricTuple ds_tuple;
    double residual;
    int iterations;
    double reconstruction_error;  // max_k ||A_k - xi_k T Q_k T|| / ||A_k||
};

/// Alternating trace/sum normalization of a positive definite tuple,
/// followed by a polar fix-up that makes the accumulated transform
/// symmetric.
ScalingResult scale_to_doubly_stochastic(const SymmetricTuple& t, const ScalingOptions& = {});

/// ln D(I + z Q_1, ..., I + z Q_n) for a doubly stochastic tuple, valid
/// for |z| <= rho n with rho < alpha0/4; the zero-free disc gives
/// beta = alpha0 n / (4 |z|).
ApproxResult approx_log_mixed_disc_ds(const SymmetricTuple& t, Complex z, double rho, double eps,
                                      const DerivOptions& opts = {});

/// ln D((1-gamma) I/n + gamma Q_1, ...) through the identity that pulls
/// the contraction out of every argument; gamma/(1-gamma) < alpha0/4.
ApproxResult approx_log_contracted(const SymmetricTuple& t, double gamma, double eps,
                                   const DerivOptions& opts = {});

}  // namespace mixdisc

#endif
