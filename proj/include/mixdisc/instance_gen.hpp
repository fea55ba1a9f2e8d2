#ifndef MIXDISC_INSTANCE_GEN_HPP
#define MIXDISC_INSTANCE_GEN_HPP

#include <cstdint>
#include <vector>

#include "mixdisc/doubly_stochastic.hpp"
#include "mixdisc/matrix.hpp"
#include "mixdisc/rng.hpp"

namespace mixdisc {

/// Random symmetric matrix rescaled so the operator norm is
/// norm_bound * u with u uniform in (0, 1].  Pure in (n, norm_bound, seed).
SymmetricMatrix gen_symmetric_bounded(int n, double norm_bound, std::uint64_t seed);

/// Random strictly positive definite tuple (n matrices of dimension n).
SymmetricTuple gen_pd_tuple(int n, std::uint64_t seed);

/// Doubly stochastic tuple: a random positive definite tuple pushed
/// through the scaling iteration; satisfies the conditions within 1e-9.
SymmetricTuple gen_ds_tuple(int n, std::uint64_t seed);

/// Random complex matrix rescaled so the operator norm is norm_bound * u,
/// u uniform in (0, 1].
ComplexMatrix gen_complex_bounded(int n, double norm_bound, std::uint64_t seed);

/// Random PSD Hermitian decomposition of the identity (n matrices).
std::vector<ComplexMatrix> gen_identity_decomposition(int n, std::uint64_t seed);

/// Random points of the disc of the given radius (or of its boundary).
std::vector<Complex> gen_points(int count, double radius, bool boundary, std::uint64_t seed);

/// Random vectors with entries uniform in [-scale, scale].
std::vector<Eigen::VectorXd> gen_vectors(int count, int dim, double scale, std::uint64_t seed);

}  // namespace mixdisc

#endif
