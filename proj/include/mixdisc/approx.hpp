#ifndef MIXDISC_APPROX_HPP
#define MIXDISC_APPROX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mixdisc/matrix.hpp"
#include "mixdisc/taylor.hpp"

namespace mixdisc {

/// One evaluation request for the polydisc regime: matrices Q_k with
/// ||Q_k|| <= gamma0, points |z_k| <= rho < 1, additive log accuracy eps.
struct PolydiscInstance {
    SymmetricTuple tuple;
    std::vector<Complex> points;
    double rho;
    double eps;

    PolydiscInstance(SymmetricTuple t, std::vector<Complex> zs, double rho, double eps);
};

struct DomainCheckEntry {
    int index;
    double value;
    double limit;
    bool ok;
};

struct DomainReport {
    std::vector<DomainCheckEntry> matrix_norms;
    std::vector<DomainCheckEntry> point_moduli;
    bool pass;
};

/// Per-matrix operator norms against gamma0 and per-point moduli against
/// rho, with a 1e-9 acceptance tolerance at the boundary.
DomainReport check_domain(const PolydiscInstance& inst);

struct DerivOptions {
    enum class Mode {
        /// Subset sums of elementary symmetric functions; cost grows with
        /// sum_{t<=k} C(n,t) and is the n^{O(m)} production path.
        SubsetSums,
        /// Literal enumeration of size-k index sets routed through the
        /// padded mixed discriminant; reference path for cross-checks.
        PaddedEnumeration,
    };
    Mode mode = Mode::SubsetSums;
    std::uint64_t max_terms = std::uint64_t{1} << 26;
    int max_degree = 4096;
    int threads = 0;  // 0 = process default
};

/// Normalized derivatives of g(z) = D(I + z A_1, ..., I + z A_n) at 0:
/// entry k-1 holds g^(k)(0) / (k! n!) for k = 1..kmax (kmax <= n).
std::vector<Complex> discriminant_derivatives(std::span<const ComplexMatrix> as, int kmax,
                                              const DerivOptions& opts = {});

/// ln D(I + z_1 Q_1, ..., I + z_n Q_n) within eps, certified by the
/// zero-free polydisc (beta = 1/rho).
ApproxResult approx_log_mixed_discriminant(const PolydiscInstance& inst,
                                           const DerivOptions& opts = {});

}  // namespace mixdisc

#endif
