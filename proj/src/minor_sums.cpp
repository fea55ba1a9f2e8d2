#include "mixdisc/minor_sums.hpp"

#include <cmath>
#include <sstream>

namespace mixdisc {

namespace {

Complex subset_det_power(const Eigen::MatrixXcd& b, std::uint64_t mask, int k, int m,
                         Eigen::MatrixXcd& sub, std::vector<int>& idx) {
    idx.clear();
    for (int i = 0; i < b.rows(); ++i)
        if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
    sub.resize(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub(i, j) = b(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    Complex d = k == 0 ? Complex{1.0} : Eigen::PartialPivLU<Eigen::MatrixXcd>(sub).determinant();
    Complex p{1.0};
    for (int t = 0; t < m; ++t) p *= d;
    return p;
}

}  // namespace

DerivativeSequence phi_derivatives(const ComplexMatrix& b, int m, int up_to,
                                   const MinorSumOptions& opts) {
    const int n = b.dim();
    if (m < 1) throw InputError("power m must be >= 1");
    if (up_to < 0 || up_to > n) throw InputError("derivative order must lie in [0, n]");

    double terms = 0.0;
    for (int k = 1; k <= up_to; ++k) terms += binomial(n, k);
    if (terms > static_cast<double>(opts.max_terms))
        throw ResourceError("minor-sum subset enumeration exceeds the configured cap");

    std::vector<Complex> derivs(static_cast<std::size_t>(up_to), Complex{0.0});
    for (int k = 1; k <= up_to; ++k) {
        const std::uint64_t total = binomial_u64(n, k);
        std::vector<ComplexKahanSum> slots(block_grid(total).blocks);
        blocked_for(total, opts.threads,
                    [&](std::size_t block, std::uint64_t begin, std::uint64_t end) {
                        Eigen::MatrixXcd sub;
                        std::vector<int> idx;
                        std::uint64_t mask = subset_mask_at_rank(n, k, begin);
                        for (std::uint64_t r = begin; r < end; ++r) {
                            slots[block].add(subset_det_power(b.mat(), mask, k, m, sub, idx));
                            if (r + 1 < end) mask = next_subset_mask(mask);
                        }
                    });
        ComplexKahanSum acc;
        for (const auto& slot : slots) acc.add(slot.value());
        derivs[static_cast<std::size_t>(k - 1)] = acc.value();
    }
    return DerivativeSequence::from_g0(Complex{1.0}, std::move(derivs));
}

ApproxResult approx_log_minor_power_sum(const ComplexMatrix& b, int m, double rho, double eps,
                                        const MinorSumOptions& opts) {
    const int n = b.dim();
    if (!(rho > 0.0 && rho < 1.0)) throw InputError("rho must lie in (0, 1)");
    if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
    double nrm = operator_norm(b);
    if (!(nrm < rho)) {
        std::ostringstream oss;
        oss << "operator norm " << nrm << " must be < rho = " << rho;
        throw DomainError(oss.str());
    }

    const double beta = std::pow(rho, -m);
    const int degree = degree_for_accuracy(n, beta, eps);
    if (degree > opts.max_degree)
        throw ResourceError("required Taylor degree exceeds the configured cap");

    DerivativeSequence d = phi_derivatives(b, m, std::min(degree, n), opts);
    d.normalized.resize(static_cast<std::size_t>(degree), Complex{0.0});  // deg phi = n
    return taylor_log_at_one(d, n, beta);
}

ComplexMatrix rank_two_matrix(std::span<const Eigen::VectorXd> xs) {
    const int n = static_cast<int>(xs.size());
    if (n < 1) throw InputError("need at least one vector");
    for (const auto& x : xs)
        if (x.size() != n) throw InputError("need n vectors of dimension n");
    Eigen::MatrixXcd b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b(i, j) = Complex{xs[static_cast<std::size_t>(i)](j), 0.0};
    return ComplexMatrix(std::move(b));
}

}  // namespace mixdisc
