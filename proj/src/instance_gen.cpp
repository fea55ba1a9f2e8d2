#include "mixdisc/instance_gen.hpp"

#include <cmath>

namespace mixdisc {

SymmetricMatrix gen_symmetric_bounded(int n, double norm_bound, std::uint64_t seed) {
    if (n < 1) throw InputError("dimension must be >= 1");
    if (!(norm_bound > 0.0)) throw InputError("norm bound must be positive");
    CounterRng rng(seed, rng_stream::symmetric_matrix);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = rng.symmetric_unit();
        for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = rng.symmetric_unit();
    }
    double u = rng.unit();
    double nrm = operator_norm(SymmetricMatrix(m));
    if (nrm == 0.0) return SymmetricMatrix(Eigen::MatrixXd::Zero(n, n));
    return SymmetricMatrix(Eigen::MatrixXd(m * (norm_bound * u / nrm)));
}

SymmetricTuple gen_pd_tuple(int n, std::uint64_t seed) {
    if (n < 1) throw InputError("dimension must be >= 1");
    CounterRng rng(seed, rng_stream::pd_tuple);
    std::vector<SymmetricMatrix> ms;
    ms.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = rng.symmetric_unit();
        // G^T G plus a ridge keeps the tuple comfortably positive definite.
        Eigen::MatrixXd a = g.transpose() * g + 0.25 * static_cast<double>(n) *
                                                    Eigen::MatrixXd::Identity(n, n);
        ms.emplace_back(Eigen::MatrixXd(0.5 * (a + a.transpose())));
    }
    return SymmetricTuple(std::move(ms));
}

SymmetricTuple gen_ds_tuple(int n, std::uint64_t seed) {
    if (n == 1)
        return SymmetricTuple({SymmetricMatrix(Eigen::MatrixXd::Ones(1, 1))});
    ScalingOptions opts;
    opts.tol = 1e-12;
    opts.max_iter = 50000;
    return scale_to_doubly_stochastic(gen_pd_tuple(n, seed), opts).ds_tuple;
}

ComplexMatrix gen_complex_bounded(int n, double norm_bound, std::uint64_t seed) {
    if (n < 1) throw InputError("dimension must be >= 1");
    if (!(norm_bound > 0.0)) throw InputError("norm bound must be positive");
    CounterRng rng(seed, rng_stream::complex_matrix);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex{rng.symmetric_unit(), rng.symmetric_unit()};
    double u = rng.unit();
    ComplexMatrix cm(std::move(m));
    double nrm = operator_norm(cm);
    if (nrm == 0.0) return ComplexMatrix::zero(n);
    return ComplexMatrix(Eigen::MatrixXcd(cm.mat() * (norm_bound * u / nrm)));
}

std::vector<ComplexMatrix> gen_identity_decomposition(int n, std::uint64_t seed) {
    if (n < 1) throw InputError("dimension must be >= 1");
    CounterRng rng(seed, rng_stream::identity_decomposition);
    std::vector<Eigen::MatrixXcd> parts;
    parts.reserve(static_cast<std::size_t>(n));
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXcd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g(i, j) = Complex{rng.symmetric_unit(), rng.symmetric_unit()};
        Eigen::MatrixXcd a = g.adjoint() * g +
                             0.1 * static_cast<double>(n) * Eigen::MatrixXcd::Identity(n, n);
        parts.push_back(a);
        sum += a;
    }
    // Conjugate by sum^{-1/2} so the parts add up to the identity exactly.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sum);
    Eigen::VectorXd d = es.eigenvalues();
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = 1.0 / std::sqrt(d(i));
    Eigen::MatrixXcd isq = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
    std::vector<ComplexMatrix> out;
    out.reserve(parts.size());
    for (auto& a : parts) {
        Eigen::MatrixXcd q = isq * a * isq;
        out.emplace_back(Eigen::MatrixXcd(0.5 * (q + q.adjoint())));
    }
    return out;
}

std::vector<Complex> gen_points(int count, double radius, bool boundary, std::uint64_t seed) {
    CounterRng rng(seed, rng_stream::points);
    std::vector<Complex> zs(static_cast<std::size_t>(count));
    for (auto& z : zs) z = boundary ? rng.circle_point(radius) : rng.disc_point(radius);
    return zs;
}

std::vector<Eigen::VectorXd> gen_vectors(int count, int dim, double scale, std::uint64_t seed) {
    CounterRng rng(seed, rng_stream::vectors);
    std::vector<Eigen::VectorXd> xs(static_cast<std::size_t>(count));
    for (auto& x : xs) {
        x.resize(dim);
        for (int i = 0; i < dim; ++i) x(i) = scale * rng.symmetric_unit();
    }
    return xs;
}

}  // namespace mixdisc
