#include "mixdisc/doubly_stochastic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace mixdisc {

namespace {

double sym_operator_norm(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd sym_sqrt(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd d = es.eigenvalues();
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        if (d(i) <= 0.0) throw DomainError("matrix square root needs positive definite input");
        d(i) = std::sqrt(d(i));
    }
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd sym_inv_sqrt(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd d = es.eigenvalues();
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        if (d(i) <= 0.0) throw DomainError("matrix square root needs positive definite input");
        d(i) = 1.0 / std::sqrt(d(i));
    }
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

DsCheckReport is_doubly_stochastic(const SymmetricTuple& t, double tol) {
    const int n = t.dim();
    DsCheckReport rep;
    rep.pass = t.count() == n;
    rep.min_eigenvalue = std::numeric_limits<double>::infinity();
    rep.max_trace_deviation = 0.0;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < t.count(); ++k) {
        const Eigen::MatrixXd& q = t[k].mat();
        sum += q;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
        double mineig = es.eigenvalues().minCoeff();
        double trace = q.trace();
        bool ok = mineig >= -tol && std::abs(trace - 1.0) <= tol;
        rep.members.push_back({k, trace, mineig, ok});
        rep.min_eigenvalue = std::min(rep.min_eigenvalue, mineig);
        rep.max_trace_deviation = std::max(rep.max_trace_deviation, std::abs(trace - 1.0));
        rep.pass = rep.pass && ok;
    }
    rep.sum_deviation = sym_operator_norm(sum - Eigen::MatrixXd::Identity(n, n));
    rep.pass = rep.pass && rep.sum_deviation <= tol;
    return rep;
}

ScalingResult scale_to_doubly_stochastic(const SymmetricTuple& t, const ScalingOptions& opts) {
    const int n = t.dim();
    if (t.count() != n) throw InputError("scaling needs n matrices of dimension n");

    std::vector<Eigen::MatrixXd> q;
    q.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const Eigen::MatrixXd& a = t[k].mat();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
        double lo = es.eigenvalues().minCoeff();
        double hi = es.eigenvalues().cwiseAbs().maxCoeff();
        if (!(lo > 1e-10 * std::max(hi, 1e-300)))
            throw DomainError("scaling needs strictly positive definite matrices");
        q.push_back(a);
    }

    // Invariant: A_k = xi_k L^T Q_k L throughout.
    std::vector<double> xi(static_cast<std::size_t>(n), 1.0);
    Eigen::MatrixXd lmat = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
    for (int it = 1; it <= opts.max_iter; ++it) {
        iterations = it;
        for (int k = 0; k < n; ++k) {
            double c = q[static_cast<std::size_t>(k)].trace();
            if (!(c > 0.0)) throw DomainError("trace collapsed during scaling");
            q[static_cast<std::size_t>(k)] /= c;
            xi[static_cast<std::size_t>(k)] *= c;
        }
        Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
        for (const auto& m : q) s += m;
        Eigen::MatrixXd r = sym_sqrt(s);
        Eigen::MatrixXd rinv = sym_inv_sqrt(s);
        for (auto& m : q) m = rinv * m * rinv;
        lmat = r * lmat;

        double trace_dev = 0.0;
        Eigen::MatrixXd sum2 = Eigen::MatrixXd::Zero(n, n);
        for (const auto& m : q) {
            trace_dev = std::max(trace_dev, std::abs(m.trace() - 1.0));
            sum2 += m;
        }
        residual = std::max(trace_dev, sym_operator_norm(sum2 - eye));
        if (residual <= opts.tol) break;
    }
    if (residual > opts.tol)
        throw ConvergenceError("doubly stochastic scaling did not converge", residual,
                               iterations);

    // Polar fix-up: L = U P with P symmetric positive definite and U
    // orthogonal; rotating the tuple by U makes the transform symmetric.
    Eigen::MatrixXd p = sym_sqrt(Eigen::MatrixXd(lmat.transpose() * lmat));
    Eigen::MatrixXd u = lmat * p.inverse();
    std::vector<SymmetricMatrix> ds;
    ds.reserve(static_cast<std::size_t>(n));
    for (auto& m : q) {
        Eigen::MatrixXd rotated = u.transpose() * m * u;
        ds.emplace_back(Eigen::MatrixXd(0.5 * (rotated + rotated.transpose())));
    }

    ScalingResult res{SymmetricMatrix(Eigen::MatrixXd(0.5 * (p + p.transpose()))),
                      std::move(xi),
                      SymmetricTuple(std::move(ds)),
                      residual,
                      iterations,
                      0.0};

    double rec = 0.0;
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXd back = res.scales[static_cast<std::size_t>(k)] * res.transform.mat() *
                               res.ds_tuple[k].mat() * res.transform.mat();
        double denom = std::max(sym_operator_norm(t[k].mat()), 1e-300);
        rec = std::max(rec, sym_operator_norm(back - t[k].mat()) / denom);
    }
    res.reconstruction_error = rec;
    return res;
}

ApproxResult approx_log_mixed_disc_ds(const SymmetricTuple& t, Complex z, double rho, double eps,
                                      const DerivOptions& opts) {
    const int n = t.dim();
    const double alpha0 = StabilityConstants::get().alpha0;
    if (!(rho > 0.0 && rho < alpha0 / 4.0)) {
        std::ostringstream oss;
        oss << "rho = " << rho << " must lie in (0, alpha0/4 = " << alpha0 / 4.0 << ")";
        throw DomainError(oss.str());
    }
    if (!(std::abs(z) <= rho * n + 1e-9)) {
        std::ostringstream oss;
        oss << "|z| = " << std::abs(z) << " exceeds rho n = " << rho * n;
        throw DomainError(oss.str());
    }
    if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
    DsCheckReport rep = is_doubly_stochastic(t, 1e-9);
    if (!rep.pass) throw DomainError("tuple is not doubly stochastic at tolerance 1e-9");

    if (z == Complex{0.0})
        return {Complex{log_factorial(n), 0.0}, 0, 0.0,
                std::numeric_limits<double>::infinity()};

    // g(t) = D(I + t z Q_1, ...) has no root with |t| < alpha0 n / (4 |z|);
    // shave a hair off the open bound to keep the tail bound applicable.
    double beta = (alpha0 * n / (4.0 * std::abs(z))) * (1.0 - 1e-12);
    if (!(beta > 1.0)) {
        std::ostringstream oss;
        oss << "|z| = " << std::abs(z)
            << " reaches the certified radius alpha0 n / 4 = " << alpha0 * n / 4.0;
        throw DomainError(oss.str());
    }
    const int m = degree_for_accuracy(n, beta, eps);
    if (m > opts.max_degree)
        throw ResourceError("required Taylor degree exceeds the configured cap");

    std::vector<ComplexMatrix> scaled;
    scaled.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        scaled.emplace_back(Eigen::MatrixXcd(z * t[k].mat().cast<Complex>()));

    std::vector<Complex> derivs = discriminant_derivatives(scaled, std::min(m, n), opts);
    derivs.resize(static_cast<std::size_t>(m), Complex{0.0});
    auto d = DerivativeSequence::from_log_g0(Complex{log_factorial(n), 0.0}, std::move(derivs));
    return taylor_log_at_one(d, n, beta);
}

ApproxResult approx_log_contracted(const SymmetricTuple& t, double gamma, double eps,
                                   const DerivOptions& opts) {
    const int n = t.dim();
    const double alpha0 = StabilityConstants::get().alpha0;
    if (!(gamma >= 0.0) || !(gamma / (1.0 - gamma) < alpha0 / 4.0)) {
        std::ostringstream oss;
        oss << "gamma = " << gamma << " needs gamma/(1-gamma) < alpha0/4 = " << alpha0 / 4.0;
        throw DomainError(oss.str());
    }

    // D((1-g) I/n + g Q_k, ...) = ((1-g)/n)^n D(I + z Q_k, ...) with
    // z = g n / (1-g), by homogeneity in each argument.
    ApproxResult core;
    if (gamma == 0.0) {
        DsCheckReport rep = is_doubly_stochastic(t, 1e-9);
        if (!rep.pass) throw DomainError("tuple is not doubly stochastic at tolerance 1e-9");
        core = {Complex{log_factorial(n), 0.0}, 0, 0.0,
                std::numeric_limits<double>::infinity()};
    } else {
        double ratio = gamma / (1.0 - gamma);
        core = approx_log_mixed_disc_ds(t, Complex{ratio * n, 0.0}, ratio, eps, opts);
    }
    core.log_value += Complex{n * std::log((1.0 - gamma) / n), 0.0};
    return core;
}

}  // namespace mixdisc
