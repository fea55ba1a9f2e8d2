#include "mixdisc/matrix.hpp"

#include <cmath>

namespace mixdisc {

SymmetricMatrix::SymmetricMatrix(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw InputError("symmetric matrix must be square with n >= 1");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (!(asym <= 1e-12 * scale))
        throw InputError("matrix asymmetry exceeds tolerance");
    m_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
    return SymmetricMatrix(Eigen::MatrixXd::Identity(n, n), Trusted{});
}

SymmetricMatrix SymmetricMatrix::zero(int n) {
    if (n < 1) throw InputError("dimension must be >= 1");
    return SymmetricMatrix(Eigen::MatrixXd::Zero(n, n), Trusted{});
}

// n = 0 is allowed so the empty principal submatrix is representable;
// its determinant is 1.
ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw InputError("complex matrix must be square");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::zero(int n) { return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n)); }

ComplexTuple to_complex(const SymmetricTuple& t) {
    std::vector<ComplexMatrix> ms;
    ms.reserve(static_cast<std::size_t>(t.count()));
    for (const auto& q : t) ms.emplace_back(q);
    return ComplexTuple(std::move(ms));
}

ComplexTuple shifted_tuple(const SymmetricTuple& qs, std::span<const Complex> zs) {
    if (static_cast<int>(zs.size()) != qs.count())
        throw InputError("need one shift point per matrix");
    int n = qs.dim();
    std::vector<ComplexMatrix> ms;
    ms.reserve(zs.size());
    for (int k = 0; k < qs.count(); ++k)
        ms.emplace_back(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(n, n) +
                                         zs[static_cast<std::size_t>(k)] *
                                             qs[k].mat().cast<Complex>()));
    return ComplexTuple(std::move(ms));
}

ComplexTuple shifted_tuple(const SymmetricTuple& qs, Complex z) {
    std::vector<Complex> zs(static_cast<std::size_t>(qs.count()), z);
    return shifted_tuple(qs, zs);
}

namespace {
void require_finite(const Eigen::MatrixXcd& m) {
    if (!m.allFinite()) throw InputError("matrix has non-finite entries");
}
}  // namespace

double operator_norm(const SymmetricMatrix& m) {
    if (!m.mat().allFinite()) throw InputError("matrix has non-finite entries");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double operator_norm(const ComplexMatrix& m) {
    require_finite(m.mat());
    if (m.dim() == 0) return 0.0;
    // Only the norm is needed: sqrt of the top eigenvalue of B* B.
    Eigen::MatrixXcd g = m.mat().adjoint() * m.mat();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
    double top = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
}

Complex determinant(const ComplexMatrix& m) {
    if (m.dim() == 0) return 1.0;
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m.mat()).determinant();
}

double determinant(const SymmetricMatrix& m) {
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m.mat()).determinant();
}

ComplexMatrix principal_submatrix(const ComplexMatrix& m, std::span<const int> indices) {
    int n = m.dim();
    Eigen::MatrixXcd out(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= n) throw InputError("submatrix index out of range");
        for (std::size_t j = 0; j < indices.size(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(indices[i], indices[j]);
    }
    return ComplexMatrix(std::move(out));
}

SymmetricMatrix outer_product(const Eigen::VectorXd& x) {
    if (x.size() < 1) throw InputError("vector must have dimension >= 1");
    return SymmetricMatrix(Eigen::MatrixXd(x * x.transpose()));
}

const StabilityConstants& StabilityConstants::get() {
    static const StabilityConstants c = [] {
        StabilityConstants s{};
        s.gamma0 = 0.045;
        s.delta = 0.045;
        s.tau = 0.4;
        s.mu = 1.0 - s.delta - s.tau - s.delta * s.tau;
        // Positive root of a e^(1+a) = 1 by bisection; f is increasing.
        double lo = 0.0, hi = 1.0;
        while (hi - lo > 1e-14) {
            double mid = 0.5 * (lo + hi);
            (mid * std::exp(1.0 + mid) < 1.0 ? lo : hi) = mid;
        }
        s.alpha0 = 0.5 * (lo + hi);
        return s;
    }();
    return c;
}

}  // namespace mixdisc
