#ifndef MIXDISC_MATRIX_HPP
#define MIXDISC_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "mixdisc/errors.hpp"
#include "mixdisc/numeric.hpp"

namespace mixdisc {

/// Dense real symmetric matrix.  Construction symmetrizes the input
/// (averages M with its transpose) and rejects inputs whose asymmetry
/// exceeds 1e-12 relative to the entry scale.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(const Eigen::MatrixXd& m);

    static SymmetricMatrix identity(int n);
    static SymmetricMatrix zero(int n);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& mat() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }

private:
    struct Trusted {};
    SymmetricMatrix(Eigen::MatrixXd m, Trusted) : m_(std::move(m)) {}
    Eigen::MatrixXd m_;
};

/// Dense complex matrix.
class ComplexMatrix {
public:
    explicit ComplexMatrix(Eigen::MatrixXcd m);
    explicit ComplexMatrix(const SymmetricMatrix& s) : m_(s.mat().cast<Complex>()) {}

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int n);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& mat() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

private:
    Eigen::MatrixXcd m_;
};

/// Ordered list of matrices sharing one dimension.
template <typename MatrixT>
class MatrixTuple {
public:
    explicit MatrixTuple(std::vector<MatrixT> ms) : ms_(std::move(ms)) {
        if (ms_.empty()) throw InputError("matrix tuple must contain at least one matrix");
        for (const auto& m : ms_)
            if (m.dim() != ms_.front().dim())
                throw InputError("matrix tuple members must share one dimension");
    }

    int dim() const { return ms_.front().dim(); }
    int count() const { return static_cast<int>(ms_.size()); }
    const MatrixT& operator[](int k) const { return ms_[static_cast<std::size_t>(k)]; }
    auto begin() const { return ms_.begin(); }
    auto end() const { return ms_.end(); }
    const std::vector<MatrixT>& items() const { return ms_; }

private:
    std::vector<MatrixT> ms_;
};

using SymmetricTuple = MatrixTuple<SymmetricMatrix>;
using ComplexTuple = MatrixTuple<ComplexMatrix>;

ComplexTuple to_complex(const SymmetricTuple& t);

/// Tuple (I + z_k Q_k)_k.
ComplexTuple shifted_tuple(const SymmetricTuple& qs, std::span<const Complex> zs);

/// Tuple (I + z Q_k)_k.
ComplexTuple shifted_tuple(const SymmetricTuple& qs, Complex z);

// --- operations --------------------------------------------------------

/// Largest absolute eigenvalue.
double operator_norm(const SymmetricMatrix& m);

/// Largest singular value, via the spectrum of B* B.
double operator_norm(const ComplexMatrix& m);

/// Determinant by pivoted elimination; the 0x0 determinant is 1.
Complex determinant(const ComplexMatrix& m);
double determinant(const SymmetricMatrix& m);

/// Submatrix of the rows and columns in `indices` (0-based), order kept.
ComplexMatrix principal_submatrix(const ComplexMatrix& m, std::span<const int> indices);

/// Rank <= 1 matrix with entries x_i x_j.
SymmetricMatrix outer_product(const Eigen::VectorXd& x);

/// Constants of the stability region:
///   gamma0  operator-norm radius of the zero-free polydisc,
///   delta, tau, mu  the contraction bookkeeping constants,
///   alpha0  the positive root of a e^(1+a) = 1 (bisection to 1e-14).
struct StabilityConstants {
    double gamma0;
    double delta;
    double tau;
    double mu;
    double alpha0;

    static const StabilityConstants& get();
};

}  // namespace mixdisc

#endif
