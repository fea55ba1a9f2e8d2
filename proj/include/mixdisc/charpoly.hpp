#ifndef MIXDISC_CHARPOLY_HPP
#define MIXDISC_CHARPOLY_HPP

#include <span>
#include <vector>

#include "mixdisc/matrix.hpp"

namespace mixdisc {

/// Univariate polynomial, coeffs[k] multiplying z^k.  Exact trailing-zero
/// coefficients are trimmed so the leading coefficient is nonzero unless
/// the polynomial is zero.
class Poly {
public:
    Poly() : coeffs_(1, Complex{0.0}) {}
    explicit Poly(std::vector<Complex> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0}; }
    Complex coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size())
                   ? coeffs_[static_cast<std::size_t>(k)]
                   : Complex{0.0};
    }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex eval(Complex z) const;

private:
    std::vector<Complex> coeffs_;
};

/// Mixed characteristic polynomial of m matrices of dimension n:
/// prod_k (1 - d/dz_k) det(x I + sum z_k A_k) at z = 0.  Coefficient of
/// x^k is (-1)^(n+k) / k! times the sum of padded mixed discriminants over
/// index sets of size n-k.
Poly mixed_char_poly(std::span<const ComplexMatrix> as, double max_terms = 1e9);

/// Coefficient-wise product s_k = q_k r_k / C(n, k).
Poly star_product(const Poly& q, const Poly& r, int n);

/// sum_{k=0}^n z^k / k!
Poly exp_partial_sum(int n);

/// z^n p(1/z): coefficient reversal after zero-padding to degree n.
Poly reverse_poly(const Poly& p, int n);

/// All roots, by eigenvalues of the scaled companion matrix.
std::vector<Complex> poly_roots(const Poly& p);

/// For PSD Hermitian matrices summing to I with tr A_k <= trace_bound:
/// the roots of the mixed characteristic polynomial must be real,
/// nonnegative and at most (1 + sqrt(trace_bound))^2.
struct RootBoundReport {
    std::vector<Complex> roots;
    double max_imag_abs;
    double min_real;
    double max_real;
    double bound;  // (1 + sqrt(trace_bound))^2
    bool pass;
};
RootBoundReport root_bound_check(std::span<const ComplexMatrix> as, double trace_bound);

}  // namespace mixdisc

#endif
