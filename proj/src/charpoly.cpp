#include "mixdisc/charpoly.hpp"

#include <cmath>
#include <limits>

#include "mixdisc/exact.hpp"

namespace mixdisc {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex{0.0});
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{0.0}) coeffs_.pop_back();
}

Complex Poly::eval(Complex z) const {
    Complex acc{0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly mixed_char_poly(std::span<const ComplexMatrix> as, double max_terms) {
    const int m = static_cast<int>(as.size());
    if (m < 1) throw InputError("need at least one matrix");
    if (m > 62) throw ResourceError("mixed characteristic polynomial cost cap exceeded");
    const int n = as[0].dim();
    for (const auto& a : as)
        if (a.dim() != n) throw InputError("matrices must share one dimension");

    double cost = 0.0;
    for (int k = 0; k <= n; ++k)
        if (n - k <= m) cost += binomial(m, n - k) * binomial(n, n - k) * std::ldexp(1.0, n - k);
    if (cost > max_terms) throw ResourceError("mixed characteristic polynomial cost cap exceeded");

    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, Complex{0.0});
    std::vector<ComplexMatrix> picked;
    for (int k = 0; k <= n; ++k) {
        const int j = n - k;  // subset size
        if (j > m) continue;
        ComplexKahanSum acc;
        if (j == 0) {
            acc.add(padded_mixed_discriminant(n, {}));
        } else {
            std::uint64_t mask = (std::uint64_t{1} << j) - 1;
            const std::uint64_t last = ((std::uint64_t{1} << j) - 1) << (m - j);
            for (;;) {
                picked.clear();
                for (int i = 0; i < m; ++i)
                    if (mask & (std::uint64_t{1} << i))
                        picked.push_back(as[static_cast<std::size_t>(i)]);
                acc.add(padded_mixed_discriminant(n, picked));
                if (mask == last) break;
                mask = next_subset_mask(mask);
            }
        }
        double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
        coeffs[static_cast<std::size_t>(k)] = sign * acc.value() / factorial(k);
    }
    return Poly(std::move(coeffs));
}

Poly star_product(const Poly& q, const Poly& r, int n) {
    if (q.degree() > n || r.degree() > n)
        throw InputError("star product needs polynomials of degree <= n");
    std::vector<Complex> s(static_cast<std::size_t>(n) + 1, Complex{0.0});
    for (int k = 0; k <= n; ++k)
        s[static_cast<std::size_t>(k)] = q.coeff(k) * r.coeff(k) / binomial(n, k);
    return Poly(std::move(s));
}

Poly exp_partial_sum(int n) {
    if (n < 0) throw InputError("degree must be >= 0");
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    double f = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) f *= static_cast<double>(k);
        c[static_cast<std::size_t>(k)] = Complex{1.0 / f, 0.0};
    }
    return Poly(std::move(c));
}

Poly reverse_poly(const Poly& p, int n) {
    if (p.degree() > n) throw InputError("cannot reverse to a smaller degree");
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0});
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = p.coeff(k);
    return Poly(std::move(c));
}

std::vector<Complex> poly_roots(const Poly& p) {
    if (p.is_zero()) throw DomainError("the zero polynomial has no root set");
    const int d = p.degree();
    if (d == 0) return {};

    // Monic form, then a variable scaling z -> s z that tames coefficient
    // spread before the companion eigenproblem.
    std::vector<Complex> monic(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        monic[static_cast<std::size_t>(k)] = p.coeff(k) / p.coeff(d);
    double scale = 0.0;
    for (int k = 0; k < d; ++k) {
        double mag = std::abs(monic[static_cast<std::size_t>(k)]);
        if (mag > 0.0) scale = std::max(scale, std::pow(mag, 1.0 / (d - k)));
    }
    if (scale <= 0.0) scale = 1.0;

    std::vector<Complex> scaled(static_cast<std::size_t>(d) + 1);
    double pw = 1.0;
    for (int k = d; k >= 0; --k) {
        scaled[static_cast<std::size_t>(k)] = monic[static_cast<std::size_t>(k)] / pw;
        pw *= scale;
    }
    // scaled[k] = monic[k] / scale^{d-k}; companion of sum scaled[k] z^k.
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -scaled[static_cast<std::size_t>(i)];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<Complex> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i) * scale;
    return roots;
}

RootBoundReport root_bound_check(std::span<const ComplexMatrix> as, double trace_bound) {
    const int m = static_cast<int>(as.size());
    if (m < 1) throw InputError("need at least one matrix");
    const int n = as[0].dim();

    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& a : as) {
        if (a.dim() != n) throw InputError("matrices must share one dimension");
        double herm_dev = (a.mat() - a.mat().adjoint()).cwiseAbs().maxCoeff();
        if (herm_dev > 1e-9) throw DomainError("matrices must be Hermitian");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.mat(), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-9)
            throw DomainError("matrices must be positive semidefinite");
        if (a.mat().trace().real() > trace_bound + 1e-9)
            throw DomainError("matrix trace exceeds the stated bound");
        sum += a.mat();
    }
    double sum_dev = (sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (sum_dev > 1e-9) throw DomainError("matrices must sum to the identity");

    RootBoundReport rep;
    rep.roots = poly_roots(mixed_char_poly(as));
    rep.bound = (1.0 + std::sqrt(trace_bound)) * (1.0 + std::sqrt(trace_bound));
    rep.max_imag_abs = 0.0;
    rep.min_real = std::numeric_limits<double>::infinity();
    rep.max_real = -std::numeric_limits<double>::infinity();
    for (const Complex& r : rep.roots) {
        rep.max_imag_abs = std::max(rep.max_imag_abs, std::abs(r.imag()));
        rep.min_real = std::min(rep.min_real, r.real());
        rep.max_real = std::max(rep.max_real, r.real());
    }
    rep.pass = rep.max_imag_abs <= 1e-6 && rep.min_real >= -1e-6 &&
               rep.max_real <= rep.bound + 1e-6;
    return rep;
}

}  // namespace mixdisc
