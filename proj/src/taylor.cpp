#include "mixdisc/taylor.hpp"

#include <cmath>
#include <limits>

#include "mixdisc/errors.hpp"

namespace mixdisc {

DerivativeSequence DerivativeSequence::from_g0(Complex g0, std::vector<Complex> normalized) {
    if (g0 == Complex{0.0}) throw DomainError("g(0) must be nonzero");
    return {g0, std::log(g0), std::move(normalized)};
}

DerivativeSequence DerivativeSequence::from_log_g0(Complex log_g0,
                                                   std::vector<Complex> normalized) {
    return {std::exp(log_g0), log_g0, std::move(normalized)};
}

double taylor_tail_bound(int n, double beta, int m) {
    if (!(beta > 1.0)) return std::numeric_limits<double>::infinity();
    return static_cast<double>(n) /
           (std::pow(beta, m) * (beta - 1.0) * static_cast<double>(m + 1));
}

int degree_for_accuracy(int n, double beta, double eps) {
    if (!(beta > 1.0)) throw DomainError("beta must exceed 1");
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
    if (n < 1) throw DomainError("n must be >= 1");
    for (int m = 0;; ++m) {
        if (taylor_tail_bound(n, beta, m) <= eps) return m;
        if (m > 1000000) throw ResourceError("degree search did not terminate");
    }
}

std::vector<Complex> log_derivatives(const DerivativeSequence& d) {
    if (d.g0 == Complex{0.0}) throw DomainError("g(0) must be nonzero");
    const int m = d.order();
    // With G_k = g^(k)(0)/(k! g0) and F_k = f^(k)(0)/k!, matching powers in
    // f' g = g' gives k G_k = sum_{j=0}^{k-1} (k-j) F_{k-j} G_j, G_0 = 1.
    std::vector<Complex> f(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        Complex s = static_cast<double>(k) * d.normalized[static_cast<std::size_t>(k - 1)];
        for (int j = 1; j < k; ++j)
            s -= static_cast<double>(k - j) * f[static_cast<std::size_t>(k - j - 1)] *
                 d.normalized[static_cast<std::size_t>(j - 1)];
        f[static_cast<std::size_t>(k - 1)] = s / static_cast<double>(k);
    }
    return f;
}

ApproxResult taylor_log_at_one(const DerivativeSequence& d, int n, double beta) {
    std::vector<Complex> f = log_derivatives(d);
    ComplexKahanSum acc;
    acc.add(d.log_g0);
    for (const Complex& c : f) acc.add(c);
    return {acc.value(), d.order(), taylor_tail_bound(n, beta, d.order()), beta};
}

}  // namespace mixdisc
