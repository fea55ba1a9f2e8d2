#include "mixdisc/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mixdisc {

namespace detail {

Complex determinant_raw(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0) return 1.0;
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

Complex mixed_disc_polarization(std::span<const Eigen::MatrixXcd> as) {
    const int k = static_cast<int>(as.size());
    if (k == 0) return 1.0;
    const auto n = as[0].rows();
    ComplexKahanSum acc;
    Eigen::MatrixXcd sum(n, n);
    // Fixed mask order keeps the accumulation reproducible.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        sum.setZero();
        for (int i = 0; i < k; ++i)
            if (mask & (std::uint64_t{1} << i)) sum += as[static_cast<std::size_t>(i)];
        double sign = (k - std::popcount(mask)) % 2 == 0 ? 1.0 : -1.0;
        acc.add(sign * determinant_raw(sum));
    }
    return acc.value();
}

Complex mixed_disc_permutation_sum(std::span<const Eigen::MatrixXcd> as) {
    const int n = static_cast<int>(as.size());
    std::vector<int> sigma(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n));
    auto parity = [](const std::vector<int>& p) {
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        return inv % 2 == 0 ? 1.0 : -1.0;
    };
    ComplexKahanSum acc;
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        double ssig = parity(sigma);
        std::iota(tau.begin(), tau.end(), 0);
        do {
            Complex term = ssig * parity(tau);
            for (int i = 0; i < n; ++i)
                term *= as[static_cast<std::size_t>(i)](tau[static_cast<std::size_t>(i)],
                                                        sigma[static_cast<std::size_t>(i)]);
            acc.add(term);
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc.value();
}

}  // namespace detail

Complex mixed_discriminant(const ComplexTuple& t, MixedDiscMethod method,
                           const ExactLimits& limits) {
    const int n = t.dim();
    if (t.count() != n)
        throw InputError("mixed discriminant needs exactly n matrices of dimension n");
    std::vector<Eigen::MatrixXcd> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (const auto& m : t) raw.push_back(m.mat());
    if (method == MixedDiscMethod::PermutationSum) {
        if (n > 5) throw ResourceError("permutation-sum mode is limited to n <= 5");
        return detail::mixed_disc_permutation_sum(raw);
    }
    if (n > limits.mixed_disc_max_n)
        throw ResourceError("dimension exceeds the exact mixed discriminant cap");
    return detail::mixed_disc_polarization(raw);
}

Complex mixed_discriminant(const SymmetricTuple& t, MixedDiscMethod method,
                           const ExactLimits& limits) {
    return mixed_discriminant(to_complex(t), method, limits);
}

Complex permanent(const ComplexMatrix& b, const ExactLimits& limits) {
    const int n = b.dim();
    if (n == 0) return 1.0;
    if (n > limits.permanent_max_n) throw ResourceError("dimension exceeds the permanent cap");

    // Ryser: per B = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} b_ij,
    // walking subsets in Gray-code order with incremental row sums.
    std::vector<Complex> rows(static_cast<std::size_t>(n), Complex{0.0});
    ComplexKahanSum acc;
    std::uint64_t gray = 0;
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << n); ++c) {
        std::uint64_t next = c ^ (c >> 1);
        std::uint64_t flipped = next ^ gray;
        int j = std::countr_zero(flipped);
        double dir = (next & flipped) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] += dir * b(i, j);
        gray = next;
        Complex prod = 1.0;
        for (int i = 0; i < n; ++i) prod *= rows[static_cast<std::size_t>(i)];
        double sign = (std::popcount(gray) % 2 == 0) ? 1.0 : -1.0;
        acc.add(sign * prod);
    }
    double outer = (n % 2 == 0) ? 1.0 : -1.0;
    return outer * acc.value();
}

Complex padded_mixed_discriminant(int n, std::span<const ComplexMatrix> as,
                                  const ExactLimits& limits) {
    return padded_mixed_discriminant_normalized(n, as, limits) * factorial(n);
}

Complex padded_mixed_discriminant_normalized(int n, std::span<const ComplexMatrix> as,
                                             const ExactLimits& limits) {
    const int k = static_cast<int>(as.size());
    if (k > n) throw InputError("more matrices than identity slots allow");
    for (const auto& a : as)
        if (a.dim() != n) throw InputError("padded mixed discriminant needs n x n matrices");
    if (k == 0) return 1.0;
    if (n > 62 || binomial(n, k) * std::ldexp(1.0, k) > limits.padded_max_terms)
        throw ResourceError("padded mixed discriminant subset count exceeds the cap");

    // (n-k)!/n! * sum over |W| = k of D_k(A_1[W], ..., A_k[W]).
    std::vector<int> w(static_cast<std::size_t>(k));
    std::vector<Eigen::MatrixXcd> sub(static_cast<std::size_t>(k),
                                      Eigen::MatrixXcd(k, k));
    ComplexKahanSum acc;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t end = std::uint64_t{1} << n;
    while (mask < end) {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) w[static_cast<std::size_t>(idx++)] = i;
        for (int a = 0; a < k; ++a)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub[static_cast<std::size_t>(a)](i, j) =
                        as[static_cast<std::size_t>(a)](w[static_cast<std::size_t>(i)],
                                                        w[static_cast<std::size_t>(j)]);
        acc.add(detail::mixed_disc_polarization(sub));
        if (mask == end - (std::uint64_t{1} << (n - k))) break;  // last k-subset
        mask = next_subset_mask(mask);
    }
    return acc.value() * reciprocal_falling_factorial(n, k);
}

Complex minor_power_sum(const ComplexMatrix& b, int m, const ExactLimits& limits) {
    const int n = b.dim();
    if (m < 1) throw InputError("power m must be >= 1");
    if (n > limits.minor_sum_max_n) throw ResourceError("dimension exceeds the minor-sum cap");

    ComplexKahanSum acc;
    acc.add(1.0);  // S = empty set
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        idx.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
        Eigen::MatrixXcd sub(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    b(idx[i], idx[j]);
        Complex d = detail::determinant_raw(sub);
        Complex p = 1.0;
        for (int t = 0; t < m; ++t) p *= d;
        acc.add(p);
    }
    return acc.value();
}

}  // namespace mixdisc
