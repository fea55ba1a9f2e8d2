#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mixdisc/errors.hpp"
#include "mixdisc/taylor.hpp"
#include "test_support.hpp"

using namespace mixdisc;

namespace {

// Expand g(z) = g0 prod_i (1 - z / alpha_i) and return the normalized
// derivative sequence; the reference value of ln g(1) accumulates the
// per-factor principal logs, which is the analytic branch along [0, 1]
// whenever |alpha_i| > 1.
struct KnownRootPoly {
    DerivativeSequence seq;
    Complex log_at_one;
};

KnownRootPoly from_roots(Complex g0, const std::vector<Complex>& roots) {
    std::vector<Complex> coeff{1.0};
    for (const Complex& a : roots) {
        std::vector<Complex> next(coeff.size() + 1, Complex{0.0});
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i] += coeff[i];
            next[i + 1] -= coeff[i] / a;
        }
        coeff = std::move(next);
    }
    std::vector<Complex> normalized(coeff.begin() + 1, coeff.end());
    Complex log1 = std::log(g0);
    for (const Complex& a : roots) log1 += std::log(Complex{1.0} - Complex{1.0} / a);
    return {DerivativeSequence::from_g0(g0, std::move(normalized)), log1};
}

}  // namespace

TEST_CASE("degree selection from the tail bound") {
    CHECK(degree_for_accuracy(1, 11.0, 0.2) == 0);
    CHECK(degree_for_accuracy(2, 2.0, 0.011) == 5);

    // oracle: scan the bound directly
    {
        int n = 100;
        double beta = 10.0 / 9.0, eps = 1e-3;
        int m = 0;
        while (taylor_tail_bound(n, beta, m) > eps) ++m;
        CHECK(degree_for_accuracy(n, beta, eps) == m);
    }

    CHECK_THROWS_AS(degree_for_accuracy(2, 1.0, 0.1), DomainError);
    CHECK_THROWS_AS(degree_for_accuracy(2, 0.5, 0.1), DomainError);
    CHECK_THROWS_AS(degree_for_accuracy(2, 2.0, 0.0), DomainError);

    // monotone nonincreasing in eps and in beta
    for (double beta : {1.5, 2.0, 4.0}) {
        int prev = degree_for_accuracy(10, beta, 1e-6);
        for (double eps : {1e-5, 1e-4, 1e-3, 1e-2}) {
            int m = degree_for_accuracy(10, beta, eps);
            CHECK(m <= prev);
            prev = m;
        }
    }
    for (double eps : {1e-2, 1e-4}) {
        int prev = degree_for_accuracy(10, 1.2, eps);
        for (double beta : {1.5, 2.0, 3.0, 8.0}) {
            int m = degree_for_accuracy(10, beta, eps);
            CHECK(m <= prev);
            prev = m;
        }
    }
}

TEST_CASE("log derivatives of simple series") {
    // constant g
    auto constant = DerivativeSequence::from_g0(Complex{3.0}, {Complex{0.0}, Complex{0.0}});
    for (const Complex& f : log_derivatives(constant)) CHECK(std::abs(f) == 0.0);

    // g = 1 + z: f-coefficients (-1)^(k+1) / k
    std::vector<Complex> derivs{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{0.0},
                                Complex{0.0}};
    auto d = DerivativeSequence::from_g0(Complex{1.0}, derivs);
    auto f = log_derivatives(d);
    for (std::size_t k = 1; k <= f.size(); ++k) {
        double want = (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
        CHECK(std::abs(f[k - 1] - Complex{want}) <= 1e-14);
    }

    // g = (1 + z)^2: normalized derivatives 2, 1, 0, ...; f = 2 ln(1+z)
    std::vector<Complex> sq{Complex{2.0}, Complex{1.0}, Complex{0.0}, Complex{0.0}};
    auto fsq = log_derivatives(DerivativeSequence::from_g0(Complex{1.0}, sq));
    CHECK(std::abs(fsq[0] - Complex{2.0}) <= 1e-14);
    CHECK(std::abs(fsq[1] - Complex{-1.0}) <= 1e-14);
    CHECK(std::abs(fsq[2] - Complex{2.0 / 3.0}) <= 1e-14);

    CHECK_THROWS_AS(DerivativeSequence::from_g0(Complex{0.0}, {}), DomainError);
}

TEST_CASE("taylor log at one: closed forms") {
    // constant
    auto c = taylor_log_at_one(DerivativeSequence::from_g0(Complex{5.0}, {}), 1, 2.0);
    CHECK(std::abs(c.log_value - Complex{std::log(5.0)}) <= 1e-14);
    CHECK(c.degree == 0);

    // g = (1 - z/2)^2 at degree 5: -2 sum_{k<=5} 2^-k / k
    std::vector<Complex> g{Complex{-1.0}, Complex{0.25}, Complex{0.0}, Complex{0.0},
                           Complex{0.0}};
    auto r = taylor_log_at_one(DerivativeSequence::from_g0(Complex{1.0}, g), 2, 2.0);
    double partial = 0.0;
    for (int k = 1; k <= 5; ++k) partial -= 2.0 * std::pow(0.5, k) / k;
    CHECK(std::abs(r.log_value - Complex{partial}) <= 1e-12);
    CHECK(r.log_value.real() == doctest::Approx(-1.37708).epsilon(1e-5));
    CHECK(r.truncation_bound == doctest::Approx(2.0 / 192.0).epsilon(1e-12));
    double truth = -2.0 * std::log(2.0);
    CHECK(std::abs(r.log_value.real() - truth) <= r.truncation_bound);

    // g = 1 + z at degree 3 with inadmissible beta: evaluation-only mode
    std::vector<Complex> lin{Complex{1.0}, Complex{0.0}, Complex{0.0}};
    auto u = taylor_log_at_one(DerivativeSequence::from_g0(Complex{1.0}, lin), 1, 1.0);
    CHECK(u.log_value.real() == doctest::Approx(1.0 - 0.5 + 1.0 / 3.0).epsilon(1e-12));
    CHECK(std::isinf(u.truncation_bound));
}

TEST_CASE("tail bound holds over random root configurations") {
    CounterRng rng(23, 300);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 1 + static_cast<int>(rng.unit() * 10.0);  // 1..10 roots
        double beta = 1.1 + 2.0 * rng.unit();
        std::vector<Complex> roots;
        for (int i = 0; i < n; ++i) {
            double mod = beta * (1.0 + 2.0 * rng.unit());
            roots.push_back(rng.circle_point(mod));
        }
        Complex g0{0.5 + rng.unit(), rng.symmetric_unit()};
        auto poly = from_roots(g0, roots);

        int m = degree_for_accuracy(n, beta, 1e-4);
        auto& seq = poly.seq;
        std::vector<Complex> padded = seq.normalized;
        padded.resize(static_cast<std::size_t>(m), Complex{0.0});
        auto res = taylor_log_at_one(DerivativeSequence::from_g0(seq.g0, padded), n, beta);

        CHECK(res.truncation_bound <= 1e-4);
        CHECK(test::log_distance(res.log_value, poly.log_at_one) <=
              res.truncation_bound + 1e-10);
    }
}

TEST_CASE("round trip: g-derivatives reconstruct from f-derivatives") {
    CounterRng rng(29, 301);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 3 + static_cast<int>(rng.unit() * 6.0);
        std::vector<Complex> g(static_cast<std::size_t>(m));
        for (auto& c : g) c = Complex{0.5 * rng.symmetric_unit(), 0.5 * rng.symmetric_unit()};
        auto f = log_derivatives(DerivativeSequence::from_g0(Complex{1.0}, g));

        // k G_k = sum_{j<k} (k-j) F_{k-j} G_j with G_0 = 1
        std::vector<Complex> back(static_cast<std::size_t>(m));
        for (int k = 1; k <= m; ++k) {
            Complex s = static_cast<double>(k) * f[static_cast<std::size_t>(k - 1)];
            for (int j = 1; j < k; ++j)
                s += static_cast<double>(k - j) * f[static_cast<std::size_t>(k - j - 1)] *
                     back[static_cast<std::size_t>(j - 1)];
            back[static_cast<std::size_t>(k - 1)] = s / static_cast<double>(k);
        }
        for (int k = 1; k <= m; ++k) {
            double denom = std::max(1.0, std::abs(g[static_cast<std::size_t>(k - 1)]));
            CHECK(std::abs(back[static_cast<std::size_t>(k - 1)] -
                           g[static_cast<std::size_t>(k - 1)]) <= 1e-10 * denom);
        }
    }
}
