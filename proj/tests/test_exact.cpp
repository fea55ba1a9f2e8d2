#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mixdisc/exact.hpp"
#include "mixdisc/minor_sums.hpp"
#include "test_support.hpp"

using namespace mixdisc;

namespace {

ComplexTuple tuple_of(std::vector<Eigen::MatrixXcd> ms) {
    std::vector<ComplexMatrix> v;
    v.reserve(ms.size());
    for (auto& m : ms) v.emplace_back(std::move(m));
    return ComplexTuple(std::move(v));
}

Eigen::MatrixXcd diag2(double a, double b) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("mixed discriminant of the identity pair is 2") {
    auto t = tuple_of({Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2)});
    CHECK(mixed_discriminant(t).real() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("diagonal tuples reduce to a permanent") {
    auto t = tuple_of({diag2(1.0, 2.0), diag2(3.0, 4.0)});
    CHECK(mixed_discriminant(t).real() == doctest::Approx(10.0).epsilon(1e-13));

    CounterRng rng(3, 100);
    for (int n : {3, 5, 8}) {
        std::vector<Eigen::MatrixXcd> ms;
        Eigen::MatrixXcd b(n, n);
        for (int k = 0; k < n; ++k) {
            Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
            for (int i = 0; i < n; ++i) {
                d(i, i) = Complex{rng.symmetric_unit(), rng.symmetric_unit()};
                b(k, i) = d(i, i);  // row k is the diagonal of A_k
            }
            ms.push_back(d);
        }
        Complex lhs = mixed_discriminant(tuple_of(std::move(ms)));
        Complex rhs = permanent(ComplexMatrix(b));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("rank-one identity: D(x1 (x) x1, ...) = det[x1 ... xn]^2") {
    Eigen::VectorXd x1(2), x2(2);
    x1 << 1.0, 1.0;
    x2 << 0.0, 1.0;
    auto t = tuple_of({outer_product(x1).mat().cast<Complex>(),
                       outer_product(x2).mat().cast<Complex>()});
    CHECK(mixed_discriminant(t).real() == doctest::Approx(1.0).epsilon(1e-12));

    CounterRng rng(5, 101);
    for (int n : {3, 4, 6}) {
        Eigen::MatrixXd cols(n, n);
        std::vector<Eigen::MatrixXcd> ms;
        for (int k = 0; k < n; ++k) {
            Eigen::VectorXd x(n);
            for (int i = 0; i < n; ++i) x(i) = rng.symmetric_unit();
            cols.col(k) = x;
            ms.push_back(outer_product(x).mat().cast<Complex>());
        }
        double det = cols.determinant();
        Complex d = mixed_discriminant(tuple_of(std::move(ms)));
        CHECK(std::abs(d - Complex{det * det}) <= 1e-10 * std::max(1.0, det * det));
    }
}

TEST_CASE("set-sum identity over selections") {
    CounterRng rng(7, 102);
    const int n = 4;
    std::vector<std::vector<Eigen::VectorXd>> sets(n);
    std::vector<Eigen::MatrixXcd> ms;
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
        int count = 2 + static_cast<int>(rng.unit() * 2);  // 2 or 3 vectors
        for (int s = 0; s < count; ++s) {
            Eigen::VectorXd x(n);
            for (int i = 0; i < n; ++i) x(i) = rng.symmetric_unit();
            sets[static_cast<std::size_t>(k)].push_back(x);
            a += outer_product(x).mat().cast<Complex>();
        }
        ms.push_back(a);
    }
    Complex lhs = mixed_discriminant(tuple_of(std::move(ms)));

    double rhs = 0.0;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        Eigen::MatrixXd cols(n, n);
        for (int k = 0; k < n; ++k) cols.col(k) = sets[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]];
        double det = cols.determinant();
        rhs += det * det;
        int k = 0;
        while (k < n && ++pick[static_cast<std::size_t>(k)] == sets[static_cast<std::size_t>(k)].size()) {
            pick[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    CHECK(std::abs(lhs - Complex{rhs}) <= 1e-9 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("permutation symmetry, multilinearity and homogeneity") {
    CounterRng rng(9, 103);
    for (int n : {2, 3, 5}) {
        std::vector<Eigen::MatrixXcd> ms;
        for (int k = 0; k < n; ++k) ms.push_back(test::random_complex(n, rng));

        Complex base = mixed_discriminant(tuple_of({ms.begin(), ms.end()}));

        auto shuffled = ms;
        std::swap(shuffled[0], shuffled[static_cast<std::size_t>(n - 1)]);
        if (n > 2) std::swap(shuffled[1], shuffled[2]);
        Complex after = mixed_discriminant(tuple_of(std::move(shuffled)));
        CHECK(std::abs(base - after) <= 1e-10 * std::max(1.0, std::abs(base)));

        // multilinearity in slot 0
        Eigen::MatrixXcd x = test::random_complex(n, rng), y = test::random_complex(n, rng);
        Complex a{rng.symmetric_unit(), rng.symmetric_unit()};
        Complex b{rng.symmetric_unit(), rng.symmetric_unit()};
        auto with = [&](const Eigen::MatrixXcd& first) {
            auto copy = ms;
            copy[0] = first;
            return mixed_discriminant(tuple_of(std::move(copy)));
        };
        Complex lhs = with(a * x + b * y);
        Complex rhs = a * with(x) + b * with(y);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));

        // homogeneity
        Complex c{1.7, -0.3};
        Complex scaled = with(c * ms[0]);
        CHECK(std::abs(scaled - c * base) <= 1e-9 * std::max(1.0, std::abs(base)));
    }
}

TEST_CASE("polarization agrees with the permutation double sum") {
    CounterRng rng(11, 104);
    for (int n : {2, 3, 4, 5}) {
        std::vector<Eigen::MatrixXcd> ms;
        for (int k = 0; k < n; ++k) ms.push_back(test::random_complex(n, rng));
        ComplexTuple t = tuple_of(std::move(ms));
        Complex pol = mixed_discriminant(t, MixedDiscMethod::Polarization);
        Complex per = mixed_discriminant(t, MixedDiscMethod::PermutationSum);
        CHECK(std::abs(pol - per) <= 1e-10 * std::max(1.0, std::abs(pol)));
    }
}

TEST_CASE("permanent examples") {
    CHECK(permanent(ComplexMatrix::identity(4)).real() == doctest::Approx(1.0));

    Eigen::MatrixXcd m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    CHECK(permanent(ComplexMatrix(m)).real() == doctest::Approx(10.0));

    Eigen::MatrixXcd ones = Eigen::MatrixXcd::Ones(3, 3);
    CHECK(permanent(ComplexMatrix(ones)).real() == doctest::Approx(6.0));

    CHECK_THROWS_AS(permanent(ComplexMatrix(Eigen::MatrixXcd::Zero(21, 21))), ResourceError);
}

TEST_CASE("padded mixed discriminant") {
    // k = 0: D(I, I, I) = 3!
    CHECK(padded_mixed_discriminant(3, {}).real() == doctest::Approx(6.0));

    // k = n: no padding
    CounterRng rng(13, 105);
    std::vector<ComplexMatrix> ms;
    for (int k = 0; k < 3; ++k) ms.emplace_back(Eigen::MatrixXcd(test::random_complex(3, rng)));
    Complex lhs = padded_mixed_discriminant(3, ms);
    Complex rhs = mixed_discriminant(ComplexTuple(ms));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));

    // k = 1, n = 2, diag(1, 2): per [[1,1],[1,2]] = 3
    std::vector<ComplexMatrix> one{ComplexMatrix(diag2(1.0, 2.0))};
    CHECK(padded_mixed_discriminant(2, one).real() == doctest::Approx(3.0));

    // one identity slot equals (n-1)! tr A
    for (int n : {2, 4, 6}) {
        std::vector<ComplexMatrix> a{ComplexMatrix(test::random_complex(n, rng))};
        Complex got = padded_mixed_discriminant(n, a);
        Complex want = factorial(n - 1) * a[0].mat().trace();
        CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }

    std::vector<ComplexMatrix> too_many(4, ComplexMatrix::identity(3));
    CHECK_THROWS_AS(padded_mixed_discriminant(3, too_many), InputError);
}

TEST_CASE("padded mixed discriminant against the full polarization") {
    CounterRng rng(15, 106);
    const int n = 5;
    for (int k = 1; k < n; ++k) {
        std::vector<ComplexMatrix> as;
        for (int i = 0; i < k; ++i)
            as.emplace_back(Eigen::MatrixXcd(test::random_complex(n, rng)));
        std::vector<ComplexMatrix> padded(static_cast<std::size_t>(n - k),
                                          ComplexMatrix::identity(n));
        for (const auto& a : as) padded.push_back(a);
        Complex direct = mixed_discriminant(ComplexTuple(padded));
        Complex via = padded_mixed_discriminant(n, as);
        CHECK(std::abs(direct - via) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("minor power sums") {
    CHECK(minor_power_sum(ComplexMatrix::zero(4), 3).real() == doctest::Approx(1.0));

    Eigen::MatrixXcd half = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
    CHECK(minor_power_sum(ComplexMatrix(half), 2).real() == doctest::Approx(1.5625));

    Eigen::MatrixXcd b1(1, 1);
    b1 << Complex{0.7, 0.2};
    Complex expected = Complex{1.0} + std::pow(Complex{0.7, 0.2}, 3);
    CHECK(std::abs(minor_power_sum(ComplexMatrix(b1), 3) - expected) <= 1e-14);

    CHECK_THROWS_AS(minor_power_sum(ComplexMatrix::zero(21), 2), ResourceError);
    CHECK_THROWS_AS(minor_power_sum(ComplexMatrix::zero(2), 0), InputError);
}

TEST_CASE("rank-2 reduction: indicator plus outer product tuple") {
    CounterRng rng(17, 107);
    for (int n : {3, 5, 8}) {
        std::vector<Eigen::VectorXd> xs;
        std::vector<Eigen::MatrixXcd> ms;
        for (int k = 0; k < n; ++k) {
            Eigen::VectorXd x(n);
            for (int i = 0; i < n; ++i) x(i) = rng.symmetric_unit();
            xs.push_back(x);
            Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
            a(k, k) = 1.0;
            a += outer_product(x).mat();
            ms.push_back(a.cast<Complex>());
        }
        Complex lhs = mixed_discriminant(tuple_of(std::move(ms)));
        Complex rhs = minor_power_sum(rank_two_matrix(xs), 2);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("dimension and cap errors") {
    std::vector<ComplexMatrix> two{ComplexMatrix::identity(3), ComplexMatrix::identity(3)};
    CHECK_THROWS_AS(mixed_discriminant(ComplexTuple(two)), InputError);

    std::vector<ComplexMatrix> big(15, ComplexMatrix::identity(15));
    CHECK_THROWS_AS(mixed_discriminant(ComplexTuple(big)), ResourceError);

    ExactLimits raised;
    raised.mixed_disc_max_n = 15;
    CHECK(mixed_discriminant(ComplexTuple(big), MixedDiscMethod::Polarization, raised).real() ==
          doctest::Approx(factorial(15)).epsilon(1e-9));
}
