#include "mixdisc/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mixdisc/exact.hpp"
#include "mixdisc/instance_gen.hpp"
#include "mixdisc/minor_sums.hpp"

namespace mixdisc {

ZeroFreeReport verify_zero_free_polydisc(int n, int samples, int grid, std::uint64_t seed,
                                         bool boundary) {
    const double gamma0 = StabilityConstants::get().gamma0;
    ZeroFreeReport rep{n, 0, std::numeric_limits<double>::infinity(), 0, true};
    const double scale = factorial(n);
    for (int s = 0; s < samples; ++s) {
        std::uint64_t base = seed + 1000003ull * static_cast<std::uint64_t>(s);
        std::vector<SymmetricMatrix> qs;
        qs.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            qs.push_back(gen_symmetric_bounded(n, gamma0,
                                               base + 17ull * static_cast<std::uint64_t>(k)));
        SymmetricTuple tuple(std::move(qs));
        for (int g = 0; g < std::max(1, grid); ++g) {
            std::vector<Complex> zs =
                gen_points(n, 1.0, boundary, base + 7919ull * static_cast<std::uint64_t>(g));
            Complex d = mixed_discriminant(shifted_tuple(tuple, zs));
            double mod = std::abs(d) / scale;
            rep.min_abs_normalized = std::min(rep.min_abs_normalized, mod);
            if (std::abs(d) <= 1e-12 * scale) ++rep.violations;
            ++rep.evaluations;
        }
    }
    rep.pass = rep.violations == 0;
    return rep;
}

ZeroFreeReport verify_zero_free_ds(int n, int samples, int grid, std::uint64_t seed) {
    const double alpha0 = StabilityConstants::get().alpha0;
    const double radius = alpha0 * n / 4.0 * (1.0 - 1e-9);
    ZeroFreeReport rep{n, 0, std::numeric_limits<double>::infinity(), 0, true};
    const double scale = factorial(n);
    const int rings = 4;
    for (int s = 0; s < samples; ++s) {
        std::uint64_t base = seed + 1000003ull * static_cast<std::uint64_t>(s);
        SymmetricTuple tuple = gen_ds_tuple(n, base);
        for (int ring = 1; ring <= rings; ++ring) {
            double r = radius * static_cast<double>(ring) / rings;
            for (int g = 0; g < std::max(1, grid); ++g) {
                double phi = 2.0 * std::numbers::pi * g / std::max(1, grid);
                Complex z{r * std::cos(phi), r * std::sin(phi)};
                Complex d = mixed_discriminant(shifted_tuple(tuple, z));
                double mod = std::abs(d) / scale;
                rep.min_abs_normalized = std::min(rep.min_abs_normalized, mod);
                if (std::abs(d) <= 1e-12 * scale) ++rep.violations;
                ++rep.evaluations;
            }
        }
    }
    rep.pass = rep.violations == 0;
    return rep;
}

ZeroFreeReport verify_zero_free_minor_sums(int n, int m, int samples, int grid,
                                           std::uint64_t seed) {
    ZeroFreeReport rep{n, 0, std::numeric_limits<double>::infinity(), 0, true};
    const int rings = 4;
    for (int s = 0; s < samples; ++s) {
        std::uint64_t base = seed + 1000003ull * static_cast<std::uint64_t>(s);
        ComplexMatrix b = gen_complex_bounded(n, 1.0 - 1e-9, base);
        // phi as an explicit polynomial: coefficient k = sum_{|S|=k} det(B_S)^m.
        DerivativeSequence d = phi_derivatives(b, m, n);
        for (int ring = 1; ring <= rings; ++ring) {
            double r = static_cast<double>(ring) / rings;
            for (int g = 0; g < std::max(1, grid); ++g) {
                double phi = 2.0 * std::numbers::pi * g / std::max(1, grid);
                Complex z{r * std::cos(phi), r * std::sin(phi)};
                Complex val{1.0};
                Complex zp{1.0};
                for (int k = 1; k <= n; ++k) {
                    zp *= z;
                    val += d.normalized[static_cast<std::size_t>(k - 1)] * zp;
                }
                double mod = std::abs(val);
                rep.min_abs_normalized = std::min(rep.min_abs_normalized, mod);
                if (mod <= 1e-12) ++rep.violations;
                ++rep.evaluations;
            }
        }
    }
    rep.pass = rep.violations == 0;
    return rep;
}

}  // namespace mixdisc
