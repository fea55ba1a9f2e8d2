#include "mixdisc/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace mixdisc {

std::pair<std::uint64_t, std::uint64_t> threefry2x64(std::uint64_t key0, std::uint64_t key1,
                                                     std::uint64_t ctr0, std::uint64_t ctr1) {
    constexpr std::uint64_t parity = 0x1BD11BDAA9FC1A22ull;
    constexpr int rot[8] = {16, 42, 12, 31, 16, 32, 24, 21};
    const std::uint64_t ks[3] = {key0, key1, parity ^ key0 ^ key1};

    std::uint64_t x0 = ctr0 + ks[0];
    std::uint64_t x1 = ctr1 + ks[1];
    for (int round = 0; round < 20; ++round) {
        x0 += x1;
        x1 = std::rotl(x1, rot[round % 8]);
        x1 ^= x0;
        if (round % 4 == 3) {
            int s = round / 4 + 1;
            x0 += ks[s % 3];
            x1 += ks[(s + 1) % 3] + static_cast<std::uint64_t>(s);
        }
    }
    return {x0, x1};
}

double CounterRng::angle() {
    // [0, 2*pi)
    return 2.0 * std::numbers::pi * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
}

Complex CounterRng::disc_point(double radius) {
    double r = radius * std::sqrt(unit());
    double a = angle();
    return {r * std::cos(a), r * std::sin(a)};
}

Complex CounterRng::circle_point(double radius) {
    double a = angle();
    return {radius * std::cos(a), radius * std::sin(a)};
}

}  // namespace mixdisc
