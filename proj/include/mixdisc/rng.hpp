#ifndef MIXDISC_RNG_HPP
#define MIXDISC_RNG_HPP

#include <cstdint>
#include <utility>

#include "mixdisc/numeric.hpp"

namespace mixdisc {

/// Threefry-2x64, 20 rounds.  A counter-based generator: the output is a
/// pure function of (key, counter), so instances are reproducible across
/// platforms and safe to evaluate from any thread.
std::pair<std::uint64_t, std::uint64_t> threefry2x64(std::uint64_t key0, std::uint64_t key1,
                                                     std::uint64_t ctr0, std::uint64_t ctr1);

/// Stateful convenience wrapper around threefry2x64.  `stream` separates
/// independent substreams of the same seed.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : key0_(seed), key1_(stream) {}

    std::uint64_t next_u64() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        auto [a, b] = threefry2x64(key0_, key1_, counter_++, 0);
        spare_ = b;
        have_spare_ = true;
        return a;
    }

    /// Uniform in (0, 1].
    double unit() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    /// Uniform in [-1, 1].
    double symmetric_unit() { return 2.0 * unit() - 1.0; }

    /// Uniform angle in [0, 2*pi).
    double angle();

    /// Uniform point of the closed disc of the given radius ([re, im]).
    Complex disc_point(double radius);

    /// Uniform point of the circle of the given radius.
    Complex circle_point(double radius);

private:
    std::uint64_t key0_, key1_;
    std::uint64_t counter_ = 0;
    std::uint64_t spare_ = 0;
    bool have_spare_ = false;
};

// Fixed stream ids so unrelated generators never share a Threefry stream.
namespace rng_stream {
inline constexpr std::uint64_t symmetric_matrix = 0x01;
inline constexpr std::uint64_t pd_tuple = 0x02;
inline constexpr std::uint64_t complex_matrix = 0x03;
inline constexpr std::uint64_t points = 0x04;
inline constexpr std::uint64_t vectors = 0x05;
inline constexpr std::uint64_t identity_decomposition = 0x06;
}  // namespace rng_stream

}  // namespace mixdisc

#endif
