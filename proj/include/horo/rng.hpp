#pragma once

#include <cmath>
#include <cstdint>

namespace horo {

// Counter-friendly generator used by the verification suites. Every sample is
// seeded independently from (seed, stream, index), so results do not depend on
// thread count or iteration order, and the bit stream is identical across
// platforms (std::uniform_real_distribution is not).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        // avalanche a before injecting b, then avalanche again; a plain
        // xor/add combine lets crafted (a, b) pairs share streams
        SplitMix64 g(a);
        SplitMix64 h(g.next() ^ (b + 0x9e3779b97f4a7c15ULL));
        h.next();
        return h.next();
    }

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double gaussian() {
        // Box-Muller; discards the second variate for simplicity.
        double u1 = unit(), u2 = unit();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
};

}  // namespace horo
