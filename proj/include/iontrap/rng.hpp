#pragma once

#include <cmath>
#include <cstdint>

namespace iontrap {

// Small deterministic generator (splitmix64 core).  Streams are derived by
// hashing (seed, indices) so shot-level results do not depend on the order
// in which shots are simulated.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
        std::uint64_t s = mix(seed ^ 0x6a09e667f3bcc908ULL);
        s = mix(s ^ a);
        s = mix(s ^ (b + 0x510e527fade682d1ULL));
        s = mix(s ^ (c + 0x9b05688c2b3e6c1fULL));
        return Rng(s);
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    double normal() {
        // Box-Muller; one value per call keeps the stream layout simple.
        double u1 = u01();
        double u2 = u01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Poisson by CDF inversion; fine for the photon-count means used here.
    int poisson(double mu) {
        if (mu <= 0.0) return 0;
        double u = u01();
        double p = std::exp(-mu);
        double cdf = p;
        int k = 0;
        const int kmax = static_cast<int>(mu + 20.0 * std::sqrt(mu) + 30.0);
        while (u > cdf && k < kmax) {
            ++k;
            p *= mu / k;
            cdf += p;
        }
        return k;
    }

private:
    std::uint64_t state_;
};

}  // namespace iontrap
