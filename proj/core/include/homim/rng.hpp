#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace homim {

/// splitmix64 step; used to whiten and derive substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic substream seed from a root seed and up to three stream
/// tags.  Different tag tuples give statistically independent streams.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = root;
    std::uint64_t z = splitmix64(s);
    s ^= a + 0x9e3779b97f4a7c15ULL;
    z ^= splitmix64(s);
    s ^= b + 0xd1b54a32d192ed03ULL;
    z ^= splitmix64(s);
    s ^= c + 0x8cb92ba72f3d8dd7ULL;
    z ^= splitmix64(s);
    return z;
}

/// mt19937_64 with a hand-rolled Box-Muller normal so draws are bit-stable
/// across standard libraries (std::normal_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(ang);
        have_spare_ = true;
        return r * std::cos(ang);
    }

    /// Fills n independent uniform bits.
    void random_bits(std::uint8_t* out, int n) {
        std::uint64_t word = 0;
        int left = 0;
        for (int i = 0; i < n; ++i) {
            if (left == 0) {
                word = gen_();
                left = 64;
            }
            out[i] = static_cast<std::uint8_t>(word & 1u);
            word >>= 1;
            --left;
        }
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace homim
