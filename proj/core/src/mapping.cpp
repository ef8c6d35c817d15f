#include "homim/mapping.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace homim {
namespace {

int floor_log2_u64(std::uint64_t v) {
    return 63 - std::countl_zero(v);
}

int exact_log2(int m, const char* what) {
    if (m < 2 || (m & (m - 1)) != 0)
        throw std::invalid_argument(std::string(what) + " must be a power of two >= 2");
    return floor_log2_u64(static_cast<std::uint64_t>(m));
}

void validate(const ImConfig& cfg) {
    if (cfg.omega < 1) throw std::invalid_argument("omega must be >= 1");
    if (cfg.kappa < 1 || cfg.kappa > cfg.omega)
        throw std::invalid_argument("kappa must be in [1, omega]");
    exact_log2(cfg.m1, "m1");
    exact_log2(cfg.m2, "m2");
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        // result * num / i is exact at every step; guard the multiply.
        if (result > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        result = result * num / static_cast<std::uint64_t>(i);
    }
    return result;
}

BitBudget bit_budget(const ImConfig& cfg) {
    validate(cfg);
    BitBudget b;
    std::uint64_t c = binomial(cfg.omega, cfg.kappa);
    b.lambda1 = (c > 1) ? floor_log2_u64(c) : 0;
    b.lambda2 = cfg.kappa * exact_log2(cfg.m1, "m1");
    b.lambda3 = cfg.omega * exact_log2(cfg.m2, "m2");
    return b;
}

int kappa_approx(int m1, int omega) {
    exact_log2(m1, "m1");
    if (omega < 1) throw std::invalid_argument("omega must be >= 1");
    int k = (m1 * omega) / (m1 + 1);
    if (k < 1) k = 1;
    if (k > omega) k = omega;
    return k;
}

int kappa_exhaustive(int m1, int omega) {
    const int b1 = exact_log2(m1, "m1");
    if (omega < 1) throw std::invalid_argument("omega must be >= 1");
    int best_k = 1;
    int best_bits = -1;
    for (int k = 1; k <= omega; ++k) {
        std::uint64_t c = binomial(omega, k);
        int bits = ((c > 1) ? floor_log2_u64(c) : 0) + k * b1;
        if (bits > best_bits) {
            best_bits = bits;
            best_k = k;
        }
    }
    return best_k;
}

Sap sap_from_index(std::uint64_t rank, int omega, int kappa) {
    if (rank >= binomial(omega, kappa))
        throw std::out_of_range("sap rank out of range");
    Sap sap;
    sap.reserve(kappa);
    // Lexicographic unranking: at each slot take the smallest candidate c
    // whose tail block C(omega - c, kappa - slot - 1) covers the residual.
    int c = 1;
    for (int slot = 0; slot < kappa; ++slot) {
        for (;; ++c) {
            std::uint64_t block = binomial(omega - c, kappa - slot - 1);
            if (rank < block) break;
            rank -= block;
        }
        sap.push_back(c);
        ++c;
    }
    return sap;
}

std::uint64_t sap_index(const Sap& sap, int omega) {
    const int kappa = static_cast<int>(sap.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (int slot = 0; slot < kappa; ++slot) {
        int s = sap[slot];
        if (s <= prev || s > omega)
            throw std::invalid_argument("sap must be strictly increasing within [1, omega]");
        for (int c = prev + 1; c < s; ++c)
            rank += binomial(omega - c, kappa - slot - 1);
        prev = s;
    }
    return rank;
}

Sap sap_encode(const std::uint8_t* bits, const ImConfig& cfg) {
    validate(cfg);
    const int lambda1 = bit_budget(cfg).lambda1;
    return sap_from_index(bits_to_uint(bits, lambda1), cfg.omega, cfg.kappa);
}

void sap_decode(const Sap& sap, const ImConfig& cfg, std::uint8_t* bits_out) {
    validate(cfg);
    if (static_cast<int>(sap.size()) != cfg.kappa)
        throw std::invalid_argument("sap size must equal kappa");
    const int lambda1 = bit_budget(cfg).lambda1;
    std::uint64_t rank = sap_index(sap, cfg.omega);
    const std::uint64_t limit = std::uint64_t{1} << lambda1;
    if (rank >= limit) rank = limit - 1;
    uint_to_bits(rank, bits_out, lambda1);
}

std::uint64_t bits_to_uint(const std::uint8_t* bits, int nbits) {
    std::uint64_t v = 0;
    for (int i = 0; i < nbits; ++i) v = (v << 1) | (bits[i] & 1u);
    return v;
}

void uint_to_bits(std::uint64_t value, std::uint8_t* bits, int nbits) {
    for (int i = nbits - 1; i >= 0; --i) {
        bits[i] = static_cast<std::uint8_t>(value & 1u);
        value >>= 1;
    }
}

}  // namespace homim
