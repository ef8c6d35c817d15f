#pragma once

#include <cstdint>
#include <vector>

namespace homim {

using BitVec = std::vector<std::uint8_t>;

/// Index-modulation geometry: kappa of omega eligible bins are active, the
/// active branch uses an m1-ary alphabet and the always-on branch an m2-ary
/// one.  Which branches actually carry bits is decided per scheme by the
/// modem; the budget formula itself is scheme-agnostic.
struct ImConfig {
    int omega = 0;
    int kappa = 0;
    int m1 = 2;
    int m2 = 2;
};

/// Active-bin index set, strictly increasing, values in {1..omega}.
using Sap = std::vector<int>;

/// Exact integer binomial coefficient.  Saturates at UINT64_MAX on overflow,
/// which is far beyond any supported (omega, kappa) pair.
std::uint64_t binomial(int n, int k);

/// Bits carried by one block:
///   index bits    lambda1 = floor(log2 C(omega, kappa))
///   active bits   lambda2 = kappa * log2(m1)
///   always-on     lambda3 = omega * log2(m2)
struct BitBudget {
    int lambda1 = 0;
    int lambda2 = 0;
    int lambda3 = 0;
    int total() const { return lambda1 + lambda2 + lambda3; }
};

BitBudget bit_budget(const ImConfig& cfg);

/// Closed-form active-count choice floor(m1*omega/(m1+1)), clamped to
/// [1, omega].  Slightly below the exact argmax in some corners; see
/// kappa_exhaustive.
int kappa_approx(int m1, int omega);

/// Exact argmax of lambda1 + lambda2 over kappa in [1, omega]; ties resolve
/// to the smaller kappa.
int kappa_exhaustive(int m1, int omega);

/// Bits -> activation pattern.  The code book is the first 2^lambda1
/// kappa-subsets of {1..omega} in lexicographic order (combinadic
/// unranking); rank 0 is {1..kappa}.
Sap sap_encode(const std::uint8_t* bits, const ImConfig& cfg);

/// Pattern -> bits, inverse of sap_encode on the code book.  Detected
/// patterns ranked at or above 2^lambda1 clamp to rank 2^lambda1 - 1, so the
/// receiver always emits lambda1 bits.
void sap_decode(const Sap& sap, const ImConfig& cfg, std::uint8_t* bits_out);

/// Low-level lexicographic rank/unrank over kappa-subsets of {1..omega}.
Sap sap_from_index(std::uint64_t rank, int omega, int kappa);
std::uint64_t sap_index(const Sap& sap, int omega);

/// MSB-first bit packing helpers used at the modem edges.
std::uint64_t bits_to_uint(const std::uint8_t* bits, int nbits);
void uint_to_bits(std::uint64_t value, std::uint8_t* bits, int nbits);

}  // namespace homim
