#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "homim/mapping.hpp"

using namespace homim;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(8, 6) == 28);
    CHECK(binomial(8, 2) == 28);
    CHECK(binomial(16, 8) == 12870);
    CHECK(binomial(15, 12) == 455);
    // Largest case any supported geometry needs (31 eligible bins).
    CHECK(binomial(31, 15) == 300540195);
    // The running-product overflow guard saturates conservatively; every
    // in-range (omega, kappa) pair stays exact, far larger ones peg at max.
    CHECK(binomial(128, 64) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("bit budget formula") {
    const BitBudget b = bit_budget(ImConfig{8, 6, 4, 4});
    CHECK(b.lambda1 == 4);   // floor(log2 C(8,6)) = floor(log2 28)
    CHECK(b.lambda2 == 12);  // 6 * log2 4
    CHECK(b.lambda3 == 16);  // 8 * log2 4
    CHECK(b.total() == 32);

    const BitBudget c = bit_budget(ImConfig{8, 8, 256, 4});
    CHECK(c.lambda1 == 0);  // C(8,8) = 1, no index freedom
    CHECK(c.lambda2 == 64);
    CHECK(c.lambda3 == 16);

    CHECK_THROWS_AS(bit_budget(ImConfig{8, 0, 4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(bit_budget(ImConfig{8, 9, 4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(bit_budget(ImConfig{8, 4, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(bit_budget(ImConfig{8, 4, 4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(bit_budget(ImConfig{0, 0, 4, 4}), std::invalid_argument);
}

TEST_CASE("active-count selection rules") {
    CHECK(kappa_approx(4, 8) == 6);    // floor(32/5)
    CHECK(kappa_approx(256, 8) == 7);  // floor(2048/257)
    CHECK(kappa_approx(4, 15) == 12);  // floor(60/5)
    CHECK(kappa_approx(2, 4) == 2);    // floor(8/3)
    CHECK(kappa_approx(2, 1) == 1);    // clamped up to 1

    // The closed form sits slightly below the exact argmax in some corners.
    CHECK(kappa_exhaustive(4, 8) == 7);    // 3 + 14 bits beats 4 + 12
    CHECK(kappa_exhaustive(256, 8) == 8);  // 0 + 64 beats 3 + 56
    CHECK(kappa_exhaustive(2, 4) == 3);    // 2 + 3 bits

    CHECK_THROWS_AS(kappa_approx(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(kappa_exhaustive(4, 0), std::invalid_argument);
}

TEST_CASE("combinadic rank and unrank") {
    CHECK(sap_from_index(0, 8, 6) == Sap{1, 2, 3, 4, 5, 6});
    CHECK(sap_from_index(15, 8, 6) == Sap{1, 3, 4, 5, 6, 7});
    CHECK(sap_from_index(27, 8, 6) == Sap{3, 4, 5, 6, 7, 8});  // last rank
    CHECK(sap_index(Sap{1, 2}, 4) == 0);
    CHECK(sap_index(Sap{3, 4}, 4) == 5);
    CHECK_THROWS_AS(sap_from_index(28, 8, 6), std::out_of_range);
    CHECK_THROWS_AS(sap_index(Sap{2, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(sap_index(Sap{1, 5}, 4), std::invalid_argument);
}

TEST_CASE("rank/unrank is a bijection over all 3-subsets of 8") {
    for (std::uint64_t r = 0; r < binomial(8, 3); ++r) {
        const Sap s = sap_from_index(r, 8, 3);
        REQUIRE(s.size() == 3);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(s.front() >= 1);
        CHECK(s.back() <= 8);
        CHECK(sap_index(s, 8) == r);
    }
}

TEST_CASE("pattern encode/decode with receiver-side clamping") {
    const ImConfig im{4, 2, 4, 4};  // lambda1 = floor(log2 6) = 2
    REQUIRE(bit_budget(im).lambda1 == 2);

    std::uint8_t bits[2] = {1, 1};  // rank 3 -> {2, 3}
    CHECK(sap_encode(bits, im) == Sap{2, 3});

    std::uint8_t out[2] = {0, 0};
    sap_decode(Sap{2, 3}, im, out);
    CHECK(out[0] == 1);
    CHECK(out[1] == 1);

    // Detected patterns outside the 2^lambda1 code book clamp to the
    // all-ones word so the receiver always emits lambda1 bits.
    sap_decode(Sap{2, 4}, im, out);  // rank 4
    CHECK(out[0] == 1);
    CHECK(out[1] == 1);
    sap_decode(Sap{3, 4}, im, out);  // rank 5
    CHECK(out[0] == 1);
    CHECK(out[1] == 1);

    CHECK_THROWS_AS(sap_decode(Sap{1}, im, out), std::invalid_argument);
}

TEST_CASE("bit packing is MSB-first") {
    const std::uint8_t bits[4] = {1, 0, 1, 1};
    CHECK(bits_to_uint(bits, 4) == 11);
    std::uint8_t out[4] = {};
    uint_to_bits(11, out, 4);
    CHECK(std::equal(bits, bits + 4, out));
    for (std::uint64_t v = 0; v < 16; ++v) {
        std::uint8_t buf[4];
        uint_to_bits(v, buf, 4);
        CHECK(bits_to_uint(buf, 4) == v);
    }
    CHECK(bits_to_uint(nullptr, 0) == 0);
}
