#include "doctest.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "homim/constellation.hpp"

using namespace homim;

TEST_CASE("gray code") {
    const int expected[8] = {0, 1, 3, 2, 6, 7, 5, 4};
    for (int i = 0; i < 8; ++i) CHECK(gray_encode(i) == expected[i]);
    for (int i = 0; i < 64; ++i) CHECK(gray_decode(gray_encode(i)) == i);
}

TEST_CASE("qpsk points in label order") {
    CHECK(std::abs(psk_point(0, 4, 1.0) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(psk_point(1, 4, 1.0) - cplx{0.0, 1.0}) < 1e-12);
    CHECK(std::abs(psk_point(2, 4, 1.0) - cplx{0.0, -1.0}) < 1e-12);
    CHECK(std::abs(psk_point(3, 4, 1.0) - cplx{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(psk_point(1, 2, 2.0) - cplx{-2.0, 0.0}) < 1e-12);
    CHECK_THROWS_AS(psk_point(4, 4, 1.0), std::out_of_range);
    CHECK_THROWS_AS(psk_point(-1, 4, 1.0), std::out_of_range);
    CHECK_THROWS_AS(psk_point(0, 3, 1.0), std::invalid_argument);
}

TEST_CASE("angularly adjacent labels differ in exactly one bit") {
    for (int m : {4, 8, 16, 64, 256}) {
        for (int pos = 0; pos < m; ++pos) {
            const unsigned a = static_cast<unsigned>(gray_encode(pos));
            const unsigned b = static_cast<unsigned>(gray_encode((pos + 1) % m));
            CHECK(std::popcount(a ^ b) == 1);
        }
    }
}

TEST_CASE("alphabet enumeration matches the point rule") {
    const cvec pts = psk_alphabet(8, 1.5);
    REQUIRE(pts.size() == 8);
    for (int v = 0; v < 8; ++v) {
        CHECK(std::abs(pts[v] - psk_point(v, 8, 1.5)) == 0.0);
        CHECK(std::abs(std::abs(pts[v]) - 1.5) < 1e-12);
    }
}

TEST_CASE("nearest-point psk detection") {
    for (int m : {2, 4, 8, 256}) {
        for (int v = 0; v < m; ++v)
            CHECK(detect_psk(psk_point(v, m, 2.5), m, 2.5) == v);
    }
    // A small rotation keeps the decision.
    CHECK(detect_psk(std::polar(1.0, 0.5 * std::numbers::pi - 0.1), 4, 1.0) == 1);
    // The origin ties between all points; the lowest label wins.
    CHECK(detect_psk(cplx{0.0, 0.0}, 4, 1.0) == 0);
}

TEST_CASE("two-ring pair geometry") {
    const ConstellationPair p = ConstellationPair::make(4, 4);
    CHECK(p.m1 == 4);
    CHECK(p.m2 == 4);
    CHECK(p.r2 == 1.0);
    CHECK(p.d_min == 2.0);
    CHECK(p.r1 == 3.0);  // r2 + d_min
    const ConstellationPair q = ConstellationPair::make(16, 4, 0.5, 1.0);
    CHECK(q.r1 == doctest::Approx(1.5));
    CHECK_THROWS_AS(ConstellationPair::make(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(ConstellationPair::make(4, 4, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ConstellationPair::make(4, 4, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("superposition table contents") {
    const SuperpositionLut lut = build_lut(ConstellationPair::make(4, 4));
    REQUIRE(lut.entries.size() == 16);
    CHECK(lut.m1 == 4);
    CHECK(lut.m2 == 4);

    // Row-major (x2, x1) order; every cell is the plain sum of its two
    // ring points.
    for (int x2 = 0; x2 < 4; ++x2) {
        for (int x1 = 0; x1 < 4; ++x1) {
            const auto& e = lut.at(x1, x2);
            CHECK(e.x1_index == x1);
            CHECK(e.x2_index == x2);
            const cplx want = psk_point(x1, 4, 3.0) + psk_point(x2, 4, 1.0);
            CHECK(std::abs(e.point - want) < 1e-12);
        }
    }

    // Magnitude fingerprint: aligned sums reach 4, opposed sums shrink to 2
    // (table slots 3, 6, 9, 12), every quadrature sum sits at sqrt(10).
    for (int t = 0; t < 16; ++t) {
        const double mag = std::abs(lut.entries[t].point);
        double want = std::sqrt(10.0);
        if (t == 0 || t == 5 || t == 10 || t == 15) want = 4.0;
        if (t == 3 || t == 6 || t == 9 || t == 12) want = 2.0;
        CHECK(mag == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("table detection") {
    const SuperpositionLut lut = build_lut(ConstellationPair::make(4, 4));
    for (const auto& e : lut.entries) {
        const auto [x1, x2] = detect_lut(e.point, lut);
        CHECK(x1 == e.x1_index);
        CHECK(x2 == e.x2_index);
    }
    // The origin ties between the four magnitude-2 sums; the earliest table
    // slot (x1 = 3, x2 = 0) wins.
    const auto [t1, t2] = detect_lut(cplx{0.0, 0.0}, lut);
    CHECK(t1 == 3);
    CHECK(t2 == 0);
    // A perturbed aligned sum still lands on its own cell.
    const auto [y1, y2] = detect_lut(cplx{3.9, 0.2}, lut);
    CHECK(y1 == 0);
    CHECK(y2 == 0);
}
