#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "homim/channel.hpp"
#include "homim/constellation.hpp"
#include "homim/metrics.hpp"
#include "homim/receiver.hpp"
#include "homim/rng.hpp"
#include "homim/transmitter.hpp"

using namespace homim;

TEST_CASE("extraction map per family") {
    const ExtractionMap a =
        ExtractionMap::make(make_modem_config(Scheme::aco_im, 32, 4, 4, 4));
    CHECK(a.gain == 2.0);  // clipping halves data bins
    CHECK(a.gamma == std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15});

    const ExtractionMap d =
        ExtractionMap::make(make_modem_config(Scheme::dco, 16, 2, 4, 4));
    CHECK(d.gain == 1.0);
    CHECK(d.gamma == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("zero-forcing equalizer divides only the listed bins") {
    cvec Y(8);
    for (int k = 0; k < 8; ++k) Y[k] = cplx(k + 1.0, 1.0);
    cvec H(8, cplx{1.0, 0.0});
    H[1] = cplx{0.0, 2.0};
    H[3] = cplx{0.5, 0.0};

    const cvec out = equalize_zf(Y, H, {1, 3});
    CHECK(std::abs(out[1] - Y[1] / H[1]) < 1e-12);
    CHECK(std::abs(out[3] - Y[3] / H[3]) < 1e-12);
    CHECK(std::abs(out[2] - Y[2]) == 0.0);  // pass-through
    CHECK(std::abs(out[0] - Y[0]) == 0.0);

    H[1] = cplx{1e-13, 0.0};
    CHECK_THROWS_AS(equalize_zf(Y, H, {1}), std::runtime_error);
    CHECK_THROWS_AS(equalize_zf(Y, cvec(4), {1}), std::invalid_argument);
}

TEST_CASE("extraction gathers gained data bins in zeta order") {
    const ModemConfig cfg = make_modem_config(Scheme::aco, 16, 1, 4, 4);  // omega 4
    cvec y_hat(16, cplx{});
    y_hat[1] = cplx{1.0, 0.0};
    y_hat[3] = cplx{0.0, 2.0};
    y_hat[5] = cplx{-3.0, 0.0};
    y_hat[7] = cplx{0.5, 0.5};
    const cvec y_dot = extract(y_hat, ExtractionMap::make(cfg), cfg);
    REQUIRE(y_dot.size() == 4);
    CHECK(std::abs(y_dot[0] - cplx{2.0, 0.0}) < 1e-12);
    CHECK(std::abs(y_dot[1] - cplx{0.0, 4.0}) < 1e-12);
    CHECK(std::abs(y_dot[2] - cplx{-6.0, 0.0}) < 1e-12);
    CHECK(std::abs(y_dot[3] - cplx{1.0, 1.0}) < 1e-12);
}

TEST_CASE("activation detection picks the largest energies") {
    const cvec y = {cplx{1.0, 0.0}, cplx{0.2, 0.0}, cplx{0.0, 3.0},
                    cplx{0.1, 0.1}, cplx{2.0, 2.0}};
    CHECK(detect_sap_energy(y, 2) == Sap{3, 5});  // energies 1, .04, 9, .02, 8
    CHECK(detect_sap_energy(y, 1) == Sap{3});
    CHECK(detect_sap_energy(y, 5) == Sap{1, 2, 3, 4, 5});

    // Equal energies resolve toward the lower index.
    const cvec ties = {cplx{1.0, 0.0}, cplx{0.0, 1.0}, cplx{-1.0, 0.0},
                       cplx{0.5, 0.0}};
    CHECK(detect_sap_energy(ties, 2) == Sap{1, 2});

    CHECK_THROWS_AS(detect_sap_energy(y, 0), std::invalid_argument);
    CHECK_THROWS_AS(detect_sap_energy(y, 6), std::invalid_argument);
}

TEST_CASE("plain demodulation reads ring labels off each bin") {
    const ModemConfig dco = make_modem_config(Scheme::dco, 16, 2, 4, 4);  // omega 7
    const std::vector<int> labels = {0, 1, 2, 3, 0, 1, 2};
    cvec y(7);
    for (int i = 0; i < 7; ++i) y[i] = psk_point(labels[i], 4, 1.0);
    const DemodResult r = demodulate(y, {}, dco);
    CHECK(r.x2_labels == labels);
    CHECK(r.x1_labels.empty());
    CHECK(r.sap_hat.empty());
    REQUIRE(r.bits_hat.size() == 14);
    for (int i = 0; i < 7; ++i) {
        CHECK(r.bits_hat[2 * i] == ((labels[i] >> 1) & 1));
        CHECK(r.bits_hat[2 * i + 1] == (labels[i] & 1));
    }
}

TEST_CASE("hybrid demodulation: table on active bins, inner ring elsewhere") {
    const ModemConfig cfg = make_modem_config(Scheme::hybrid_aco, 32, 4, 4, 4);
    cvec y(8);
    for (int zeta = 1; zeta <= 6; ++zeta)
        y[zeta - 1] = psk_point(2, 4, 3.0) + psk_point(1, 4, 1.0);
    y[6] = psk_point(3, 4, 1.0);
    y[7] = psk_point(3, 4, 1.0);

    const DemodResult r = demodulate(y, Sap{1, 2, 3, 4, 5, 6}, cfg);
    CHECK(r.x1_labels == std::vector<int>(6, 2));
    CHECK(r.x2_labels == std::vector<int>{1, 1, 1, 1, 1, 1, 3, 3});

    BitVec expect(32, 0);
    for (int k = 0; k < 6; ++k) expect[4 + 2 * k] = 1;          // x1 label 2 = "10"
    for (int z = 0; z < 6; ++z) expect[16 + 2 * z + 1] = 1;     // x2 label 1 = "01"
    expect[16 + 12] = expect[16 + 13] = 1;                      // label 3 = "11"
    expect[16 + 14] = expect[16 + 15] = 1;
    CHECK(r.bits_hat == expect);

    CHECK_THROWS_AS(demodulate(y, Sap{1, 2}, cfg), std::invalid_argument);
}

TEST_CASE("non-codebook detected patterns clamp instead of failing") {
    ModemConfig cfg = make_modem_config(Scheme::aco_im, 16, 2, 4, 4);  // omega 4
    cfg.im.kappa = 2;
    validate_modem_config(cfg);
    REQUIRE(scheme_bit_budget(cfg).lambda1 == 2);

    cvec y(4, cplx{});
    y[2] = psk_point(1, 4, 3.0);
    y[3] = psk_point(2, 4, 3.0);
    const Sap sap = detect_sap_energy(y, 2);
    CHECK(sap == Sap{3, 4});  // rank 5, beyond the 4-word code book

    const DemodResult r = demodulate(y, sap, cfg);
    CHECK(r.bits_hat[0] == 1);
    CHECK(r.bits_hat[1] == 1);  // clamped to rank 3
    CHECK(r.x1_labels == std::vector<int>{1, 2});
}

TEST_CASE("noiseless round trips through the full receiver") {
    for (Scheme s : all_schemes()) {
        const ModemConfig cfg = make_modem_config(
            s, 32, 4, 4, 4, s == Scheme::hybrid_aco ? 4 : 0);
        const int lambda = scheme_bit_budget(cfg).total();
        const cvec h_flat(cfg.spectrum_length(), cplx{1.0, 0.0});
        Rng rng(derive_seed(99, static_cast<std::uint64_t>(s)));
        BitVec bits(lambda);
        for (int trial = 0; trial < 20; ++trial) {
            rng.random_bits(bits.data(), lambda);
            const TimeSymbol ts = transmit_symbol(bits, cfg);
            rvec y = ts.x_plus;
            for (double& v : y) v /= ts.norm_scale;  // ideal gain control
            const DemodResult dec = receive_symbol(y, cfg, h_flat);
            REQUIRE(dec.bits_hat.size() == bits.size());
            CHECK(dec.bits_hat == bits);
        }
    }
}

TEST_CASE("round trip through a dispersive channel with cyclic prefix") {
    const ModemConfig cfg = make_modem_config(Scheme::hybrid_aco, 32, 4, 4, 4);
    const ChannelSpec ch = ChannelSpec::ceiling_bounce(10e-9, cfg.sample_period());
    REQUIRE(ch.cp_length > 0);
    const cvec H = channel_frequency_response(ch.taps, cfg.spectrum_length());
    Rng rng(1234);
    BitVec bits(32);
    for (int trial = 0; trial < 20; ++trial) {
        rng.random_bits(bits.data(), 32);
        const TimeSymbol ts = transmit_symbol(bits, cfg);
        rvec y = apply_channel(ts.x_plus, ch.taps, ch.cp_length);
        for (double& v : y) v /= ts.norm_scale;
        CHECK(receive_symbol(y, cfg, H).bits_hat == bits);
    }
}

TEST_CASE("channel response length must match the spectrum") {
    const ModemConfig cfg = make_modem_config(Scheme::aco, 16, 1, 4, 4);
    const rvec y(16, 0.1);
    CHECK_THROWS_AS(receive_symbol(y, cfg, cvec(8, cplx{1.0, 0.0})),
                    std::invalid_argument);
}
