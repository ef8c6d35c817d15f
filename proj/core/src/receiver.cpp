#include "homim/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "homim/constellation.hpp"

namespace homim {
namespace {

const SuperpositionLut& cached_lut(const ConstellationPair& pair) {
    thread_local std::map<std::tuple<int, int, double, double>, SuperpositionLut> cache;
    const auto key = std::make_tuple(pair.m1, pair.m2, pair.r1, pair.r2);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_lut(pair)).first;
    return it->second;
}

}  // namespace

ExtractionMap ExtractionMap::make(const ModemConfig& cfg) {
    ExtractionMap map;
    map.gain = is_aco_family(cfg.scheme) ? 2.0 : 1.0;
    map.gamma = data_bins(cfg);
    return map;
}

cvec equalize_zf(const cvec& Y, const cvec& H, const std::vector<int>& bins) {
    if (Y.size() != H.size())
        throw std::invalid_argument("spectrum and channel response lengths differ");
    cvec out = Y;
    for (int b : bins) {
        if (std::abs(H[b]) < 1e-12)
            throw std::runtime_error("singular channel: |H| < 1e-12 at data bin " +
                                     std::to_string(b));
        out[b] = Y[b] / H[b];
    }
    return out;
}

cvec extract(const cvec& y_hat, const ExtractionMap& map, const ModemConfig& cfg) {
    cvec y_dot(cfg.im.omega);
    for (int zeta = 1; zeta <= cfg.im.omega; ++zeta)
        y_dot[zeta - 1] = map.gain * y_hat[map.gamma[zeta - 1]];
    return y_dot;
}

Sap detect_sap_energy(const cvec& y_dot, int kappa) {
    const int omega = static_cast<int>(y_dot.size());
    if (kappa < 1 || kappa > omega)
        throw std::invalid_argument("kappa must be in [1, omega]");
    std::vector<int> order(omega);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> energy(omega);
    for (int i = 0; i < omega; ++i) energy[i] = std::norm(y_dot[i]);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (energy[a] != energy[b]) return energy[a] > energy[b];
        return a < b;
    });
    Sap sap(order.begin(), order.begin() + kappa);
    for (int& zeta : sap) ++zeta;
    std::sort(sap.begin(), sap.end());
    return sap;
}

DemodResult demodulate(const cvec& y_dot, const Sap& sap_hat, const ModemConfig& cfg) {
    const BitBudget budget = scheme_bit_budget(cfg);
    const int omega = cfg.im.omega;
    DemodResult res;
    res.sap_hat = sap_hat;
    res.bits_hat.assign(budget.total(), 0);
    std::uint8_t* p = res.bits_hat.data();

    if (!has_im_branch(cfg.scheme)) {
        // Plain O-OFDM: every bin carries a ring-r2 point.
        const int b2 = budget.lambda3 / omega;
        res.x2_labels.resize(omega);
        for (int zeta = 1; zeta <= omega; ++zeta) {
            int label = detect_psk(y_dot[zeta - 1], cfg.im.m2, cfg.pair.r2);
            res.x2_labels[zeta - 1] = label;
            uint_to_bits(label, p + (zeta - 1) * b2, b2);
        }
        return res;
    }

    if (static_cast<int>(sap_hat.size()) != cfg.im.kappa)
        throw std::invalid_argument("detected sap size must equal kappa");
    sap_decode(sap_hat, cfg.im, p);
    p += budget.lambda1;
    const int b1 = budget.lambda2 / cfg.im.kappa;

    if (!has_plain_branch(cfg.scheme)) {
        // Pure IM: active bins carry ring-r1 points, inactive bins nothing.
        res.x1_labels.resize(cfg.im.kappa);
        for (std::size_t k = 0; k < sap_hat.size(); ++k) {
            int label = detect_psk(y_dot[sap_hat[k] - 1], cfg.im.m1, cfg.pair.r1);
            res.x1_labels[k] = label;
            uint_to_bits(label, p + k * b1, b1);
        }
        return res;
    }

    // Hybrid: table lookup on active bins, ring-r2 decisions elsewhere.
    // The table decision is against the nominal point geometry, so the
    // incoming waveform must already be gain-normalized (the harnesses
    // undo the transmit normalization scalar before this chain, modelling
    // an ideal automatic gain control).
    const int b2 = budget.lambda3 / omega;
    std::uint8_t* p3 = p + budget.lambda2;
    const SuperpositionLut& lut = cached_lut(cfg.pair);
    std::vector<char> active(omega + 1, 0);
    for (int zeta : sap_hat) active[zeta] = 1;
    res.x1_labels.resize(cfg.im.kappa);
    res.x2_labels.resize(omega);
    std::size_t k = 0;
    for (int zeta = 1; zeta <= omega; ++zeta) {
        if (active[zeta]) {
            auto [x1, x2] = detect_lut(y_dot[zeta - 1], lut);
            res.x1_labels[k] = x1;
            res.x2_labels[zeta - 1] = x2;
            uint_to_bits(x1, p + k * b1, b1);
            uint_to_bits(x2, p3 + (zeta - 1) * b2, b2);
            ++k;
        } else {
            int label = detect_psk(y_dot[zeta - 1], cfg.im.m2, cfg.pair.r2);
            res.x2_labels[zeta - 1] = label;
            uint_to_bits(label, p3 + (zeta - 1) * b2, b2);
        }
    }
    return res;
}

DemodResult receive_symbol(const rvec& y, const ModemConfig& cfg, const cvec& H) {
    cvec Y = forward_dft(cvec(y.begin(), y.end()));
    const std::vector<int> bins = data_bins(cfg);
    cvec y_hat = equalize_zf(Y, H, bins);
    const ExtractionMap map = ExtractionMap::make(cfg);
    cvec y_dot = extract(y_hat, map, cfg);
    Sap sap_hat;
    if (has_im_branch(cfg.scheme))
        sap_hat = detect_sap_energy(y_dot, cfg.im.kappa);
    return demodulate(y_dot, sap_hat, cfg);
}

}  // namespace homim
