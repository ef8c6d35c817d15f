#include "homim/transmitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace homim {

FrequencyFrame assemble_frame(const BitVec& bits, const ModemConfig& cfg) {
    validate_modem_config(cfg);
    const BitBudget budget = scheme_bit_budget(cfg);
    if (static_cast<int>(bits.size()) != budget.total())
        throw std::invalid_argument("bit payload must have exactly " +
                                    std::to_string(budget.total()) + " bits, got " +
                                    std::to_string(bits.size()));

    const int omega = cfg.im.omega;
    const int half = cfg.n / 2 - 1;
    const bool aco = is_aco_family(cfg.scheme);
    FrequencyFrame frame;
    frame.x1.assign(half, cplx{});
    frame.x2.assign(half, cplx{});
    frame.combined.assign(half, cplx{});

    const std::uint8_t* p = bits.data();
    if (has_im_branch(cfg.scheme)) {
        frame.sap = sap_encode(p, cfg.im);
        p += budget.lambda1;
    }

    const int b1 = budget.lambda2 / std::max(cfg.im.kappa, 1);
    if (has_im_branch(cfg.scheme)) {
        for (int zeta : frame.sap) {
            int label = static_cast<int>(bits_to_uint(p, b1));
            p += b1;
            int gamma = aco ? 2 * zeta - 1 : zeta;
            frame.x1[gamma - 1] = psk_point(label, cfg.im.m1, cfg.pair.r1);
        }
    }

    if (has_plain_branch(cfg.scheme)) {
        const int b2 = budget.lambda3 / omega;
        for (int zeta = 1; zeta <= omega; ++zeta) {
            int label = static_cast<int>(bits_to_uint(p, b2));
            p += b2;
            int gamma = aco ? 2 * zeta - 1 : zeta;
            frame.x2[gamma - 1] = psk_point(label, cfg.im.m2, cfg.pair.r2);
        }
    }

    for (int i = 0; i < half; ++i) frame.combined[i] = frame.x1[i] + frame.x2[i];
    return frame;
}

cvec hermitian_zero_pad(const FrequencyFrame& frame, const ModemConfig& cfg) {
    const int ln = cfg.spectrum_length();
    cvec X(ln, cplx{});
    for (int gamma = 1; gamma <= cfg.n / 2 - 1; ++gamma) {
        X[gamma] = frame.combined[gamma - 1];
        X[ln - gamma] = std::conj(frame.combined[gamma - 1]);
    }
    return X;
}

TimeSymbol modulate(const cvec& padded, const ModemConfig& cfg) {
    const int ln = cfg.spectrum_length();
    if (static_cast<int>(padded.size()) != ln)
        throw std::invalid_argument("padded spectrum must have length L*N");
    double spec_energy = 0.0;
    for (const cplx& v : padded) spec_energy += std::norm(v);
    if (spec_energy <= 0.0)
        throw std::domain_error("all-zero frame cannot be normalized");

    // Parseval under the 1/LN-inverse convention: time energy of the
    // unscaled signal is spec_energy / LN, so unit energy needs
    // s = sqrt(LN / spec_energy).
    const double s = std::sqrt(static_cast<double>(ln) / spec_energy);
    cvec x = inverse_dft(padded);
    TimeSymbol ts;
    ts.norm_scale = s;
    ts.x_bp.resize(ln);
    for (int i = 0; i < ln; ++i) ts.x_bp[i] = s * x[i].real();
    return ts;
}

rvec unipolar_aco(const rvec& x_bp) {
    rvec out(x_bp.size());
    for (std::size_t i = 0; i < x_bp.size(); ++i) out[i] = std::max(x_bp[i], 0.0);
    return out;
}

rvec unipolar_dco(const rvec& x_bp, double bias_factor) {
    const double n = static_cast<double>(x_bp.size());
    double mean = 0.0;
    for (double v : x_bp) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : x_bp) var += (v - mean) * (v - mean);
    var /= n;
    const double bias = bias_factor * std::sqrt(var);
    rvec out(x_bp.size());
    for (std::size_t i = 0; i < x_bp.size(); ++i)
        out[i] = std::max(x_bp[i] + bias, 0.0);
    return out;
}

rvec lowpass_filter(const rvec& x, int alpha, const ModemConfig& cfg) {
    if (alpha < 0 || alpha > cfg.n / 2)
        throw std::invalid_argument("filter alpha must be in [0, N/2]");
    const int ln = cfg.spectrum_length();
    if (static_cast<int>(x.size()) != ln)
        throw std::invalid_argument("signal length must be L*N");
    const int edge = cfg.n / 2 + alpha - 1;  // highest kept |frequency|
    cvec X = forward_dft(cvec(x.begin(), x.end()));
    for (int sigma = 0; sigma < ln; ++sigma) {
        const int freq = std::min(sigma, ln - sigma);
        if (sigma != 0 && freq > edge) X[sigma] = cplx{};
    }
    cvec y = inverse_dft(X);
    rvec out(ln);
    for (int i = 0; i < ln; ++i) out[i] = y[i].real();
    return out;
}

double add_bias(const rvec& x_f, rvec& x_plus) {
    const double lowest = *std::min_element(x_f.begin(), x_f.end());
    const double beta = lowest < 0.0 ? -lowest : 0.0;
    x_plus.resize(x_f.size());
    for (std::size_t i = 0; i < x_f.size(); ++i) x_plus[i] = x_f[i] + beta;
    return beta;
}

TimeSymbol transmit_symbol(const BitVec& bits, const ModemConfig& cfg) {
    const FrequencyFrame frame = assemble_frame(bits, cfg);
    TimeSymbol ts = modulate(hermitian_zero_pad(frame, cfg), cfg);

    switch (cfg.scheme) {
        case Scheme::aco:
        case Scheme::aco_im:
            ts.x_c = unipolar_aco(ts.x_bp);
            ts.x_plus = ts.x_c;
            break;
        case Scheme::dco:
        case Scheme::dco_im: {
            ts.x_plus = unipolar_dco(ts.x_bp, cfg.dco_bias_factor);
            double mean = 0.0, var = 0.0;
            for (double v : ts.x_bp) mean += v;
            mean /= static_cast<double>(ts.x_bp.size());
            for (double v : ts.x_bp) var += (v - mean) * (v - mean);
            var /= static_cast<double>(ts.x_bp.size());
            ts.beta = cfg.dco_bias_factor * std::sqrt(var);
            break;
        }
        case Scheme::hybrid_aco: {
            ts.x_c = unipolar_aco(ts.x_bp);
            ts.x_f = lowpass_filter(ts.x_c, cfg.filter_alpha, cfg);
            ts.beta = add_bias(ts.x_f, ts.x_plus);
            break;
        }
    }

    double es = 0.0;
    for (double v : ts.x_plus) es += v * v;
    ts.es_elec = es;
    return ts;
}

}  // namespace homim
