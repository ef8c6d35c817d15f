#include "homim/modem.hpp"

#include <stdexcept>

namespace homim {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::dco: return "dco";
        case Scheme::aco: return "aco";
        case Scheme::dco_im: return "dco-im";
        case Scheme::aco_im: return "aco-im";
        case Scheme::hybrid_aco: return "hybrid-aco";
    }
    throw std::invalid_argument("unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
    for (Scheme s : all_schemes())
        if (name == scheme_name(s)) return s;
    throw std::invalid_argument("unknown scheme '" + name +
                                "' (expected dco, aco, dco-im, aco-im or hybrid-aco)");
}

std::vector<Scheme> all_schemes() {
    return {Scheme::dco, Scheme::aco, Scheme::dco_im, Scheme::aco_im,
            Scheme::hybrid_aco};
}

bool is_aco_family(Scheme s) {
    return s == Scheme::aco || s == Scheme::aco_im || s == Scheme::hybrid_aco;
}

bool has_im_branch(Scheme s) {
    return s == Scheme::dco_im || s == Scheme::aco_im || s == Scheme::hybrid_aco;
}

bool has_plain_branch(Scheme s) {
    return s == Scheme::dco || s == Scheme::aco || s == Scheme::hybrid_aco;
}

bool is_filtered(Scheme s) { return s == Scheme::hybrid_aco; }

int eligible_bins(Scheme s, int n) {
    return is_aco_family(s) ? n / 4 : n / 2 - 1;
}

ModemConfig make_modem_config(Scheme s, int n, int l, int m1, int m2,
                              int filter_alpha) {
    ModemConfig cfg;
    cfg.n = n;
    cfg.l = l;
    cfg.scheme = s;
    cfg.im.omega = eligible_bins(s, n);
    cfg.im.m1 = m1;
    cfg.im.m2 = m2;
    cfg.im.kappa = has_im_branch(s) ? kappa_approx(m1, cfg.im.omega) : cfg.im.omega;
    cfg.pair = ConstellationPair::make(m1, m2);
    cfg.filter_alpha = is_filtered(s) ? filter_alpha : 0;
    validate_modem_config(cfg);
    return cfg;
}

void validate_modem_config(const ModemConfig& cfg) {
    auto pow2 = [](int v) { return v > 0 && (v & (v - 1)) == 0; };
    if (!pow2(cfg.n) || cfg.n < 8)
        throw std::invalid_argument("N must be a power of two >= 8");
    if (!pow2(cfg.l))
        throw std::invalid_argument("L must be a power of two >= 1");
    if (cfg.im.omega != eligible_bins(cfg.scheme, cfg.n))
        throw std::invalid_argument("omega inconsistent with scheme and N");
    if (cfg.im.kappa < 1 || cfg.im.kappa > cfg.im.omega)
        throw std::invalid_argument("kappa must be in [1, omega]");
    if (cfg.filter_alpha != 0 && !is_filtered(cfg.scheme))
        throw std::invalid_argument("filter_alpha applies only to hybrid-aco");
    if (cfg.filter_alpha < 0 || cfg.filter_alpha > cfg.n / 2)
        throw std::invalid_argument("filter_alpha must be in [0, N/2]");
    if (cfg.symbol_period <= 0.0)
        throw std::invalid_argument("symbol_period must be positive");
    if (cfg.pair.m1 != cfg.im.m1 || cfg.pair.m2 != cfg.im.m2)
        throw std::invalid_argument("constellation cardinalities must match im config");
    bit_budget(cfg.im);  // validates m1, m2, omega, kappa ranges
}

BitBudget scheme_bit_budget(const ModemConfig& cfg) {
    BitBudget full = bit_budget(cfg.im);
    BitBudget b;
    if (has_im_branch(cfg.scheme)) {
        b.lambda1 = full.lambda1;
        b.lambda2 = full.lambda2;
    }
    if (has_plain_branch(cfg.scheme)) b.lambda3 = full.lambda3;
    return b;
}

std::vector<int> data_bins(const ModemConfig& cfg) {
    const bool aco = is_aco_family(cfg.scheme);
    std::vector<int> bins;
    bins.reserve(cfg.im.omega);
    for (int zeta = 1; zeta <= cfg.im.omega; ++zeta)
        bins.push_back(aco ? 2 * zeta - 1 : zeta);
    return bins;
}

}  // namespace homim
