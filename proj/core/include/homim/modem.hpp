#pragma once

#include <string>
#include <vector>

#include "homim/constellation.hpp"
#include "homim/mapping.hpp"

namespace homim {

/// The five supported unipolar conversions.  The *_im variants keep only the
/// index-modulated branch (inactive bins transmit nothing); hybrid_aco
/// superposes that branch on an always-on one and is the only scheme with a
/// transmit low-pass filter.
enum class Scheme {
    dco,
    aco,
    dco_im,
    aco_im,
    hybrid_aco,
};

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);
std::vector<Scheme> all_schemes();

/// ACO-family schemes use only odd bins and recover clipping's exact 1/2 with
/// a gain of 2; DCO-family schemes use every bin with a DC bias.
bool is_aco_family(Scheme s);
/// Schemes carrying index bits (a subcarrier activation pattern).
bool has_im_branch(Scheme s);
/// Schemes carrying an always-on point on every eligible bin.
bool has_plain_branch(Scheme s);
/// Schemes whose clipped signal is low-pass filtered before biasing.
bool is_filtered(Scheme s);

/// Eligible data bins: N/2-1 for DCO-family (every bin), N/4 for ACO-family
/// (odd bins only).
int eligible_bins(Scheme s, int n);

struct ModemConfig {
    int n = 32;  // subcarriers
    int l = 4;   // oversampling factor; spectrum length is l*n
    Scheme scheme = Scheme::hybrid_aco;
    ImConfig im;
    ConstellationPair pair;
    int filter_alpha = 0;           // in [0, n/2], hybrid only
    double dco_bias_factor = 3.0;   // bias in units of std(x), DCO-family only
    double symbol_period = 64e-9;   // T_s, seconds

    int spectrum_length() const { return l * n; }
    double sample_period() const { return symbol_period / spectrum_length(); }
};

/// Fully-populated config for a scheme: omega derived from (scheme, n),
/// kappa = kappa_approx for IM schemes and omega otherwise.
ModemConfig make_modem_config(Scheme s, int n, int l, int m1, int m2,
                              int filter_alpha = 0);

void validate_modem_config(const ModemConfig& cfg);

/// Bits per symbol actually carried under the scheme: pure plain schemes
/// zero the index branch, pure IM schemes zero the plain branch.
BitBudget scheme_bit_budget(const ModemConfig& cfg);

/// Spectrum indices gamma(zeta) for zeta = 1..omega: identity for
/// DCO-family, 2*zeta-1 for ACO-family.
std::vector<int> data_bins(const ModemConfig& cfg);

}  // namespace homim
