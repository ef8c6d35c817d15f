#pragma once

#include "homim/dsp.hpp"
#include "homim/mapping.hpp"
#include "homim/modem.hpp"

namespace homim {

/// Frequency-domain frame over the data bins gamma in {1..N/2-1}; index 0 of
/// each branch vector is gamma = 1.  Bins a scheme does not use stay zero
/// (even gamma for ACO-family, inactive bins for pure IM schemes).
struct FrequencyFrame {
    cvec x1;        // index-modulated branch
    cvec x2;        // always-on branch
    cvec combined;  // x1 + x2
    Sap sap;        // active pattern; empty for pure plain schemes
};

/// Per-symbol time-domain stages.  Stages a scheme skips stay empty:
/// ACO-family fills x_c, hybrid additionally x_f, DCO-family goes straight
/// from x_bp to x_plus.
struct TimeSymbol {
    rvec x_bp;    // bipolar, unit total energy
    rvec x_c;     // zero-clipped
    rvec x_f;     // low-pass filtered
    rvec x_plus;  // nonnegative transmit signal
    double beta = 0.0;        // additive bias
    double es_elec = 0.0;     // sum of x_plus^2 (multiply by T_c for joules)
    double norm_scale = 0.0;  // scalar applied to reach unit energy
};

/// Bits -> branch spectra.  Parse order is lambda1 | lambda2 | lambda3:
/// index bits first, then active-bin points by ascending active index, then
/// always-on points by ascending zeta.
FrequencyFrame assemble_frame(const BitVec& bits, const ModemConfig& cfg);

/// Frame -> length-LN spectrum: combined values on sigma+, conjugates on
/// sigma-, zero elsewhere (DC, Nyquist, padding).
cvec hermitian_zero_pad(const FrequencyFrame& frame, const ModemConfig& cfg);

/// Padded spectrum -> real bipolar signal scaled to unit total energy.
TimeSymbol modulate(const cvec& padded, const ModemConfig& cfg);

/// Zero clipping; exact on ACO-family signals (anti-symmetry puts all
/// clipping distortion on even bins and halves data bins).
rvec unipolar_aco(const rvec& x_bp);

/// Bias by k standard deviations, then clip the residual excursions.
rvec unipolar_dco(const rvec& x_bp, double bias_factor);

/// Brick-wall spectral mask keeping bins |sigma| <= N/2 + alpha - 1 plus DC:
/// N + 2*alpha - 1 bins total when L >= 2.
rvec lowpass_filter(const rvec& x, int alpha, const ModemConfig& cfg);

/// Shift by |min| so the signal is nonnegative; returns the applied bias.
double add_bias(const rvec& x_f, rvec& x_plus);

/// Full per-scheme pipeline; fills every stage the scheme uses and records
/// the electrical symbol energy.
TimeSymbol transmit_symbol(const BitVec& bits, const ModemConfig& cfg);

}  // namespace homim
