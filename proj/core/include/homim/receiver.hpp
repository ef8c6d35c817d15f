#pragma once

#include "homim/dsp.hpp"
#include "homim/mapping.hpp"
#include "homim/modem.hpp"

namespace homim {

/// Receiver-side bin bookkeeping: the gamma(zeta) index map shared with the
/// transmitter and the gain undoing the scheme's unipolar conversion (2 for
/// ACO-family, whose clipping scales data bins by exactly 1/2; 1 otherwise).
struct ExtractionMap {
    double gain = 1.0;
    std::vector<int> gamma;  // gamma[zeta - 1]

    static ExtractionMap make(const ModemConfig& cfg);
};

struct DemodResult {
    Sap sap_hat;     // empty for pure plain schemes
    BitVec bits_hat; // length lambda1 + lambda2 + lambda3
    std::vector<int> x1_labels;  // active-bin decisions, ascending active index
    std::vector<int> x2_labels;  // always-on decisions, ascending zeta
};

/// Per-bin zero forcing on the given bins; other bins pass through.
cvec equalize_zf(const cvec& Y, const cvec& H, const std::vector<int>& bins);

/// Gathers gain * Y_hat[gamma(zeta)] for zeta = 1..omega.
cvec extract(const cvec& y_hat, const ExtractionMap& map, const ModemConfig& cfg);

/// Indices of the kappa largest energies |y_dot[zeta]|^2, ascending; ties
/// resolve toward the lower zeta.
Sap detect_sap_energy(const cvec& y_dot, int kappa);

/// Branch detection and bit reassembly in the transmitter's parse order.
/// Single-ring decisions are angle-only and therefore scale-free; the
/// hybrid's two-ring table lookup instead assumes y_dot sits at the nominal
/// point geometry (see receive_symbol).
DemodResult demodulate(const cvec& y_dot, const Sap& sap_hat, const ModemConfig& cfg);

/// Full pipeline: forward transform, zero forcing, extraction, activation
/// detection, demodulation.  Expects a gain-normalized waveform: the
/// harnesses divide out the known transmit normalization scalar first
/// (ideal automatic gain control), so data bins recover the nominal
/// constellation points on noiseless input.
DemodResult receive_symbol(const rvec& y, const ModemConfig& cfg, const cvec& H);

}  // namespace homim
