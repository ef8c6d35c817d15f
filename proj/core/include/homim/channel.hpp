#pragma once

#include <cstdint>

#include "homim/dsp.hpp"
#include "homim/rng.hpp"

namespace homim {

/// Diffuse indoor optical impulse response h(t) proportional to
/// (t + rho)^-7 for t >= 0, parameterized by its RMS delay spread
/// delay_spread = (rho/12) * sqrt(13/11).  Path loss is normalized to 1.
struct CeilingBounceParams {
    double rms_delay_spread = 0.0;  // seconds
    double rho = 0.0;               // seconds, shape parameter

    static CeilingBounceParams from_delay_spread(double delay_spread);
    /// rho = 2H/c for a ceiling at height H above transceiver plane.
    static CeilingBounceParams from_ceiling_height(double height_m,
                                                   double c = 299792458.0);
};

/// Sampled-AWGN calibration: a mono-lateral density N0 over sample period
/// T_c gives per-sample variance N0 / (2 T_c).
struct NoiseModel {
    double n0 = 0.0;        // mono-lateral spectral density
    double t_c = 1.0;       // sample period, seconds
    double sigma2 = 0.0;    // per-sample variance

    static NoiseModel from_n0(double n0, double t_c);
};

/// Sampled taps h[i] = h(i*T_c)*T_c, truncated once their running sum
/// reaches 99.99% of the analytic integral, then renormalized to sum 1.
rvec ceiling_bounce_taps(const CeilingBounceParams& params, double t_c);

/// Cyclic-prefix transmission through an FIR channel: prepends the block's
/// last cp_length samples (cyclically for cp_length > block size), convolves
/// linearly, and returns the samples where the prefix has been discarded.
/// Equals circular convolution once cp_length >= tap count - 1.
rvec apply_channel(const rvec& x, const rvec& taps, int cp_length);

/// Adds white Gaussian noise of the model's per-sample variance.
rvec add_awgn(const rvec& y, const NoiseModel& noise, Rng& rng);
rvec add_awgn(const rvec& y, const NoiseModel& noise, std::uint64_t seed);

/// Per-bin response for circular (cyclic-prefixed) transmission: taps folded
/// modulo LN, then transformed.
cvec channel_frequency_response(const rvec& taps, int ln);

/// Smallest prefix covering the given fraction (default 99.9%) of the taps'
/// squared sum.
int default_cp_length(const rvec& taps, double energy_fraction = 0.999);

}  // namespace homim
