#include "homim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace homim {

CeilingBounceParams CeilingBounceParams::from_delay_spread(double delay_spread) {
    if (delay_spread <= 0.0)
        throw std::invalid_argument("rms delay spread must be positive");
    CeilingBounceParams p;
    p.rms_delay_spread = delay_spread;
    p.rho = 12.0 * delay_spread / std::sqrt(13.0 / 11.0);
    return p;
}

CeilingBounceParams CeilingBounceParams::from_ceiling_height(double height_m, double c) {
    if (height_m <= 0.0 || c <= 0.0)
        throw std::invalid_argument("height and c must be positive");
    CeilingBounceParams p;
    p.rho = 2.0 * height_m / c;
    p.rms_delay_spread = p.rho / 12.0 * std::sqrt(13.0 / 11.0);
    return p;
}

NoiseModel NoiseModel::from_n0(double n0, double t_c) {
    if (n0 < 0.0) throw std::invalid_argument("N0 must be nonnegative");
    if (t_c <= 0.0) throw std::invalid_argument("sample period must be positive");
    NoiseModel m;
    m.n0 = n0;
    m.t_c = t_c;
    m.sigma2 = n0 / (2.0 * t_c);
    return m;
}

rvec ceiling_bounce_taps(const CeilingBounceParams& params, double t_c) {
    if (params.rho <= 0.0) throw std::invalid_argument("rho must be positive");
    if (t_c <= 0.0) throw std::invalid_argument("sample period must be positive");
    const double rho = params.rho;
    // Shape normalized so the analytic integral of h is exactly 1; truncate
    // where the analytic cumulative 1 - (rho/(t+rho))^6 reaches 99.99%.
    rvec taps;
    double acc = 0.0;
    for (long i = 0;; ++i) {
        const double t = static_cast<double>(i) * t_c;
        const double tap = 6.0 * std::pow(rho, 6) * t_c / std::pow(t + rho, 7);
        taps.push_back(tap);
        acc += tap;
        if (1.0 - std::pow(rho / (t + rho), 6) >= 0.9999) break;
        if (i > 50'000'000)
            throw std::runtime_error("ceiling bounce taps did not converge");
    }
    for (double& tap : taps) tap /= acc;
    return taps;
}

rvec apply_channel(const rvec& x, const rvec& taps, int cp_length) {
    if (cp_length < 0) throw std::invalid_argument("cp_length must be >= 0");
    if (taps.empty()) throw std::invalid_argument("taps must be nonempty");
    const int b = static_cast<int>(x.size());
    const int t = static_cast<int>(taps.size());
    rvec ext(cp_length + b);
    for (int i = 0; i < cp_length; ++i) {
        long idx = (static_cast<long>(b) - cp_length + i) % b;  // cyclic for cp > block
        if (idx < 0) idx += b;
        ext[i] = x[idx];
    }
    for (int i = 0; i < b; ++i) ext[cp_length + i] = x[i];

    rvec out(b, 0.0);
    for (int k = 0; k < b; ++k) {
        const int pos = cp_length + k;
        const int jmax = std::min(t - 1, pos);
        double acc = 0.0;
        for (int j = 0; j <= jmax; ++j) acc += taps[j] * ext[pos - j];
        out[k] = acc;
    }
    return out;
}

rvec add_awgn(const rvec& y, const NoiseModel& noise, Rng& rng) {
    if (noise.sigma2 == 0.0) return y;
    const double sigma = std::sqrt(noise.sigma2);
    rvec out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + sigma * rng.gaussian();
    return out;
}

rvec add_awgn(const rvec& y, const NoiseModel& noise, std::uint64_t seed) {
    Rng rng(seed);
    return add_awgn(y, noise, rng);
}

cvec channel_frequency_response(const rvec& taps, int ln) {
    if (taps.empty()) throw std::invalid_argument("taps must be nonempty");
    cvec folded(ln, cplx{});
    for (std::size_t i = 0; i < taps.size(); ++i)
        folded[i % ln] += taps[i];
    return forward_dft(folded);
}

int default_cp_length(const rvec& taps, double energy_fraction) {
    double total = 0.0;
    for (double tap : taps) total += tap * tap;
    if (total <= 0.0) return 0;
    double acc = 0.0;
    for (std::size_t i = 0; i < taps.size(); ++i) {
        acc += taps[i] * taps[i];
        if (acc >= energy_fraction * total) return static_cast<int>(i);
    }
    return static_cast<int>(taps.size()) - 1;
}

}  // namespace homim
