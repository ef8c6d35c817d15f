#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "homim/channel.hpp"
#include "homim/modem.hpp"

namespace homim {

/// A concrete channel realization for a run: FIR taps plus the cyclic-prefix
/// length used when applying them.  LOS is the single unit tap.
struct ChannelSpec {
    std::string name = "los";
    rvec taps{1.0};
    int cp_length = 0;

    static ChannelSpec los();
    /// Taps sampled at t_c for the given RMS delay spread; prefix sized to
    /// cover the given fraction of tap energy.
    static ChannelSpec ceiling_bounce(double delay_spread, double t_c,
                                      double cp_energy_fraction = 0.999);
    bool is_identity() const { return taps.size() == 1 && taps[0] == 1.0; }
};

/// Occupied baseband bandwidth: (N + 2*alpha - 1) / (2*T_s) for the filtered
/// hybrid, N/T_s for unfiltered ACO-family (clipping harmonics double the
/// band), N/(2*T_s) for DCO-family.
double baseband_bandwidth_hz(const ModemConfig& cfg);

/// Bits per symbol over bandwidth-time product, bits/s/Hz.
double spectral_efficiency(const ModemConfig& cfg);

struct StopRule {
    long long min_errors = 200;
    long long max_bits = 10'000'000;
};

struct BerResult {
    long long bits_sent = 0;
    long long bit_errors = 0;
    double ber = 0.0;
    double ebn0_db = 0.0;
    double std_error = 0.0;  // binomial standard error of the BER estimate
};

/// Ensemble-average sum of x_plus^2 over random payloads; the Eb/N0
/// calibration reference (Eb = T_c * mean_energy / lambda).
double mean_symbol_energy(const ModemConfig& cfg, int num_symbols,
                          std::uint64_t seed);

/// Transmit -> channel -> receive until min_errors or max_bits; deterministic
/// per seed.
BerResult ber_monte_carlo(const ModemConfig& cfg, const ChannelSpec& channel,
                          double ebn0_db, const StopRule& stop,
                          std::uint64_t seed);

struct UnreachableTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Eb/N0 needed to reach the target BER: 1 dB ascending bracket from lo_db,
/// then bisection to 0.1 dB.  Throws UnreachableTarget when the target is
/// not crossed by hi_db.
double required_ebn0(const ModemConfig& cfg, const ChannelSpec& channel,
                     double target_ber, std::uint64_t seed, double lo_db = 0.0,
                     double hi_db = 60.0, const StopRule& stop = {});

/// One output row; the CSV schema is the ordered field list below.  kappa 0
/// means the scheme has no index branch; NaN marks a value the scenario does
/// not produce (and, for required-Eb/N0 rows, an unreachable target).
struct SweepRecord {
    std::string scenario;
    std::string scheme;
    int n = 0;
    int l = 0;
    int m1 = 0;
    int m2 = 0;
    int kappa = 0;
    int alpha = 0;
    std::string channel = "-";
    double ebn0_db = 0.0;
    double ber = 0.0;
    double se = 0.0;
    std::uint64_t seed = 0;
};

/// Spectral efficiency across kappa (index-modulated schemes) and alpha
/// (hybrid); pure plain schemes yield one record.
std::vector<SweepRecord> se_sweep(const ModemConfig& base,
                                  const std::vector<int>& kappas,
                                  const std::vector<int>& alphas,
                                  std::uint64_t seed);

/// (spectral efficiency, required Eb/N0) per filter alpha; unreachable
/// targets record NaN instead of failing the sweep.
std::vector<SweepRecord> se_ee_tradeoff(const ModemConfig& base,
                                        const std::vector<int>& alphas,
                                        const ChannelSpec& channel,
                                        double target_ber, std::uint64_t seed,
                                        int jobs = 1, const StopRule& stop = {},
                                        double lo_db = 0.0, double hi_db = 60.0);

}  // namespace homim
