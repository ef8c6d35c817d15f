#include "homim/metrics.hpp"

#include <cmath>
#include <limits>

#include "homim/receiver.hpp"
#include "homim/rng.hpp"
#include "homim/transmitter.hpp"
#include "parallel.hpp"

namespace homim {
namespace {

constexpr std::uint64_t kCalibrationTag = 0x63616c6962ULL;
constexpr std::uint64_t kTrialTag = 0x747269616cULL;
constexpr std::uint64_t kSweepTag = 0x7377656570ULL;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

int csv_kappa(const ModemConfig& cfg) {
    return has_im_branch(cfg.scheme) ? cfg.im.kappa : 0;
}

SweepRecord base_record(const ModemConfig& cfg, std::uint64_t seed) {
    SweepRecord rec;
    rec.scheme = scheme_name(cfg.scheme);
    rec.n = cfg.n;
    rec.l = cfg.l;
    rec.m1 = cfg.im.m1;
    rec.m2 = cfg.im.m2;
    rec.kappa = csv_kappa(cfg);
    rec.alpha = cfg.filter_alpha;
    rec.seed = seed;
    return rec;
}

}  // namespace

ChannelSpec ChannelSpec::los() { return ChannelSpec{}; }

ChannelSpec ChannelSpec::ceiling_bounce(double delay_spread, double t_c,
                                        double cp_energy_fraction) {
    ChannelSpec ch;
    ch.name = "ceiling-bounce";
    ch.taps = ceiling_bounce_taps(CeilingBounceParams::from_delay_spread(delay_spread), t_c);
    ch.cp_length = default_cp_length(ch.taps, cp_energy_fraction);
    return ch;
}

double baseband_bandwidth_hz(const ModemConfig& cfg) {
    validate_modem_config(cfg);
    const double ts = cfg.symbol_period;
    switch (cfg.scheme) {
        case Scheme::hybrid_aco:
            return (cfg.n + 2.0 * cfg.filter_alpha - 1.0) / (2.0 * ts);
        case Scheme::aco:
        case Scheme::aco_im:
            return cfg.n / ts;  // unfiltered clipping harmonics double the band
        case Scheme::dco:
        case Scheme::dco_im:
            return cfg.n / (2.0 * ts);
    }
    throw std::invalid_argument("unknown scheme");
}

double spectral_efficiency(const ModemConfig& cfg) {
    const double lambda = scheme_bit_budget(cfg).total();
    return lambda / (baseband_bandwidth_hz(cfg) * cfg.symbol_period);
}

double mean_symbol_energy(const ModemConfig& cfg, int num_symbols, std::uint64_t seed) {
    if (num_symbols < 1) throw std::invalid_argument("num_symbols must be >= 1");
    const int lambda = scheme_bit_budget(cfg).total();
    Rng rng(seed);
    BitVec bits(lambda);
    double acc = 0.0;
    for (int i = 0; i < num_symbols; ++i) {
        rng.random_bits(bits.data(), lambda);
        acc += transmit_symbol(bits, cfg).es_elec;
    }
    return acc / static_cast<double>(num_symbols);
}

BerResult ber_monte_carlo(const ModemConfig& cfg, const ChannelSpec& channel,
                          double ebn0_db, const StopRule& stop, std::uint64_t seed) {
    validate_modem_config(cfg);
    if (stop.min_errors < 1 || stop.max_bits < 1)
        throw std::invalid_argument("stop criteria must be positive");
    const int lambda = scheme_bit_budget(cfg).total();
    const int ln = cfg.spectrum_length();

    // Per-sample noise variance from the Eb/N0 definition
    // Eb = T_c * E[sum x_plus^2] / lambda, sigma^2 = N0 / (2 T_c):
    // the sample period cancels.
    const double mean_energy =
        mean_symbol_energy(cfg, 1000, derive_seed(seed, kCalibrationTag));
    const double rho = std::pow(10.0, ebn0_db / 10.0);
    const double sigma2 = mean_energy / (2.0 * lambda * rho);
    const NoiseModel noise = NoiseModel::from_n0(2.0 * cfg.sample_period() * sigma2,
                                                 cfg.sample_period());

    const cvec H = channel_frequency_response(channel.taps, ln);
    Rng rng(derive_seed(seed, kTrialTag));
    BitVec bits(lambda);
    BerResult res;
    res.ebn0_db = ebn0_db;
    while (res.bit_errors < stop.min_errors && res.bits_sent < stop.max_bits) {
        rng.random_bits(bits.data(), lambda);
        const TimeSymbol ts = transmit_symbol(bits, cfg);
        rvec y = channel.is_identity()
                     ? ts.x_plus
                     : apply_channel(ts.x_plus, channel.taps, channel.cp_length);
        y = add_awgn(y, noise, rng);
        // Ideal automatic gain control: the receiver operates on the
        // nominal constellation geometry, so the transmit normalization
        // scalar is assumed known and undone before detection.
        for (double& v : y) v /= ts.norm_scale;
        const DemodResult dec = receive_symbol(y, cfg, H);
        for (int i = 0; i < lambda; ++i)
            res.bit_errors += bits[i] != dec.bits_hat[i];
        res.bits_sent += lambda;
    }
    res.ber = static_cast<double>(res.bit_errors) / static_cast<double>(res.bits_sent);
    res.std_error = std::sqrt(res.ber * (1.0 - res.ber) /
                              static_cast<double>(res.bits_sent));
    return res;
}

double required_ebn0(const ModemConfig& cfg, const ChannelSpec& channel,
                     double target_ber, std::uint64_t seed, double lo_db,
                     double hi_db, const StopRule& stop) {
    if (!(target_ber > 0.0 && target_ber < 0.5))
        throw std::invalid_argument("target BER must be in (0, 0.5)");
    if (hi_db <= lo_db) throw std::invalid_argument("hi_db must exceed lo_db");

    auto eval = [&](double db) {
        const std::uint64_t tag =
            static_cast<std::uint64_t>(std::llround(db * 100.0));
        return ber_monte_carlo(cfg, channel, db, stop, derive_seed(seed, tag)).ber;
    };

    // Coarse ascending scan in 1 dB steps until the target is crossed.
    double lo = lo_db;
    if (eval(lo) <= target_ber) return lo;
    double hi = lo;
    bool crossed = false;
    while (hi < hi_db) {
        hi = std::min(hi + 1.0, hi_db);
        if (eval(hi) <= target_ber) {
            crossed = true;
            break;
        }
        lo = hi;
    }
    if (!crossed)
        throw UnreachableTarget("BER target not reached by " + std::to_string(hi_db) +
                                " dB");

    // Bisect the 1 dB bracket down to 0.1 dB.
    while (hi - lo > 0.1) {
        const double mid = 0.5 * (lo + hi);
        if (eval(mid) <= target_ber)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<SweepRecord> se_sweep(const ModemConfig& base,
                                  const std::vector<int>& kappas,
                                  const std::vector<int>& alphas,
                                  std::uint64_t seed) {
    validate_modem_config(base);
    const std::vector<int> alpha_list =
        is_filtered(base.scheme) && !alphas.empty() ? alphas : std::vector<int>{base.filter_alpha};
    const std::vector<int> kappa_list =
        has_im_branch(base.scheme) && !kappas.empty() ? kappas : std::vector<int>{base.im.kappa};

    std::vector<SweepRecord> records;
    for (int alpha : alpha_list) {
        for (int kappa : kappa_list) {
            ModemConfig cfg = base;
            cfg.filter_alpha = is_filtered(base.scheme) ? alpha : 0;
            cfg.im.kappa = has_im_branch(base.scheme) ? kappa : base.im.kappa;
            validate_modem_config(cfg);
            SweepRecord rec = base_record(cfg, seed);
            rec.scenario = "se-sweep";
            rec.ebn0_db = kNan;
            rec.ber = kNan;
            rec.se = spectral_efficiency(cfg);
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<SweepRecord> se_ee_tradeoff(const ModemConfig& base,
                                        const std::vector<int>& alphas,
                                        const ChannelSpec& channel,
                                        double target_ber, std::uint64_t seed,
                                        int jobs, const StopRule& stop,
                                        double lo_db, double hi_db) {
    validate_modem_config(base);
    if (!is_filtered(base.scheme))
        throw std::invalid_argument("se-ee trade-off applies to the filtered hybrid scheme");
    if (alphas.empty()) throw std::invalid_argument("alpha list must be nonempty");

    std::vector<SweepRecord> records(alphas.size());
    detail::parallel_for(static_cast<int>(alphas.size()), jobs, [&](int i) {
        ModemConfig cfg = base;
        cfg.filter_alpha = alphas[i];
        validate_modem_config(cfg);
        SweepRecord rec = base_record(cfg, seed);
        rec.scenario = "se-ee";
        rec.channel = channel.name;
        rec.ber = target_ber;
        rec.se = spectral_efficiency(cfg);
        try {
            rec.ebn0_db = required_ebn0(
                cfg, channel, target_ber,
                derive_seed(seed, kSweepTag, static_cast<std::uint64_t>(alphas[i])),
                lo_db, hi_db, stop);
        } catch (const UnreachableTarget&) {
            rec.ebn0_db = kNan;
        }
        records[i] = std::move(rec);
    });
    return records;
}

}  // namespace homim
