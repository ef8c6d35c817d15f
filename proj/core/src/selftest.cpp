#include "homim/selftest.hpp"

#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>

#include "homim/channel.hpp"
#include "homim/metrics.hpp"
#include "homim/receiver.hpp"
#include "homim/rng.hpp"
#include "homim/transmitter.hpp"

namespace homim {
namespace {

constexpr std::uint64_t kSeed = 0x73656c6674657374ULL;

struct Collector {
    std::vector<SelftestCheck> checks;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

std::vector<ModemConfig> grid_configs() {
    std::vector<ModemConfig> cfgs;
    for (Scheme scheme : all_schemes()) {
        for (int n : {16, 32, 64}) {
            for (int l : {1, 2, 4}) {
                if (is_filtered(scheme)) {
                    for (int alpha : {0, n / 4, n / 2})
                        cfgs.push_back(make_modem_config(scheme, n, l, 4, 4, alpha));
                } else {
                    cfgs.push_back(make_modem_config(scheme, n, l, 4, 4));
                }
            }
        }
    }
    return cfgs;
}

void check_noiseless_round_trip(Collector& out) {
    long long mismatches = 0;
    long long bits_total = 0;
    std::string first_bad;
    for (const ModemConfig& cfg : grid_configs()) {
        const int lambda = scheme_bit_budget(cfg).total();
        const cvec h_flat(cfg.spectrum_length(), cplx{1.0, 0.0});
        Rng rng(derive_seed(kSeed, 1, static_cast<std::uint64_t>(cfg.n),
                            static_cast<std::uint64_t>(cfg.l * 1000 + cfg.filter_alpha)));
        BitVec bits(lambda);
        long long here = 0;
        for (int trial = 0; trial < 50; ++trial) {
            rng.random_bits(bits.data(), lambda);
            const TimeSymbol ts = transmit_symbol(bits, cfg);
            rvec y = ts.x_plus;
            for (double& v : y) v /= ts.norm_scale;  // ideal AGC
            const DemodResult dec = receive_symbol(y, cfg, h_flat);
            for (int i = 0; i < lambda; ++i) here += bits[i] != dec.bits_hat[i];
            bits_total += lambda;
        }
        mismatches += here;
        if (here != 0 && first_bad.empty()) {
            std::ostringstream os;
            os << scheme_name(cfg.scheme) << " N=" << cfg.n << " L=" << cfg.l
               << " alpha=" << cfg.filter_alpha;
            first_bad = os.str();
        }
    }
    std::ostringstream detail;
    detail << mismatches << "/" << bits_total << " bit errors";
    if (!first_bad.empty()) detail << " (first at " << first_bad << ")";
    out.add("noiseless-round-trip", mismatches == 0, detail.str());
}

void check_time_domain_invariants(Collector& out) {
    double worst_antisym = 0.0;
    double worst_energy = 0.0;
    double worst_halving = 0.0;
    double worst_bin_ratio = 0.0;
    for (Scheme scheme : {Scheme::aco, Scheme::aco_im, Scheme::hybrid_aco}) {
        const ModemConfig cfg = make_modem_config(scheme, 32, 4, 4, 4);
        const int lambda = scheme_bit_budget(cfg).total();
        const int ln = cfg.spectrum_length();
        Rng rng(derive_seed(kSeed, 2, static_cast<std::uint64_t>(scheme)));
        BitVec bits(lambda);
        for (int trial = 0; trial < 200; ++trial) {
            rng.random_bits(bits.data(), lambda);
            const FrequencyFrame frame = assemble_frame(bits, cfg);
            const TimeSymbol ts = modulate(hermitian_zero_pad(frame, cfg), cfg);

            double energy = 0.0;
            for (double v : ts.x_bp) energy += v * v;
            worst_energy = std::max(worst_energy, std::abs(energy - 1.0));

            for (int i = 0; i < ln / 2; ++i)
                worst_antisym =
                    std::max(worst_antisym, std::abs(ts.x_bp[i] + ts.x_bp[i + ln / 2]));

            const rvec clipped = unipolar_aco(ts.x_bp);
            double clipped_energy = 0.0;
            for (double v : clipped) clipped_energy += v * v;
            worst_halving = std::max(worst_halving, std::abs(clipped_energy - 0.5 * energy));

            const cvec spec = forward_dft(cvec(clipped.begin(), clipped.end()));
            const cvec orig = forward_dft(cvec(ts.x_bp.begin(), ts.x_bp.end()));
            for (int bin : data_bins(cfg)) {
                const cplx expect = 0.5 * orig[bin];
                worst_bin_ratio = std::max(worst_bin_ratio, std::abs(spec[bin] - expect));
            }
        }
    }
    {
        // DCO-family unit energy too.
        for (Scheme scheme : {Scheme::dco, Scheme::dco_im}) {
            const ModemConfig cfg = make_modem_config(scheme, 32, 4, 4, 4);
            const int lambda = scheme_bit_budget(cfg).total();
            Rng rng(derive_seed(kSeed, 3, static_cast<std::uint64_t>(scheme)));
            BitVec bits(lambda);
            for (int trial = 0; trial < 100; ++trial) {
                rng.random_bits(bits.data(), lambda);
                const TimeSymbol ts =
                    modulate(hermitian_zero_pad(assemble_frame(bits, cfg), cfg), cfg);
                double energy = 0.0;
                for (double v : ts.x_bp) energy += v * v;
                worst_energy = std::max(worst_energy, std::abs(energy - 1.0));
            }
        }
    }
    std::ostringstream d1;
    d1 << "max |x(l)+x(l+LN/2)| = " << worst_antisym;
    out.add("aco-anti-symmetry", worst_antisym < 1e-12, d1.str());
    std::ostringstream d2;
    d2 << "max |energy-1| = " << worst_energy;
    out.add("unit-energy-normalization", worst_energy < 1e-9, d2.str());
    std::ostringstream d3;
    d3 << "max |clip energy - half| = " << worst_halving
       << ", max data-bin deviation = " << worst_bin_ratio;
    out.add("clipping-halving", worst_halving < 1e-9 && worst_bin_ratio < 1e-9, d3.str());
}

void check_filter_idempotence(Collector& out) {
    const ModemConfig cfg = make_modem_config(Scheme::hybrid_aco, 32, 4, 4, 4);
    const int lambda = scheme_bit_budget(cfg).total();
    Rng rng(derive_seed(kSeed, 4));
    BitVec bits(lambda);
    double worst = 0.0;
    for (int alpha : {0, 8, 16}) {
        for (int trial = 0; trial < 50; ++trial) {
            rng.random_bits(bits.data(), lambda);
            const TimeSymbol ts =
                modulate(hermitian_zero_pad(assemble_frame(bits, cfg), cfg), cfg);
            const rvec once = lowpass_filter(unipolar_aco(ts.x_bp), alpha, cfg);
            const rvec twice = lowpass_filter(once, alpha, cfg);
            for (std::size_t i = 0; i < once.size(); ++i)
                worst = std::max(worst, std::abs(once[i] - twice[i]));
        }
    }
    std::ostringstream os;
    os << "max |F(F(x)) - F(x)| = " << worst;
    out.add("filter-idempotence", worst < 1e-12, os.str());
}

void check_sap_bijection(Collector& out) {
    long long failures = 0;
    long long cases = 0;
    for (int omega = 1; omega <= 16; ++omega) {
        for (int kappa = 1; kappa <= omega; ++kappa) {
            ImConfig im{omega, kappa, 4, 4};
            const int lambda1 = bit_budget(im).lambda1;
            const std::uint64_t limit = std::uint64_t{1} << lambda1;
            BitVec bits(lambda1);
            BitVec back(lambda1);
            for (std::uint64_t r = 0; r < limit; ++r) {
                uint_to_bits(r, bits.data(), lambda1);
                const Sap sap = sap_encode(bits.data(), im);
                sap_decode(sap, im, back.data());
                ++cases;
                if (bits != back) ++failures;
            }
        }
    }
    std::ostringstream os;
    os << failures << "/" << cases << " round-trip failures";
    out.add("sap-bijection", failures == 0, os.str());
}

void check_lut_table(Collector& out) {
    const SuperpositionLut lut = build_lut(ConstellationPair::make(4, 4));
    // Row-major (x2, x1) sums of P1 = {+3,+3j,-3j,-3} and P2 = {+1,+1j,-1j,-1}.
    const cplx expected[16] = {
        {4, 0},  {1, 3},  {1, -3},  {-2, 0},
        {3, 1},  {0, 4},  {0, -2},  {-3, 1},
        {3, -1}, {0, 2},  {0, -4},  {-3, -1},
        {2, 0},  {-1, 3}, {-1, -3}, {-4, 0},
    };
    bool pass = lut.entries.size() == 16;
    double worst = 0.0;
    for (int t = 0; pass && t < 16; ++t)
        worst = std::max(worst, std::abs(lut.entries[t].point - expected[t]));
    pass = pass && worst < 1e-12;
    bool detect_ok = true;
    for (const auto& e : lut.entries) {
        auto [x1, x2] = detect_lut(e.point, lut);
        detect_ok = detect_ok && x1 == e.x1_index && x2 == e.x2_index;
    }
    std::ostringstream os;
    os << "max table deviation = " << worst
       << (detect_ok ? ", self-detection exact" : ", self-detection BROKEN");
    out.add("superposition-table", pass && detect_ok, os.str());
}

void check_awgn_calibration(Collector& out) {
    const double t_c = 0.5e-9;
    const NoiseModel noise = NoiseModel::from_n0(4.0 * t_c, t_c);  // sigma2 = 2
    Rng rng(derive_seed(kSeed, 5));
    const int n = 1'000'000;
    const rvec zeros(n, 0.0);
    const rvec noisy = add_awgn(zeros, noise, rng);
    double mean = 0.0;
    for (double v : noisy) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : noisy) var += (v - mean) * (v - mean);
    var /= n;
    const double rel = std::abs(var - noise.sigma2) / noise.sigma2;
    std::ostringstream os;
    os << "sample variance off by " << rel * 100.0 << "%";
    out.add("awgn-variance", rel < 0.01, os.str());
}

void check_ceiling_bounce(Collector& out) {
    const double target = 10e-9;
    const auto params = CeilingBounceParams::from_delay_spread(target);
    const double t_c = target / 40.0;
    const rvec taps = ceiling_bounce_taps(params, t_c);

    double sum = 0.0;
    for (double tap : taps) sum += tap;

    // Intensity-weighted second moment of the tap powers, the definition
    // under which (rho/12)*sqrt(13/11) is exact.
    double p0 = 0.0, p1 = 0.0, p2 = 0.0;
    for (std::size_t i = 0; i < taps.size(); ++i) {
        const double t = static_cast<double>(i) * t_c;
        const double w = taps[i] * taps[i];
        p0 += w;
        p1 += w * t;
        p2 += w * t * t;
    }
    const double mean = p1 / p0;
    const double spread = std::sqrt(p2 / p0 - mean * mean);
    const double rel = std::abs(spread - target) / target;

    std::ostringstream os;
    os << "tap sum = " << sum << ", delay spread off by " << rel * 100.0 << "%";
    out.add("ceiling-bounce-delay-spread", std::abs(sum - 1.0) < 1e-6 && rel < 0.01,
            os.str());
}

}  // namespace

bool SelftestReport::all_pass() const {
    for (const SelftestCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

SelftestReport run_selftest() {
    Collector out;
    check_noiseless_round_trip(out);
    check_time_domain_invariants(out);
    check_filter_idempotence(out);
    check_sap_bijection(out);
    check_lut_table(out);
    check_awgn_calibration(out);
    check_ceiling_bounce(out);
    return SelftestReport{std::move(out.checks)};
}

void print_report(const SelftestReport& report, std::ostream& os) {
    for (const SelftestCheck& c : report.checks)
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name
           << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    os << (report.all_pass() ? "selftest: all checks passed"
                             : "selftest: FAILURES present")
       << "\n";
}

}  // namespace homim
