// Microbenchmarks for the per-symbol hot path: transform, transmit,
// receive, channel convolution and index mapping.  Build-only target; run
// manually with ./homim_bench [--benchmark_filter=...].

#include <benchmark/benchmark.h>

#include <cstdint>

#include "homim/channel.hpp"
#include "homim/dsp.hpp"
#include "homim/mapping.hpp"
#include "homim/metrics.hpp"
#include "homim/receiver.hpp"
#include "homim/rng.hpp"
#include "homim/transmitter.hpp"

using namespace homim;

namespace {

ModemConfig config_for(Scheme s) {
    return make_modem_config(s, 32, 4, 4, 4, s == Scheme::hybrid_aco ? 4 : 0);
}

BitVec random_payload(const ModemConfig& cfg, std::uint64_t seed) {
    const int bits = scheme_bit_budget(cfg).total();
    BitVec payload(bits);
    Rng rng(seed);
    rng.random_bits(payload.data(), bits);
    return payload;
}

void BM_ForwardDft(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    cvec x(n);
    Rng rng(1);
    for (cplx& v : x) v = {rng.gaussian(), rng.gaussian()};
    for (auto _ : state) benchmark::DoNotOptimize(forward_dft(x));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ForwardDft)->Arg(64)->Arg(128)->Arg(256);

void BM_TransmitSymbol(benchmark::State& state) {
    const ModemConfig cfg = config_for(static_cast<Scheme>(state.range(0)));
    const BitVec payload = random_payload(cfg, 2);
    for (auto _ : state) benchmark::DoNotOptimize(transmit_symbol(payload, cfg));
}
BENCHMARK(BM_TransmitSymbol)
    ->Arg(static_cast<int>(Scheme::dco))
    ->Arg(static_cast<int>(Scheme::aco))
    ->Arg(static_cast<int>(Scheme::dco_im))
    ->Arg(static_cast<int>(Scheme::aco_im))
    ->Arg(static_cast<int>(Scheme::hybrid_aco));

void BM_ReceiveSymbol(benchmark::State& state) {
    const ModemConfig cfg = config_for(static_cast<Scheme>(state.range(0)));
    const TimeSymbol ts = transmit_symbol(random_payload(cfg, 3), cfg);
    rvec y = ts.x_plus;
    for (double& v : y) v /= ts.norm_scale;
    const cvec H(static_cast<std::size_t>(cfg.spectrum_length()), cplx{1.0, 0.0});
    for (auto _ : state) benchmark::DoNotOptimize(receive_symbol(y, cfg, H));
}
BENCHMARK(BM_ReceiveSymbol)
    ->Arg(static_cast<int>(Scheme::aco))
    ->Arg(static_cast<int>(Scheme::hybrid_aco));

void BM_ApplyChannel(benchmark::State& state) {
    const ModemConfig cfg = config_for(Scheme::hybrid_aco);
    const ChannelSpec chan = ChannelSpec::ceiling_bounce(10e-9, cfg.sample_period());
    const TimeSymbol ts = transmit_symbol(random_payload(cfg, 4), cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_channel(ts.x_plus, chan.taps, chan.cp_length));
    state.SetLabel(std::to_string(chan.taps.size()) + " taps");
}
BENCHMARK(BM_ApplyChannel);

void BM_CeilingBounceTaps(benchmark::State& state) {
    const auto params = CeilingBounceParams::from_delay_spread(10e-9);
    for (auto _ : state) benchmark::DoNotOptimize(ceiling_bounce_taps(params, 0.5e-9));
}
BENCHMARK(BM_CeilingBounceTaps);

void BM_SapEncodeDecode(benchmark::State& state) {
    ImConfig im;
    im.omega = 16;
    im.kappa = 12;
    im.m1 = 4;
    im.m2 = 4;
    const int lambda1 = bit_budget(im).lambda1;
    BitVec bits(lambda1);
    Rng rng(5);
    rng.random_bits(bits.data(), lambda1);
    BitVec out(lambda1);
    for (auto _ : state) {
        const Sap sap = sap_encode(bits.data(), im);
        sap_decode(sap, im, out.data());
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_SapEncodeDecode);

}  // namespace

BENCHMARK_MAIN();
