#include <benchmark/benchmark.h>

#include "qpad/codec.hpp"
#include "qpad/decider.hpp"
#include "qpad/simulator.hpp"
#include "qpad/stego.hpp"
#include "qpad/testgen.hpp"

namespace {

qpad::Circuit make_circuit(std::uint32_t n_qubits, std::size_t n_gates) {
    qpad::SplitMix64 rng(42);
    qpad::RandomCircuitParams params;
    params.fixed_qubits = n_qubits;
    params.max_gates = n_gates;
    qpad::Circuit c = qpad::random_circuit(rng, params);
    while (c.size() < n_gates) {
        c = qpad::random_circuit(rng, params);
    }
    return c;
}

qpad::Message make_message(std::size_t bits) {
    qpad::SplitMix64 rng(43);
    std::vector<bool> out(bits);
    for (std::size_t i = 0; i < bits; ++i) {
        out[i] = rng.below(2) == 1;
    }
    return qpad::Message(std::move(out));
}

void BM_encode(benchmark::State& state) {
    const qpad::Circuit c = make_circuit(8, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpad::encode(c));
    }
}
BENCHMARK(BM_encode)->Arg(64)->Arg(512);

void BM_decode(benchmark::State& state) {
    const qpad::Circuit c = make_circuit(8, static_cast<std::size_t>(state.range(0)));
    const auto symbols = qpad::encode(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpad::decode(symbols, c.n_qubits(), c.gateset_ptr()));
    }
}
BENCHMARK(BM_decode)->Arg(64)->Arg(512);

void BM_pad_dec(benchmark::State& state) {
    const qpad::Circuit x = make_circuit(2, 8);
    const qpad::Message y = make_message(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        const qpad::Circuit z = qpad::pad(x, y);
        benchmark::DoNotOptimize(qpad::dec(z));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_pad_dec)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_simulator_run(benchmark::State& state) {
    const qpad::Circuit c = make_circuit(static_cast<std::uint32_t>(state.range(0)), 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpad::run(c));
    }
}
BENCHMARK(BM_simulator_run)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_fast_decide(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const qpad::Circuit x_in = qpad::canonical_yes_witness(n);
    const qpad::Circuit x_out = qpad::canonical_no_witness(n);
    const qpad::Circuit z = qpad::pad(x_in, make_message(2000));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpad::fast_decide(z, x_in, x_out));
    }
}
BENCHMARK(BM_fast_decide)->Arg(4)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
