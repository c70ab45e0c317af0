#include <doctest.h>

#include <cmath>

#include "qpad/errors.hpp"
#include "qpad/simulator.hpp"
#include "qpad/stego.hpp"
#include "qpad/testgen.hpp"
#include "qpad/unitary.hpp"

using namespace qpad;

namespace {

Gate g(const GateSet& gs, const char* kind, std::vector<std::uint32_t> ops) {
    return Gate{*gs.index_of(kind), std::move(ops)};
}

// Chain-route distribution: |column 0 of the full unitary| squared.
std::vector<double> chain_distribution(const Circuit& c) {
    const ComplexMatrix u = circuit_unitary(c);
    std::vector<double> probs(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        probs[i] = std::norm(u.at(i, 0));
    }
    return probs;
}

}  // namespace

TEST_CASE("run prepares |0...0> and applies gates in order") {
    const GateSetPtr gs = clifford_t();

    const StateVector ground = run(Circuit(1, gs));
    REQUIRE(ground.amplitudes.size() == 2);
    CHECK(ground.amplitudes[0] == Complex{1.0, 0.0});
    CHECK(ground.amplitudes[1] == Complex{});

    const StateVector plus = run(Circuit(1, gs, {g(*gs, "H", {0})}));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(plus.amplitudes[0] - inv_sqrt2) < 1e-12);
    CHECK(std::abs(plus.amplitudes[1] - inv_sqrt2) < 1e-12);

    // H S S H = H Z H = X, exactly (phase 1): |0> -> |1>.
    const Circuit hssh(1, gs, {g(*gs, "H", {0}), g(*gs, "S", {0}), g(*gs, "S", {0}),
                               g(*gs, "H", {0})});
    const StateVector one = run(hssh);
    CHECK(std::abs(one.amplitudes[0]) < 1e-12);
    CHECK(std::abs(std::abs(one.amplitudes[1]) - 1.0) < 1e-12);

    // Cross-check against the chain route.
    const ComplexMatrix u = circuit_unitary(hssh);
    CHECK(std::abs(u.at(0, 0) - one.amplitudes[0]) < 1e-12);
    CHECK(std::abs(u.at(1, 0) - one.amplitudes[1]) < 1e-12);
}

TEST_CASE("cx flips the target exactly when the control is set") {
    const GateSetPtr gs = clifford_t();
    // X on qubit 0 (via H,S,S,H), then CX(0 -> 1): |11> should come out.
    const Circuit c(2, gs, {g(*gs, "H", {0}), g(*gs, "S", {0}), g(*gs, "S", {0}),
                            g(*gs, "H", {0}), g(*gs, "CX", {0, 1})});
    const StateVector state = run(c);
    CHECK(std::abs(std::abs(state.amplitudes[3]) - 1.0) < 1e-12);

    // Control clear: CX does nothing.
    const Circuit idle(2, gs, {g(*gs, "CX", {0, 1})});
    CHECK(std::abs(run(idle).amplitudes[0] - 1.0) < 1e-12);
}

TEST_CASE("run rejects circuits past the qubit cap without allocating") {
    const Circuit big(kMaxSimQubits + 1, clifford_t());
    CHECK_THROWS_AS(run(big), TooManyQubits);
    CHECK_THROWS_AS(last_qubit_one_prob(big), TooManyQubits);
    CHECK_THROWS_AS(sdcs_oracle(big), TooManyQubits);
}

TEST_CASE("last_qubit_one_prob marginalizes the highest qubit") {
    const GateSetPtr gs = clifford_t();
    CHECK(last_qubit_one_prob(Circuit(2, gs)) == 0.0);

    const double p = last_qubit_one_prob(Circuit(2, gs, {g(*gs, "H", {1})}));
    CHECK(std::abs(p - 0.5) < 1e-12);

    const Circuit hssh(1, gs, {g(*gs, "H", {0}), g(*gs, "S", {0}), g(*gs, "S", {0}),
                               g(*gs, "H", {0})});
    CHECK(std::abs(last_qubit_one_prob(hssh) - 1.0) < 1e-12);

    // H on qubit 0 must not affect qubit 1's marginal.
    const double p0 = last_qubit_one_prob(Circuit(2, gs, {g(*gs, "H", {0})}));
    CHECK(p0 == 0.0);
}

TEST_CASE("sdcs_oracle classifies against the promise thresholds") {
    const GateSetPtr gs = clifford_t();

    const OracleVerdict empty = sdcs_oracle(Circuit(1, gs));
    CHECK(empty.status == OracleStatus::Out);
    CHECK(empty.p_one == 0.0);

    const OracleVerdict half = sdcs_oracle(Circuit(1, gs, {g(*gs, "H", {0})}));
    CHECK(half.status == OracleStatus::PromiseViolation);
    CHECK(std::abs(half.p_one - 0.5) < 1e-12);

    const Circuit hssh(1, gs, {g(*gs, "H", {0}), g(*gs, "S", {0}), g(*gs, "S", {0}),
                               g(*gs, "H", {0})});
    const OracleVerdict in = sdcs_oracle(hssh);
    CHECK(in.status == OracleStatus::In);
    CHECK(std::abs(in.p_one - 1.0) < 1e-12);
}

TEST_CASE("norm is preserved through random circuits") {
    SplitMix64 rng(61);
    for (int i = 0; i < 100; ++i) {
        RandomCircuitParams params;
        params.max_qubits = 6;
        const Circuit c = random_circuit(rng, params);
        const StateVector state = run(c);
        double norm = 0.0;
        for (const Complex& a : state.amplitudes) {
            norm += std::norm(a);
        }
        CHECK(std::abs(norm - 1.0) < 1e-10);
    }
}

TEST_CASE("run agrees with the explicit-unitary chain on small circuits") {
    SplitMix64 rng(67);
    RandomCircuitParams params;
    params.max_qubits = 3;
    params.max_gates = 6;
    for (int i = 0; i < 400; ++i) {
        const Circuit c = random_circuit(rng, params);
        const std::vector<double> fast = output_distribution(c);
        const std::vector<double> chain = chain_distribution(c);
        REQUIRE(fast.size() == chain.size());
        for (std::size_t out = 0; out < fast.size(); ++out) {
            CHECK(std::abs(fast[out] - chain[out]) <= 1e-10);
        }
    }
}

TEST_CASE("distributions_equal compares full output distributions") {
    const GateSetPtr gs = clifford_t();
    const Circuit empty1(1, gs);
    const Circuit h(1, gs, {g(*gs, "H", {0})});

    CHECK(distributions_equal(h, h, 1e-10));
    CHECK(!distributions_equal(empty1, h, 1e-10));
    CHECK_THROWS_AS(distributions_equal(empty1, Circuit(2, gs), 1e-10), ShapeMismatch);

    SplitMix64 rng(71);
    for (int i = 0; i < 50; ++i) {
        const Circuit x = random_circuit(rng);
        const Message y = random_message(rng, 64);
        CHECK(distributions_equal(x, pad(x, y), 1e-10));
    }
}

TEST_CASE("global phase never affects exposed quantities") {
    const GateSetPtr gs = clifford_t();
    // S and T on |1> rotate the phase only; every probability is unchanged.
    const Circuit base(1, gs, {g(*gs, "H", {0}), g(*gs, "S", {0}), g(*gs, "S", {0}),
                               g(*gs, "H", {0})});
    Circuit phased = base;
    for (const char* kind : {"S", "T", "T"}) {
        phased = phased.with_appended(std::vector<Gate>{g(*gs, kind, {0})});
    }
    CHECK(distributions_equal(base, phased, 1e-10));
    CHECK(sdcs_oracle(phased).status == OracleStatus::In);
}
