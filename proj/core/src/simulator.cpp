#include "qpad/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpad/errors.hpp"

namespace qpad {

namespace {

constexpr double kBandTol = 1e-9;

void check_runnable(const Circuit& circuit) {
    if (circuit.n_qubits() > kMaxSimQubits) {
        throw TooManyQubits("circuit has " + std::to_string(circuit.n_qubits()) +
                            " qubits; the dense simulator caps at " +
                            std::to_string(kMaxSimQubits));
    }
}

// In-place k-qubit gate application. Matrix index bit j corresponds to
// operand j, so the amplitude group for a basis pattern is gathered in
// operand order.
void apply_gate(std::vector<Complex>& amps, std::uint32_t n_qubits, const ComplexMatrix& matrix,
                const std::vector<std::uint32_t>& targets) {
    const std::size_t k = targets.size();
    const std::size_t d = std::size_t{1} << k;

    std::vector<std::uint32_t> sorted_targets = targets;
    std::sort(sorted_targets.begin(), sorted_targets.end());

    std::vector<std::size_t> group(d);
    std::vector<Complex> scratch(d);

    const std::size_t rest = std::size_t{1} << (n_qubits - k);
    for (std::size_t j = 0; j < rest; ++j) {
        // Spread j's bits around the target positions to get the group base.
        std::size_t base = j;
        for (std::uint32_t target : sorted_targets) {
            const std::size_t low = base & ((std::size_t{1} << target) - 1);
            base = ((base >> target) << (target + 1)) | low;
        }
        for (std::size_t m = 0; m < d; ++m) {
            std::size_t index = base;
            for (std::size_t b = 0; b < k; ++b) {
                if ((m >> b) & 1) {
                    index |= std::size_t{1} << targets[b];
                }
            }
            group[m] = index;
            scratch[m] = amps[index];
        }
        for (std::size_t r = 0; r < d; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < d; ++c) {
                acc += matrix.at(r, c) * scratch[c];
            }
            amps[group[r]] = acc;
        }
    }
}

}  // namespace

StateVector run(const Circuit& circuit) {
    check_runnable(circuit);
    StateVector state;
    state.n_qubits = circuit.n_qubits();
    state.amplitudes.assign(std::size_t{1} << circuit.n_qubits(), Complex{});
    state.amplitudes[0] = 1.0;
    for (const Gate& gate : circuit.gates()) {
        apply_gate(state.amplitudes, circuit.n_qubits(), circuit.kind_of(gate).matrix(),
                   gate.operands);
    }
    return state;
}

std::vector<double> output_distribution(const Circuit& circuit) {
    const StateVector state = run(circuit);
    std::vector<double> probs(state.amplitudes.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = std::norm(state.amplitudes[i]);
    }
    return probs;
}

double last_qubit_one_prob(const Circuit& circuit) {
    const StateVector state = run(circuit);
    const std::size_t bit = std::size_t{1} << (circuit.n_qubits() - 1);
    double p = 0.0;
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        if (i & bit) {
            p += std::norm(state.amplitudes[i]);
        }
    }
    return p;
}

OracleVerdict sdcs_oracle(const Circuit& circuit) {
    const double p = last_qubit_one_prob(circuit);
    if (p >= 2.0 / 3.0 + kBandTol) {
        return {OracleStatus::In, p};
    }
    if (p <= 1.0 / 3.0 - kBandTol) {
        return {OracleStatus::Out, p};
    }
    return {OracleStatus::PromiseViolation, p};
}

const char* to_string(OracleStatus status) {
    switch (status) {
        case OracleStatus::In:
            return "In";
        case OracleStatus::Out:
            return "Out";
        case OracleStatus::PromiseViolation:
            return "PromiseViolation";
    }
    return "?";
}

bool distributions_equal(const Circuit& a, const Circuit& b, double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        throw ShapeMismatch("cannot compare distributions over " + std::to_string(a.n_qubits()) +
                            " and " + std::to_string(b.n_qubits()) + " qubits");
    }
    const std::vector<double> pa = output_distribution(a);
    const std::vector<double> pb = output_distribution(b);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (std::abs(pa[i] - pb[i]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace qpad
