#pragma once

#include <cstdint>
#include <vector>

#include "qpad/circuit.hpp"

namespace qpad {

/// Dense statevector cap. 2^24 amplitudes is the largest register this
/// desk-scale simulator will allocate.
inline constexpr std::uint32_t kMaxSimQubits = 24;

/// Amplitudes in little-endian qubit order: bit q of the index is the basis
/// value of qubit q.
struct StateVector {
    std::uint32_t n_qubits = 0;
    std::vector<Complex> amplitudes;
};

enum class OracleStatus { In, Out, PromiseViolation };

/// Membership verdict for the circuit-simulation decision problem: In when
/// the last qubit measures 1 with probability >= 2/3, Out when <= 1/3,
/// PromiseViolation otherwise. Probabilities within 1e-9 of either threshold
/// are conservatively reported as PromiseViolation.
struct OracleVerdict {
    OracleStatus status = OracleStatus::PromiseViolation;
    double p_one = 0.0;
};

/// Applies the circuit's gates in time order to |0...0>. Throws TooManyQubits
/// if n_qubits > kMaxSimQubits.
StateVector run(const Circuit& circuit);

/// The circuit's full output distribution: 2^n outcome probabilities indexed
/// little-endian.
std::vector<double> output_distribution(const Circuit& circuit);

/// Marginal probability that qubit n-1 (the last measurement) reads 1.
double last_qubit_one_prob(const Circuit& circuit);

OracleVerdict sdcs_oracle(const Circuit& circuit);

const char* to_string(OracleStatus status);

/// True iff the two circuits' output distributions agree within `tol` in
/// max norm over all 2^n outcomes. Throws ShapeMismatch if the qubit counts
/// differ and TooManyQubits past the cap.
bool distributions_equal(const Circuit& a, const Circuit& b, double tol);

}  // namespace qpad
