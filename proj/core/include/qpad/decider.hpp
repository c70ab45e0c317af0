#pragma once

#include <cstdint>

#include "qpad/circuit.hpp"

namespace qpad {

enum class Verdict { Accept, Reject, Unknown };

const char* to_string(Verdict verdict);

/// True iff z lies in the padded family of x: the message dec(z) parses and
/// z == pad(x, dec(z)) structurally. Circuits over different gatesets or
/// qubit counts are never members.
bool is_member_Sx(const Circuit& z, const Circuit& x);

/// The padded-family decider: Accept if z is in x_in's family, else Reject
/// if in x_out's, else Unknown. Performs no simulation; its cost is linear
/// in the gate counts involved.
Verdict fast_decide(const Circuit& z, const Circuit& x_in, const Circuit& x_out);

/// Canonical clifford_t witnesses: the yes-instance applies H,S,S,H (an X up
/// to phase) to the last qubit, so it measures 1 with certainty; the
/// no-instance is the empty circuit. Both are frame-free.
Circuit canonical_yes_witness(std::uint32_t n_qubits = 1);
Circuit canonical_no_witness(std::uint32_t n_qubits = 1);

}  // namespace qpad
