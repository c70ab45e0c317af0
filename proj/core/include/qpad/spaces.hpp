#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpad/circuit.hpp"

namespace qpad {

/// An insertion point in a circuit: either the space immediately before a
/// gate (identified by its time position), or a tail slot after all gates.
/// Tail slots form an unbounded grid enumerated row-major: slot row t = 0
/// across qubits 0..n-1, then row t = 1, and so on.
struct Space {
    enum class Kind { BeforeGate, TailSlot };

    Kind kind = Kind::TailSlot;
    std::size_t gate_pos = 0;   // BeforeGate: index into circuit.gates()
    std::uint32_t qubit = 0;    // TailSlot
    std::uint64_t t = 0;        // TailSlot

    static Space before_gate(std::size_t pos) { return {Kind::BeforeGate, pos, 0, 0}; }
    static Space tail_slot(std::uint32_t qubit, std::uint64_t t) {
        return {Kind::TailSlot, 0, qubit, t};
    }

    bool operator==(const Space& rhs) const = default;
};

/// The qubit a gate is filed under for ordering purposes: its lowest operand
/// index ("top-most" qubit).
std::uint32_t associated_qubit(const Gate& gate);

/// Total order on a circuit's gates: by associated qubit ascending, ties
/// broken by time position. Returns gate positions (a permutation of
/// 0..size-1).
std::vector<std::size_t> order_gates(const Circuit& circuit);

/// The first k insertion points: one before-gate space per gate in
/// order_gates order, then tail slots row-major across qubits.
std::vector<Space> index_spaces(const Circuit& circuit, std::size_t k);

/// Appends a block of single-qubit gates, each retargeted to `qubit`, at the
/// end of the circuit. Throws InvalidQubit if qubit >= n_qubits and
/// std::invalid_argument if a block gate is not single-qubit.
Circuit insert_at_tail(const Circuit& circuit, std::uint32_t qubit, std::span<const Gate> block);

}  // namespace qpad
