#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpad/gates.hpp"

namespace qpad {

/// One gate application: a kind (index into the circuit's gateset) and its
/// operand qubits in declaration order.
struct Gate {
    std::size_t kind = 0;
    std::vector<std::uint32_t> operands;

    bool operator==(const Gate& rhs) const = default;
};

/// An immutable quantum circuit: a qubit count, a gateset, and a gate list in
/// time order. All transforms in this library return new circuits; equality
/// is structural (qubit count, gateset contents, gate list).
class Circuit {
  public:
    /// Throws std::invalid_argument if n_qubits is 0, the gateset is null, or
    /// any gate is invalid (bad kind index, operand count != arity, duplicate
    /// or out-of-range operands).
    Circuit(std::uint32_t n_qubits, GateSetPtr gateset, std::vector<Gate> gates = {});

    std::uint32_t n_qubits() const { return n_qubits_; }
    const GateSet& gateset() const { return *gateset_; }
    GateSetPtr gateset_ptr() const { return gateset_; }
    const std::vector<Gate>& gates() const { return gates_; }

    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    const GateKind& kind_of(const Gate& gate) const { return gateset_->kind(gate.kind); }

    /// New circuit with the given gates appended, validated the same way.
    Circuit with_appended(std::span<const Gate> tail) const;

    /// New circuit with the last `count` gates removed.
    Circuit with_truncated(std::size_t count) const;

    bool operator==(const Circuit& rhs) const;

  private:
    std::uint32_t n_qubits_;
    GateSetPtr gateset_;
    std::vector<Gate> gates_;
};

}  // namespace qpad
