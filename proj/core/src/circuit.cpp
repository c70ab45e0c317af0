#include "qpad/circuit.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qpad {

namespace {

void validate_gate(const Gate& gate, std::uint32_t n_qubits, const GateSet& gateset) {
    if (gate.kind >= gateset.size()) {
        throw std::invalid_argument("gate kind index " + std::to_string(gate.kind) +
                                    " out of range for gateset '" + gateset.name() + "'");
    }
    const GateKind& kind = gateset.kind(gate.kind);
    if (gate.operands.size() != kind.arity()) {
        throw std::invalid_argument("gate '" + kind.name() + "' expects " +
                                    std::to_string(kind.arity()) + " operands, got " +
                                    std::to_string(gate.operands.size()));
    }
    for (std::size_t i = 0; i < gate.operands.size(); ++i) {
        if (gate.operands[i] >= n_qubits) {
            throw std::invalid_argument("gate '" + kind.name() + "' operand qubit " +
                                        std::to_string(gate.operands[i]) +
                                        " out of range for " + std::to_string(n_qubits) +
                                        " qubits");
        }
        for (std::size_t j = i + 1; j < gate.operands.size(); ++j) {
            if (gate.operands[i] == gate.operands[j]) {
                throw std::invalid_argument("gate '" + kind.name() + "' has duplicate operand " +
                                            std::to_string(gate.operands[i]));
            }
        }
    }
}

}  // namespace

Circuit::Circuit(std::uint32_t n_qubits, GateSetPtr gateset, std::vector<Gate> gates)
    : n_qubits_(n_qubits), gateset_(std::move(gateset)), gates_(std::move(gates)) {
    if (n_qubits_ == 0) {
        throw std::invalid_argument("circuit must have at least one qubit");
    }
    if (!gateset_) {
        throw std::invalid_argument("circuit gateset must be non-null");
    }
    for (const Gate& gate : gates_) {
        validate_gate(gate, n_qubits_, *gateset_);
    }
}

Circuit Circuit::with_appended(std::span<const Gate> tail) const {
    std::vector<Gate> gates = gates_;
    gates.insert(gates.end(), tail.begin(), tail.end());
    return Circuit(n_qubits_, gateset_, std::move(gates));
}

Circuit Circuit::with_truncated(std::size_t count) const {
    if (count > gates_.size()) {
        throw std::invalid_argument("cannot remove " + std::to_string(count) + " gates from a " +
                                    std::to_string(gates_.size()) + "-gate circuit");
    }
    std::vector<Gate> gates(gates_.begin(), gates_.end() - static_cast<std::ptrdiff_t>(count));
    return Circuit(n_qubits_, gateset_, std::move(gates));
}

bool Circuit::operator==(const Circuit& rhs) const {
    if (n_qubits_ != rhs.n_qubits_ || gates_ != rhs.gates_) {
        return false;
    }
    return gateset_ == rhs.gateset_ || *gateset_ == *rhs.gateset_;
}

}  // namespace qpad
