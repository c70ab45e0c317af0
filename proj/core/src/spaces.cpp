#include "qpad/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qpad/errors.hpp"

namespace qpad {

std::uint32_t associated_qubit(const Gate& gate) {
    return *std::min_element(gate.operands.begin(), gate.operands.end());
}

std::vector<std::size_t> order_gates(const Circuit& circuit) {
    std::vector<std::size_t> order(circuit.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return associated_qubit(circuit.gates()[a]) < associated_qubit(circuit.gates()[b]);
    });
    return order;
}

std::vector<Space> index_spaces(const Circuit& circuit, std::size_t k) {
    std::vector<Space> spaces;
    spaces.reserve(k);
    const std::vector<std::size_t> order = order_gates(circuit);
    for (std::size_t pos : order) {
        if (spaces.size() == k) {
            return spaces;
        }
        spaces.push_back(Space::before_gate(pos));
    }
    std::uint64_t slot = 0;
    while (spaces.size() < k) {
        const std::uint32_t qubit = static_cast<std::uint32_t>(slot % circuit.n_qubits());
        const std::uint64_t t = slot / circuit.n_qubits();
        spaces.push_back(Space::tail_slot(qubit, t));
        ++slot;
    }
    return spaces;
}

Circuit insert_at_tail(const Circuit& circuit, std::uint32_t qubit, std::span<const Gate> block) {
    if (qubit >= circuit.n_qubits()) {
        throw InvalidQubit("tail insertion qubit " + std::to_string(qubit) +
                           " out of range for " + std::to_string(circuit.n_qubits()) + " qubits");
    }
    std::vector<Gate> retargeted;
    retargeted.reserve(block.size());
    for (const Gate& gate : block) {
        if (gate.kind >= circuit.gateset().size() ||
            circuit.gateset().kind(gate.kind).arity() != 1) {
            throw std::invalid_argument("tail insertion blocks must consist of single-qubit gates");
        }
        retargeted.push_back(Gate{gate.kind, {qubit}});
    }
    return circuit.with_appended(retargeted);
}

}  // namespace qpad
