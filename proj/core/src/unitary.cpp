#include "qpad/unitary.hpp"

#include <string>

#include "qpad/errors.hpp"

namespace qpad {

namespace {

// Embeds a k-qubit gate into the full register: entry (out, in) is
// matrix(row, col) where row/col are the target bits of out/in (matrix index
// bit j = operand j) and all non-target bits agree.
ComplexMatrix embed_gate(const ComplexMatrix& matrix, const std::vector<std::uint32_t>& targets,
                         std::uint32_t n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t k = targets.size();
    const std::size_t d = std::size_t{1} << k;

    ComplexMatrix full(dim);
    for (std::size_t in = 0; in < dim; ++in) {
        std::size_t col = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if ((in >> targets[b]) & 1) {
                col |= std::size_t{1} << b;
            }
        }
        std::size_t cleared = in;
        for (std::uint32_t target : targets) {
            cleared &= ~(std::size_t{1} << target);
        }
        for (std::size_t row = 0; row < d; ++row) {
            std::size_t out = cleared;
            for (std::size_t b = 0; b < k; ++b) {
                if ((row >> b) & 1) {
                    out |= std::size_t{1} << targets[b];
                }
            }
            full.at(out, in) = matrix.at(row, col);
        }
    }
    return full;
}

}  // namespace

ComplexMatrix circuit_unitary(const Circuit& circuit) {
    if (circuit.n_qubits() > kMaxUnitaryQubits) {
        throw TooManyQubits("circuit has " + std::to_string(circuit.n_qubits()) +
                            " qubits; the explicit-unitary route caps at " +
                            std::to_string(kMaxUnitaryQubits));
    }
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    ComplexMatrix chain = ComplexMatrix::identity(dim);
    for (const Gate& gate : circuit.gates()) {
        chain = embed_gate(circuit.kind_of(gate).matrix(), gate.operands, circuit.n_qubits()) *
                chain;
    }
    return chain;
}

}  // namespace qpad
