#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpad/circuit.hpp"

namespace qpad {

/// Symbol tables for the circuit <-> string codec over a fixed gateset and
/// qubit count. The alphabet is {0, ..., Xi+1} where Xi is the gateset size:
/// symbols 0..Xi-1 are base-Xi digits for qubit indices, and kinds[i] pairs
/// with symbol i+2. Qubit indices are written as fixed-width base-Xi strings
/// of width w = max(1, ceil(log_Xi(n_qubits))).
class CodecScheme {
  public:
    /// Throws std::invalid_argument if the gateset has fewer than two kinds
    /// (the digit base must be at least 2) or n_qubits is 0.
    CodecScheme(GateSetPtr gateset, std::uint32_t n_qubits);

    const GateSet& gateset() const { return *gateset_; }
    GateSetPtr gateset_ptr() const { return gateset_; }
    std::uint32_t n_qubits() const { return n_qubits_; }

    std::size_t xi() const { return gateset_->size(); }
    std::size_t width() const { return width_; }
    std::size_t alphabet_size() const { return xi() + 2; }

    unsigned gate_symbol(std::size_t kind_index) const {
        return static_cast<unsigned>(kind_index + 2);
    }
    std::optional<std::size_t> kind_of_symbol(unsigned symbol) const;

  private:
    GateSetPtr gateset_;
    std::uint32_t n_qubits_;
    std::size_t width_;
};

/// Encodes a circuit as a symbol sequence: per gate, the gate symbol followed
/// by each operand index as a width-w base-Xi digit string. Deterministic and
/// injective for a fixed (gateset, n_qubits).
std::vector<unsigned> encode(const Circuit& circuit);

/// Inverse of encode. Throws MalformedString on truncated records, unknown
/// gate symbols, digits out of range, operand indices >= n_qubits, or
/// duplicate operands.
Circuit decode(std::span<const unsigned> symbols, std::uint32_t n_qubits, GateSetPtr gateset);

/// External text rendering: decimal digits concatenated when every symbol is
/// a single decimal digit (Xi+1 <= 9), else whitespace-separated decimal
/// tokens.
std::string render_symbols(std::span<const unsigned> symbols, const CodecScheme& scheme);

/// Inverse of render_symbols. Throws MalformedString on characters outside
/// the alphabet.
std::vector<unsigned> parse_symbol_text(std::string_view text, const CodecScheme& scheme);

}  // namespace qpad
