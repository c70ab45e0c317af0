#pragma once

#include <string>
#include <string_view>

#include "qpad/circuit.hpp"

namespace qpad {

/// Text circuit format, one construct per line, '#' starts a comment:
///
///   qcirc 1
///   gateset clifford_t
///   qubits 2
///   H 0
///   CX 0 1
///
/// serialize_circuit emits the canonical form (no comments, one trailing
/// newline per line); parse_circuit accepts comments and blank lines and
/// resolves the gateset through the registry. parse(serialize(c)) == c.
std::string serialize_circuit(const Circuit& circuit);

/// Throws ParseError (with 1-based line/column) on malformed input.
Circuit parse_circuit(std::string_view text);

}  // namespace qpad
