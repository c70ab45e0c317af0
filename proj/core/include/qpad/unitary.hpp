#pragma once

#include <cstdint>

#include "qpad/circuit.hpp"

namespace qpad {

/// Explicit-matrix cap: a 2^10 x 2^10 complex product is the largest this
/// route will build.
inline constexpr std::uint32_t kMaxUnitaryQubits = 10;

/// The circuit's full 2^n x 2^n unitary, built by embedding each gate into
/// the full register and taking the chain product. This is a deliberately
/// separate route from run(): it never touches the in-place amplitude
/// update, so the two can cross-check each other. Throws TooManyQubits past
/// the cap.
ComplexMatrix circuit_unitary(const Circuit& circuit);

}  // namespace qpad
