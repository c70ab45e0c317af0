#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qpad/circuit.hpp"
#include "qpad/message.hpp"

namespace qpad {

/// Deterministic PRNG (splitmix64). Used instead of <random> distributions
/// so that seeded corpora are identical across platforms and standard
/// library versions.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection sampling keeps the draw unbiased and deterministic.
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v = next();
        while (v >= limit) {
            v = next();
        }
        return v % bound;
    }

  private:
    std::uint64_t state_;
};

struct RandomCircuitParams {
    GateSetPtr gateset;                 // defaults to clifford_t when null
    std::uint32_t max_qubits = 8;
    std::size_t max_gates = 64;
    std::optional<std::uint32_t> fixed_qubits;
    std::optional<std::set<std::size_t>> allowed_kinds;  // kind indices
    std::optional<std::set<std::pair<std::uint32_t, std::uint32_t>>> allowed_edges;
};

Circuit random_circuit(SplitMix64& rng, const RandomCircuitParams& params = {});

/// A random circuit on which dec() finds no message, so padding it yields a
/// single unambiguous frame.
Circuit random_frame_free_circuit(SplitMix64& rng, const RandomCircuitParams& params = {});

Message random_message(SplitMix64& rng, std::size_t max_bits);

}  // namespace qpad
