#include "qpad/testgen.hpp"

#include <algorithm>

#include "qpad/stego.hpp"

namespace qpad {

Circuit random_circuit(SplitMix64& rng, const RandomCircuitParams& params) {
    const GateSetPtr gateset = params.gateset ? params.gateset : clifford_t();
    const std::uint32_t n_qubits =
        params.fixed_qubits ? *params.fixed_qubits
                            : static_cast<std::uint32_t>(1 + rng.below(params.max_qubits));

    std::vector<std::size_t> kinds;
    for (std::size_t k = 0; k < gateset->size(); ++k) {
        if (params.allowed_kinds && !params.allowed_kinds->contains(k)) {
            continue;
        }
        const std::size_t arity = gateset->kind(k).arity();
        if (arity > n_qubits) {
            continue;
        }
        if (arity >= 2 && params.allowed_edges && params.allowed_edges->empty()) {
            continue;
        }
        kinds.push_back(k);
    }

    const std::size_t n_gates = rng.below(params.max_gates + 1);
    std::vector<Gate> gates;
    if (!kinds.empty()) {
        gates.reserve(n_gates);
        for (std::size_t i = 0; i < n_gates; ++i) {
            const std::size_t kind = kinds[rng.below(kinds.size())];
            const std::size_t arity = gateset->kind(kind).arity();
            Gate gate{kind, {}};
            if (arity == 2 && params.allowed_edges) {
                std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(
                    params.allowed_edges->begin(), params.allowed_edges->end());
                std::erase_if(edges, [&](const auto& e) {
                    return e.first >= n_qubits || e.second >= n_qubits;
                });
                if (edges.empty()) {
                    continue;
                }
                auto [a, b] = edges[rng.below(edges.size())];
                if (rng.below(2) == 1) {
                    std::swap(a, b);
                }
                gate.operands = {a, b};
            } else {
                // Distinct operands drawn without replacement.
                std::vector<std::uint32_t> pool(n_qubits);
                for (std::uint32_t q = 0; q < n_qubits; ++q) {
                    pool[q] = q;
                }
                for (std::size_t op = 0; op < arity; ++op) {
                    const std::size_t pick = rng.below(pool.size());
                    gate.operands.push_back(pool[pick]);
                    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
                }
            }
            gates.push_back(std::move(gate));
        }
    }
    return Circuit(n_qubits, gateset, std::move(gates));
}

Circuit random_frame_free_circuit(SplitMix64& rng, const RandomCircuitParams& params) {
    for (;;) {
        Circuit candidate = random_circuit(rng, params);
        if (!dec(candidate)) {
            return candidate;
        }
    }
}

Message random_message(SplitMix64& rng, std::size_t max_bits) {
    const std::size_t length = rng.below(max_bits + 1);
    std::vector<bool> bits;
    bits.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        bits.push_back(rng.below(2) == 1);
    }
    return Message(std::move(bits));
}

}  // namespace qpad
