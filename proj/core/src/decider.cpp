#include "qpad/decider.hpp"

#include "qpad/stego.hpp"

namespace qpad {

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Accept:
            return "ACCEPT";
        case Verdict::Reject:
            return "REJECT";
        case Verdict::Unknown:
            return "UNKNOWN";
    }
    return "?";
}

bool is_member_Sx(const Circuit& z, const Circuit& x) {
    if (z.n_qubits() != x.n_qubits() || !(z.gateset() == x.gateset())) {
        return false;
    }
    const auto message = dec(z);
    if (!message) {
        return false;
    }
    return z == pad(x, *message);
}

Verdict fast_decide(const Circuit& z, const Circuit& x_in, const Circuit& x_out) {
    if (is_member_Sx(z, x_in)) {
        return Verdict::Accept;
    }
    if (is_member_Sx(z, x_out)) {
        return Verdict::Reject;
    }
    return Verdict::Unknown;
}

Circuit canonical_yes_witness(std::uint32_t n_qubits) {
    const GateSetPtr gs = clifford_t();
    const std::uint32_t q = n_qubits - 1;
    const std::size_t h = *gs->index_of("H");
    const std::size_t s = *gs->index_of("S");
    return Circuit(n_qubits, gs, {Gate{h, {q}}, Gate{s, {q}}, Gate{s, {q}}, Gate{h, {q}}});
}

Circuit canonical_no_witness(std::uint32_t n_qubits) {
    return Circuit(n_qubits, clifford_t(), {});
}

}  // namespace qpad
