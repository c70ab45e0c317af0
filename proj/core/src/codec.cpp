#include "qpad/codec.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

#include "qpad/errors.hpp"

namespace qpad {

CodecScheme::CodecScheme(GateSetPtr gateset, std::uint32_t n_qubits)
    : gateset_(std::move(gateset)), n_qubits_(n_qubits) {
    if (!gateset_) {
        throw std::invalid_argument("codec scheme requires a gateset");
    }
    if (gateset_->size() < 2) {
        throw std::invalid_argument("codec requires a gateset of size >= 2 (digit base)");
    }
    if (n_qubits_ == 0) {
        throw std::invalid_argument("codec scheme requires a positive qubit count");
    }
    // Smallest w >= 1 with Xi^w >= n_qubits, i.e. max(1, ceil(log_Xi(n))).
    width_ = 1;
    std::uint64_t capacity = gateset_->size();
    while (capacity < n_qubits_) {
        capacity *= gateset_->size();
        ++width_;
    }
}

std::optional<std::size_t> CodecScheme::kind_of_symbol(unsigned symbol) const {
    if (symbol < 2 || symbol >= gateset_->size() + 2) {
        return std::nullopt;
    }
    return symbol - 2;
}

std::vector<unsigned> encode(const Circuit& circuit) {
    const CodecScheme scheme(circuit.gateset_ptr(), circuit.n_qubits());
    const std::size_t xi = scheme.xi();
    const std::size_t w = scheme.width();

    std::vector<unsigned> out;
    out.reserve(circuit.size() * (1 + 2 * w));
    for (const Gate& gate : circuit.gates()) {
        out.push_back(scheme.gate_symbol(gate.kind));
        for (std::uint32_t q : gate.operands) {
            // Width-w base-Xi digits, most significant first.
            for (std::size_t d = 0; d < w; ++d) {
                std::uint64_t div = 1;
                for (std::size_t e = 0; e < w - 1 - d; ++e) {
                    div *= xi;
                }
                out.push_back(static_cast<unsigned>((q / div) % xi));
            }
        }
    }
    return out;
}

Circuit decode(std::span<const unsigned> symbols, std::uint32_t n_qubits, GateSetPtr gateset) {
    const CodecScheme scheme(gateset, n_qubits);
    const std::size_t xi = scheme.xi();
    const std::size_t w = scheme.width();

    std::vector<Gate> gates;
    std::size_t pos = 0;
    while (pos < symbols.size()) {
        const auto kind_index = scheme.kind_of_symbol(symbols[pos]);
        if (!kind_index) {
            throw MalformedString("symbol " + std::to_string(symbols[pos]) + " at position " +
                                  std::to_string(pos) + " is not a gate symbol");
        }
        ++pos;
        const GateKind& kind = gateset->kind(*kind_index);
        Gate gate{*kind_index, {}};
        for (std::size_t op = 0; op < kind.arity(); ++op) {
            if (pos + w > symbols.size()) {
                throw MalformedString("truncated record: gate '" + kind.name() + "' needs " +
                                      std::to_string(kind.arity() * w) + " index symbols");
            }
            std::uint64_t index = 0;
            for (std::size_t d = 0; d < w; ++d) {
                const unsigned digit = symbols[pos + d];
                if (digit >= xi) {
                    throw MalformedString("symbol " + std::to_string(digit) + " at position " +
                                          std::to_string(pos + d) + " is not a base-" +
                                          std::to_string(xi) + " digit");
                }
                index = index * xi + digit;
            }
            pos += w;
            if (index >= n_qubits) {
                throw MalformedString("operand index " + std::to_string(index) +
                                      " out of range for " + std::to_string(n_qubits) + " qubits");
            }
            const auto q = static_cast<std::uint32_t>(index);
            for (std::uint32_t seen : gate.operands) {
                if (seen == q) {
                    throw MalformedString("duplicate operand index " + std::to_string(index));
                }
            }
            gate.operands.push_back(q);
        }
        gates.push_back(std::move(gate));
    }
    return Circuit(n_qubits, std::move(gateset), std::move(gates));
}

std::string render_symbols(std::span<const unsigned> symbols, const CodecScheme& scheme) {
    std::string out;
    const bool compact = scheme.xi() + 1 <= 9;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (!compact && i > 0) {
            out += ' ';
        }
        out += std::to_string(symbols[i]);
    }
    return out;
}

std::vector<unsigned> parse_symbol_text(std::string_view text, const CodecScheme& scheme) {
    const unsigned max_symbol = static_cast<unsigned>(scheme.xi() + 1);
    std::vector<unsigned> symbols;
    if (scheme.xi() + 1 <= 9) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                continue;
            }
            if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') > max_symbol) {
                throw MalformedString(std::string("character '") + c + "' at position " +
                                      std::to_string(i) + " is outside the symbol alphabet");
            }
            symbols.push_back(static_cast<unsigned>(c - '0'));
        }
        return symbols;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
               text[i] != '\r') {
            ++i;
        }
        const std::string_view token = text.substr(start, i - start);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value > max_symbol) {
            throw MalformedString("token '" + std::string(token) + "' at position " +
                                  std::to_string(start) + " is outside the symbol alphabet");
        }
        symbols.push_back(value);
    }
    return symbols;
}

}  // namespace qpad
