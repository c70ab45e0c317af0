#include "qpad/circuit_io.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <vector>

#include "qpad/errors.hpp"

namespace qpad {

std::string serialize_circuit(const Circuit& circuit) {
    std::string out = "qcirc 1\n";
    out += "gateset " + circuit.gateset().name() + "\n";
    out += "qubits " + std::to_string(circuit.n_qubits()) + "\n";
    for (const Gate& gate : circuit.gates()) {
        out += circuit.kind_of(gate).name();
        for (std::uint32_t q : gate.operands) {
            out += ' ' + std::to_string(q);
        }
        out += '\n';
    }
    return out;
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

// Splits a line at '#' and tokenizes on spaces/tabs.
std::vector<Token> tokenize(std::string_view line) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        tokens.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::uint32_t parse_u32(const Token& token, std::size_t line_no, const char* what) {
    std::uint32_t value = 0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no, token.column,
                         std::string("expected ") + what + ", got '" + std::string(token.text) + "'");
    }
    return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    enum class Stage { Magic, Gateset, Qubits, Gates };
    Stage stage = Stage::Magic;

    GateSetPtr gateset;
    std::uint32_t n_qubits = 0;
    std::vector<Gate> gates;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        const std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }

        switch (stage) {
            case Stage::Magic: {
                if (tokens.size() != 2 || tokens[0].text != "qcirc" || tokens[1].text != "1") {
                    throw ParseError(line_no, tokens[0].column, "expected header 'qcirc 1'");
                }
                stage = Stage::Gateset;
                break;
            }
            case Stage::Gateset: {
                if (tokens.size() != 2 || tokens[0].text != "gateset") {
                    throw ParseError(line_no, tokens[0].column, "expected 'gateset <name>'");
                }
                gateset = find_gateset(tokens[1].text);
                if (!gateset) {
                    throw ParseError(line_no, tokens[1].column,
                                     "unknown gateset '" + std::string(tokens[1].text) + "'");
                }
                stage = Stage::Qubits;
                break;
            }
            case Stage::Qubits: {
                if (tokens.size() != 2 || tokens[0].text != "qubits") {
                    throw ParseError(line_no, tokens[0].column, "expected 'qubits <N>'");
                }
                n_qubits = parse_u32(tokens[1], line_no, "a qubit count");
                if (n_qubits == 0) {
                    throw ParseError(line_no, tokens[1].column, "qubit count must be positive");
                }
                stage = Stage::Gates;
                break;
            }
            case Stage::Gates: {
                const auto kind_index = gateset->index_of(tokens[0].text);
                if (!kind_index) {
                    throw ParseError(line_no, tokens[0].column,
                                     "unknown gate kind '" + std::string(tokens[0].text) + "'");
                }
                const GateKind& kind = gateset->kind(*kind_index);
                if (tokens.size() - 1 != kind.arity()) {
                    throw ParseError(line_no, tokens[0].column,
                                     "gate '" + kind.name() + "' expects " +
                                         std::to_string(kind.arity()) + " operands, got " +
                                         std::to_string(tokens.size() - 1));
                }
                Gate gate{*kind_index, {}};
                for (std::size_t i = 1; i < tokens.size(); ++i) {
                    const std::uint32_t q = parse_u32(tokens[i], line_no, "a qubit index");
                    if (q >= n_qubits) {
                        throw ParseError(line_no, tokens[i].column,
                                         "qubit index " + std::to_string(q) + " out of range for " +
                                             std::to_string(n_qubits) + " qubits");
                    }
                    for (std::uint32_t seen : gate.operands) {
                        if (seen == q) {
                            throw ParseError(line_no, tokens[i].column,
                                             "duplicate operand qubit " + std::to_string(q));
                        }
                    }
                    gate.operands.push_back(q);
                }
                gates.push_back(std::move(gate));
                break;
            }
        }
    }

    if (stage != Stage::Gates) {
        throw ParseError(line_no, 1, "incomplete circuit header");
    }
    return Circuit(n_qubits, std::move(gateset), std::move(gates));
}

}  // namespace qpad
