// qpad: circuit codec, steganographic padding, padded-family decider,
// reduction composer, promise checker, and statevector simulator in one
// subcommand tool. Circuit files are the only persistent artifact.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qpad/circuit_io.hpp"
#include "qpad/codec.hpp"
#include "qpad/decider.hpp"
#include "qpad/errors.hpp"
#include "qpad/promises.hpp"
#include "qpad/reductions.hpp"
#include "qpad/selfcheck.hpp"
#include "qpad/simulator.hpp"
#include "qpad/stego.hpp"

namespace {

constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

struct Config {
    std::string gateset = "clifford_t";
    std::string input_path;
    std::vector<std::string> input_paths;
    std::string symbol_text;
    std::string message_hex;
    std::string message_bits;
    std::string promise_expr;
    std::string yes_witness_path;
    std::string no_witness_path;
    std::string reduction_name;
    std::string word_bits;
    std::uint32_t n_qubits = 2;
    bool full_dist = false;
    std::uint64_t seed = kDefaultSeed;
    double scale = 1.0;
};

struct FileError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError{"cannot open '" + path + "'"};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

qpad::Circuit load_circuit(const std::string& path) {
    try {
        return qpad::parse_circuit(read_file(path));
    } catch (const qpad::ParseError& e) {
        throw FileError{path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) +
                        ": " + e.detail};
    }
}

qpad::GateSetPtr load_gateset(const std::string& name) {
    qpad::GateSetPtr gs = qpad::find_gateset(name);
    if (!gs) {
        throw FileError{"unknown gateset '" + name + "'"};
    }
    return gs;
}

qpad::Message parse_message(const Config& config) {
    if (!config.message_hex.empty() && !config.message_bits.empty()) {
        throw FileError{"give either --message-hex or --message-bits, not both"};
    }
    try {
        if (!config.message_bits.empty()) {
            return qpad::Message::from_bit_string(config.message_bits);
        }
        return qpad::Message::from_hex(config.message_hex);
    } catch (const std::invalid_argument& e) {
        throw FileError{e.what()};
    }
}

void print_message(const qpad::Message& message) {
    if (message.size() % 4 == 0) {
        std::cout << message.to_hex() << "\n";
    } else {
        std::cout << "bits:" << message.to_bit_string() << "\n";
    }
}

int cmd_encode(const Config& config) {
    const qpad::Circuit circuit = load_circuit(config.input_path);
    const qpad::CodecScheme scheme(circuit.gateset_ptr(), circuit.n_qubits());
    std::cout << qpad::render_symbols(qpad::encode(circuit), scheme) << "\n";
    return 0;
}

int cmd_decode(const Config& config) {
    const qpad::GateSetPtr gs = load_gateset(config.gateset);
    const qpad::CodecScheme scheme(gs, config.n_qubits);
    const auto symbols = qpad::parse_symbol_text(config.symbol_text, scheme);
    const qpad::Circuit circuit = qpad::decode(symbols, config.n_qubits, gs);
    std::cout << qpad::serialize_circuit(circuit);
    return 0;
}

int cmd_pad(const Config& config) {
    const qpad::Circuit circuit = load_circuit(config.input_path);
    const qpad::Message message = parse_message(config);
    std::cout << qpad::serialize_circuit(qpad::pad(circuit, message));
    return 0;
}

int cmd_extract(const Config& config) {
    const qpad::Circuit circuit = load_circuit(config.input_path);
    const auto message = qpad::dec(circuit);
    if (!message) {
        std::cout << "NO MESSAGE\n";
        return kExitUnknown;
    }
    print_message(*message);
    return 0;
}

int cmd_strip(const Config& config) {
    const qpad::Circuit circuit = load_circuit(config.input_path);
    std::cout << qpad::serialize_circuit(qpad::unpad(circuit));
    return 0;
}

int cmd_decide(const Config& config) {
    const qpad::Circuit z = load_circuit(config.input_path);
    const qpad::Circuit x_in = load_circuit(config.yes_witness_path);
    const qpad::Circuit x_out = load_circuit(config.no_witness_path);
    const qpad::Verdict verdict = qpad::fast_decide(z, x_in, x_out);
    std::cout << qpad::to_string(verdict) << "\n";
    switch (verdict) {
        case qpad::Verdict::Accept:
            return 0;
        case qpad::Verdict::Reject:
            return 1;
        case qpad::Verdict::Unknown:
            return kExitUnknown;
    }
    return kExitUnknown;
}

int cmd_reduce(const Config& config) {
    const qpad::InstanceSpace space{load_gateset(config.gateset), config.n_qubits};
    qpad::ReductionFn g = [&] {
        try {
            return qpad::builtin_reduction(config.reduction_name, space);
        } catch (const std::invalid_argument& e) {
            throw FileError{e.what()};
        }
    }();
    const qpad::ReductionFn h = qpad::compose_one_one(g, space);
    const qpad::Word word = [&] {
        try {
            return qpad::Word(qpad::Message::from_bit_string(config.word_bits));
        } catch (const std::invalid_argument& e) {
            throw FileError{e.what()};
        }
    }();
    const qpad::Circuit instance = qpad::decode_instance(h(word), space);
    std::cout << qpad::serialize_circuit(instance);
    return 0;
}

int cmd_promise_check(const Config& config) {
    const qpad::GateSetPtr gs = load_gateset(config.gateset);
    const qpad::Promise promise = qpad::parse_promise_expr(config.promise_expr, *gs);
    bool all = true;
    for (const std::string& path : config.input_paths) {
        const bool ok = promise(load_circuit(path));
        std::cout << path << ": " << (ok ? "true" : "false") << "\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}

int cmd_simulate(const Config& config) {
    const qpad::Circuit circuit = load_circuit(config.input_path);
    const qpad::OracleVerdict verdict = qpad::sdcs_oracle(circuit);
    std::printf("p_one %.12g\n", verdict.p_one);
    std::printf("verdict %s\n", qpad::to_string(verdict.status));
    if (config.full_dist) {
        const std::vector<double> probs = qpad::output_distribution(circuit);
        const std::uint32_t n = circuit.n_qubits();
        for (std::size_t i = 0; i < probs.size(); ++i) {
            std::string bits(n, '0');
            for (std::uint32_t q = 0; q < n; ++q) {
                // Qubit n-1 is the leftmost character.
                bits[n - 1 - q] = (i >> q) & 1 ? '1' : '0';
            }
            std::printf("%s %.12g\n", bits.c_str(), probs[i]);
        }
    }
    return 0;
}

int cmd_selfcheck(const Config& config) {
    const auto results = qpad::run_selfcheck(config.seed, config.scale);
    bool all_passed = true;
    for (const auto& suite : results) {
        std::printf("[%s] %-28s %zu cases, %zu failures%s%s\n",
                    suite.passed() ? "PASS" : "FAIL", suite.name.c_str(), suite.cases,
                    suite.failures, suite.note.empty() ? "" : ": ", suite.note.c_str());
        all_passed = all_passed && suite.passed();
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum circuit padding toolkit"};
    app.require_subcommand(1);

    Config config;
    if (const char* env = std::getenv("QPAD_SEED")) {
        config.seed = std::strtoull(env, nullptr, 10);
    }

    CLI::App* encode = app.add_subcommand("encode", "encode a circuit file as a symbol string");
    encode->add_option("circuit", config.input_path, "circuit file")->required();

    CLI::App* decode = app.add_subcommand("decode", "decode a symbol string to a circuit file");
    decode->add_option("string", config.symbol_text, "symbol string")->required();
    decode->add_option("--qubits", config.n_qubits, "qubit count")->required();
    decode->add_option("--gateset", config.gateset, "gateset name (default clifford_t)");

    CLI::App* pad = app.add_subcommand("pad", "embed a message into a circuit");
    pad->add_option("circuit", config.input_path, "circuit file")->required();
    pad->add_option("--message-hex", config.message_hex, "message as hex, MSB first");
    pad->add_option("--message-bits", config.message_bits, "message as a 01 string");

    CLI::App* extract = app.add_subcommand("extract", "recover an embedded message");
    extract->add_option("circuit", config.input_path, "circuit file")->required();

    CLI::App* strip = app.add_subcommand("strip", "remove the outermost embedded message");
    strip->add_option("circuit", config.input_path, "circuit file")->required();

    CLI::App* decide = app.add_subcommand("decide", "decide padded-family membership");
    decide->add_option("circuit", config.input_path, "circuit file")->required();
    decide->add_option("--yes-witness", config.yes_witness_path, "yes-instance circuit file")
        ->required();
    decide->add_option("--no-witness", config.no_witness_path, "no-instance circuit file")
        ->required();

    CLI::App* reduce = app.add_subcommand("reduce", "apply a composed one-one reduction");
    reduce->add_option("word", config.word_bits, "input word as a 01 string")->required();
    reduce->add_option("--via", config.reduction_name, "builtin reduction name")->required();
    reduce->add_option("--qubits", config.n_qubits, "instance qubit count (default 2)");
    reduce->add_option("--gateset", config.gateset, "gateset name (default clifford_t)");

    CLI::App* promise_check = app.add_subcommand("promise-check", "evaluate a promise expression");
    promise_check->add_option("--promise", config.promise_expr, "promise expression")->required();
    promise_check->add_option("circuits", config.input_paths, "circuit files")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "run the statevector simulator");
    simulate->add_option("circuit", config.input_path, "circuit file")->required();
    simulate->add_flag("--full-dist", config.full_dist, "print the full output distribution");

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the acceptance property suites");
    selfcheck->add_option("--seed", config.seed, "corpus seed (QPAD_SEED overrides the default)");
    selfcheck->add_option("--scale", config.scale, "case-count scale factor (default 1.0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (encode->parsed()) return cmd_encode(config);
        if (decode->parsed()) return cmd_decode(config);
        if (pad->parsed()) return cmd_pad(config);
        if (extract->parsed()) return cmd_extract(config);
        if (strip->parsed()) return cmd_strip(config);
        if (decide->parsed()) return cmd_decide(config);
        if (reduce->parsed()) return cmd_reduce(config);
        if (promise_check->parsed()) return cmd_promise_check(config);
        if (simulate->parsed()) return cmd_simulate(config);
        if (selfcheck->parsed()) return cmd_selfcheck(config);
    } catch (const FileError& e) {
        std::cerr << "qpad: " << e.message << "\n";
        return kExitBadInput;
    } catch (const qpad::ParseError& e) {
        std::cerr << "qpad: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const qpad::Error& e) {
        std::cerr << "qpad: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qpad: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitUsage;
}
