#include "qpad/reductions.hpp"

#include <set>
#include <stdexcept>

#include "qpad/codec.hpp"
#include "qpad/decider.hpp"
#include "qpad/errors.hpp"
#include "qpad/stego.hpp"

namespace qpad {

namespace {

std::size_t bits_per_symbol(const CodecScheme& scheme) {
    std::size_t bits = 1;
    while ((std::size_t{1} << bits) < scheme.alphabet_size()) {
        ++bits;
    }
    return bits;
}

}  // namespace

Word encode_instance(const Circuit& circuit) {
    const CodecScheme scheme(circuit.gateset_ptr(), circuit.n_qubits());
    const std::size_t chunk = bits_per_symbol(scheme);
    const std::vector<unsigned> symbols = encode(circuit);

    std::vector<bool> bits;
    bits.reserve(symbols.size() * chunk);
    for (unsigned symbol : symbols) {
        for (std::size_t b = 0; b < chunk; ++b) {
            bits.push_back((symbol >> (chunk - 1 - b)) & 1);
        }
    }
    return Word(std::move(bits));
}

Circuit decode_instance(const Word& word, const InstanceSpace& space) {
    const CodecScheme scheme(space.gateset, space.n_qubits);
    const std::size_t chunk = bits_per_symbol(scheme);
    if (word.size() % chunk != 0) {
        throw MalformedString("instance word length " + std::to_string(word.size()) +
                              " is not a multiple of the symbol width " + std::to_string(chunk));
    }
    std::vector<unsigned> symbols;
    symbols.reserve(word.size() / chunk);
    for (std::size_t i = 0; i < word.size(); i += chunk) {
        unsigned symbol = 0;
        for (std::size_t b = 0; b < chunk; ++b) {
            symbol = (symbol << 1) | (word[i + b] ? 1u : 0u);
        }
        if (symbol >= scheme.alphabet_size()) {
            throw MalformedString("chunk value " + std::to_string(symbol) +
                                  " is outside the symbol alphabet");
        }
        symbols.push_back(symbol);
    }
    return decode(symbols, space.n_qubits, space.gateset);
}

Circuit pairing_f(const Circuit& circuit, const Word& word) {
    return pad(circuit, word);
}

ReductionFn compose_one_one(const ReductionFn& g, const InstanceSpace& space) {
    ReductionFn h;
    h.name = "one-one(" + g.name + ")";
    h.cost_degree = std::max(g.cost_degree, 1);
    h.map = [g = g.map, g_name = g.name, space](const Word& word) -> Word {
        const Word instance_word = g(word);
        Circuit instance = [&] {
            try {
                return decode_instance(instance_word, space);
            } catch (const Error& e) {
                throw MalformedReduction("reduction '" + g_name +
                                         "' produced a malformed instance: " + e.what());
            }
        }();
        if (dec(instance)) {
            throw MalformedReduction("reduction '" + g_name +
                                     "' produced an instance that already carries a frame");
        }
        return encode_instance(pairing_f(instance, word));
    };
    return h;
}

bool check_injective(const ReductionFn& h, std::span<const Word> domain) {
    std::set<Word> image;
    for (const Word& word : domain) {
        image.insert(h(word));
    }
    return image.size() == domain.size();
}

ReductionFn builtin_reduction(std::string_view name, const InstanceSpace& space) {
    if (name == "const-yes" || name == "const-no") {
        const Circuit instance = name == "const-yes"
                                     ? canonical_yes_witness(space.n_qubits)
                                     : canonical_no_witness(space.n_qubits);
        return ReductionFn{std::string(name), 0,
                           [word = encode_instance(instance)](const Word&) { return word; }};
    }
    if (name == "odd-parity") {
        const Word yes = encode_instance(canonical_yes_witness(space.n_qubits));
        const Word no = encode_instance(canonical_no_witness(space.n_qubits));
        return ReductionFn{"odd-parity", 1, [yes, no](const Word& word) {
                               std::size_t ones = 0;
                               for (std::size_t i = 0; i < word.size(); ++i) {
                                   ones += word[i] ? 1 : 0;
                               }
                               return ones % 2 == 1 ? yes : no;
                           }};
    }
    if (name == "identity") {
        return ReductionFn{"identity", 1, [](const Word& word) { return word; }};
    }
    throw std::invalid_argument("unknown builtin reduction '" + std::string(name) + "'");
}

}  // namespace qpad
