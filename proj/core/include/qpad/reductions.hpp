#pragma once

#include <functional>
#include <span>
#include <string>

#include "qpad/circuit.hpp"
#include "qpad/message.hpp"

namespace qpad {

/// Words of the reduction machinery are bit strings; a word doubles as the
/// message payload when it is paired into a circuit.
using Word = Message;

/// A total computable word-to-word mapping with a polynomial cost tag.
struct ReductionFn {
    std::string name;
    int cost_degree = 1;
    std::function<Word(const Word&)> map;

    Word operator()(const Word& word) const { return map(word); }
};

/// The fixed instance space reductions target: outputs of a many-one
/// reduction are encodings of circuits over this gateset and qubit count.
struct InstanceSpace {
    GateSetPtr gateset;
    std::uint32_t n_qubits = 1;
};

/// Circuit instances as words: each codec symbol is packed into
/// ceil(log2(Xi + 2)) bits, most significant first.
Word encode_instance(const Circuit& circuit);

/// Inverse of encode_instance. Throws MalformedString when the word's length
/// is not a whole number of symbol chunks, a chunk is outside the alphabet,
/// or the symbols do not decode.
Circuit decode_instance(const Word& word, const InstanceSpace& space);

/// The weak-paddability pairing: pairing_f(c, y) = pad(c, y). One-one in the
/// (circuit, word) pair and membership-preserving in the circuit.
Circuit pairing_f(const Circuit& circuit, const Word& word);

/// Upgrades a many-one reduction g into the one-one reduction
///   h(x) = encode(pairing_f(decode(g(x)), x)).
/// h is injective regardless of g's injectivity, and preserves membership
/// iff g does. Outputs of g that fail to decode, or that decode to a circuit
/// already carrying a frame, raise MalformedReduction.
ReductionFn compose_one_one(const ReductionFn& g, const InstanceSpace& space);

/// True iff h is injective on the finite domain (image size == domain size).
bool check_injective(const ReductionFn& h, std::span<const Word> domain);

/// Demo many-one reductions for the CLI and tests, over two-qubit clifford_t
/// instances:
///   const-yes    every word -> the canonical yes-instance
///   const-no     every word -> the canonical no-instance
///   odd-parity   words with an odd number of 1-bits -> yes, else no
///   identity     the word is already an instance encoding
/// Throws std::invalid_argument for an unknown name.
ReductionFn builtin_reduction(std::string_view name, const InstanceSpace& space);

}  // namespace qpad
