#include "qpad/stego.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "qpad/errors.hpp"
#include "qpad/spaces.hpp"

namespace qpad {

namespace {

std::vector<std::size_t> resolve_block(const GateSet& gateset,
                                       const std::vector<std::string>& names) {
    if (names.empty()) {
        throw std::invalid_argument("identity block must be nonempty");
    }
    std::vector<std::size_t> kinds;
    kinds.reserve(names.size());
    for (const std::string& name : names) {
        const auto index = gateset.index_of(name);
        if (!index) {
            throw std::invalid_argument("block kind '" + name + "' not in gateset '" +
                                        gateset.name() + "'");
        }
        if (gateset.kind(*index).arity() != 1) {
            throw std::invalid_argument("block kind '" + name + "' is not single-qubit");
        }
        kinds.push_back(*index);
    }
    return kinds;
}

ComplexMatrix block_product(const GateSet& gateset, const std::vector<std::size_t>& block) {
    // Gates apply in sequence order, so the product is m_last * ... * m_first.
    ComplexMatrix product = ComplexMatrix::identity(2);
    for (std::size_t kind : block) {
        product = gateset.kind(kind).matrix() * product;
    }
    return product;
}

bool is_suffix(const std::vector<std::size_t>& needle, const std::vector<std::size_t>& hay) {
    if (needle.size() > hay.size()) {
        return false;
    }
    return std::equal(needle.rbegin(), needle.rend(), hay.rbegin());
}

}  // namespace

IdentityBlockPair::IdentityBlockPair(GateSetPtr gateset, std::vector<std::string> block0_names,
                                     std::vector<std::string> block1_names)
    : gateset_(std::move(gateset)) {
    if (!gateset_) {
        throw std::invalid_argument("block pair requires a gateset");
    }
    block0_ = resolve_block(*gateset_, block0_names);
    block1_ = resolve_block(*gateset_, block1_names);

    if (!block_product(*gateset_, block0_).is_identity_up_to_phase(kBlockIdentityTol) ||
        !block_product(*gateset_, block1_).is_identity_up_to_phase(kBlockIdentityTol)) {
        throw std::invalid_argument("block product is not the identity up to global phase");
    }
    if (is_suffix(block0_, block1_) || is_suffix(block1_, block0_)) {
        throw std::invalid_argument("identity blocks may not be suffixes of each other");
    }
    for (std::size_t kind : block0_) {
        if (std::find(block1_.begin(), block1_.end(), kind) != block1_.end()) {
            throw std::invalid_argument("identity blocks must use disjoint gate kinds");
        }
    }
}

std::vector<bool> frame_bits(const Message& payload) {
    std::vector<bool> bits;
    bits.reserve(kFrameMagicBits + payload.size() + kFrameLengthBits);
    for (std::size_t b = 0; b < kFrameMagicBits; ++b) {
        bits.push_back((kFrameMagic >> (kFrameMagicBits - 1 - b)) & 1);
    }
    for (std::size_t i = 0; i < payload.size(); ++i) {
        bits.push_back(payload[i]);
    }
    const auto length = static_cast<std::uint32_t>(payload.size());
    for (std::size_t b = 0; b < kFrameLengthBits; ++b) {
        bits.push_back((length >> (kFrameLengthBits - 1 - b)) & 1);
    }
    return bits;
}

namespace {

std::mutex& pair_registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, IdentityBlockPair, std::less<>>& pair_registry() {
    static std::map<std::string, IdentityBlockPair, std::less<>> r = [] {
        std::map<std::string, IdentityBlockPair, std::less<>> seeded;
        seeded.emplace("clifford_t",
                       IdentityBlockPair(clifford_t(), {"H", "H"}, {"S", "S", "S", "S"}));
        return seeded;
    }();
    return r;
}

}  // namespace

IdentityBlockPair default_block_pair(const GateSet& gateset) {
    std::lock_guard<std::mutex> lock(pair_registry_mutex());
    auto it = pair_registry().find(gateset.name());
    if (it == pair_registry().end() || !(it->second.gateset() == gateset)) {
        throw NoBlockPair("no identity block pair registered for gateset '" + gateset.name() +
                          "'");
    }
    return it->second;
}

void register_block_pair(IdentityBlockPair pair) {
    std::lock_guard<std::mutex> lock(pair_registry_mutex());
    const std::string name = pair.gateset().name();
    pair_registry().insert_or_assign(name, std::move(pair));
}

Circuit pad(const Circuit& x, const Message& message) {
    const IdentityBlockPair pair = default_block_pair(x.gateset());
    const std::vector<bool> bits = frame_bits(message);

    std::vector<Gate> block_gates;
    for (bool bit : bits) {
        for (std::size_t kind : pair.block(bit)) {
            block_gates.push_back(Gate{kind, {0}});
        }
    }
    return insert_at_tail(x, 0, block_gates);
}

namespace {

struct FrameParse {
    Message payload;
    std::size_t consumed_gates = 0;
};

// Matches `count` blocks right-to-left starting at gates[pos], returning the
// bits in embedding order. Blocks are distinguishable by their first (and
// every) kind since the two blocks share no kinds.
std::optional<std::vector<bool>> parse_blocks_from_end(const std::vector<Gate>& gates,
                                                       const IdentityBlockPair& pair,
                                                       std::size_t count, std::size_t& pos) {
    std::vector<bool> bits_reversed;
    bits_reversed.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (pos == 0) {
            return std::nullopt;
        }
        const Gate& last = gates[pos - 1];
        bool bit;
        if (std::find(pair.block0().begin(), pair.block0().end(), last.kind) !=
            pair.block0().end()) {
            bit = false;
        } else if (std::find(pair.block1().begin(), pair.block1().end(), last.kind) !=
                   pair.block1().end()) {
            bit = true;
        } else {
            return std::nullopt;
        }
        const std::vector<std::size_t>& block = pair.block(bit);
        if (pos < block.size()) {
            return std::nullopt;
        }
        for (std::size_t j = 0; j < block.size(); ++j) {
            const Gate& gate = gates[pos - block.size() + j];
            if (gate.kind != block[j] || gate.operands != std::vector<std::uint32_t>{0}) {
                return std::nullopt;
            }
        }
        pos -= block.size();
        bits_reversed.push_back(bit);
    }
    std::reverse(bits_reversed.begin(), bits_reversed.end());
    return bits_reversed;
}

std::optional<FrameParse> parse_frame(const Circuit& z) {
    const IdentityBlockPair pair = default_block_pair(z.gateset());
    const std::vector<Gate>& gates = z.gates();
    std::size_t pos = gates.size();

    const auto length_bits = parse_blocks_from_end(gates, pair, kFrameLengthBits, pos);
    if (!length_bits) {
        return std::nullopt;
    }
    std::uint64_t length = 0;
    for (bool b : *length_bits) {
        length = (length << 1) | (b ? 1 : 0);
    }

    const auto payload_bits = parse_blocks_from_end(gates, pair, length, pos);
    if (!payload_bits) {
        return std::nullopt;
    }

    const auto magic_bits = parse_blocks_from_end(gates, pair, kFrameMagicBits, pos);
    if (!magic_bits) {
        return std::nullopt;
    }
    std::uint32_t magic = 0;
    for (bool b : *magic_bits) {
        magic = (magic << 1) | (b ? 1 : 0);
    }
    if (magic != kFrameMagic) {
        return std::nullopt;
    }

    return FrameParse{Message(std::move(*payload_bits)), gates.size() - pos};
}

}  // namespace

std::optional<Message> dec(const Circuit& z) {
    std::optional<FrameParse> frame;
    try {
        frame = parse_frame(z);
    } catch (const NoBlockPair&) {
        return std::nullopt;
    }
    if (!frame) {
        return std::nullopt;
    }
    return std::move(frame->payload);
}

Circuit unpad(const Circuit& z) {
    std::optional<FrameParse> frame;
    try {
        frame = parse_frame(z);
    } catch (const NoBlockPair&) {
        return z;
    }
    if (!frame) {
        return z;
    }
    return z.with_truncated(frame->consumed_gates);
}

}  // namespace qpad
