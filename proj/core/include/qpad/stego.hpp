#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpad/circuit.hpp"
#include "qpad/message.hpp"

namespace qpad {

/// Two single-qubit gate sequences over one gateset, each multiplying to the
/// identity up to global phase. They are the 0 and 1 symbols of the message
/// embedding. Uniqueness of right-to-left parsing is guaranteed by requiring
/// that no kind appears in both blocks and neither block is a suffix of the
/// other.
class IdentityBlockPair {
  public:
    /// Blocks are given as kind names; validated against the gateset:
    /// single-qubit kinds only, nonempty, products within 1e-12 of a phase
    /// times identity, kind-disjoint, not suffixes of each other.
    /// Throws std::invalid_argument on violation.
    IdentityBlockPair(GateSetPtr gateset, std::vector<std::string> block0_names,
                      std::vector<std::string> block1_names);

    const GateSet& gateset() const { return *gateset_; }
    GateSetPtr gateset_ptr() const { return gateset_; }

    /// Kind indices into the gateset, in application order.
    const std::vector<std::size_t>& block(bool bit) const { return bit ? block1_ : block0_; }
    const std::vector<std::size_t>& block0() const { return block0_; }
    const std::vector<std::size_t>& block1() const { return block1_; }

  private:
    GateSetPtr gateset_;
    std::vector<std::size_t> block0_;
    std::vector<std::size_t> block1_;
};

/// Identity product tolerance for block validation.
inline constexpr double kBlockIdentityTol = 1e-12;

/// Frame layout: 8 magic bits, then the payload, then the payload bit count
/// as 32 bits big-endian. The length field is last so the frame parses from
/// the end of the gate list.
inline constexpr std::uint8_t kFrameMagic = 0b10100101;
inline constexpr std::size_t kFrameMagicBits = 8;
inline constexpr std::size_t kFrameLengthBits = 32;

/// The frame's bit sequence for a payload: magic, payload, length.
std::vector<bool> frame_bits(const Message& payload);

/// Registered block pair for a gateset (built-in for clifford_t: [H,H] and
/// [S,S,S,S]). Throws NoBlockPair if none is registered.
IdentityBlockPair default_block_pair(const GateSet& gateset);
void register_block_pair(IdentityBlockPair pair);

/// Appends the frame for `message` to qubit 0 as identity blocks, one block
/// per frame bit (bit 0 -> block0, bit 1 -> block1). The output has the same
/// unitary as `x`. Throws NoBlockPair.
Circuit pad(const Circuit& x, const Message& message);

/// Recovers the message from a padded circuit by parsing blocks from the end
/// of the gate list. Total: returns nullopt on any parse failure.
std::optional<Message> dec(const Circuit& z);

/// Removes the outermost frame if one parses; otherwise returns z unchanged.
Circuit unpad(const Circuit& z);

}  // namespace qpad
