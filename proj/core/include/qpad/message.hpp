#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpad {

/// A finite bit string carried into and out of circuits. Bit 0 is the first
/// bit embedded; hex renderings are most-significant-bit first. The length
/// must fit the frame's 32-bit length field.
class Message {
  public:
    Message() = default;

    /// Throws std::invalid_argument if bits.size() > 2^32 - 1.
    explicit Message(std::vector<bool> bits);

    /// Hex digits, MSB first; each digit contributes four bits.
    /// Throws std::invalid_argument on non-hex characters.
    static Message from_hex(std::string_view hex);

    /// A string of '0'/'1' characters, first character = first bit.
    static Message from_bit_string(std::string_view bits);

    /// Requires size() % 4 == 0; throws std::invalid_argument otherwise.
    std::string to_hex() const;
    std::string to_bit_string() const;

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<bool>& bits() const { return bits_; }

    void push_back(bool bit);

    bool operator==(const Message& rhs) const = default;
    auto operator<=>(const Message& rhs) const = default;

  private:
    std::vector<bool> bits_;
};

}  // namespace qpad
