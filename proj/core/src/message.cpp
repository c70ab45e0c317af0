#include "qpad/message.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace qpad {

namespace {

constexpr std::size_t kMaxBits = std::numeric_limits<std::uint32_t>::max();

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Message::Message(std::vector<bool> bits) : bits_(std::move(bits)) {
    if (bits_.size() > kMaxBits) {
        throw std::invalid_argument("message exceeds 2^32 - 1 bits");
    }
}

Message Message::from_hex(std::string_view hex) {
    std::vector<bool> bits;
    bits.reserve(hex.size() * 4);
    for (char c : hex) {
        const int v = hex_value(c);
        if (v < 0) {
            throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
        }
        for (int b = 3; b >= 0; --b) {
            bits.push_back((v >> b) & 1);
        }
    }
    return Message(std::move(bits));
}

Message Message::from_bit_string(std::string_view str) {
    std::vector<bool> bits;
    bits.reserve(str.size());
    for (char c : str) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
        }
        bits.push_back(c == '1');
    }
    return Message(std::move(bits));
}

std::string Message::to_hex() const {
    if (bits_.size() % 4 != 0) {
        throw std::invalid_argument("bit length " + std::to_string(bits_.size()) +
                                    " is not a multiple of 4; use to_bit_string");
    }
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bits_.size() / 4);
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
        int v = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            v = (v << 1) | (bits_[i + b] ? 1 : 0);
        }
        out += digits[v];
    }
    return out;
}

std::string Message::to_bit_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (bool b : bits_) {
        out += b ? '1' : '0';
    }
    return out;
}

void Message::push_back(bool bit) {
    if (bits_.size() >= kMaxBits) {
        throw std::invalid_argument("message exceeds 2^32 - 1 bits");
    }
    bits_.push_back(bit);
}

}  // namespace qpad
