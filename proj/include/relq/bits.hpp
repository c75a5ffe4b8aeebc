#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "relq/errors.hpp"

namespace relq {

// Bit-string convention used across the library: a width-w value is written
// b1 b2 ... bw with b1 the most significant bit, so "10" == 2 and "01" == 1.

inline std::string bits_to_string(std::uint64_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if ((value >> (width - 1 - b)) & 1u) s[static_cast<std::size_t>(b)] = '1';
    }
    return s;
}

inline std::uint64_t parse_bits(const std::string &s, int width) {
    if (static_cast<int>(s.size()) != width)
        throw InvalidValue("bit string '" + s + "' does not have width " + std::to_string(width));
    std::uint64_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw InvalidValue("bit string '" + s + "' contains a character other than 0/1");
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return v;
}

/// Bit b (1-based, b=1 most significant) of a width-w value.
inline int bit_of(std::uint64_t value, int width, int bit) {
    if (bit < 1 || bit > width)
        throw InvalidBit("bit " + std::to_string(bit) + " outside width " + std::to_string(width));
    return static_cast<int>((value >> (width - bit)) & 1u);
}

/// Parity of the GF(2) inner product <a,b>.
inline int parity_dot(std::uint64_t a, std::uint64_t b) {
    return std::popcount(a & b) & 1;
}

} // namespace relq
