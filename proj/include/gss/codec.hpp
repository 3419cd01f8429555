#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gss/graph.hpp"

namespace gss {

using BigInt = boost::multiprecision::cpp_int;

/// Canonical fixed-length image of a colored graph: n(n-1)/2 binary structure
/// digits in the lower-triangle order, followed by n color digits over radix k
/// (none when k = 1). Fixed length makes leading zeros significant, so (n, k)
/// always travel with the digits.
struct DigitString {
    std::uint32_t n = 1;
    std::uint32_t k = 1;
    std::vector<std::uint8_t> structure_digits;
    std::vector<std::uint32_t> color_digits;

    std::size_t digit_count() const {
        return structure_digits.size() + color_digits.size();
    }

    /// All digits in order, structure then colors, as a flat sequence.
    std::vector<std::uint32_t> flatten() const;

    /// Decimal rendering; color digits are separated by '.' when k > 10 so
    /// multi-digit values stay unambiguous.
    std::string to_string() const;

    bool operator==(const DigitString&) const = default;
};

/// Per-position radices of a digit string for (n, k): n(n-1)/2 twos, then n
/// copies of k when k > 1.
std::vector<std::uint32_t> digit_radices(std::uint32_t n, std::uint32_t k);

/// Rebuild a DigitString from a flat digit sequence for (n, k).
DigitString unflatten_digits(const std::vector<std::uint32_t>& digits,
                             std::uint32_t n, std::uint32_t k);

/// A bit sequence to be carried through the number-as-graph roundtrip. The
/// declared length is the bit count before any triangle padding.
struct BitPayload {
    std::vector<std::uint8_t> bits;

    std::size_t declared_length() const { return bits.size(); }

    bool operator==(const BitPayload&) const = default;
};

DigitString encode_graph(const ColoredGraph& cg);
ColoredGraph decode_graph(const DigitString& d);

/// Mixed-radix value of the digit string, most-significant digit first.
BigInt digits_to_integer(const DigitString& d);

/// Inverse of digits_to_integer; throws CodecError when v lies outside the
/// (n, k) digit space.
DigitString integer_to_digits(const BigInt& v, std::uint32_t n, std::uint32_t k);

/// Cardinality of the digit space: 2^(n(n-1)/2) * k^n.
BigInt digit_space_size(std::uint32_t n, std::uint32_t k);

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
BigInt gamma(std::uint32_t n);

/// Embed the bits into the smallest graph whose triangle holds them, padding
/// the remaining triangle positions with zeros.
Graph number_to_graph(const BitPayload& p);

/// Recover the first l triangle bits; throws CodecError if any triangle bit
/// past l is nonzero (the padding region must have stayed untouched).
BitPayload graph_to_number(const Graph& g, std::size_t declared_length);

} // namespace gss
