#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace loco {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Message bits, most significant bit first.
using Bits = std::vector<std::uint8_t>;

inline bool is_integer(const BigRat& r) { return denominator(r) == 1; }

/// Exact rational -> integer. The cardinality identities guarantee every
/// exposed count and per-symbol contribution is integral; a failure here is
/// an arithmetic bug, not bad input.
inline BigInt to_integer(const BigRat& r) {
  if (!is_integer(r)) {
    throw std::logic_error("non-integral exact count: " + r.str());
  }
  return numerator(r);
}

inline int floor_log2(const BigInt& v) {
  if (v < 1) throw std::invalid_argument("floor_log2 requires a value >= 1");
  return static_cast<int>(boost::multiprecision::msb(v));
}

BigInt bits_to_integer(const Bits& bits);

/// Fixed-width big-endian expansion; throws if value needs more than `width` bits.
Bits integer_to_bits(const BigInt& value, int width);

std::string bits_to_string(const Bits& bits);
Bits bits_from_string(const std::string& text);

}  // namespace loco
