#include "loco/bignum.hpp"

namespace loco {

BigInt bits_to_integer(const Bits& bits) {
  BigInt v = 0;
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
    v <<= 1;
    v |= static_cast<unsigned>(b);
  }
  return v;
}

Bits integer_to_bits(const BigInt& value, int width) {
  if (value < 0) throw std::invalid_argument("integer_to_bits: negative value");
  if (width < 0) throw std::invalid_argument("integer_to_bits: negative width");
  if (value > 0 && floor_log2(value) >= width) {
    throw std::invalid_argument("integer_to_bits: value does not fit in width");
  }
  Bits out(static_cast<std::size_t>(width), 0);
  for (int k = 0; k < width; ++k) {
    out[static_cast<std::size_t>(width - 1 - k)] =
        static_cast<std::uint8_t>(boost::multiprecision::bit_test(value, static_cast<unsigned>(k)));
  }
  return out;
}

std::string bits_to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits bits_from_string(const std::string& text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != '\n' && c != '\t' && c != '\r') {
      throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
    }
  }
  return out;
}

}  // namespace loco
