#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "graver/errors.hpp"

namespace graver {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline int sign(const BigInt& x) { return x.sign(); }

/// Parses an optionally signed decimal integer. Rejects the hex/octal
/// prefixes that the cpp_int string constructor would otherwise accept.
inline BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw ParseError("not a decimal integer: '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    }
    value *= 10;
    value += c - '0';
  }
  return negative ? BigInt(-value) : value;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// 2^k as an exact integer.
inline BigInt pow2(unsigned k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

}  // namespace graver
