#include "arith/integer.hpp"

#include <limits>

#include "arith/error.hpp"

namespace arith {

BigInt gcd(const BigInt& x, const BigInt& y) {
  return boost::multiprecision::gcd(x, y);
}

std::string to_decimal(const ExactRational& value, int places) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half away from zero
  BigInt scaled = (num * scale * 2 + den) / (den * 2);

  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (places > 0) {
    std::string digits = frac.str();
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string to_fraction_string(const ExactRational& value) {
  const BigInt den = boost::multiprecision::denominator(value);
  std::string out = boost::multiprecision::numerator(value).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw RangeError("value " + value.str() + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace arith
