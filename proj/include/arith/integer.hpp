#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arith {

/// Exact integer used for labels, counts and matrix entries.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always stored reduced with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

BigInt gcd(const BigInt& x, const BigInt& y);

/// Renders `value` in fixed-point notation rounded half away from zero.
std::string to_decimal(const ExactRational& value, int places);

/// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const ExactRational& value);

/// Narrowing conversion that throws RangeError when `value` does not fit.
std::uint64_t to_u64(const BigInt& value);

}  // namespace arith
