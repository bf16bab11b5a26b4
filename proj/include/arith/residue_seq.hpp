#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "arith/core_model.hpp"
#include "arith/integer.hpp"

namespace arith {

/// Least residue of -x modulo `mod`, i.e. the unique r in [0, mod) with
/// mod | x + r. Requires mod > 0 and x >= 0.
namespace detail {
template <class Int>
bool is_negative(const Int& x) {
  if constexpr (std::numeric_limits<Int>::is_signed) {
    return x < 0;
  } else {
    return false;
  }
}
}  // namespace detail

template <class Int>
Int least_residue_of_negation(const Int& x, const Int& mod) {
  Int r = x % mod;
  return r == 0 ? Int(0) : Int(mod - r);
}

/// x1, x2, x3, ... where each later term is the least residue of -x_{i-2}
/// mod x_{i-1}; stops at (and includes) the first zero.
template <class Int>
std::vector<Int> residue_sequence(Int x1, Int x2) {
  if (x1 == 0 || detail::is_negative(x1) || detail::is_negative(x2)) throw PreconditionError("residue_sequence needs x1 > 0, x2 >= 0");
  std::vector<Int> seq{x1, x2};
  while (seq.back() != 0) {
    const Int& prev = seq[seq.size() - 2];
    const Int& last = seq.back();
    seq.push_back(least_residue_of_negation(prev, last));
  }
  return seq;
}

/// Index (1-based) of the last positive term of residue_sequence(x1, x2).
/// Counting stops once the index would exceed `cap`, in which case cap + 1
/// is returned; scans use this to abandon long sequences early.
template <class Int>
std::size_t residue_length(Int x1, Int x2,
                           std::size_t cap = std::numeric_limits<std::size_t>::max() - 1) {
  if (x1 == 0 || detail::is_negative(x1) || detail::is_negative(x2)) throw PreconditionError("residue_length needs x1 > 0, x2 >= 0");
  std::size_t index = 1;
  while (x2 != 0) {
    if (index > cap) return cap + 1;
    Int next = least_residue_of_negation(x1, x2);
    x1 = std::move(x2);
    x2 = std::move(next);
    ++index;
  }
  return index;
}

/// Closed form of residue_length(4, x): (x + e)/4 with e = 4, 7, 6, 13 for
/// x = 0, 1, 2, 3 (mod 4).
std::uint64_t residue_length_from_four(std::uint64_t x);

/// The unique smooth structure with junction labels (a1, b1): each arm is
/// the residue sequence started from the doubled opposite junction label,
/// truncated before its first zero. The shape is
/// (residue_length(2 b1, a1) - 1, residue_length(2 a1, b1) - 1).
/// Throws PreconditionError unless a1, b1 >= 1 and gcd(a1, b1) = 1.
ArithStructure smooth_from_pair(const BigInt& a1, const BigInt& b1);

/// Arm labels only, in machine integers; used by the pair scan. Requires
/// coprime inputs below 2^62.
LabelSet smooth_labels_from_pair(std::uint64_t a1, std::uint64_t b1);

}  // namespace arith
