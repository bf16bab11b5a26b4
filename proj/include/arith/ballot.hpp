#pragma once

#include <vector>

#include "arith/integer.hpp"

namespace arith {

/// binom(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

/// binom(2n, n) / (n + 1). Requires n >= 0.
BigInt catalan(long n);

/// C(n, k) = (k/n) binom(2n-k-1, n-1): the number of length-n arms that
/// smooth down to a given length-k arm. Zero outside 1 <= k <= n.
BigInt subdivision_count(long n, long k);

/// C(n, 0..n) in one pass via the ratio
/// C(n, k+1) = C(n, k) (k+1)(n-k) / (k (2n-k-1)). Entry 0 is zero.
std::vector<BigInt> subdivision_row(long n);

/// B(s, t) = ((s-t+1)/(s+1)) binom(s+t, s), for s >= t >= 0.
BigInt ballot_number(long s, long t);

/// Monotone lattice paths (0,0) -> (right, up) that never visit a point
/// with x > y. Plain dynamic programming; serves as the oracle for the
/// closed forms above.
BigInt lattice_path_count(long right, long up);

}  // namespace arith
