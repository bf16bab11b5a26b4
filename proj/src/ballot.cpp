#include "arith/ballot.hpp"

#include "arith/error.hpp"

namespace arith {

BigInt binomial(long n, long k) {
  if (n < 0) throw PreconditionError("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // After step i the accumulator is binom(n-k+i, i), so each division is exact.
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

BigInt catalan(long n) {
  if (n < 0) throw PreconditionError("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

BigInt subdivision_count(long n, long k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return k * binomial(2 * n - k - 1, n - 1) / n;
}

std::vector<BigInt> subdivision_row(long n) {
  if (n < 1) throw PreconditionError("subdivision_row needs n >= 1");
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[1] = catalan(n - 1);
  for (long k = 1; k < n; ++k) {
    row[k + 1] = row[k] * (k + 1) * (n - k) / (k * (2 * n - k - 1));
  }
  return row;
}

BigInt ballot_number(long s, long t) {
  if (t < 0 || s < t) throw PreconditionError("ballot_number needs s >= t >= 0");
  return (s - t + 1) * binomial(s + t, s) / (s + 1);
}

BigInt lattice_path_count(long right, long up) {
  if (right < 0 || up < 0 || right > up) return 0;
  // ways[x] holds the count for (x, y) while sweeping y upward.
  std::vector<BigInt> ways(static_cast<std::size_t>(right) + 1);
  ways[0] = 1;
  for (long y = 0; y <= up; ++y) {
    for (long x = 1; x <= right; ++x) {
      if (x > y) {
        ways[x] = 0;
      } else {
        ways[x] += ways[x - 1];
      }
    }
  }
  return ways[right];
}

}  // namespace arith
