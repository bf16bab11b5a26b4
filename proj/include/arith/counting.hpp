#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith/integer.hpp"
#include "arith/shape.hpp"

namespace arith {

enum class Provenance { ClosedForm, Convolution, Enumeration };

std::string to_string(Provenance p);

/// One cell of a count table. `provenance` describes how `total` was
/// obtained when it is present, otherwise how `smooth` was.
struct CountEntry {
  BigInt smooth;
  std::optional<BigInt> total;
  Provenance provenance = Provenance::ClosedForm;
};

/// Counts keyed by (m, n). Lookups of smooth counts fall back to the
/// transposed cell, since CP_{m,n} and CP_{n,m} are the same graph.
class CountTable {
 public:
  void set(const Shape& shape, CountEntry entry);

  const CountEntry* find(const Shape& shape) const;
  /// Smooth count at `shape` or its transpose; throws MissingEntry.
  const BigInt& smooth_at(const Shape& shape) const;

  const std::map<Shape, CountEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Every pair of transposed cells present in the table agrees.
  bool transpose_consistent() const;

  /// Header m,n,smooth,total,provenance; an absent total is left empty.
  std::string to_csv() const;
  /// Array of objects with the same fields; counts are bare JSON integers
  /// of arbitrary length.
  std::string to_json() const;

 private:
  std::map<Shape, CountEntry> entries_;
};

/// Number of smooth structures on CP_{m,n} for min(m, n) <= 3.
/// Throws Unsupported otherwise.
std::int64_t smooth_count(std::size_t m, std::size_t n);

/// Ordered triples / pairs of nonnegative integers summing to n, optionally
/// with the first entry divisible by 4. All are zero for n < 0.
std::int64_t triples(std::int64_t n);
std::int64_t pairs(std::int64_t n);
std::int64_t triples_div4(std::int64_t n);
std::int64_t pairs_div4(std::int64_t n);

/// Smooth count on CP_{3,n} as the aggregate of the residue-class case
/// analysis (triples/pairs with zero extension). Requires n >= 3.
std::int64_t smooth_count_casewise(std::int64_t n);

/// The divisible-by-4 part of the CP_{3,n} case aggregate:
/// 2p'(n-6) + 2p'(n-7) + p'(n-8) + p'(n-9) + q'(n-7). Requires n >= 5.
std::int64_t div4_terms(std::int64_t n);

/// Same quantity from its mod-4 quadratic closed form, (3n^2 - 24n + c)/4
/// with c = 48, 45, 44, 49 for n = 0, 1, 2, 3 (mod 4). Requires n >= 5.
std::int64_t div4_terms_closed(std::int64_t n);

/// Smooth counts for every (m', n') with m' <= max_m <= 3 and n' <= max_n.
CountTable smooth_table_closed_form(std::size_t max_m, std::size_t max_n);

/// sum over m' <= m, n' <= n of C(m, m') C(n, n') |smooth(m', n')|.
/// Throws MissingEntry when the table lacks a needed cell.
BigInt total_count_convolution(std::size_t m, std::size_t n, const CountTable& smooth);

/// A closed form written against a reference Catalan index N = n + offset:
///   sum_i coeff_i C_{N + shift_i}
///   + sum_j coeff_j sum_{k = residue_j (mod 4), min_k_j <= k <= N} C(N, k).
struct ClosedForm {
  struct CatalanTerm {
    int shift;
    ExactRational coeff;
  };
  struct ResidueSumTerm {
    int residue;
    long min_k;
    ExactRational coeff;
  };

  int reference_offset = 0;
  std::size_t min_n = 1;  ///< smallest n for which the formula is exact
  std::vector<CatalanTerm> catalan;
  std::vector<ResidueSumTerm> residue_sums;
};

/// Total-count closed form for CP_{m,n}, m in {1, 2, 3}.
const ClosedForm& total_closed_form(std::size_t m);

/// Evaluates total_closed_form(m) at n exactly. Throws RangeError below the
/// formula's validity range and InvariantViolation if the rational
/// combination is not an integer.
BigInt total_count_closed(std::size_t m, std::size_t n);

/// Closed form where it is valid, convolution over closed-form smooth
/// counts otherwise. Requires m <= 3.
BigInt total_count(std::size_t m, std::size_t n);

/// lim total(m, n) / C_{n + reference_offset}.
struct AsymptoticConstant {
  ExactRational value;
  int reference_offset;
};

/// Derived from the closed form: C_{N+s}/C_N -> 4^s and
/// C(N, k)/C_N -> k/2^(k+1), with the residue-class series summed exactly.
AsymptoticConstant asymptotic_constant(std::size_t m);

/// sum over k = residue (mod 4), k >= min_k, k >= 1 of k / 2^(k+1).
ExactRational residue_class_ballot_limit(int residue, long min_k);

/// Integers x with x^2 - gamma x + 1 < 0: exactly [1, gamma - 1] for
/// gamma > 2. Throws PreconditionError otherwise.
std::pair<std::int64_t, std::int64_t> quadratic_negativity_range(std::int64_t gamma);

struct ProbeRow {
  std::size_t m;
  std::size_t n;
  BigInt smooth;
  BigInt binom;  ///< binom(m + n - 1, n)
  ExactRational ratio;
};

/// smooth(m, n) / binom(m + n - 1, n) for every cell of the table inside
/// the limits, ordered by (m, n). Purely observational.
std::vector<ProbeRow> conjecture_probe(std::size_t max_m, std::size_t max_n,
                                       const CountTable& smooth);

}  // namespace arith
