#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith/core_model.hpp"
#include "arith/counting.hpp"

namespace arith {

/// Box [1, a] x [1, b] of junction labels (a1, b1) in canonical form.
struct ScanBounds {
  std::uint64_t a = 1;
  std::uint64_t b = 1;

  friend bool operator==(const ScanBounds&, const ScanBounds&) = default;
};

/// How far a scanned cell can be trusted to hold every smooth structure.
enum class CellStatus {
  Incomplete,  ///< neither certified nor stable
  Stabilized,  ///< count unchanged from the half-size box (heuristic)
  Certified,   ///< box contains the known extremal junction labels
};

std::string to_string(CellStatus status);

/// The weaker of two statuses.
CellStatus weakest(CellStatus x, CellStatus y);

struct ScanCell {
  std::vector<ArithStructure> structures;  ///< sorted by (a1, b1)
  std::size_t half_box_count = 0;  ///< structures with a1 <= a/2, b1 <= b/2
  CellStatus status = CellStatus::Incomplete;
};

struct ScanOptions {
  ScanBounds bounds;
  std::size_t max_m = std::numeric_limits<std::size_t>::max();
  std::size_t max_n = std::numeric_limits<std::size_t>::max();
  /// 0 means: ARITH_THREADS if set, else the hardware concurrency.
  unsigned threads = 0;
};

class ScanResult {
 public:
  ScanResult(ScanBounds bounds, std::map<Shape, ScanCell> cells)
      : bounds_(bounds), cells_(std::move(cells)) {}

  const ScanBounds& bounds() const { return bounds_; }
  const std::map<Shape, ScanCell>& cells() const { return cells_; }
  /// nullptr when no pair in the box produced this shape.
  const ScanCell* cell(const Shape& shape) const;
  CellStatus status(const Shape& shape) const;

  /// Smooth counts of every cell, provenance Enumeration.
  CountTable to_table() const;

 private:
  ScanBounds bounds_;
  std::map<Shape, ScanCell> cells_;
};

/// Thread count from ARITH_THREADS (when a positive integer), otherwise the
/// hardware concurrency (at least 1).
unsigned configured_thread_count();

/// Smallest box that contains every smooth structure on `shape` when
/// min(m, n) <= 2, from the known extremal junction labels: b1 <= 4n for
/// m = 1 (doubled here), a1 <= 8n + 2 and b1 <= 4n^2 + 4n for m = 2.
std::optional<ScanBounds> certified_bounds(const Shape& shape);

/// Box for shapes without a known bound, sized from the observed growth of
/// the extremal labels: 16n^2 by 8n^3 when the short arm has length 3,
/// 8 l 3^s on both sides for longer short arms (s, l the arm lengths),
/// rounded up to powers of two. Twice the certified box when one exists.
/// A heuristic.
ScanBounds default_bounds(const Shape& shape);

/// certified_bounds when available, else default_bounds.
ScanBounds recommended_bounds(const Shape& shape);

CellStatus certify(const Shape& shape, const ScanBounds& bounds, const ScanCell& cell);

/// Builds the smooth structure of every coprime (a1, b1) in the box and
/// buckets it by shape (cells beyond max_m x max_n are dropped). Work is
/// split into contiguous a1 ranges; the merged output does not depend on
/// the thread count.
ScanResult scan_pairs(const ScanOptions& options);

struct Enumeration {
  std::vector<ArithStructure> structures;
  CellStatus status = CellStatus::Incomplete;
};

/// Smooth structures on `shape` sorted by (a1, b1).
Enumeration enumerate_smooth(const Shape& shape, const ScanBounds& bounds);
Enumeration enumerate_smooth(const Shape& shape, const ScanResult& scan);

/// Every structure on `shape`, as the union of the descendants of all
/// smooth structures on shapes (m', n') <= (m, n). Sorted, no duplicates.
/// The status is the weakest among the contributing cells.
Enumeration enumerate_all(const Shape& shape, const ScanBounds& bounds);
Enumeration enumerate_all(const Shape& shape, const ScanResult& scan);

struct JunctionMaxima {
  BigInt a1;
  BigInt b1;
};

/// Largest a1 and b1 over the rho-forms (a_m = 2) of `structures`.
JunctionMaxima max_junction_label(const std::vector<ArithStructure>& structures);

}  // namespace arith
