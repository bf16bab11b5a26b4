#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arith/core_model.hpp"

namespace arith {

enum class MoveKind {
  EndRemoval,       ///< last label of an arm equals its neighbor
  InteriorRemoval,  ///< label equals the sum of its two arm neighbors
};

struct Move {
  Arm arm;
  MoveKind kind;
  std::size_t index;  ///< 0-based position of the removed vertex in its arm

  friend bool operator==(const Move&, const Move&) = default;
};

/// Both arms strictly decreasing away from the junction.
bool is_smooth(const ArithStructure& s);

/// Every applicable move, arm a first, by increasing index. The junction
/// vertices are never removable.
std::vector<Move> smoothing_moves(const ArithStructure& s);

/// Throws IllegalMove if `move` is not among smoothing_moves(s).
ArithStructure apply_move(const ArithStructure& s, const Move& move);

/// Applies moves (always the first available) until none remain.
ArithStructure smooth_ancestor(const ArithStructure& s);

/// Greedy record-minima subsequence of an arm: keeps each entry strictly
/// smaller than the last kept one. Equals the arm of the smooth ancestor.
std::vector<BigInt> decreasing_core(std::span<const BigInt> arm);

/// All distinct arms of `length` reachable from `arm` by inserting the sum
/// of two adjacent entries between them or by repeating the last entry.
/// Sorted lexicographically. Throws PreconditionError if length < arm size.
std::vector<std::vector<BigInt>> arm_extensions(std::span<const BigInt> arm,
                                                std::size_t length);

/// All structures on `target` whose smooth ancestor is `smooth`: the
/// product of the arm extensions of both arms. Sorted, no duplicates.
std::vector<ArithStructure> descendants(const ArithStructure& smooth, const Shape& target);

}  // namespace arith
