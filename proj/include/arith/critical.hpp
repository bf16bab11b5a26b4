#pragma once

#include <vector>

#include "arith/core_model.hpp"
#include "arith/matrix.hpp"

namespace arith {

/// left * input * right == diagonal, with left and right unimodular.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

/// Smith normal form by unimodular row and column operations. The pivot is
/// always the nonzero entry of least absolute value in the remaining
/// submatrix, ties broken by row-major position. Diagonal entries come out
/// nonnegative with d1 | d2 | ... and zeros last.
SmithDecomposition smith_decomposition(const IntMatrix& m);

/// Just the min(rows, cols) diagonal entries of smith_decomposition(m).
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

enum class GroupType { Trivial, Z2 };

const char* to_string(GroupType type);

struct CriticalGroupInfo {
  BigInt order;
  GroupType type;
  std::vector<BigInt> snf;
};

/// 2 / (a_m b_n). Throws InvariantViolation if a_m b_n is not 1 or 2.
int critical_order(const ArithStructure& s);

/// Torsion of coker L(G, d) from the Smith normal form. Throws
/// InvalidStructure unless exactly one diagonal entry is zero, and
/// InvariantViolation if the order is not 1 or 2.
CriticalGroupInfo critical_group(const ArithStructure& s);

}  // namespace arith
