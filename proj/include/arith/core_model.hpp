#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arith/error.hpp"
#include "arith/integer.hpp"
#include "arith/matrix.hpp"
#include "arith/shape.hpp"

namespace arith {

/// Raw label assignment on CP_{m,n}; nothing about it is checked yet.
/// a[0] is a1 (the a-side junction vertex), b[0] is b1.
struct LabelSet {
  std::vector<BigInt> a;
  std::vector<BigInt> b;

  /// Throws InvalidLabels if either arm is empty.
  Shape shape() const;
  const std::vector<BigInt>& arm(Arm which) const { return which == Arm::A ? a : b; }
  std::vector<BigInt>& arm(Arm which) { return which == Arm::A ? a : b; }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

/// Quotients d_i = (neighbor sum) / label_i, ordered a1..am, b1..bn.
struct DVector {
  Shape shape;
  std::vector<BigInt> values;

  const BigInt& at(Vertex v) const;

  friend bool operator==(const DVector&, const DVector&) = default;
};

/// A validated arithmetical structure: positive labels, globally coprime,
/// every label dividing its neighbor sum (the doubled edge counted twice).
/// Instances can only be obtained through validation.
class ArithStructure {
 public:
  /// Validates `labels` as given (no rescaling); throws on any violation.
  static ArithStructure from_labels(LabelSet labels);

  const Shape& shape() const { return shape_; }
  const LabelSet& labels() const { return labels_; }
  const std::vector<BigInt>& a() const { return labels_.a; }
  const std::vector<BigInt>& b() const { return labels_.b; }
  const std::vector<BigInt>& arm(Arm which) const { return labels_.arm(which); }
  const BigInt& label(Vertex v) const;

  /// Same structure with the two arms exchanged, living on CP_{n,m}.
  ArithStructure mirrored() const;

  /// "(6,4,2 | 13,1)"
  std::string to_string() const;

  friend bool operator==(const ArithStructure& x, const ArithStructure& y) {
    return x.labels_ == y.labels_;
  }
  /// Orders by shape, then lexicographically by arm a, then arm b.
  friend bool operator<(const ArithStructure& x, const ArithStructure& y);

 private:
  ArithStructure(Shape shape, LabelSet labels)
      : shape_(shape), labels_(std::move(labels)) {}

  Shape shape_;
  LabelSet labels_;
};

/// Scaled representative with a_m = 2 (scale is 1 or 2).
struct RhoForm {
  Shape shape;
  LabelSet labels;
  BigInt scale;
};

/// Sum of the labels adjacent to `v`, with multiplicity. Throws InvalidVertex.
BigInt neighbor_sum(const LabelSet& labels, Vertex v);
BigInt neighbor_sum(const ArithStructure& s, Vertex v);

/// Checks positivity and divisibility at every vertex (in the order
/// a1..am, b1..bn) and then the global gcd; returns the d-vector.
/// Throws InvalidLabels, DivisibilityViolation or GcdViolation.
DVector validate(const LabelSet& labels);

/// True iff (diag(d) - A) r = 0 in exact arithmetic.
bool laplacian_check(const ArithStructure& s, const DVector& d);

/// Adjacency matrix of CP_{m,n} in the vertex order a1..am, b1..bn; the
/// a1-b1 entry is 2.
IntMatrix adjacency_matrix(const Shape& shape);

/// diag(d) - A
IntMatrix laplacian_matrix(const DVector& d);

/// Divides out the overall gcd. Divisibility is checked first (it is scale
/// invariant) so violations surface as in validate().
ArithStructure canonicalize(const LabelSet& labels);

/// Throws InvariantViolation if a_m is neither 1 nor 2.
RhoForm rho_form(const ArithStructure& s);

/// Compact JSON, fixed field order: {"m":3,"n":2,"a":[6,4,2],"b":[13,1]}.
std::string to_json(const ArithStructure& s);
std::string to_json(const LabelSet& labels);

/// Parses the JSON produced by to_json. Only checks syntax, the schema and
/// label positivity; the result still has to go through validate().
LabelSet labels_from_json(std::string_view text);

}  // namespace arith
