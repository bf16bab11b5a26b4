#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace arith {

/// The doubled-edge path CP_{m,n}: arm a has m vertices, arm b has n, and
/// a1 and b1 are joined by two parallel edges.
class Shape {
 public:
  Shape(std::size_t m, std::size_t n);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t vertex_count() const { return m_ + n_; }
  Shape transposed() const { return Shape(n_, m_); }

  /// "CP_{m,n}"
  std::string name() const;

  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
};

enum class Arm { A, B };

constexpr Arm other(Arm arm) { return arm == Arm::A ? Arm::B : Arm::A; }

/// A vertex addressed by arm and 0-based position; position 0 is the junction.
struct Vertex {
  Arm arm;
  std::size_t index;

  /// "a1", "b3", ... (1-based, as in the usual notation)
  std::string name() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

}  // namespace arith
