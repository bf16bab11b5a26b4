#include "arith/residue_seq.hpp"

#include <numeric>

namespace arith {

std::uint64_t residue_length_from_four(std::uint64_t x) {
  static constexpr std::uint64_t kOffset[4] = {4, 7, 6, 13};
  return (x + kOffset[x % 4]) / 4;
}

namespace {

// The arm hanging off a junction label `head` whose opposite junction label
// is `across`: head, then residues of -2*across mod head, and so on, up to
// but excluding the first zero.
template <class Int>
std::vector<Int> smooth_arm(const Int& head, const Int& across) {
  std::vector<Int> arm = residue_sequence<Int>(2 * across, head);
  arm.erase(arm.begin());  // drop the 2*across seed
  arm.pop_back();          // drop the terminating zero
  return arm;
}

}  // namespace

ArithStructure smooth_from_pair(const BigInt& a1, const BigInt& b1) {
  if (a1 < 1 || b1 < 1) throw PreconditionError("junction labels must be positive");
  if (gcd(a1, b1) != 1) {
    throw PreconditionError("junction labels " + a1.str() + ", " + b1.str() + " are not coprime");
  }
  return ArithStructure::from_labels(LabelSet{smooth_arm(a1, b1), smooth_arm(b1, a1)});
}

LabelSet smooth_labels_from_pair(std::uint64_t a1, std::uint64_t b1) {
  if (a1 == 0 || b1 == 0 || a1 >= (1ULL << 62) || b1 >= (1ULL << 62)) {
    throw RangeError("junction labels must lie in [1, 2^62)");
  }
  if (std::gcd(a1, b1) != 1) throw PreconditionError("junction labels must be coprime");
  LabelSet labels;
  for (auto x : smooth_arm<std::uint64_t>(a1, b1)) labels.a.emplace_back(x);
  for (auto x : smooth_arm<std::uint64_t>(b1, a1)) labels.b.emplace_back(x);
  return labels;
}

}  // namespace arith
