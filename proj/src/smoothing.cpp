#include "arith/smoothing.hpp"

#include <algorithm>
#include <set>

namespace arith {

namespace {

bool strictly_decreasing(const std::vector<BigInt>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::less_equal<>{}) == xs.end();
}

void append_moves(const std::vector<BigInt>& xs, Arm arm, std::vector<Move>& out) {
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (xs[i] == xs[i - 1] + xs[i + 1]) out.push_back({arm, MoveKind::InteriorRemoval, i});
  }
  const std::size_t len = xs.size();
  if (len >= 2 && xs[len - 1] == xs[len - 2]) {
    out.push_back({arm, MoveKind::EndRemoval, len - 1});
  }
}

}  // namespace

bool is_smooth(const ArithStructure& s) {
  return strictly_decreasing(s.a()) && strictly_decreasing(s.b());
}

std::vector<Move> smoothing_moves(const ArithStructure& s) {
  std::vector<Move> moves;
  append_moves(s.a(), Arm::A, moves);
  append_moves(s.b(), Arm::B, moves);
  return moves;
}

ArithStructure apply_move(const ArithStructure& s, const Move& move) {
  const auto moves = smoothing_moves(s);
  if (std::find(moves.begin(), moves.end(), move) == moves.end()) {
    throw IllegalMove("cannot remove " + Vertex{move.arm, move.index}.name() + " from " +
                      s.to_string());
  }
  LabelSet labels = s.labels();
  auto& xs = labels.arm(move.arm);
  xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(move.index));
  return ArithStructure::from_labels(std::move(labels));
}

ArithStructure smooth_ancestor(const ArithStructure& s) {
  ArithStructure current = s;
  for (auto moves = smoothing_moves(current); !moves.empty();
       moves = smoothing_moves(current)) {
    current = apply_move(current, moves.front());
  }
  return current;
}

std::vector<BigInt> decreasing_core(std::span<const BigInt> arm) {
  std::vector<BigInt> core;
  for (const auto& x : arm) {
    if (core.empty() || x < core.back()) core.push_back(x);
  }
  return core;
}

std::vector<std::vector<BigInt>> arm_extensions(std::span<const BigInt> arm,
                                                std::size_t length) {
  if (arm.empty()) throw PreconditionError("arm_extensions needs a nonempty arm");
  if (length < arm.size()) {
    throw PreconditionError("cannot extend an arm of length " + std::to_string(arm.size()) +
                            " to length " + std::to_string(length));
  }
  // Every operation adds exactly one entry, so grow one length at a time.
  std::set<std::vector<BigInt>> level{std::vector<BigInt>(arm.begin(), arm.end())};
  for (std::size_t len = arm.size(); len < length; ++len) {
    std::set<std::vector<BigInt>> next;
    for (const auto& xs : level) {
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        std::vector<BigInt> grown = xs;
        grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(i) + 1, xs[i] + xs[i + 1]);
        next.insert(std::move(grown));
      }
      std::vector<BigInt> grown = xs;
      grown.push_back(xs.back());
      next.insert(std::move(grown));
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<ArithStructure> descendants(const ArithStructure& smooth, const Shape& target) {
  if (!is_smooth(smooth)) {
    throw PreconditionError(smooth.to_string() + " is not smooth");
  }
  if (target.m() < smooth.shape().m() || target.n() < smooth.shape().n()) {
    throw PreconditionError("cannot grow " + smooth.shape().name() + " into " + target.name());
  }
  const auto a_arms = arm_extensions(smooth.a(), target.m());
  const auto b_arms = arm_extensions(smooth.b(), target.n());
  std::vector<ArithStructure> out;
  out.reserve(a_arms.size() * b_arms.size());
  // Both factor lists are sorted and duplicate-free, so the product is too.
  for (const auto& a : a_arms) {
    for (const auto& b : b_arms) out.push_back(ArithStructure::from_labels(LabelSet{a, b}));
  }
  return out;
}

}  // namespace arith
