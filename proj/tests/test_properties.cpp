// Randomized checks. Seeds are fixed so failures reproduce.

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "arith/ballot.hpp"
#include "arith/critical.hpp"
#include "arith/enumeration.hpp"
#include "arith/residue_seq.hpp"
#include "arith/smoothing.hpp"

using namespace arith;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

ArithStructure random_smooth(std::uint64_t limit) {
  for (;;) {
    const auto a = uniform(1, limit), b = uniform(1, limit);
    if (std::gcd(a, b) == 1) return smooth_from_pair(a, b);
  }
}

// A random descendant: random growth of each arm by the inverse moves.
ArithStructure random_structure(std::uint64_t limit, std::size_t extra) {
  LabelSet labels = random_smooth(limit).labels();
  for (std::size_t step = 0; step < extra; ++step) {
    auto& arm = labels.arm(uniform(0, 1) ? Arm::A : Arm::B);
    const std::size_t pos = uniform(0, arm.size() - 1);
    if (pos + 1 == arm.size()) {
      arm.push_back(arm.back());
    } else {
      arm.insert(arm.begin() + static_cast<std::ptrdiff_t>(pos) + 1, arm[pos] + arm[pos + 1]);
    }
  }
  return ArithStructure::from_labels(std::move(labels));
}

ArithStructure random_smoothing(ArithStructure s) {
  for (auto moves = smoothing_moves(s); !moves.empty(); moves = smoothing_moves(s)) {
    s = apply_move(s, moves[uniform(0, moves.size() - 1)]);
  }
  return s;
}

}  // namespace

TEST(ResidueProps, ShiftFirstArgument) {
  for (int trial = 0; trial < 10000; ++trial) {
    const auto x = uniform(1, 5000), y = uniform(0, 5000), k = uniform(0, 50);
    EXPECT_EQ(residue_length<std::uint64_t>(x + k * y, y), residue_length<std::uint64_t>(x, y));
  }
}

TEST(ResidueProps, ShiftSecondArgument) {
  for (int trial = 0; trial < 10000; ++trial) {
    const auto x = uniform(1, 5000), y = uniform(0, 5000), k = uniform(0, 50);
    EXPECT_EQ(residue_length<std::uint64_t>(x, k * x + y), k + residue_length<std::uint64_t>(x, y));
  }
}

TEST(ResidueProps, FourClosedForm) {
  for (std::uint64_t x = 1; x <= 10000; ++x) {
    ASSERT_EQ(residue_length_from_four(x), residue_length<std::uint64_t>(4, x)) << x;
  }
}

TEST(CoreProps, ValidStructuresSatisfyLaplacian) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_structure(400, uniform(0, 6));
    EXPECT_TRUE(laplacian_check(s, validate(s.labels())));
    const auto m = s.mirrored();
    EXPECT_NO_THROW(validate(m.labels()));
    const BigInt am = s.a().back(), bn = s.b().back();
    EXPECT_TRUE(am <= 2 && bn <= 2 && am * bn <= 2) << s.to_string();
  }
}

TEST(CoreProps, CanonicalizeUndoesScaling) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_structure(200, uniform(0, 4));
    const BigInt k = uniform(1, 1000000);
    LabelSet scaled = s.labels();
    for (auto* arm : {&scaled.a, &scaled.b}) {
      for (auto& x : *arm) x *= k;
    }
    const auto c = canonicalize(scaled);
    EXPECT_EQ(c, s);
    EXPECT_EQ(canonicalize(c.labels()), c);
  }
}

TEST(SmoothingProps, RandomOrderReachesSameAncestor) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_structure(300, uniform(0, 8));
    const auto expected = smooth_ancestor(s);
    EXPECT_EQ(expected.a(), decreasing_core(s.a()));
    EXPECT_EQ(expected.b(), decreasing_core(s.b()));
    for (int shuffle = 0; shuffle < 20; ++shuffle) EXPECT_EQ(random_smoothing(s), expected);
  }
}

TEST(SmoothingProps, DescendantsRoundTrip) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto base = random_smooth(120);
    if (base.shape().m() > 4 || base.shape().n() > 4) continue;
    const Shape target(base.shape().m() + uniform(0, 2), base.shape().n() + uniform(0, 2));
    const auto kids = descendants(base, target);
    EXPECT_EQ(BigInt(kids.size()),
              subdivision_count(target.m(), base.shape().m()) *
                  subdivision_count(target.n(), base.shape().n()));
    for (const auto& d : kids) EXPECT_EQ(smooth_ancestor(d), base);
  }
}

TEST(SmoothingProps, DescendantsOfDistinctBasesAreDisjoint) {
  const auto scan = scan_pairs({{256, 256}, 3, 3, 0});
  std::set<ArithStructure> seen;
  std::size_t total = 0;
  for (const auto& [shape, cell] : scan.cells()) {
    for (const auto& s : cell.structures) {
      for (const auto& d : descendants(s, Shape(3, 3))) {
        seen.insert(d);
        ++total;
      }
    }
  }
  EXPECT_EQ(seen.size(), total);
}

TEST(SnfProps, RandomMatricesReconstruct) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = uniform(1, 5), cols = uniform(1, 5);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(uniform(0, 40)) - 20;
    }
    const auto dec = smith_decomposition(m);
    ASSERT_EQ(dec.left * m * dec.right, dec.diagonal) << m.to_string();
    EXPECT_EQ(abs(determinant(dec.left)), 1);
    EXPECT_EQ(abs(determinant(dec.right)), 1);
    const auto diag = smith_normal_form(m);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (i != j) EXPECT_EQ(dec.diagonal(i, j), 0);
      }
    }
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      EXPECT_GE(diag[i], 0);
      if (diag[i] == 0) {
        EXPECT_EQ(diag[i + 1], 0);
      } else {
        EXPECT_EQ(diag[i + 1] % diag[i], 0);
      }
    }
    if (rows == cols) {
      BigInt product = 1;
      for (const auto& d : diag) product *= d;
      EXPECT_EQ(product, abs(determinant(m)));
    }
  }
}

TEST(CriticalProps, OrderMatchesSnf) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_structure(500, uniform(0, 5));
    const auto g = critical_group(s);
    EXPECT_EQ(g.order, critical_order(s));
    EXPECT_EQ(g.type == GroupType::Z2, s.a().back() == 1 && s.b().back() == 1);
  }
}
