#include "arith/critical.hpp"

#include <optional>
#include <utility>

#include "arith/error.hpp"

namespace arith {

namespace {

struct Work {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    d.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    d.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }
};

std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      BigInt x = abs(d(i, j));
      if (!best || x < best_abs) {
        best = {i, j};
        best_abs = std::move(x);
      }
    }
  }
  return best;
}

// Clears row and column t below/right of the pivot with truncated
// quotients; false when some remainder is left over.
bool eliminate(Work& w, std::size_t t) {
  bool clean = true;
  for (std::size_t i = t + 1; i < w.d.rows(); ++i) {
    if (w.d(i, t) == 0) continue;
    w.add_row(i, t, BigInt(-(w.d(i, t) / w.d(t, t))));
    if (w.d(i, t) != 0) clean = false;
  }
  for (std::size_t j = t + 1; j < w.d.cols(); ++j) {
    if (w.d(t, j) == 0) continue;
    w.add_col(j, t, BigInt(-(w.d(t, j) / w.d(t, t))));
    if (w.d(t, j) != 0) clean = false;
  }
  return clean;
}

std::optional<std::size_t> non_divisible_row(const IntMatrix& d, std::size_t t) {
  for (std::size_t i = t + 1; i < d.rows(); ++i) {
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(i, j) % d(t, t) != 0) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  Work w{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  const std::size_t size = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < size; ++t) {
    for (;;) {
      const auto pivot = find_pivot(w.d, t);
      if (!pivot) return {std::move(w.u), std::move(w.d), std::move(w.v)};
      w.swap_rows(t, pivot->first);
      w.swap_cols(t, pivot->second);
      if (!eliminate(w, t)) continue;
      if (auto row = non_divisible_row(w.d, t)) {
        w.add_row(t, *row, BigInt(1));
        continue;
      }
      break;
    }
    if (w.d(t, t) < 0) {
      w.d.negate_row(t);
      w.u.negate_row(t);
    }
  }
  return {std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
  const auto dec = smith_decomposition(m);
  std::vector<BigInt> diag;
  const std::size_t size = std::min(m.rows(), m.cols());
  diag.reserve(size);
  for (std::size_t i = 0; i < size; ++i) diag.push_back(dec.diagonal(i, i));
  return diag;
}

const char* to_string(GroupType type) {
  return type == GroupType::Trivial ? "trivial" : "Z/2Z";
}

int critical_order(const ArithStructure& s) {
  const BigInt product = s.a().back() * s.b().back();
  if (product != 1 && product != 2) {
    throw InvariantViolation("a_m b_n = " + product.str() + " for " + s.to_string());
  }
  return product == 1 ? 2 : 1;
}

CriticalGroupInfo critical_group(const ArithStructure& s) {
  const DVector d = validate(s.labels());
  auto snf = smith_normal_form(laplacian_matrix(d));
  std::size_t zeros = 0;
  BigInt order = 1;
  for (const auto& x : snf) {
    if (x == 0) {
      ++zeros;
    } else {
      order *= x;
    }
  }
  if (zeros != 1) {
    throw InvalidStructure("Laplacian of " + s.to_string() + " has " + std::to_string(zeros) +
                           " zero invariant factors");
  }
  if (order != 1 && order != 2) {
    throw InvariantViolation("critical group of " + s.to_string() + " has order " + order.str());
  }
  return {order, order == 1 ? GroupType::Trivial : GroupType::Z2, std::move(snf)};
}

}  // namespace arith
