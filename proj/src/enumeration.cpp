#include "arith/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <thread>

#include "arith/residue_seq.hpp"
#include "arith/smoothing.hpp"

namespace arith {

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Incomplete: return "incomplete";
    case CellStatus::Stabilized: return "stabilized";
    case CellStatus::Certified: return "certified";
  }
  return "unknown";
}

CellStatus weakest(CellStatus x, CellStatus y) { return std::min(x, y); }

const ScanCell* ScanResult::cell(const Shape& shape) const {
  auto it = cells_.find(shape);
  return it == cells_.end() ? nullptr : &it->second;
}

CellStatus ScanResult::status(const Shape& shape) const {
  const ScanCell* c = cell(shape);
  return c ? c->status : CellStatus::Incomplete;
}

CountTable ScanResult::to_table() const {
  CountTable table;
  for (const auto& [shape, c] : cells_) {
    table.set(shape, {BigInt(c.structures.size()), std::nullopt, Provenance::Enumeration});
  }
  return table;
}

unsigned configured_thread_count() {
  if (const char* env = std::getenv("ARITH_THREADS")) {
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::uint64_t pow2ceil(std::uint64_t x) {
  std::uint64_t p = 1;
  while (p < x) p <<= 1;
  return p;
}

ScanBounds oriented(const Shape& shape, std::uint64_t short_side, std::uint64_t long_side) {
  if (shape.m() <= shape.n()) return {short_side, long_side};
  return {long_side, short_side};
}

}  // namespace

std::optional<ScanBounds> certified_bounds(const Shape& shape) {
  const std::uint64_t s = std::min(shape.m(), shape.n());
  const std::uint64_t l = std::max(shape.m(), shape.n());
  if (s == 1) return oriented(shape, 2, 8 * l);
  if (s == 2) return oriented(shape, 8 * l + 2, 4 * l * l + 4 * l);
  return std::nullopt;
}

ScanBounds default_bounds(const Shape& shape) {
  const std::uint64_t s = std::min(shape.m(), shape.n());
  const std::uint64_t l = std::max(shape.m(), shape.n());
  if (s <= 2) {
    const ScanBounds c = *certified_bounds(shape);
    return {pow2ceil(2 * c.a), pow2ceil(2 * c.b)};
  }
  if (s == 3) return oriented(shape, pow2ceil(16 * l * l), pow2ceil(8 * l * l * l));
  std::uint64_t side = 8 * l;
  for (std::uint64_t i = 0; i < s; ++i) side *= 3;
  return {pow2ceil(side), pow2ceil(side)};
}

ScanBounds recommended_bounds(const Shape& shape) {
  if (auto c = certified_bounds(shape)) return *c;
  return default_bounds(shape);
}

CellStatus certify(const Shape& shape, const ScanBounds& bounds, const ScanCell& cell) {
  if (auto need = certified_bounds(shape)) {
    if (bounds.a >= need->a && bounds.b >= need->b) return CellStatus::Certified;
  }
  if (!cell.structures.empty() && cell.half_box_count == cell.structures.size()) {
    return CellStatus::Stabilized;
  }
  return CellStatus::Incomplete;
}

namespace {

struct Hit {
  std::uint32_t m;
  std::uint32_t n;
  std::uint64_t a1;
  std::uint64_t b1;
};

template <class Int>
void scan_rows(std::uint64_t first, std::uint64_t last, const ScanOptions& opt, std::size_t cap,
               std::vector<Hit>& out) {
  const std::uint64_t side = std::min(opt.bounds.a, opt.bounds.b);
  for (std::uint64_t a = first; a < last; ++a) {
    // Pairs with b1 < a1 inside the common square come from the mirror of (b1, a1).
    const std::uint64_t b_start = a <= side ? a : 1;
    const Int x = static_cast<Int>(a);
    for (std::uint64_t b = b_start; b <= opt.bounds.b; ++b) {
      const Int y = static_cast<Int>(b);
      const std::size_t m = residue_length<Int>(2 * y, x, cap) - 1;
      if (m >= cap) continue;
      const std::size_t n = residue_length<Int>(2 * x, y, cap) - 1;
      if (n >= cap) continue;
      if (std::gcd(x, y) != 1) continue;
      if (m <= opt.max_m && n <= opt.max_n) {
        out.push_back({static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n), a, b});
      }
      if (a != b && b <= side && n <= opt.max_m && m <= opt.max_n) {
        out.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m), b, a});
      }
    }
  }
}

}  // namespace

ScanResult scan_pairs(const ScanOptions& options) {
  const ScanBounds bounds = options.bounds;
  if (bounds.a == 0 || bounds.b == 0) throw PreconditionError("scan bounds must be positive");
  if (std::max(bounds.a, bounds.b) >= (std::uint64_t{1} << 61)) {
    throw RangeError("scan bounds must stay below 2^61");
  }
  constexpr std::size_t kMaxArm = std::size_t{1} << 40;
  const std::size_t cap = std::min(std::max(options.max_m, options.max_n), kMaxArm) + 1;
  const bool narrow = std::max(bounds.a, bounds.b) < (std::uint64_t{1} << 31);

  const unsigned threads = options.threads ? options.threads : configured_thread_count();
  const std::uint64_t chunk = std::max<std::uint64_t>(1, bounds.a / (64 * threads));
  const std::uint64_t chunks = (bounds.a + chunk - 1) / chunk;
  std::vector<std::vector<Hit>> parts(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t first = 1 + c * chunk;
      const std::uint64_t last = std::min(bounds.a, first + chunk - 1) + 1;
      if (narrow) {
        scan_rows<std::uint32_t>(first, last, options, cap, parts[c]);
      } else {
        scan_rows<std::uint64_t>(first, last, options, cap, parts[c]);
      }
    }
  };
  if (threads <= 1 || chunks <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, chunks); ++t) pool.emplace_back(worker);
  }

  std::map<Shape, std::vector<std::pair<std::uint64_t, std::uint64_t>>> buckets;
  for (const auto& part : parts) {
    for (const Hit& h : part) buckets[Shape(h.m, h.n)].emplace_back(h.a1, h.b1);
  }

  std::map<Shape, ScanCell> cells;
  for (auto& [shape, pairs] : buckets) {
    std::sort(pairs.begin(), pairs.end());
    ScanCell cell;
    cell.structures.reserve(pairs.size());
    for (const auto& [a1, b1] : pairs) {
      cell.structures.push_back(ArithStructure::from_labels(smooth_labels_from_pair(a1, b1)));
      if (2 * a1 <= bounds.a && 2 * b1 <= bounds.b) ++cell.half_box_count;
    }
    cell.status = certify(shape, bounds, cell);
    cells.emplace(shape, std::move(cell));
  }
  return ScanResult(bounds, std::move(cells));
}

Enumeration enumerate_smooth(const Shape& shape, const ScanResult& scan) {
  const ScanCell* cell = scan.cell(shape);
  if (!cell) return {};
  return {cell->structures, cell->status};
}

Enumeration enumerate_smooth(const Shape& shape, const ScanBounds& bounds) {
  return enumerate_smooth(shape, scan_pairs({bounds, shape.m(), shape.n(), 0}));
}

Enumeration enumerate_all(const Shape& shape, const ScanResult& scan) {
  Enumeration result{{}, CellStatus::Certified};
  for (std::size_t m = 1; m <= shape.m(); ++m) {
    for (std::size_t n = 1; n <= shape.n(); ++n) {
      const ScanCell* cell = scan.cell(Shape(m, n));
      if (!cell) {
        result.status = CellStatus::Incomplete;
        continue;
      }
      result.status = weakest(result.status, cell->status);
      for (const auto& smooth : cell->structures) {
        auto grown = descendants(smooth, shape);
        result.structures.insert(result.structures.end(), std::make_move_iterator(grown.begin()),
                                 std::make_move_iterator(grown.end()));
      }
    }
  }
  std::sort(result.structures.begin(), result.structures.end());
  result.structures.erase(std::unique(result.structures.begin(), result.structures.end()),
                          result.structures.end());
  return result;
}

Enumeration enumerate_all(const Shape& shape, const ScanBounds& bounds) {
  return enumerate_all(shape, scan_pairs({bounds, shape.m(), shape.n(), 0}));
}

JunctionMaxima max_junction_label(const std::vector<ArithStructure>& structures) {
  JunctionMaxima best{0, 0};
  for (const auto& s : structures) {
    const RhoForm rho = rho_form(s);
    best.a1 = std::max(best.a1, rho.labels.a.front());
    best.b1 = std::max(best.b1, rho.labels.b.front());
  }
  return best;
}

}  // namespace arith
