#include "arith/counting.hpp"

#include <sstream>

#include "arith/ballot.hpp"
#include "arith/error.hpp"

namespace arith {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Convolution: return "convolution";
    case Provenance::Enumeration: return "enumeration";
  }
  return "unknown";
}

void CountTable::set(const Shape& shape, CountEntry entry) {
  entries_.insert_or_assign(shape, std::move(entry));
}

const CountEntry* CountTable::find(const Shape& shape) const {
  auto it = entries_.find(shape);
  return it == entries_.end() ? nullptr : &it->second;
}

const BigInt& CountTable::smooth_at(const Shape& shape) const {
  if (const auto* e = find(shape)) return e->smooth;
  if (const auto* e = find(shape.transposed())) return e->smooth;
  throw MissingEntry("no smooth count for " + shape.name());
}

bool CountTable::transpose_consistent() const {
  for (const auto& [shape, entry] : entries_) {
    const auto* other = find(shape.transposed());
    if (!other) continue;
    if (other->smooth != entry.smooth) return false;
    if (entry.total && other->total && *entry.total != *other->total) return false;
  }
  return true;
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "m,n,smooth,total,provenance\n";
  for (const auto& [shape, e] : entries_) {
    out << shape.m() << ',' << shape.n() << ',' << e.smooth << ',';
    if (e.total) out << *e.total;
    out << ',' << to_string(e.provenance) << '\n';
  }
  return out.str();
}

std::string CountTable::to_json() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& [shape, e] : entries_) {
    if (!first) out << ',';
    first = false;
    out << "{\"m\":" << shape.m() << ",\"n\":" << shape.n() << ",\"smooth\":" << e.smooth
        << ",\"total\":";
    if (e.total) {
      out << *e.total;
    } else {
      out << "null";
    }
    out << ",\"provenance\":\"" << to_string(e.provenance) << "\"}";
  }
  out << ']';
  return out.str();
}

std::int64_t smooth_count(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw PreconditionError("shape sides must be positive");
  if (n < m) std::swap(m, n);
  const auto k = static_cast<std::int64_t>(n);
  switch (m) {
    case 1:
      return k <= 2 ? 3 : 4;
    case 2:
      if (k <= 3) return k == 1 ? 3 : k == 2 ? 8 : 17;
      return 9 * k - 11 + (k - 3) / 4;
    case 3: {
      if (k <= 4) return k == 3 ? 48 : 95;
      static constexpr std::int64_t c[4] = {208, 205, 204, 209};
      return (47 * k * k - 144 * k + c[k % 4]) / 4;
    }
    default:
      throw Unsupported("no closed form for smooth structures on " + Shape(m, n).name() +
                        "; use enumeration");
  }
}

std::int64_t triples(std::int64_t n) { return n < 0 ? 0 : (n + 2) * (n + 1) / 2; }

std::int64_t pairs(std::int64_t n) { return n < 0 ? 0 : n + 1; }

std::int64_t triples_div4(std::int64_t n) {
  std::int64_t total = 0;
  for (std::int64_t x = 0; x <= n; x += 4) total += n - x + 1;
  return total;
}

std::int64_t pairs_div4(std::int64_t n) { return n < 0 ? 0 : (n + 4) / 4; }

std::int64_t smooth_count_casewise(std::int64_t n) {
  if (n < 3) throw PreconditionError("casewise count needs n >= 3");
  const auto p = triples;
  const auto pp = pairs;
  return 4 * p(n - 1) + 4 * p(n - 2) + 6 * p(n - 3) + 3 * p(n - 4) + 4 * p(n - 5) + p(n - 7) +
         2 * triples_div4(n - 6) + 2 * triples_div4(n - 7) + triples_div4(n - 8) +
         triples_div4(n - 9) + pp(n - 2) + 3 * pp(n - 3) + 2 * pp(n - 5) + pairs_div4(n - 7) + 1;
}

std::int64_t div4_terms(std::int64_t n) {
  if (n < 5) throw PreconditionError("h(n) needs n >= 5");
  return 2 * triples_div4(n - 6) + 2 * triples_div4(n - 7) + triples_div4(n - 8) +
         triples_div4(n - 9) + pairs_div4(n - 7);
}

std::int64_t div4_terms_closed(std::int64_t n) {
  if (n < 5) throw PreconditionError("h(n) needs n >= 5");
  static constexpr std::int64_t c[4] = {48, 45, 44, 49};
  return (3 * n * n - 24 * n + c[n % 4]) / 4;
}

CountTable smooth_table_closed_form(std::size_t max_m, std::size_t max_n) {
  CountTable table;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      table.set(Shape(m, n), {BigInt(smooth_count(m, n)), std::nullopt, Provenance::ClosedForm});
    }
  }
  return table;
}

BigInt total_count_convolution(std::size_t m, std::size_t n, const CountTable& smooth) {
  const auto row_m = subdivision_row(static_cast<long>(m));
  const auto row_n = subdivision_row(static_cast<long>(n));
  BigInt total = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      total += row_m[i] * row_n[j] * smooth.smooth_at(Shape(i, j));
    }
  }
  return total;
}

const ClosedForm& total_closed_form(std::size_t m) {
  using R = ExactRational;
  static const ClosedForm forms[3] = {
      {0, 2, {{0, R(4)}, {-1, R(-2)}}, {}},
      {1, 2, {{0, R(9)}, {-1, R(-16)}, {-2, R(5)}, {-3, R(-1)}}, {{0, 8, R(1)}}},
      {0,
       3,
       {{2, R(47, 2)}, {1, R(-305, 4)}, {0, R(253, 4)}, {-1, R(-21)}, {-2, R(2)}},
       {{1, 1, R(3, 4)}, {3, 3, R(11, 4)}, {0, 4, R(2)}}},
  };
  if (m < 1 || m > 3) throw Unsupported("no total closed form for m = " + std::to_string(m));
  return forms[m - 1];
}

BigInt total_count_closed(std::size_t m, std::size_t n) {
  const ClosedForm& form = total_closed_form(m);
  if (n < form.min_n) {
    throw RangeError("closed form for m = " + std::to_string(m) + " needs n >= " +
                     std::to_string(form.min_n) + "; use convolution");
  }
  const long big_n = static_cast<long>(n) + form.reference_offset;
  ExactRational sum = 0;
  for (const auto& t : form.catalan) sum += t.coeff * ExactRational(catalan(big_n + t.shift));
  if (!form.residue_sums.empty()) {
    const auto row = subdivision_row(big_n);
    for (const auto& t : form.residue_sums) {
      BigInt part = 0;
      for (long k = t.min_k; k <= big_n; ++k) {
        if (k % 4 == t.residue) part += row[static_cast<std::size_t>(k)];
      }
      sum += t.coeff * ExactRational(part);
    }
  }
  if (denominator(sum) != 1) {
    throw InvariantViolation("closed form for " + Shape(m, n).name() +
                             " is not an integer: " + to_fraction_string(sum));
  }
  return numerator(sum);
}

BigInt total_count(std::size_t m, std::size_t n) {
  if (m > 3 && n <= 3) std::swap(m, n);
  if (m > 3) throw Unsupported("total counts need min(m, n) <= 3; use enumeration");
  if (m >= 1 && n >= total_closed_form(m).min_n) return total_count_closed(m, n);
  return total_count_convolution(m, n, smooth_table_closed_form(m, n));
}

ExactRational residue_class_ballot_limit(int residue, long min_k) {
  if (residue < 0 || residue > 3) throw PreconditionError("residue must be in 0..3");
  // sum_{j>=0} (r + 4j) / 2^(r + 4j + 1) with x = 1/16
  const ExactRational x(1, 16);
  const ExactRational one(1);
  ExactRational full = (ExactRational(residue) / (one - x) + 4 * x / ((one - x) * (one - x))) /
                       ExactRational(BigInt(1) << (residue + 1));
  for (long k = residue; k < min_k; k += 4) {
    full -= ExactRational(k) / ExactRational(BigInt(1) << (k + 1));
  }
  return full;
}

AsymptoticConstant asymptotic_constant(std::size_t m) {
  const ClosedForm& form = total_closed_form(m);
  ExactRational value = 0;
  for (const auto& t : form.catalan) {
    const BigInt scale = BigInt(1) << (2 * std::abs(t.shift));
    value += t.shift >= 0 ? t.coeff * ExactRational(scale) : t.coeff / ExactRational(scale);
  }
  for (const auto& t : form.residue_sums) {
    value += t.coeff * residue_class_ballot_limit(t.residue, t.min_k);
  }
  return {value, form.reference_offset};
}

std::pair<std::int64_t, std::int64_t> quadratic_negativity_range(std::int64_t gamma) {
  if (gamma <= 2) throw PreconditionError("gamma must exceed 2");
  return {1, gamma - 1};
}

std::vector<ProbeRow> conjecture_probe(std::size_t max_m, std::size_t max_n,
                                       const CountTable& smooth) {
  std::vector<ProbeRow> rows;
  for (const auto& [shape, entry] : smooth.entries()) {
    if (shape.m() > max_m || shape.n() > max_n) continue;
    BigInt b = binomial(static_cast<long>(shape.m() + shape.n() - 1), static_cast<long>(shape.n()));
    rows.push_back({shape.m(), shape.n(), entry.smooth, b, ExactRational(entry.smooth, b)});
  }
  return rows;
}

}  // namespace arith
