#include "arith/core_model.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace arith {

Shape::Shape(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0) throw PreconditionError("CP_{m,n} needs m >= 1 and n >= 1");
}

std::string Shape::name() const {
  return "CP_{" + std::to_string(m_) + "," + std::to_string(n_) + "}";
}

std::string Vertex::name() const {
  return (arm == Arm::A ? "a" : "b") + std::to_string(index + 1);
}

Shape LabelSet::shape() const {
  if (a.empty() || b.empty()) throw InvalidLabels("both arms need at least one label");
  return Shape(a.size(), b.size());
}

const BigInt& DVector::at(Vertex v) const {
  const std::size_t arm_len = v.arm == Arm::A ? shape.m() : shape.n();
  if (v.index >= arm_len) throw InvalidVertex("no vertex " + v.name() + " on " + shape.name());
  return values[v.arm == Arm::A ? v.index : shape.m() + v.index];
}

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].str();
  }
  return out;
}

void require_positive(const LabelSet& labels) {
  for (Arm arm : {Arm::A, Arm::B}) {
    const auto& xs = labels.arm(arm);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] <= 0) {
        throw InvalidLabels("label at " + Vertex{arm, i}.name() + " is not positive");
      }
    }
  }
}

BigInt overall_gcd(const LabelSet& labels) {
  BigInt g = 0;
  for (const auto& x : labels.a) g = gcd(g, x);
  for (const auto& x : labels.b) g = gcd(g, x);
  return g;
}

// Divisibility at every vertex, in the order a1..am, b1..bn.
DVector check_divisibility(const LabelSet& labels) {
  const Shape shape = labels.shape();
  require_positive(labels);
  DVector d{shape, {}};
  d.values.reserve(shape.vertex_count());
  for (Arm arm : {Arm::A, Arm::B}) {
    const auto& xs = labels.arm(arm);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Vertex v{arm, i};
      BigInt sum = neighbor_sum(labels, v);
      BigInt q, r;
      boost::multiprecision::divide_qr(sum, xs[i], q, r);
      if (r != 0) {
        throw DivisibilityViolation(v, "label " + xs[i].str() + " at " + v.name() +
                                           " does not divide its neighbor sum " + sum.str());
      }
      d.values.push_back(std::move(q));
    }
  }
  return d;
}

}  // namespace

BigInt neighbor_sum(const LabelSet& labels, Vertex v) {
  const auto& own = labels.arm(v.arm);
  const auto& opposite = labels.arm(other(v.arm));
  if (v.index >= own.size()) {
    throw InvalidVertex("no vertex " + v.name() + " on an arm of length " +
                        std::to_string(own.size()));
  }
  if (opposite.empty()) throw InvalidLabels("both arms need at least one label");
  BigInt sum = 0;
  if (v.index == 0) {
    sum += 2 * opposite[0];
  } else {
    sum += own[v.index - 1];
  }
  if (v.index + 1 < own.size()) sum += own[v.index + 1];
  return sum;
}

BigInt neighbor_sum(const ArithStructure& s, Vertex v) { return neighbor_sum(s.labels(), v); }

DVector validate(const LabelSet& labels) {
  DVector d = check_divisibility(labels);
  const BigInt g = overall_gcd(labels);
  if (g != 1) throw GcdViolation("labels share the common factor " + g.str());
  return d;
}

ArithStructure ArithStructure::from_labels(LabelSet labels) {
  validate(labels);
  const Shape shape = labels.shape();
  return ArithStructure(shape, std::move(labels));
}

const BigInt& ArithStructure::label(Vertex v) const {
  const auto& xs = arm(v.arm);
  if (v.index >= xs.size()) throw InvalidVertex("no vertex " + v.name() + " on " + shape_.name());
  return xs[v.index];
}

ArithStructure ArithStructure::mirrored() const {
  return ArithStructure(shape_.transposed(), LabelSet{labels_.b, labels_.a});
}

std::string ArithStructure::to_string() const {
  return "(" + join(labels_.a) + " | " + join(labels_.b) + ")";
}

bool operator<(const ArithStructure& x, const ArithStructure& y) {
  if (x.shape_ != y.shape_) return x.shape_ < y.shape_;
  if (x.labels_.a != y.labels_.a) return x.labels_.a < y.labels_.a;
  return x.labels_.b < y.labels_.b;
}

IntMatrix adjacency_matrix(const Shape& shape) {
  const std::size_t m = shape.m();
  IntMatrix adj(shape.vertex_count(), shape.vertex_count());
  auto link = [&adj](std::size_t i, std::size_t j, long multiplicity) {
    adj(i, j) = multiplicity;
    adj(j, i) = multiplicity;
  };
  for (std::size_t i = 0; i + 1 < m; ++i) link(i, i + 1, 1);
  for (std::size_t i = 0; i + 1 < shape.n(); ++i) link(m + i, m + i + 1, 1);
  link(0, m, 2);
  return adj;
}

IntMatrix laplacian_matrix(const DVector& d) {
  IntMatrix lap = adjacency_matrix(d.shape);
  for (std::size_t i = 0; i < lap.rows(); ++i) {
    for (std::size_t j = 0; j < lap.cols(); ++j) lap(i, j) = -lap(i, j);
    lap(i, i) += d.values[i];
  }
  return lap;
}

bool laplacian_check(const ArithStructure& s, const DVector& d) {
  if (d.shape != s.shape() || d.values.size() != s.shape().vertex_count()) return false;
  std::vector<BigInt> r(s.a());
  r.insert(r.end(), s.b().begin(), s.b().end());
  const auto product = laplacian_matrix(d).multiply(r);
  return std::all_of(product.begin(), product.end(), [](const BigInt& x) { return x == 0; });
}

ArithStructure canonicalize(const LabelSet& labels) {
  check_divisibility(labels);
  const BigInt g = overall_gcd(labels);
  LabelSet reduced = labels;
  for (auto& x : reduced.a) x /= g;
  for (auto& x : reduced.b) x /= g;
  return ArithStructure::from_labels(std::move(reduced));
}

RhoForm rho_form(const ArithStructure& s) {
  const BigInt& end = s.a().back();
  if (end != 1 && end != 2) {
    throw InvariantViolation("a_m = " + end.str() + " in " + s.to_string() +
                             "; end labels must be 1 or 2");
  }
  const BigInt scale = end == 1 ? 2 : 1;
  LabelSet scaled = s.labels();
  for (auto& x : scaled.a) x *= scale;
  for (auto& x : scaled.b) x *= scale;
  return RhoForm{s.shape(), std::move(scaled), scale};
}

std::string to_json(const LabelSet& labels) {
  std::ostringstream os;
  os << "{\"m\":" << labels.a.size() << ",\"n\":" << labels.b.size() << ",\"a\":["
     << join(labels.a) << "],\"b\":[" << join(labels.b) << "]}";
  return os.str();
}

std::string to_json(const ArithStructure& s) { return to_json(s.labels()); }

namespace {

std::vector<BigInt> parse_arm(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InvalidLabels(std::string("field \"") + key + "\" must be an array");
  }
  std::vector<BigInt> out;
  for (const auto& item : doc[key]) {
    if (item.is_number_unsigned()) {
      out.emplace_back(item.get<std::uint64_t>());
    } else if (item.is_number_integer()) {
      out.emplace_back(item.get<std::int64_t>());
    } else {
      // Floats, strings and integers beyond 64 bits all land here.
      throw InvalidLabels(std::string("field \"") + key +
                          "\" holds a non-integer or out-of-range label");
    }
  }
  return out;
}

}  // namespace

LabelSet labels_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidLabels(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidLabels("structure JSON must be an object");
  LabelSet labels{parse_arm(doc, "a"), parse_arm(doc, "b")};
  const Shape shape = labels.shape();
  for (const char* key : {"m", "n"}) {
    if (!doc.contains(key)) continue;
    const auto& field = doc[key];
    const std::size_t expected = key[0] == 'm' ? shape.m() : shape.n();
    if (!field.is_number_unsigned() || field.get<std::uint64_t>() != expected) {
      throw InvalidLabels(std::string("field \"") + key + "\" disagrees with the arm length");
    }
  }
  require_positive(labels);
  return labels;
}

}  // namespace arith
