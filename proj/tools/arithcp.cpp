// arithcp: command-line front end for the arith library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "arith/ballot.hpp"
#include "arith/counting.hpp"
#include "arith/critical.hpp"
#include "arith/enumeration.hpp"
#include "arith/error.hpp"
#include "arith/golden.hpp"
#include "arith/smoothing.hpp"

namespace {

using namespace arith;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kIncomplete = 3;
constexpr int kGoldenMismatch = 4;

struct TableArgs {
  std::size_t family = 2;
  std::size_t max_n = 15;
  std::string format = "csv";
  bool check = false;
};

struct VerifyArgs {
  std::string json;
  std::string file;
};

struct EnumerateArgs {
  std::size_t m = 1;
  std::size_t n = 1;
  std::string mode = "smooth";
  std::uint64_t bound_a = 0;
  std::uint64_t bound_b = 0;
};

struct AsymptoticsArgs {
  std::size_t family = 1;
  std::size_t max_n = 30;
};

struct ProbeArgs {
  std::size_t max_m = 4;
  std::size_t max_n = 6;
  std::uint64_t bound_a = 0;
  std::uint64_t bound_b = 0;
};

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].str();
  }
  return out;
}

CountTable family_table(std::size_t family, std::size_t max_n) {
  CountTable table;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const bool closed = n >= total_closed_form(family).min_n;
    table.set(Shape(family, n), {BigInt(smooth_count(family, n)), total_count(family, n),
                                 closed ? Provenance::ClosedForm : Provenance::Convolution});
  }
  return table;
}

// Rows of the golden CSV that disagree with `table`, one message each.
std::vector<std::string> golden_mismatches(std::size_t family, const CountTable& table) {
  std::vector<std::string> out;
  std::istringstream in{std::string(*golden_table_csv(family))};
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string n_text, smooth, total;
    std::getline(row, n_text, ',');
    std::getline(row, smooth, ',');
    std::getline(row, total, ',');
    const auto* e = table.find(Shape(family, std::stoul(n_text)));
    if (!e) continue;
    if (e->smooth.str() != smooth || !e->total || e->total->str() != total) {
      out.push_back("n=" + n_text + ": expected " + smooth + "/" + total + ", got " +
                    e->smooth.str() + "/" + (e->total ? e->total->str() : "?"));
    }
  }
  return out;
}

int cmd_table(const TableArgs& args) {
  if (args.family < 1 || args.family > 3) {
    std::cerr << "unsupported family " << args.family << " (expected 1, 2 or 3)\n";
    return kInvalid;
  }
  const CountTable table = family_table(args.family, args.max_n);
  std::cout << (args.format == "json" ? table.to_json() + "\n" : table.to_csv());
  if (!args.check) return kOk;
  if (!golden_table_csv(args.family)) {
    std::cerr << "no golden table for family " << args.family << "\n";
    return kOk;
  }
  const auto bad = golden_mismatches(args.family, table);
  for (const auto& msg : bad) std::cerr << "golden mismatch " << msg << "\n";
  if (!bad.empty()) return kGoldenMismatch;
  std::cerr << "golden check passed\n";
  return kOk;
}

int cmd_verify(const VerifyArgs& args) {
  std::string text = args.json;
  if (!args.file.empty()) {
    std::ifstream f(args.file);
    if (!f) {
      std::cerr << "cannot read " << args.file << "\n";
      return kInvalid;
    }
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else if (text.empty()) {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  try {
    const ArithStructure s = ArithStructure::from_labels(labels_from_json(text));
    const DVector d = validate(s.labels());
    const ArithStructure ancestor = smooth_ancestor(s);
    const CriticalGroupInfo group = critical_group(s);
    std::cout << "valid: " << s.shape().name() << " " << s.to_string() << "\n"
              << "d: " << join(d.values) << "\n"
              << "smooth: " << (is_smooth(s) ? "yes" : "no") << "\n"
              << "ancestor: " << ancestor.shape().name() << " " << ancestor.to_string() << "\n"
              << "critical group: " << to_string(group.type) << " (order " << group.order
              << ", snf " << join(group.snf) << ")\n";
    return kOk;
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
}

int cmd_enumerate(const EnumerateArgs& args) {
  const Shape shape(args.m, args.n);
  ScanBounds bounds = recommended_bounds(shape);
  if (args.bound_a) bounds.a = args.bound_a;
  if (args.bound_b) bounds.b = args.bound_b;
  const ScanResult scan = scan_pairs({bounds, shape.m(), shape.n(), 0});
  const Enumeration e =
      args.mode == "all" ? enumerate_all(shape, scan) : enumerate_smooth(shape, scan);
  for (const auto& s : e.structures) std::cout << to_json(s) << "\n";
  std::cout << "{\"summary\":{\"m\":" << shape.m() << ",\"n\":" << shape.n() << ",\"mode\":\""
            << args.mode << "\",\"count\":" << e.structures.size() << ",\"bound_a\":"
            << bounds.a << ",\"bound_b\":" << bounds.b << ",\"status\":\""
            << to_string(e.status) << "\",\"bound\":\""
            << (e.status == CellStatus::Certified ? "certified" : "heuristic") << "\"}}\n";
  if (e.status == CellStatus::Incomplete) {
    std::cerr << "enumeration incomplete for " << shape.name() << "; raise the bounds\n";
    return kIncomplete;
  }
  return kOk;
}

int cmd_asymptotics(const AsymptoticsArgs& args) {
  if (args.family < 1 || args.family > 3) {
    std::cerr << "unsupported family " << args.family << " (expected 1, 2 or 3)\n";
    return kInvalid;
  }
  const AsymptoticConstant target = asymptotic_constant(args.family);
  const int offset = target.reference_offset;
  const std::string scale = offset ? "C_{n+" + std::to_string(offset) + "}" : "C_n";
  std::cout << "# target " << to_fraction_string(target.value) << " = "
            << to_decimal(target.value, 10) << " relative to " << scale << "\n"
            << "n,ratio,decimal,deviation\n";
  for (std::size_t n = 1; n <= args.max_n; ++n) {
    const ExactRational ratio(total_count(args.family, n),
                              catalan(static_cast<long>(n) + offset));
    const ExactRational dev = abs(ratio - target.value);
    std::cout << n << ',' << to_fraction_string(ratio) << ',' << to_decimal(ratio, 10) << ','
              << to_decimal(dev, 10) << "\n";
  }
  return kOk;
}

int cmd_probe(const ProbeArgs& args) {
  ScanBounds bounds = default_bounds(Shape(args.max_m, args.max_n));
  if (args.bound_a) bounds.a = args.bound_a;
  if (args.bound_b) bounds.b = args.bound_b;
  const ScanResult scan = scan_pairs({bounds, args.max_m, args.max_n, 0});
  std::cout << "# bounds " << bounds.a << " x " << bounds.b << "; observational only\n"
            << "m,n,smooth,binom,ratio,decimal,status\n";
  for (const auto& row : conjecture_probe(args.max_m, args.max_n, scan.to_table())) {
    std::cout << row.m << ',' << row.n << ',' << row.smooth << ',' << row.binom << ','
              << to_fraction_string(row.ratio) << ',' << to_decimal(row.ratio, 6) << ','
              << to_string(scan.status(Shape(row.m, row.n))) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetical structures on doubled-edge paths CP_{m,n}"};
  app.require_subcommand(1);
  int status = kOk;

  TableArgs table;
  auto* t = app.add_subcommand("table", "Smooth and total counts for CP_{m,n}, n = 1..max-n");
  t->add_option("--family", table.family, "Short arm length m (1, 2 or 3)");
  t->add_option("--max-n", table.max_n, "Largest n")->check(CLI::PositiveNumber);
  t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));
  t->add_flag("--check", table.check, "Compare against the embedded golden tables");
  t->callback([&] { status = cmd_table(table); });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Validate one structure given as JSON");
  v->add_option("json", verify.json, "Structure JSON (default: read stdin)");
  v->add_option("--file", verify.file, "Read the structure from a file");
  v->callback([&] { status = cmd_verify(verify); });

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "Stream structures on CP_{m,n} as JSON lines");
  e->add_option("--m", en.m)->required()->check(CLI::PositiveNumber);
  e->add_option("--n", en.n)->required()->check(CLI::PositiveNumber);
  e->add_option("--mode", en.mode)->check(CLI::IsMember({"smooth", "all"}));
  e->add_option("--bound-a", en.bound_a, "Largest a1 to scan");
  e->add_option("--bound-b", en.bound_b, "Largest b1 to scan");
  e->callback([&] { status = cmd_enumerate(en); });

  AsymptoticsArgs as;
  auto* a = app.add_subcommand("asymptotics", "Ratios of total counts to Catalan numbers");
  a->add_option("--family", as.family);
  a->add_option("--max-n", as.max_n)->check(CLI::PositiveNumber);
  a->callback([&] { status = cmd_asymptotics(as); });

  ProbeArgs probe;
  auto* p = app.add_subcommand("probe-conjecture",
                               "Smooth counts over binom(m+n-1, n) from a pair scan");
  p->add_option("--max-m", probe.max_m)->check(CLI::PositiveNumber);
  p->add_option("--max-n", probe.max_n)->check(CLI::PositiveNumber);
  p->add_option("--bound-a", probe.bound_a);
  p->add_option("--bound-b", probe.bound_b);
  p->callback([&] { status = cmd_probe(probe); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  } catch (const arith::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInvalid;
  }
  return status;
}
