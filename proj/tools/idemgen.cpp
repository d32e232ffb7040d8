// Command line front end: exact tables, oracle cross-checks, construction and
// validation of minimal idempotent generating sets, and closure runs for the
// monoid of block-respecting transformations (m blocks of size n).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idemgen/closure.hpp"
#include "idemgen/counting.hpp"
#include "idemgen/digraph.hpp"
#include "idemgen/genset.hpp"
#include "idemgen/partition_map.hpp"
#include "idemgen/serialization.hpp"
#include "idemgen/transformation.hpp"

namespace {

using idemgen::counting::BigCount;
using nlohmann::json;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Table {
  std::string id;
  std::string row_label;
  std::string col_label;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  // One optional exact decimal string per (row, col); blank cells stay empty.
  std::vector<std::vector<std::optional<std::string>>> cells;
};

void render_text(const Table& t, std::ostream& out) {
  const std::size_t r = t.rows.size();
  const std::size_t c = t.cols.size();
  std::vector<std::vector<std::string>> grid(r + 1,
                                             std::vector<std::string>(c + 1));
  grid[0][0] = t.row_label.empty()
                   ? t.col_label
                   : t.row_label + " \\ " + t.col_label;
  for (std::size_t j = 0; j < c; ++j) {
    grid[0][j + 1] = std::to_string(t.cols[j]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    grid[i + 1][0] = t.row_label.empty() ? "" : std::to_string(t.rows[i]);
    for (std::size_t j = 0; j < c; ++j) {
      grid[i + 1][j + 1] = t.cells[i][j].value_or("");
    }
  }
  std::vector<std::size_t> width(c + 1, 0);
  for (const auto& row : grid) {
    for (std::size_t j = 0; j <= c; ++j) {
      width[j] = std::max(width[j], row[j].size());
    }
  }
  for (const auto& row : grid) {
    for (std::size_t j = 0; j <= c; ++j) {
      out << (j == 0 ? "" : "  ");
      out << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    out << '\n';
  }
}

void render_csv(const Table& t, std::ostream& out) {
  out << (t.row_label.empty() ? t.col_label
                              : t.row_label + "\\" + t.col_label);
  for (std::size_t col : t.cols) {
    out << ',' << col;
  }
  out << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (!t.row_label.empty()) {
      out << t.rows[i];
    }
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
      out << ',' << t.cells[i][j].value_or("");
    }
    out << '\n';
  }
}

void render_json(const Table& t, std::ostream& out) {
  json values = json::array();
  for (const auto& row : t.cells) {
    json r = json::array();
    for (const auto& cell : row) {
      if (cell) {
        r.push_back(*cell);
      } else {
        r.push_back(nullptr);
      }
    }
    values.push_back(std::move(r));
  }
  out << json{{"table", t.id},
              {"row_label", t.row_label},
              {"col_label", t.col_label},
              {"rows", t.rows},
              {"cols", t.cols},
              {"values", std::move(values)}}
             .dump(2)
      << '\n';
}

void render(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    render_csv(t, out);
  } else if (format == "json") {
    render_json(t, out);
  } else {
    render_text(t, out);
  }
}

struct Range {
  std::optional<std::size_t> min_row, max_row, min_col, max_col;
};

std::vector<std::size_t> span(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t v = lo; v <= hi; ++v) {
    out.push_back(v);
  }
  return out;
}

Table make_table(const std::string& id, const Range& range) {
  using namespace idemgen::counting;
  Table t;
  t.id = id;
  auto rows = [&](std::size_t lo, std::size_t hi) {
    return span(range.min_row.value_or(lo), range.max_row.value_or(hi));
  };
  auto cols = [&](std::size_t lo, std::size_t hi) {
    return span(range.min_col.value_or(lo), range.max_col.value_or(hi));
  };

  if (id == "wnk") {
    t.row_label = "n";
    t.col_label = "k";
    t.rows = rows(0, 5);
    const std::size_t top = t.rows.back() * (t.rows.back() - 1) / 2;
    t.cols = cols(0, top);
    for (std::size_t n : t.rows) {
      std::vector<std::optional<std::string>> row;
      for (std::size_t k : t.cols) {
        if (k <= n * (n - 1) / 2) {
          row.push_back(sc_complete_digraph_count(n, k).str());
        } else {
          row.push_back(std::nullopt);
        }
      }
      t.cells.push_back(std::move(row));
    }
  } else if (id == "sum-wnk") {
    t.row_label = "";
    t.col_label = "n";
    t.rows = {0};
    t.cols = cols(0, 8);
    std::vector<std::optional<std::string>> row;
    for (std::size_t n : t.cols) {
      row.push_back(sc_complete_digraph_total(n).str());
    }
    t.cells.push_back(std::move(row));
  } else if (id == "idempotent-counts") {
    t.row_label = "m";
    t.col_label = "n";
    t.rows = rows(0, 5);
    t.cols = cols(0, 5);
    for (std::size_t m : t.rows) {
      std::vector<std::optional<std::string>> row;
      for (std::size_t n : t.cols) {
        row.push_back(partition_idempotent_count(m, n).str());
      }
      t.cells.push_back(std::move(row));
    }
  } else if (id == "exp-size") {
    t.row_label = "m";
    t.col_label = "n";
    t.rows = rows(0, 5);
    t.cols = cols(0, 5);
    for (std::size_t m : t.rows) {
      std::vector<std::optional<std::string>> row;
      for (std::size_t n : t.cols) {
        row.push_back(idempotent_generated_size(m, n).str());
      }
      t.cells.push_back(std::move(row));
    }
  } else if (id == "rank") {
    t.row_label = "m";
    t.col_label = "n";
    t.rows = rows(1, 10);
    t.cols = cols(1, 10);
    for (std::size_t m : t.rows) {
      std::vector<std::optional<std::string>> row;
      for (std::size_t n : t.cols) {
        row.push_back(idempotent_generated_rank(m, n).str());
      }
      t.cells.push_back(std::move(row));
    }
  } else if (id == "min-genset-counts") {
    t.row_label = "m";
    t.col_label = "n";
    t.rows = rows(1, 4);
    t.cols = cols(1, 4);
    for (std::size_t n : t.cols) {
      if (n > 8) {
        throw CLI::ValidationError("min-genset-counts needs n <= 8");
      }
    }
    for (std::size_t m : t.rows) {
      std::vector<std::optional<std::string>> row;
      for (std::size_t n : t.cols) {
        row.push_back(min_genset_count(m, n).str());
      }
      t.cells.push_back(std::move(row));
    }
  } else {
    throw CLI::ValidationError("unknown table: " + id);
  }
  return t;
}

class CheckReport {
 public:
  void run(const std::string& name, bool ok) {
    std::cout << (ok ? "ok" : "FAIL") << ": " << name << '\n';
    failures_ += ok ? 0 : 1;
  }
  int exit_code() const { return failures_ == 0 ? kExitSuccess : kExitFailure; }

 private:
  int failures_ = 0;
};

void verify_digraphs(CheckReport& report) {
  using namespace idemgen;
  for (std::size_t n = 0; n <= 5; ++n) {
    bool ok = true;
    for (std::size_t k = 0; k <= n * (n - 1) / 2; ++k) {
      if (BigCount(census_sc_complete_digraphs(n, k)) !=
          counting::sc_complete_digraph_count(n, k)) {
        ok = false;
      }
    }
    report.run("digraph census matches closed form at n = " +
                   std::to_string(n),
               ok);
  }
}

void verify_idempotents(CheckReport& report) {
  using namespace idemgen;
  bool agree = true;
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t n = 0; n <= 5; ++n) {
      if (counting::partition_idempotent_count_direct(m, n) !=
          counting::partition_idempotent_count(m, n)) {
        agree = false;
      }
    }
  }
  report.run("direct and recurrence idempotent counts agree on 0..5 x 0..5",
             agree);
  for (const auto& [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}, {2, 3}, {3, 2},
           {3, 3}}) {
    std::size_t found = 0;
    for_each_partition_map(m, n, [&](const PartitionMap& f) {
      if (f.is_idempotent()) {
        ++found;
      }
    });
    report.run("exhaustive idempotent scan at (" + std::to_string(m) + ", " +
                   std::to_string(n) + ")",
               BigCount(found) == counting::partition_idempotent_count(m, n));
  }
}

void verify_closure(CheckReport& report, unsigned workers,
                    std::size_t budget) {
  using namespace idemgen;
  for (const auto& [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}}) {
    ClosureOptions opts;
    opts.workers = workers;
    opts.budget = budget;
    const auto gens = all_partition_idempotents(m, n);
    const auto closed = generate(gens, PartitionMap::identity(m, n), opts);
    const bool size_ok =
        !closed.budget_exceeded &&
        BigCount(closed.size()) == counting::idempotent_generated_size(m, n);
    report.run("idempotents generate the expected order at (" +
                   std::to_string(m) + ", " + std::to_string(n) + ")",
               size_ok);

    ClosureOptions solo = opts;
    solo.workers = 1;
    ClosureOptions quad = opts;
    quad.workers = 4;
    const auto a = generate(gens, PartitionMap::identity(m, n), solo);
    const auto b = generate(gens, PartitionMap::identity(m, n), quad);
    report.run("closure dump is worker-count independent at (" +
                   std::to_string(m) + ", " + std::to_string(n) + ")",
               closure_dump_lines(a.elements) == closure_dump_lines(b.elements));
  }
}

void verify_gensets(CheckReport& report, std::size_t budget) {
  using namespace idemgen;
  // Howie criterion against the closure oracle over every pair set at n = 3.
  {
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) {
          pairs.emplace_back(i, j);
        }
      }
    }
    const auto singular = [&]() {
      std::vector<Transformation> out;
      for (const Transformation& t : all_transformations(3)) {
        if (!t.is_permutation()) {
          out.push_back(t);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }();
    bool ok = true;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
      PairSet u;
      std::vector<Transformation> gens;
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        if ((mask >> t) & 1ULL) {
          u.insert(pairs[t]);
          gens.push_back(
              Transformation::eij(3, pairs[t].first, pairs[t].second));
        }
      }
      ClosureOptions opts;
      opts.mode = GenMode::semigroup;
      opts.budget = budget;
      const auto closed = generate(gens, Transformation::identity(3), opts);
      std::vector<Transformation> sorted = closed.elements;
      std::sort(sorted.begin(), sorted.end());
      const bool covers = std::includes(sorted.begin(), sorted.end(),
                                        singular.begin(), singular.end());
      if (covers != howie_check(u, 3)) {
        ok = false;
      }
    }
    report.run("Howie criterion matches the closure oracle on all 64 pair "
               "sets at n = 3",
               ok);
  }

  for (const auto& [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}}) {
    const auto specs = enumerate_min_gensets(m, n);
    const bool count_ok =
        BigCount(specs.size()) == counting::min_genset_count(m, n);
    report.run("enumerated spec count matches the closed form at (" +
                   std::to_string(m) + ", " + std::to_string(n) + ")",
               count_ok);
    bool round_trip = true;
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
      const MinGenSetSpec spec = random_min_genset_spec(m, n, rng);
      const auto gens = build_min_genset(spec);
      const ValidationResult check = validate_min_genset(gens);
      if (!check.accepted || !check.spec.has_value() || !(*check.spec == spec)) {
        round_trip = false;
      }
    }
    report.run("random specs round-trip through build and validate at (" +
                   std::to_string(m) + ", " + std::to_string(n) + ")",
               round_trip);
  }
}

int cmd_table(const std::string& id, const Range& range,
              const std::string& format) {
  const Table t = make_table(id, range);
  render(t, format, std::cout);
  return kExitSuccess;
}

int cmd_verify(const std::string& suite, unsigned workers,
               std::size_t budget) {
  CheckReport report;
  if (suite == "digraphs" || suite == "all") {
    verify_digraphs(report);
  }
  if (suite == "idempotents" || suite == "all") {
    verify_idempotents(report);
  }
  if (suite == "closure" || suite == "all") {
    verify_closure(report, workers, budget);
  }
  if (suite == "gensets" || suite == "all") {
    verify_gensets(report, budget);
  }
  return report.exit_code();
}

int cmd_construct(std::size_t m, std::size_t n, std::uint64_t seed,
                  bool verify_closure, unsigned workers, std::size_t budget) {
  using namespace idemgen;
  std::mt19937_64 rng(seed);
  const MinGenSetSpec spec = random_min_genset_spec(m, n, rng);
  const std::vector<PartitionMap> gens = build_min_genset(spec);

  json doc{{"seed", seed},
           {"m", m},
           {"n", n},
           {"size", gens.size()},
           {"rank", counting::idempotent_generated_rank(m, n).str()},
           {"spec", json::parse(to_json_string(spec))},
           {"genset", json::parse(to_json_string(gens))}};

  bool ok = true;
  if (verify_closure) {
    ClosureOptions opts;
    opts.workers = workers;
    opts.budget = budget;
    const auto closed = generate(gens, PartitionMap::identity(m, n), opts);
    const BigCount expected = counting::idempotent_generated_size(m, n);
    const bool matches =
        !closed.budget_exceeded && BigCount(closed.size()) == expected;
    doc["closure"] = json{{"cardinality", closed.size()},
                          {"expected", expected.str()},
                          {"matches", matches},
                          {"complete", !closed.budget_exceeded}};
    ok = matches;
  }
  std::cout << doc.dump(2) << '\n';
  return ok ? kExitSuccess : kExitFailure;
}

int cmd_check(const std::string& path) {
  using namespace idemgen;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  std::vector<PartitionMap> gens;
  try {
    const json j = json::parse(buffer.str());
    if (j.is_array()) {
      gens = genset_from_json(j.dump());
    } else if (j.is_object() && j.contains("genset")) {
      gens = genset_from_json(j.at("genset").dump());
    } else if (j.is_object() && j.contains("locals")) {
      const MinGenSetSpec spec = min_genset_spec_from_json(j.dump());
      try {
        gens = build_min_genset(spec);
      } catch (const std::invalid_argument& e) {
        std::cout << "rejected: " << e.what() << '\n';
        return kExitFailure;
      }
    } else {
      std::cerr << "file is neither a generating set nor a spec\n";
      return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }

  const ValidationResult result = validate_min_genset(gens);
  if (!result.accepted) {
    std::cout << "rejected: " << result.reason << '\n';
    return kExitFailure;
  }
  std::cout << "accepted\n" << to_json_string(*result.spec) << '\n';
  return kExitSuccess;
}

int cmd_closure(std::size_t m, std::size_t n, const std::string& gens_path,
                const std::string& mode_name, unsigned workers,
                std::size_t budget, const std::string& dump_path,
                const std::string& format) {
  using namespace idemgen;
  std::vector<PartitionMap> gens;
  if (!gens_path.empty()) {
    std::ifstream in(gens_path);
    if (!in) {
      std::cerr << "cannot open " << gens_path << '\n';
      return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    gens = genset_from_json(buffer.str());
    if (gens.empty()) {
      std::cerr << "generating set file is empty\n";
      return kExitUsage;
    }
    m = gens.front().block_count();
    n = gens.front().block_size();
  } else {
    if (m == 0 || n == 0) {
      std::cerr << "need --m and --n (or --gens FILE)\n";
      return kExitUsage;
    }
    gens = all_partition_idempotents(m, n);
  }

  ClosureOptions opts;
  opts.mode = mode_name == "semigroup" ? GenMode::semigroup : GenMode::monoid;
  opts.workers = workers;
  opts.budget = budget;
  const auto closed = generate(gens, PartitionMap::identity(m, n), opts);

  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) {
      std::cerr << "cannot open " << dump_path << '\n';
      return kExitUsage;
    }
    out << closure_dump_lines(closed.elements);
  }

  if (format == "json") {
    std::cout << json{{"m", m},
                      {"n", n},
                      {"mode", mode_name},
                      {"generators", gens.size()},
                      {"cardinality", closed.size()},
                      {"complete", !closed.budget_exceeded},
                      {"rounds", closed.round_sizes}}
                     .dump(2)
              << '\n';
  } else if (format == "csv") {
    std::cout << "round,new_elements\n";
    for (std::size_t r = 0; r < closed.round_sizes.size(); ++r) {
      std::cout << r << ',' << closed.round_sizes[r] << '\n';
    }
  } else {
    std::cout << "generators: " << gens.size() << '\n'
              << "cardinality: " << closed.size() << '\n'
              << "complete: " << (closed.budget_exceeded ? "no" : "yes")
              << '\n';
    std::cout << "rounds:";
    for (std::size_t size : closed.round_sizes) {
      std::cout << ' ' << size;
    }
    std::cout << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for the idempotent-generated part of the monoid of "
      "transformations respecting a uniform partition"};
  app.require_subcommand(1);

  std::string format = "text";
  unsigned workers = 1;
  std::size_t budget = 10'000'000;

  // table
  auto* table = app.add_subcommand("table", "Print an exact value table");
  std::string table_id;
  Range range;
  table
      ->add_option("id", table_id,
                   "One of: wnk, sum-wnk, idempotent-counts, exp-size, rank, "
                   "min-genset-counts")
      ->required();
  table->add_option("--min-row", range.min_row, "First row index");
  table->add_option("--max-row", range.max_row, "Last row index");
  table->add_option("--min-col", range.min_col, "First column index");
  table->add_option("--max-col", range.max_col, "Last column index");
  table->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Cross-check closed forms against exhaustive oracles");
  std::string suite;
  verify
      ->add_option("suite", suite,
                   "One of: digraphs, idempotents, closure, gensets, all")
      ->required()
      ->check(CLI::IsMember(
          {"digraphs", "idempotents", "closure", "gensets", "all"}));
  verify->add_option("--workers", workers, "Worker threads for closures");
  verify->add_option("--budget", budget, "Closure element budget");

  // construct
  auto* construct = app.add_subcommand(
      "construct", "Build a seeded random minimal generating set");
  std::size_t cm = 0, cn = 0;
  std::uint64_t seed = 0;
  bool verify_closure = false;
  construct->add_option("m", cm, "Number of blocks")->required();
  construct->add_option("n", cn, "Block size")->required();
  construct->add_option("--seed", seed, "Random seed (echoed in the output)");
  construct->add_flag("--verify-closure", verify_closure,
                      "Also run the closure and compare cardinalities");
  construct->add_option("--workers", workers, "Worker threads for closures");
  construct->add_option("--budget", budget, "Closure element budget");

  // check
  auto* check = app.add_subcommand(
      "check", "Validate a generating set or spec from a JSON file");
  std::string check_path;
  check->add_option("file", check_path, "JSON file to validate")->required();

  // closure
  auto* closure = app.add_subcommand(
      "closure", "Run the closure engine and report its growth");
  std::size_t lm = 0, ln = 0;
  std::string gens_path, dump_path, mode_name = "monoid";
  closure->add_option("--m", lm, "Number of blocks");
  closure->add_option("--n", ln, "Block size");
  closure->add_option("--gens", gens_path,
                      "Generating set JSON file (default: all idempotents)");
  closure->add_option("--mode", mode_name, "monoid or semigroup")
      ->check(CLI::IsMember({"monoid", "semigroup"}));
  closure->add_option("--workers", workers, "Worker threads");
  closure->add_option("--budget", budget, "Element budget");
  closure->add_option("--dump", dump_path,
                      "Write the sorted element dump to this file");
  closure->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (table->parsed()) {
      return cmd_table(table_id, range, format);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, workers, budget);
    }
    if (construct->parsed()) {
      return cmd_construct(cm, cn, seed, verify_closure, workers, budget);
    }
    if (check->parsed()) {
      return cmd_check(check_path);
    }
    if (closure->parsed()) {
      return cmd_closure(lm, ln, gens_path, mode_name, workers, budget,
                         dump_path, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
