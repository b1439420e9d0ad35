// polyenum: count polyominoes by symmetry class, assemble free/one-sided
// tables, and check results against reference data.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyomino/polyomino.hpp"

namespace {

using namespace polyomino;

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3, kIo = 4 };

constexpr int kTableCeiling = 22;

struct Options {
  std::string cls = "fixed";
  int n = 0;
  int threads = 1;
  int split_depth = -1;
  std::string split = "total";
  std::string format = "text";
  std::string engine = "auto";
  std::string reference;
  std::string checkpoint;
  std::size_t memory_budget = std::size_t{4} << 30;
  bool force = false;
};

struct Column {
  std::string name;
  CountTable table;
};

void emit(std::ostream& out, const std::string& format, const std::vector<Column>& cols, const nlohmann::json& meta) {
  std::vector<int> ns;
  for (const auto& [n, e] : cols.front().table.entries()) ns.push_back(n);
  auto cell = [](const CountTable& t, int n) {
    auto v = t.exact(n);
    return v ? v->str() : std::string("unavailable");
  };
  if (format == "json") {
    nlohmann::json j = meta;
    j["entries"] = nlohmann::json::array();
    for (int n : ns) {
      nlohmann::json row{{"n", n}};
      if (cols.size() == 1) {
        row["value"] = cell(cols[0].table, n);
      } else {
        for (const auto& c : cols) row[c.name] = cell(c.table, n);
      }
      j["entries"].push_back(row);
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "n";
    for (const auto& c : cols) out << ',' << c.name;
    out << '\n';
    for (int n : ns) {
      out << n;
      for (const auto& c : cols) out << ',' << cell(c.table, n);
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].name.size();
    for (int n : ns) width[i] = std::max(width[i], cell(cols[i].table, n).size());
  }
  out << std::setw(4) << "n";
  for (std::size_t i = 0; i < cols.size(); ++i) out << "  " << std::setw(static_cast<int>(width[i])) << cols[i].name;
  out << '\n';
  for (int n : ns) {
    out << std::setw(4) << n;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << "  " << std::setw(static_cast<int>(width[i])) << cell(cols[i].table, n);
    }
    out << '\n';
  }
  for (auto it = meta.begin(); it != meta.end(); ++it) {
    out << "# " << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
}

Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::automatic;
  if (s == "growth") return Engine::growth;
  if (s == "tm" || s == "transfer-matrix") return Engine::transfer_matrix;
  if (s == "oracle") return Engine::oracle;
  throw CLI::ValidationError("--engine", "unknown engine " + s);
}

PointSplit parse_split(const std::string& s) {
  if (s == "core") return PointSplit::core;
  if (s == "rings") return PointSplit::rings;
  return PointSplit::total;
}

RunSettings settings_from(const Options& o) {
  RunSettings s;
  s.threads = o.threads;
  s.split_depth = o.split_depth;
  s.engine = parse_engine(o.engine);
  s.split = parse_split(o.split);
  s.memory_budget = o.memory_budget;
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_count(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunSettings s = settings_from(o);
  std::vector<Column> cols;
  std::string engine;
  if (o.cls == "free" || o.cls == "one_sided") {
    if (s.split != PointSplit::total) throw CLI::ValidationError("--split", "splits apply to point-symmetric classes");
    ClassBundle b = compute_bundle(o.n, s);
    auto [free_t, one_t] = free_and_one_sided(b, o.n);
    cols.push_back({o.cls, o.cls == "free" ? free_t : one_t});
    engine = "burnside";
  } else {
    auto cls = parse_class(o.cls);
    if (!cls) throw CLI::ValidationError("--class", "unknown class " + o.cls);
    std::unique_ptr<CheckpointStore> store;
    if (!o.checkpoint.empty()) {
      if (*cls != SymmetryClass::fixed && !center_for(*cls)) {
        throw CLI::ValidationError("--checkpoint", "checkpoints apply to fixed and point-symmetric core searches");
      }
      std::ostringstream desc;
      desc << "class=" << o.cls << " n=" << o.n << " workers=" << s.threads << " split_depth=" << s.effective_split_depth()
           << " shortcut=1";
      store = std::make_unique<CheckpointStore>(o.checkpoint, desc.str());
      s.checkpoint = store.get();
    }
    auto r = compute_class(*cls, o.n, s);
    std::string name = o.cls;
    if (s.split == PointSplit::core) name += "_core";
    if (s.split == PointSplit::rings) name += "_rings";
    cols.push_back({name, r.table});
    engine = r.engine;
  }
  nlohmann::json meta{{"class", cols.front().name}, {"engine", engine}, {"threads", o.threads}};
  meta["seconds"] = std::round(seconds_since(t0) * 1000.0) / 1000.0;
  emit(std::cout, o.format, cols, meta);
  return kOk;
}

int cmd_table(const Options& o) {
  if (o.n > kTableCeiling && !o.force) {
    std::cerr << "table: n=" << o.n << " exceeds the ceiling of " << kTableCeiling
              << " (cost grows about 4x per step); pass --force to run anyway\n";
    return kUsage;
  }
  const auto t0 = std::chrono::steady_clock::now();
  ClassBundle b = compute_bundle(o.n, settings_from(o));
  auto [free_t, one_t] = free_and_one_sided(b, o.n);
  nlohmann::json meta{{"threads", o.threads}};
  meta["seconds"] = std::round(seconds_since(t0) * 1000.0) / 1000.0;
  emit(std::cout, o.format, {{"free", free_t}, {"one_sided", one_t}}, meta);
  return kOk;
}

int cmd_verify(const Options& o) {
  ReferenceTable ref;
  try {
    ref = ReferenceTable::load(o.reference);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return kIo;
  } catch (const MalformedReference& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return kIo;
  }
  RunSettings s = settings_from(o);
  ClassBundle b = compute_bundle(o.n, s);
  auto [free_t, one_t] = free_and_one_sided(b, o.n);
  std::vector<std::pair<std::string, CountTable>> computed;
  for (SymmetryClass c : kAllClasses) computed.emplace_back(std::string(name_of(c)), b.table(c));
  for (SymmetryClass c : {SymmetryClass::r180m, SymmetryClass::r180v}) {
    const std::string base(name_of(c));
    RunSettings split = s;
    split.split = PointSplit::core;
    computed.emplace_back(base + "_core", compute_class(c, o.n, split).table);
    split.split = PointSplit::rings;
    computed.emplace_back(base + "_rings", compute_class(c, o.n, split).table);
  }
  computed.emplace_back("free", free_t);
  computed.emplace_back("one_sided", one_t);
  VerifyReport report = verify(computed, ref);

  if (o.format == "json") {
    nlohmann::json j{{"ok", report.ok()}, {"rows", nlohmann::json::array()}};
    for (const auto& r : report.rows) {
      nlohmann::json row{{"kind", r.kind}, {"n", r.n}, {"computed", r.computed.str()}, {"verdict", to_string(r.verdict)}};
      if (r.expected) {
        row["expected"] = r.expected->str();
        row["source"] = r.source;
      }
      j["rows"].push_back(row);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    const char* sep = o.format == "csv" ? "," : " ";
    if (o.format == "csv") std::cout << "kind,n,computed,expected,source,verdict\n";
    for (const auto& r : report.rows) {
      std::cout << r.kind << sep << r.n << sep << r.computed << sep << (r.expected ? r.expected->str() : "-") << sep
                << (r.source.empty() ? "-" : (o.format == "csv" ? r.source : "[" + r.source + "]")) << sep
                << to_string(r.verdict) << '\n';
    }
  }
  const auto missing = report.count(Verdict::missing);
  const auto mismatched = report.count(Verdict::mismatch);
  std::cerr << report.count(Verdict::match) << " match, " << mismatched << " mismatch, " << missing << " missing\n";
  if (missing) std::cerr << "warning: " << missing << " computed values have no reference\n";
  return report.ok() ? kOk : kMismatch;
}

int cmd_oracle(const Options& o) {
  auto tables = oracle::oracle_tables(o.n);
  std::vector<Column> cols;
  if (o.cls == "all") {
    for (SymmetryClass c : kAllClasses) cols.push_back({std::string(name_of(c)), tables.at(c)});
  } else {
    auto cls = parse_class(o.cls);
    if (!cls) throw CLI::ValidationError("--class", "unknown class " + o.cls);
    cols.push_back({o.cls, tables.at(*cls)});
  }
  emit(std::cout, o.format, cols, nlohmann::json{{"engine", "oracle"}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyomino enumeration by symmetry class"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Largest cell count")->required()->check(CLI::Range(1, 255));
    sub->add_option("--threads", o.threads, "Worker threads")->envname("POLYENUM_THREADS")->check(CLI::PositiveNumber);
    sub->add_option("--split-depth", o.split_depth, "Search depth at which subtrees are dealt to workers")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--memory-budget", o.memory_budget, "Transfer-matrix memory budget in bytes")
        ->envname("POLYENUM_MEMORY_BUDGET");
    sub->add_option("--engine", o.engine, "auto, growth, tm or oracle")
        ->check(CLI::IsMember({"auto", "growth", "tm", "transfer-matrix", "oracle"}));
  };

  auto* count = app.add_subcommand("count", "Count one class (or free / one_sided)");
  add_common(count);
  count->add_option("--class", o.cls, "fixed, m90, m90v, m45, r180c, r180m, r180v, r90c, r90v, free, one_sided")
      ->required();
  count->add_option("--split", o.split, "core, rings or total (point-symmetric classes)")
      ->check(CLI::IsMember({"core", "rings", "total"}));
  count->add_option("--checkpoint", o.checkpoint, "Resume file for fixed and core searches");

  auto* table = app.add_subcommand("table", "Free and one-sided counts via Burnside's lemma");
  add_common(table);
  table->add_flag("--force", o.force, "Allow n beyond the guardrail");

  auto* verify_cmd = app.add_subcommand("verify", "Compare every computed table with reference data");
  add_common(verify_cmd);
  verify_cmd->add_option("--reference", o.reference, "Reference CSV (kind,n,value,source)")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force counts for small n");
  oracle_cmd->add_option("--n", o.n, "Largest cell count")->required()->check(CLI::Range(1, oracle::kDefaultLimit));
  oracle_cmd->add_option("--class", o.cls, "Class name or 'all'")->default_val("all");
  oracle_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o);
    if (table->parsed()) return cmd_table(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (oracle_cmd->parsed()) return cmd_oracle(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "; counts are final up to n=" << e.largest_complete_n() << '\n';
    return kResource;
  } catch (const oracle::LimitExceeded& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::ios_base::failure& e) {
    std::cerr << e.what() << '\n';
    return kIo;
  } catch (const CheckpointError& e) {
    std::cerr << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    // Divisibility failures and other consistency errors mean wrong numbers.
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
