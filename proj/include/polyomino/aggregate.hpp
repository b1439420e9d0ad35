#pragma once

// Burnside assembly of free and one-sided counts, and comparison against
// reference data.
//
//   8 Free(n)      = Fixed + 2 M90V + 2 M90 + 2 M45 + R180C + 2 R180M + R180V + 2 R90C + 2 R90V
//   4 OneSided(n)  = Fixed + R180C + 2 R180M + R180V + 2 R90C + 2 R90V
//
// M90V(n) = Fixed(n/2) for even n: folding along a boundary axis halves the
// polyomino into an arbitrary fixed polyomino and its mirror image.

#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyomino/count_table.hpp"

namespace polyomino {

class MissingEntry : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class MalformedReference : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline CountTable m90v_table(const CountTable& fixed, int n_max) {
  CountTable t("m90v");
  for (int n = 1; n <= n_max; ++n) {
    if (n % 2) {
      t.set(n, BigCount(0));
      continue;
    }
    auto half = fixed.exact(n / 2);
    if (!half) throw MissingEntry("m90v(" + std::to_string(n) + ") needs fixed(" + std::to_string(n / 2) + ")");
    t.set(n, *half);
  }
  return t;
}

/// One table per class, each tagged with where it came from.
class ClassBundle {
 public:
  void put(SymmetryClass c, CountTable table, std::string provenance) {
    tables_[c] = std::move(table);
    provenance_[c] = std::move(provenance);
  }
  [[nodiscard]] bool has(SymmetryClass c) const { return tables_.count(c) != 0; }
  [[nodiscard]] const CountTable& table(SymmetryClass c) const {
    auto it = tables_.find(c);
    if (it == tables_.end()) throw MissingEntry("no table for class " + std::string(name_of(c)));
    return it->second;
  }
  [[nodiscard]] const std::string& provenance(SymmetryClass c) const { return provenance_.at(c); }

  /// Exact value or MissingEntry.
  [[nodiscard]] BigCount value(SymmetryClass c, int n) const {
    auto v = table(c).exact(n);
    if (!v) throw MissingEntry("no exact entry " + std::string(name_of(c)) + "(" + std::to_string(n) + ")");
    return *v;
  }

 private:
  std::map<SymmetryClass, CountTable> tables_;
  std::map<SymmetryClass, std::string> provenance_;
};

namespace detail {

inline BigCount weighted_sum(const ClassBundle& b, int n, std::initializer_list<std::pair<SymmetryClass, int>> terms) {
  BigCount sum;
  for (auto [c, k] : terms) {
    BigCount v = b.value(c, n);
    v *= BigCount(static_cast<std::uint64_t>(k));
    sum += v;
  }
  return sum;
}

inline BigCount divide_checked(BigCount sum, std::uint64_t d, const char* what, int n) {
  if (sum.mod(d) != 0) {
    throw DivisibilityError(std::string(what) + " sum at n=" + std::to_string(n) + " is " + sum.str() +
                            ", not divisible by " + std::to_string(d));
  }
  return sum.divide_exact(d);
}

}  // namespace detail

/// The pre-division sum for free polyominoes (should be a multiple of 8).
inline BigCount free_sum(const ClassBundle& b, int n) {
  using S = SymmetryClass;
  return detail::weighted_sum(b, n,
                              {{S::fixed, 1}, {S::m90v, 2}, {S::m90, 2}, {S::m45, 2}, {S::r180c, 1}, {S::r180m, 2},
                               {S::r180v, 1}, {S::r90c, 2}, {S::r90v, 2}});
}

/// The pre-division sum for one-sided polyominoes (should be a multiple of 4).
inline BigCount one_sided_sum(const ClassBundle& b, int n) {
  using S = SymmetryClass;
  return detail::weighted_sum(b, n, {{S::fixed, 1}, {S::r180c, 1}, {S::r180m, 2}, {S::r180v, 1}, {S::r90c, 2}, {S::r90v, 2}});
}

inline BigCount free_count(const ClassBundle& b, int n) { return detail::divide_checked(free_sum(b, n), 8, "free", n); }

inline BigCount one_sided_count(const ClassBundle& b, int n) {
  return detail::divide_checked(one_sided_sum(b, n), 4, "one-sided", n);
}

/// Free and one-sided tables over 1..n_max; sizes with a missing input are left out.
inline std::pair<CountTable, CountTable> free_and_one_sided(const ClassBundle& b, int n_max) {
  CountTable free_t("free"), one_t("one_sided");
  for (int n = 1; n <= n_max; ++n) {
    try {
      free_t.set(n, free_count(b, n));
    } catch (const MissingEntry&) {
    }
    try {
      one_t.set(n, one_sided_count(b, n));
    } catch (const MissingEntry&) {
    }
  }
  return {free_t, one_t};
}

/// Labeled reference values, keyed by (kind, n).
class ReferenceTable {
 public:
  struct Record {
    BigCount value;
    std::string source;
  };

  static ReferenceTable parse(std::istream& in) {
    ReferenceTable t;
    std::string line;
    int line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      if (!header) {
        if (line != "kind,n,value,source") throw MalformedReference("reference header must be kind,n,value,source");
        header = true;
        continue;
      }
      std::vector<std::string> f;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, ',')) f.push_back(field);
      if (f.size() != 4) throw MalformedReference("reference line " + std::to_string(line_no) + ": expected 4 fields");
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(f[1], &used);
        if (used != f[1].size() || n < 1) throw std::invalid_argument("n");
      } catch (const std::exception&) {
        throw MalformedReference("reference line " + std::to_string(line_no) + ": bad n '" + f[1] + "'");
      }
      BigCount v;
      try {
        v = BigCount::parse(f[2]);
      } catch (const std::exception&) {
        throw MalformedReference("reference line " + std::to_string(line_no) + ": bad value '" + f[2] + "'");
      }
      auto key = std::make_pair(f[0], n);
      auto it = t.records_.find(key);
      if (it != t.records_.end() && it->second.value != v) {
        throw MalformedReference("conflicting reference values for " + f[0] + "(" + std::to_string(n) + ")");
      }
      t.records_[key] = Record{v, f[3]};
    }
    if (!header) throw MalformedReference("reference data is empty");
    return t;
  }

  static ReferenceTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read reference file " + path);
    return parse(in);
  }

  [[nodiscard]] const Record* find(const std::string& kind, int n) const {
    auto it = records_.find({kind, n});
    return it == records_.end() ? nullptr : &it->second;
  }

  /// Every (n, value) of one kind as a table.
  [[nodiscard]] CountTable table(const std::string& kind) const {
    CountTable t("reference:" + kind);
    for (const auto& [key, rec] : records_) {
      if (key.first == kind) t.set(key.second, rec.value);
    }
    return t;
  }

  [[nodiscard]] std::size_t size() const { return records_.size(); }

 private:
  std::map<std::pair<std::string, int>, Record> records_;
};

enum class Verdict : std::uint8_t { match, mismatch, missing };

struct Comparison {
  std::string kind;
  int n = 0;
  BigCount computed;
  std::optional<BigCount> expected;
  std::string source;
  Verdict verdict = Verdict::missing;
};

struct VerifyReport {
  std::vector<Comparison> rows;

  [[nodiscard]] std::size_t count(Verdict v) const {
    std::size_t k = 0;
    for (const auto& r : rows) k += r.verdict == v;
    return k;
  }
  [[nodiscard]] bool ok() const { return count(Verdict::mismatch) == 0; }
};

/// Compares every exact entry of each (kind, table) pair with the reference.
inline VerifyReport verify(const std::vector<std::pair<std::string, CountTable>>& computed,
                           const ReferenceTable& reference) {
  VerifyReport report;
  for (const auto& [kind, table] : computed) {
    for (const auto& [n, entry] : table.entries()) {
      if (entry.status != EntryStatus::exact) continue;
      Comparison c{kind, n, entry.value, std::nullopt, "", Verdict::missing};
      if (const auto* rec = reference.find(kind, n)) {
        c.expected = rec->value;
        c.source = rec->source;
        c.verdict = rec->value == entry.value ? Verdict::match : Verdict::mismatch;
      }
      report.rows.push_back(std::move(c));
    }
  }
  return report;
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::missing: return "missing";
  }
  return "?";
}

}  // namespace polyomino
