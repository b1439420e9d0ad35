#pragma once

// Picks an engine per class and runs it; shared by the command-line tool and
// the acceptance suite.

#include <stdexcept>
#include <string>
#include <utility>

#include "polyomino/aggregate.hpp"
#include "polyomino/growth.hpp"
#include "polyomino/oracle.hpp"
#include "polyomino/parallel.hpp"
#include "polyomino/point_symmetry.hpp"
#include "polyomino/transfer_matrix.hpp"

namespace polyomino {

enum class Engine : std::uint8_t { automatic, growth, transfer_matrix, oracle };

inline const char* to_string(Engine e) {
  switch (e) {
    case Engine::automatic: return "auto";
    case Engine::growth: return "growth";
    case Engine::transfer_matrix: return "transfer-matrix";
    case Engine::oracle: return "oracle";
  }
  return "?";
}

struct RunSettings {
  int threads = 1;
  int split_depth = -1;  // negative: 0 for one thread, otherwise deep enough to balance
  Engine engine = Engine::automatic;
  PointSplit split = PointSplit::total;
  std::size_t memory_budget = 0;
  bool aggregate_last_two = true;
  int oracle_limit = oracle::kDefaultLimit;
  CheckpointStore* checkpoint = nullptr;

  [[nodiscard]] int effective_split_depth() const {
    if (split_depth >= 0) return split_depth;
    return threads > 1 ? 5 : 0;
  }
};

struct ClassResult {
  CountTable table;
  std::string engine;
};

inline ClassResult compute_class(SymmetryClass cls, int n_max, const RunSettings& s) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const SearchOptions options{s.aggregate_last_two};
  const int depth = s.effective_split_depth();
  if (s.engine == Engine::oracle) {
    auto tables = oracle::oracle_tables(n_max, s.oracle_limit);
    return {tables.at(cls), "oracle"};
  }
  if (s.split != PointSplit::total && !center_for(cls)) {
    throw std::invalid_argument("core/rings splits exist only for point-symmetric classes");
  }
  switch (cls) {
    case SymmetryClass::fixed: {
      if (s.engine == Engine::transfer_matrix) throw std::invalid_argument("no transfer-matrix engine for fixed");
      auto t = count_growth_parallel(fixed_problem(n_max), s.threads, depth, s.threads, options, s.checkpoint);
      t.set_label("fixed");
      return {t, "growth"};
    }
    case SymmetryClass::m90v: {
      RunSettings half = s;
      half.checkpoint = nullptr;
      auto fixed = n_max >= 2 ? compute_class(SymmetryClass::fixed, n_max / 2, half).table : CountTable("fixed");
      return {m90v_table(fixed, n_max), "fixed(n/2)"};
    }
    case SymmetryClass::m90:
    case SymmetryClass::m45: {
      const bool vertical = cls == SymmetryClass::m90;
      if (s.engine == Engine::growth) {
        const auto axis = vertical ? MirrorAxis::vertical_through_centers : MirrorAxis::main_diagonal;
        auto t = count_growth_parallel(mirror_problem(axis, n_max), s.threads, depth, s.threads, options);
        t.set_label(std::string(name_of(cls)));
        return {t, "growth"};
      }
      const TMOptions tm{s.memory_budget};
      return {vertical ? count_m90(n_max, tm) : count_m45(n_max, tm), "transfer-matrix"};
    }
    default: {
      if (s.engine == Engine::transfer_matrix) throw std::invalid_argument("no transfer-matrix engine for point symmetry");
      const CenterSpec center = *center_for(cls);
      return {count_class(center, n_max, s.split, s.threads, depth, s.threads, options, s.checkpoint), "growth"};
    }
  }
}

/// All nine class tables up to n_max with the fastest engine for each.
inline ClassBundle compute_bundle(int n_max, const RunSettings& s) {
  ClassBundle b;
  RunSettings plain = s;
  plain.split = PointSplit::total;
  plain.checkpoint = nullptr;  // subtree numbering is per search
  for (SymmetryClass c : kAllClasses) {
    auto r = compute_class(c, n_max, plain);
    b.put(c, std::move(r.table), r.engine);
  }
  return b;
}

}  // namespace polyomino
