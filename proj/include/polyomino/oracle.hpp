#pragma once

// Brute-force ground truth. Everything here favours obviousness over speed:
// shapes are grown one cell at a time and deduplicated by their normalized form,
// and symmetry is tested by applying every candidate isometry cell by cell.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <algorithm>
#include <vector>

#include "polyomino/count_table.hpp"
#include "polyomino/geometry.hpp"

namespace polyomino::oracle {

inline constexpr int kDefaultLimit = 12;

class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(int n, int limit)
      : std::runtime_error("oracle size " + std::to_string(n) + " exceeds the configured limit " +
                           std::to_string(limit)) {}
};

namespace detail {

inline std::vector<CellSet> grow_level(const std::vector<CellSet>& level) {
  std::unordered_set<CellSet, CellSetHash> next;
  for (const CellSet& shape : level) {
    for (const Cell& c : shape) {
      for (Cell nb : edge_neighbors(c)) {
        if (!shape.contains(nb)) next.insert(normalize(shape.with(nb)));
      }
    }
  }
  std::vector<CellSet> out(next.begin(), next.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Calls `visit(n, shapes)` for n = 1..n_max with all fixed n-ominoes.
template <typename Visit>
void for_each_size(int n_max, int limit, Visit&& visit) {
  if (n_max > limit) throw LimitExceeded(n_max, limit);
  std::vector<CellSet> level{CellSet{{0, 0}}};
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) level = detail::grow_level(level);
    visit(n, static_cast<const std::vector<CellSet>&>(level));
  }
}

/// One representative (normalized) per translation class of n-cell polyominoes.
inline std::vector<CellSet> enumerate_fixed(int n, int limit = kDefaultLimit) {
  if (n < 1) throw std::invalid_argument("enumerate_fixed: n must be >= 1");
  std::vector<CellSet> out;
  for_each_size(n, limit, [&](int size, const std::vector<CellSet>& shapes) {
    if (size == n) out = shapes;
  });
  return out;
}

enum class WitnessKind : std::uint8_t {
  mirror_vertical,      // (x, y) -> (a - x, y)
  mirror_horizontal,    // (x, y) -> (x, b - y)
  mirror_diagonal,      // (x, y) -> (y + a, x - a), the line x - y = a
  mirror_antidiagonal,  // (x, y) -> (a - y, a - x), the line x + y = a
  half_turn,            // about (a/2, b/2)
  quarter_turn,         // counter-clockwise about (a/2, b/2)
};

/// An isometry fixing a cell set, with its axis or center in doubled coordinates.
struct SymmetryWitness {
  WitnessKind kind;
  int a = 0;
  int b = 0;

  friend bool operator==(const SymmetryWitness&, const SymmetryWitness&) = default;

  [[nodiscard]] Cell apply(Cell p) const {
    switch (kind) {
      case WitnessKind::mirror_vertical: return {a - p.x, p.y};
      case WitnessKind::mirror_horizontal: return {p.x, b - p.y};
      case WitnessKind::mirror_diagonal: return {p.y + a, p.x - a};
      case WitnessKind::mirror_antidiagonal: return {a - p.y, a - p.x};
      case WitnessKind::half_turn: return {a - p.x, b - p.y};
      case WitnessKind::quarter_turn: return {(a + b) / 2 - p.y, (b - a) / 2 + p.x};
    }
    return p;
  }
};

/// The symmetry class a witness certifies in the canonical orientation, if any.
inline std::optional<SymmetryClass> class_of(const SymmetryWitness& w) {
  const bool a_even = w.a % 2 == 0;
  const bool b_even = w.b % 2 == 0;
  switch (w.kind) {
    case WitnessKind::mirror_vertical: return a_even ? SymmetryClass::m90 : SymmetryClass::m90v;
    case WitnessKind::mirror_diagonal: return SymmetryClass::m45;
    case WitnessKind::half_turn:
      if (a_even && b_even) return SymmetryClass::r180c;
      if (!a_even && b_even) return SymmetryClass::r180m;
      if (!a_even && !b_even) return SymmetryClass::r180v;
      return std::nullopt;  // half-turn about a horizontal edge midpoint
    case WitnessKind::quarter_turn: return a_even ? SymmetryClass::r90c : SymmetryClass::r90v;
    default: return std::nullopt;
  }
}

namespace detail {

class Occupancy {
 public:
  explicit Occupancy(const CellSet& s) : box_(bounding_box(s)), bits_(box_.width() * box_.height(), 0) {
    for (const Cell& c : s) bits_[index(c)] = 1;
  }
  [[nodiscard]] bool contains(Cell c) const {
    if (c.x < box_.min_x || c.x > box_.max_x || c.y < box_.min_y || c.y > box_.max_y) return false;
    return bits_[index(c)] != 0;
  }
  [[nodiscard]] const BoundingBox& box() const { return box_; }

 private:
  [[nodiscard]] std::size_t index(Cell c) const {
    return static_cast<std::size_t>((c.y - box_.min_y) * box_.width() + (c.x - box_.min_x));
  }
  BoundingBox box_;
  std::vector<char> bits_;
};

inline bool fixes(const CellSet& s, const Occupancy& occ, const SymmetryWitness& w) {
  for (const Cell& c : s) {
    if (!occ.contains(w.apply(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Every isometry (with its placement) mapping the set onto itself.
///
/// Placements range over the bounding box extended by one cell on each side:
/// any symmetry of a finite set fixes its bounding box, so this is exhaustive.
inline std::vector<SymmetryWitness> classify(const CellSet& s) {
  if (s.empty()) throw std::invalid_argument("classify: empty cell set");
  if (!is_connected(s)) throw std::invalid_argument("classify: cell set is not connected");
  detail::Occupancy occ(s);
  const BoundingBox& box = occ.box();
  const int ax0 = 2 * box.min_x - 2, ax1 = 2 * box.max_x + 2;
  const int by0 = 2 * box.min_y - 2, by1 = 2 * box.max_y + 2;

  std::vector<SymmetryWitness> out;
  auto test = [&](SymmetryWitness w) {
    if (detail::fixes(s, occ, w)) out.push_back(w);
  };
  for (int a = ax0; a <= ax1; ++a) test({WitnessKind::mirror_vertical, a, 0});
  for (int b = by0; b <= by1; ++b) test({WitnessKind::mirror_horizontal, 0, b});
  for (int k = box.min_x - box.max_y - 1; k <= box.max_x - box.min_y + 1; ++k) {
    test({WitnessKind::mirror_diagonal, k, 0});
  }
  for (int k = box.min_x + box.min_y - 1; k <= box.max_x + box.max_y + 1; ++k) {
    test({WitnessKind::mirror_antidiagonal, k, 0});
  }
  for (int a = ax0; a <= ax1; ++a) {
    for (int b = by0; b <= by1; ++b) {
      test({WitnessKind::half_turn, a, b});
      if ((a - b) % 2 == 0) test({WitnessKind::quarter_turn, a, b});
    }
  }
  return out;
}

/// Whether a set has at least the symmetry of `cls` in the canonical orientation.
inline bool has_class(const std::vector<SymmetryWitness>& witnesses, SymmetryClass cls) {
  if (cls == SymmetryClass::fixed) return true;
  for (const auto& w : witnesses) {
    if (class_of(w) == cls) return true;
  }
  return false;
}

/// Per-class counts for every n in 1..n_max, from one exhaustive enumeration.
inline std::map<SymmetryClass, CountTable> oracle_tables(int n_max, int limit = kDefaultLimit) {
  std::map<SymmetryClass, CountTable> tables;
  for (SymmetryClass c : kAllClasses) tables.emplace(c, CountTable("oracle:" + std::string(name_of(c))));
  for_each_size(n_max, limit, [&](int n, const std::vector<CellSet>& shapes) {
    std::map<SymmetryClass, std::uint64_t> counts;
    for (const CellSet& shape : shapes) {
      auto witnesses = classify(shape);
      for (SymmetryClass c : kAllClasses) {
        if (has_class(witnesses, c)) ++counts[c];
      }
    }
    for (SymmetryClass c : kAllClasses) tables.at(c).set(n, BigCount(counts[c]));
  });
  return tables;
}

inline BigCount oracle_count(SymmetryClass cls, int n, int limit = kDefaultLimit) {
  if (n > limit) throw LimitExceeded(n, limit);
  std::uint64_t count = 0;
  for (const CellSet& shape : enumerate_fixed(n, limit)) {
    if (has_class(classify(shape), cls)) ++count;
  }
  return BigCount(count);
}

}  // namespace polyomino::oracle
