#pragma once

// Point-symmetric classes: half-turn and quarter-turn polyominoes counted on
// fundamental-domain boards.
//
// A symmetric polyomino either contains the cells incident to its center
// (the core) or it does not. Core figures are grown from the core orbit on
// the quotient board. Otherwise the center lies in a bounded empty region of
// the complement; that region H is symmetric and edge-connected, every cell
// edge-adjacent to H is occupied, and H is determined by the polyomino. So
// ring-type figures are counted hole by hole: forbid H, seed with its
// boundary, and keep only figures whose symmetric closure is connected.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyomino/board.hpp"
#include "polyomino/count_table.hpp"
#include "polyomino/geometry.hpp"
#include "polyomino/growth.hpp"
#include "polyomino/parallel.hpp"

namespace polyomino {

enum class CenterKind : std::uint8_t { cell_center_180, edge_mid_180, vertex_180, cell_center_90, vertex_90 };

struct CenterSpec {
  CenterKind kind;

  [[nodiscard]] int group_order() const {
    return kind == CenterKind::cell_center_90 || kind == CenterKind::vertex_90 ? 4 : 2;
  }

  [[nodiscard]] SymmetryClass symmetry_class() const {
    switch (kind) {
      case CenterKind::cell_center_180: return SymmetryClass::r180c;
      case CenterKind::edge_mid_180: return SymmetryClass::r180m;
      case CenterKind::vertex_180: return SymmetryClass::r180v;
      case CenterKind::cell_center_90: return SymmetryClass::r90c;
      case CenterKind::vertex_90: return SymmetryClass::r90v;
    }
    throw std::invalid_argument("unknown center kind");
  }

  /// The generating rotation; the center sits at the origin, (1/2, 0) or (1/2, 1/2).
  [[nodiscard]] Isometry generator() const {
    switch (kind) {
      case CenterKind::cell_center_180: return {{-1, 0, 0, -1}, {0, 0}};
      case CenterKind::edge_mid_180: return {{-1, 0, 0, -1}, {1, 0}};
      case CenterKind::vertex_180: return {{-1, 0, 0, -1}, {1, 1}};
      case CenterKind::cell_center_90: return {{0, -1, 1, 0}, {0, 0}};
      case CenterKind::vertex_90: return {{0, -1, 1, 0}, {1, 0}};
    }
    throw std::invalid_argument("unknown center kind");
  }

  /// Plane cells incident to the center: 1x1, 1x2 or 2x2.
  [[nodiscard]] CellSet core_cells() const {
    switch (kind) {
      case CenterKind::cell_center_180:
      case CenterKind::cell_center_90: return CellSet{{0, 0}};
      case CenterKind::edge_mid_180: return CellSet{{0, 0}, {1, 0}};
      case CenterKind::vertex_180:
      case CenterKind::vertex_90: return CellSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    }
    throw std::invalid_argument("unknown center kind");
  }

  [[nodiscard]] bool in_domain(Cell c) const {
    switch (kind) {
      case CenterKind::cell_center_180: return c.y > 0 || (c.y == 0 && c.x >= 0);
      case CenterKind::edge_mid_180: return c.y > 0 || (c.y == 0 && c.x >= 1);
      case CenterKind::vertex_180: return c.y >= 1;
      case CenterKind::cell_center_90: return (c.x > 0 && c.y >= 0) || (c.x == 0 && c.y == 0);
      case CenterKind::vertex_90: return c.x >= 1 && c.y >= 1;
    }
    return false;
  }
};

inline std::optional<CenterSpec> center_for(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::r180c: return CenterSpec{CenterKind::cell_center_180};
    case SymmetryClass::r180m: return CenterSpec{CenterKind::edge_mid_180};
    case SymmetryClass::r180v: return CenterSpec{CenterKind::vertex_180};
    case SymmetryClass::r90c: return CenterSpec{CenterKind::cell_center_90};
    case SymmetryClass::r90v: return CenterSpec{CenterKind::vertex_90};
    default: return std::nullopt;
  }
}

inline std::shared_ptr<const Board> build_board(CenterSpec center, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<Isometry> group{Isometry{}};
  const Isometry g = center.generator();
  for (int k = 1; k < center.group_order(); ++k) {
    const Isometry& prev = group.back();
    // g after prev
    Cell s = g.apply(prev.shift);
    LinearMap m{g.linear.a * prev.linear.a + g.linear.b * prev.linear.c,
                g.linear.a * prev.linear.b + g.linear.b * prev.linear.d,
                g.linear.c * prev.linear.a + g.linear.d * prev.linear.c,
                g.linear.c * prev.linear.b + g.linear.d * prev.linear.d};
    group.push_back(Isometry{m, s});
  }
  return std::make_shared<const Board>(std::move(group), [center](Cell c) { return center.in_domain(c); },
                                       n_max + 2);
}

/// Sorted, distinct domain indices of the orbit representatives of plane cells.
inline std::vector<int> fold_cells(const Board& board, const CellSet& cells) {
  std::vector<int> out;
  for (const Cell& c : cells) {
    auto i = board.index_of(c);
    if (!i) throw std::out_of_range("cell " + to_string(c) + " lies outside the board");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline GrowthProblem core_problem(CenterSpec center, int n_max) {
  GrowthProblem p;
  p.board = build_board(center, n_max);
  p.n_max = n_max;
  p.seeds = fold_cells(*p.board, center.core_cells());
  return p;
}

/// Symmetric polyominoes containing every cell incident to the center.
inline CountTable count_core(CenterSpec center, int n_max, int worker_count = 1, int split_depth = 0,
                             int threads = 1, const SearchOptions& options = {},
                             CheckpointStore* checkpoint = nullptr) {
  auto t = count_growth_parallel(core_problem(center, n_max), worker_count, split_depth, threads, options,
                                 checkpoint);
  t.set_label(std::string(name_of(center.symmetry_class())) + "_core");
  return t;
}

/// An empty symmetric region around the center together with its occupied rim.
struct HoleRegion {
  CellSet hole;
  CellSet boundary;
  /// For vertex centers with exactly one occupied orbit of incident cells.
  CellSet pair_seeds;
};

namespace detail {

inline CellSet edge_boundary(const CellSet& region) {
  std::vector<Cell> out;
  for (const Cell& c : region) {
    for (Cell nb : edge_neighbors(c)) {
      if (!region.contains(nb)) out.push_back(nb);
    }
  }
  return CellSet(std::move(out));
}

// Any connected polyomino enclosing a region with a w x h bounding box has at
// least 2(w + h) + 4 cells. Growing the region only grows the box.
inline bool ring_fits(const CellSet& hole, int n_max) {
  BoundingBox b = bounding_box(hole);
  return 2 * (b.width() + b.height()) + 4 <= n_max;
}

inline int max_hole_area(int n_max) {
  const int half = (n_max - 4) / 2;  // bound on w + h
  return std::max(1, (half / 2) * (half - half / 2));
}

inline HoleRegion make_region(CellSet hole, CellSet pair_seeds = {}) {
  HoleRegion r;
  r.boundary = edge_boundary(hole);
  r.hole = std::move(hole);
  r.pair_seeds = std::move(pair_seeds);
  return r;
}

// Vertex-180 holes when only the orbit {(0,0),(1,1)} (or {(1,0),(0,1)}) is
// occupied: the two empty incident cells lie in distinct complement
// components swapped by the half-turn. Grow one of them on the plane.
template <typename Sink>
void diagonal_pair_holes(int n_max, Sink&& sink) {
  const Isometry rot = CenterSpec{CenterKind::vertex_180}.generator();
  for (int variant = 0; variant < 2; ++variant) {
    const Cell start = variant == 0 ? Cell{1, 0} : Cell{0, 0};
    const CellSet occupied = variant == 0 ? CellSet{{0, 0}, {1, 1}} : CellSet{{1, 0}, {0, 1}};
    GrowthProblem p;
    p.board = make_plane_board(n_max + 2);
    p.n_max = max_hole_area(n_max);
    p.seeds = {*p.board->index_of(start)};
    for (const Cell& c : CenterSpec{CenterKind::vertex_180}.core_cells()) {
      if (c != start) p.forbidden.push_back(*p.board->index_of(c));
    }
    if (p.n_max < 1) continue;
    GrowthEngine engine(p);
    const Board& board = *p.board;
    engine.enumerate([&](std::span<const int> figure, int) {
      std::vector<Cell> half;
      for (int i : figure) half.push_back(board.cell(i));
      CellSet h1(std::move(half));
      std::vector<Cell> both(h1.begin(), h1.end());
      for (const Cell& c : h1) {
        Cell r = rot.apply(c);
        if (h1.contains(r)) return false;
        for (Cell nb : edge_neighbors(r)) {
          if (h1.contains(nb)) return false;
        }
        both.push_back(r);
      }
      CellSet hole(std::move(both));
      if (!ring_fits(hole, n_max)) return false;
      sink(make_region(std::move(hole), occupied));
      return true;
    });
  }
}

}  // namespace detail

/// Every hole region that could belong to a polyomino of at most n_max cells.
inline std::vector<HoleRegion> enumerate_holes(CenterSpec center, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<HoleRegion> out;
  GrowthProblem p = core_problem(center, n_max);
  p.n_max = detail::max_hole_area(n_max);
  int seed_weight = 0;
  for (int s : p.seeds) seed_weight += p.board->weight(s);
  if (seed_weight <= p.n_max) {
    GrowthEngine engine(p);
    const Board& board = *p.board;
    engine.enumerate([&](std::span<const int> figure, int) {
      CellSet hole = board.closure(figure);
      if (!detail::ring_fits(hole, n_max)) return false;
      out.push_back(detail::make_region(std::move(hole)));
      return true;
    });
  }
  if (center.kind == CenterKind::vertex_180) {
    detail::diagonal_pair_holes(n_max, [&](HoleRegion r) { out.push_back(std::move(r)); });
  }
  return out;
}

/// Ring-type figures: symmetric polyominoes avoiding some cell incident to the center.
///
/// Holes are dealt to workers round-robin; split_depth does not apply here.
inline CountTable count_rings(CenterSpec center, int n_max, int worker_count = 1, int threads = 1) {
  const auto holes = enumerate_holes(center, n_max);
  auto board = build_board(center, n_max);
  CountTable t = run_partitioned(worker_count, 0, threads, [&](const PartitionPolicy& policy) {
    std::vector<std::uint64_t> sum(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::size_t h = 0; h < holes.size(); ++h) {
      if (h % static_cast<std::size_t>(policy.worker_count) != static_cast<std::size_t>(policy.worker_id)) continue;
      const HoleRegion& region = holes[h];
      if (static_cast<int>(region.boundary.size()) > n_max) continue;
      GrowthProblem p;
      p.board = board;
      p.n_max = n_max;
      p.seeds = fold_cells(*board, region.boundary);
      p.forbidden = fold_cells(*board, region.hole);
      const Board* b = board.get();
      p.leaf_filter = [b](std::span<const int> figure) { return is_connected(b->closure(figure)); };
      GrowthEngine engine(std::move(p));
      auto counts = engine.count(PartitionPolicy{});
      for (std::size_t n = 0; n < sum.size(); ++n) sum[n] += counts[n];
    }
    return CountTable::from_weights("rings", sum);
  });
  t.set_label(std::string(name_of(center.symmetry_class())) + "_rings");
  return t;
}

enum class PointSplit : std::uint8_t { core, rings, total };

inline CountTable count_class(CenterSpec center, int n_max, PointSplit split = PointSplit::total,
                              int worker_count = 1, int split_depth = 0, int threads = 1,
                              const SearchOptions& options = {}, CheckpointStore* checkpoint = nullptr) {
  if (split == PointSplit::core) return count_core(center, n_max, worker_count, split_depth, threads, options, checkpoint);
  CountTable rings = count_rings(center, n_max, worker_count, threads);
  if (split == PointSplit::rings) return rings;
  CountTable t = count_core(center, n_max, worker_count, split_depth, threads, options, checkpoint);
  t += rings;
  t.set_label(std::string(name_of(center.symmetry_class())));
  return t;
}

/// Quarter-turn classes; the same core/hole decomposition on the quarter board.
inline CountTable count_r90(CenterSpec center, int n_max, int worker_count = 1, int split_depth = 0,
                            int threads = 1, const SearchOptions& options = {}) {
  if (center.group_order() != 4) throw std::invalid_argument("count_r90 needs a quarter-turn center");
  return count_class(center, n_max, PointSplit::total, worker_count, split_depth, threads, options);
}

}  // namespace polyomino
