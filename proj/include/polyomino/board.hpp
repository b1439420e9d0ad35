#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyomino/geometry.hpp"

namespace polyomino {

/// Lattice isometry p -> M p + t with M in the dihedral group of the square.
struct Isometry {
  LinearMap linear{1, 0, 0, 1};
  Cell shift{0, 0};

  [[nodiscard]] Cell apply(Cell p) const {
    Cell q = linear.apply(p);
    return {q.x + shift.x, q.y + shift.y};
  }
};

/// A symmetry-quotiented board: one domain cell per orbit of a finite group.
///
/// Domain cells are indexed 0..size()-1 in row-major order of their
/// coordinates. Neighbor lists hold the orbit representatives of the four
/// plane neighbors, deduplicated, without self-loops, and padded with
/// `sentinel()`; a plane neighbor that falls on the quotiented side wraps
/// to its representative. Cells outside the radius also map to the sentinel.
class Board {
 public:
  static constexpr int kMaxNeighbors = 4;

  Board(std::vector<Isometry> group, std::function<bool(Cell)> in_domain, int radius)
      : group_(std::move(group)), in_domain_(std::move(in_domain)), radius_(radius) {
    if (group_.empty()) throw std::invalid_argument("board group must contain the identity");
    if (radius_ < 1) throw std::invalid_argument("board radius must be >= 1");
    lo_ = -radius_;
    span_ = 2 * radius_ + 2;
    lookup_.assign(static_cast<std::size_t>(span_) * span_, -1);
    for (int y = lo_; y < lo_ + span_; ++y) {
      for (int x = lo_; x < lo_ + span_; ++x) {
        if (in_domain_({x, y})) cells_.push_back({x, y});
      }
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) lookup_[window_index(cells_[i])] = static_cast<int>(i);

    const int n = size();
    weights_.assign(static_cast<std::size_t>(n) + 1, 0);
    neighbors_.assign(static_cast<std::size_t>(n + 1) * kMaxNeighbors, n);
    for (int i = 0; i < n; ++i) {
      weights_[i] = static_cast<std::uint8_t>(orbit(i).size());
      std::vector<int> adj;
      for (Cell p : edge_neighbors(cells_[i])) {
        auto j = index_of(p);
        if (j && *j != i) adj.push_back(*j);
      }
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
      for (std::size_t k = 0; k < adj.size(); ++k) neighbors_[static_cast<std::size_t>(i) * kMaxNeighbors + k] = adj[k];
    }
    weights_[n] = 0xff;
  }

  [[nodiscard]] int size() const { return static_cast<int>(cells_.size()); }
  [[nodiscard]] int sentinel() const { return size(); }
  [[nodiscard]] int radius() const { return radius_; }
  [[nodiscard]] Cell cell(int i) const { return cells_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] int weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] std::span<const Isometry> group() const { return group_; }

  [[nodiscard]] std::span<const int, kMaxNeighbors> neighbors(int i) const {
    return std::span<const int, kMaxNeighbors>(neighbors_.data() + static_cast<std::size_t>(i) * kMaxNeighbors,
                                               kMaxNeighbors);
  }
  /// Flat neighbor table including the sentinel row; used by the search engines.
  [[nodiscard]] std::span<const int> neighbor_table() const { return neighbors_; }
  [[nodiscard]] std::span<const std::uint8_t> weight_table() const { return weights_; }

  /// Orbit representative of a plane cell, if it lies within the board.
  [[nodiscard]] std::optional<Cell> fold(Cell p) const {
    for (const Isometry& g : group_) {
      Cell q = g.apply(p);
      if (in_domain_(q)) return q;
    }
    return std::nullopt;
  }

  /// Domain index of the representative of a plane cell.
  [[nodiscard]] std::optional<int> index_of(Cell p) const {
    auto rep = fold(p);
    if (!rep || !in_window(*rep)) return std::nullopt;
    int idx = lookup_[window_index(*rep)];
    if (idx < 0) return std::nullopt;
    return idx;
  }

  /// Distinct plane cells in the orbit of domain cell i.
  [[nodiscard]] std::vector<Cell> orbit(int i) const {
    std::vector<Cell> out;
    for (const Isometry& g : group_) out.push_back(g.apply(cells_.at(static_cast<std::size_t>(i))));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Plane cells of the symmetric closure of a set of domain cells.
  [[nodiscard]] CellSet closure(std::span<const int> domain_cells) const {
    std::vector<Cell> out;
    for (int i : domain_cells) {
      auto o = orbit(i);
      out.insert(out.end(), o.begin(), o.end());
    }
    return CellSet(std::move(out));
  }

 private:
  [[nodiscard]] bool in_window(Cell c) const {
    return c.x >= lo_ && c.x < lo_ + span_ && c.y >= lo_ && c.y < lo_ + span_;
  }
  [[nodiscard]] std::size_t window_index(Cell c) const {
    return static_cast<std::size_t>(c.y - lo_) * span_ + static_cast<std::size_t>(c.x - lo_);
  }

  std::vector<Isometry> group_;
  std::function<bool(Cell)> in_domain_;
  int radius_;
  int lo_ = 0;
  int span_ = 0;
  std::vector<Cell> cells_;
  std::vector<int> lookup_;
  std::vector<std::uint8_t> weights_;
  std::vector<int> neighbors_;
};

/// The unrestricted plane (trivial group) within the given radius.
inline std::shared_ptr<const Board> make_plane_board(int radius) {
  return std::make_shared<const Board>(std::vector<Isometry>{Isometry{}}, [](Cell) { return true; }, radius);
}

enum class MirrorAxis : std::uint8_t {
  vertical_through_centers,  // x -> -x; the axis column x = 0 has weight 1
  main_diagonal,             // (x, y) -> (y, x); diagonal cells have weight 1
};

/// Half-plane on one side of a mirror axis through cell centers (axis included).
inline std::shared_ptr<const Board> make_mirror_board(MirrorAxis axis, int radius) {
  if (axis == MirrorAxis::vertical_through_centers) {
    return std::make_shared<const Board>(std::vector<Isometry>{Isometry{}, Isometry{{-1, 0, 0, 1}, {0, 0}}},
                                         [](Cell c) { return c.x >= 0; }, radius);
  }
  return std::make_shared<const Board>(std::vector<Isometry>{Isometry{}, Isometry{{0, 1, 1, 0}, {0, 0}}},
                                       [](Cell c) { return c.x >= c.y; }, radius);
}

}  // namespace polyomino
