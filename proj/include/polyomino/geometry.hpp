#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyomino {

/// A unit square of the lattice, addressed by column `x` and row `y`.
struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Row-major: rows first, then columns. This is the canonical order everywhere.
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

inline constexpr std::array<Cell, 4> kEdgeSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

inline std::array<Cell, 4> edge_neighbors(Cell c) {
  return {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}};
}

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x));
    auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y));
    return std::hash<std::uint64_t>{}((uy << 32) ^ ux);
  }
};

/// Finite set of cells kept sorted in row-major order without duplicates.
class CellSet {
 public:
  CellSet() = default;
  CellSet(std::initializer_list<Cell> cells) : cells_(cells) { canonicalize(); }
  explicit CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) { canonicalize(); }

  [[nodiscard]] std::size_t size() const { return cells_.size(); }
  [[nodiscard]] bool empty() const { return cells_.empty(); }
  [[nodiscard]] std::span<const Cell> cells() const { return cells_; }
  [[nodiscard]] auto begin() const { return cells_.begin(); }
  [[nodiscard]] auto end() const { return cells_.end(); }

  [[nodiscard]] bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  /// Copy of this set with `c` added.
  [[nodiscard]] CellSet with(Cell c) const {
    CellSet out = *this;
    auto it = std::lower_bound(out.cells_.begin(), out.cells_.end(), c);
    if (it == out.cells_.end() || *it != c) out.cells_.insert(it, c);
    return out;
  }

  friend bool operator==(const CellSet&, const CellSet&) = default;
  friend auto operator<=>(const CellSet& a, const CellSet& b) {
    return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                                                  b.cells_.end());
  }

 private:
  void canonicalize() {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  }

  std::vector<Cell> cells_;
};

struct CellSetHash {
  std::size_t operator()(const CellSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const Cell& c : s) h = (h ^ CellHash{}(c)) * 0x100000001b3ULL;
    return h;
  }
};

struct BoundingBox {
  int min_x = 0;
  int min_y = 0;
  int max_x = -1;
  int max_y = -1;

  [[nodiscard]] int width() const { return max_x - min_x + 1; }
  [[nodiscard]] int height() const { return max_y - min_y + 1; }
};

inline BoundingBox bounding_box(const CellSet& s) {
  if (s.empty()) throw std::invalid_argument("bounding box of an empty cell set");
  BoundingBox box{s.cells()[0].x, s.cells()[0].y, s.cells()[0].x, s.cells()[0].y};
  for (const Cell& c : s) {
    box.min_x = std::min(box.min_x, c.x);
    box.max_x = std::max(box.max_x, c.x);
    box.min_y = std::min(box.min_y, c.y);
    box.max_y = std::max(box.max_y, c.y);
  }
  return box;
}

inline CellSet translate(const CellSet& s, int dx, int dy) {
  std::vector<Cell> out;
  out.reserve(s.size());
  for (const Cell& c : s) out.push_back({c.x + dx, c.y + dy});
  return CellSet(std::move(out));
}

/// Translate so that the minimum x and minimum y over the members are both 0.
inline CellSet normalize(const CellSet& s) {
  if (s.empty()) throw std::invalid_argument("normalize: empty cell set");
  BoundingBox box = bounding_box(s);
  return translate(s, -box.min_x, -box.min_y);
}

/// Elements of the symmetry group of the square, acting linearly on cells.
enum class Dihedral : std::uint8_t {
  identity,
  rotate90,
  rotate180,
  rotate270,
  reflect_x,         // x -> -x (vertical mirror line)
  reflect_y,         // y -> -y (horizontal mirror line)
  reflect_diagonal,  // (x, y) -> (y, x)
  reflect_antidiagonal,
};

inline constexpr std::array<Dihedral, 8> kDihedralGroup{
    Dihedral::identity,  Dihedral::rotate90,  Dihedral::rotate180,        Dihedral::rotate270,
    Dihedral::reflect_x, Dihedral::reflect_y, Dihedral::reflect_diagonal, Dihedral::reflect_antidiagonal};

/// Integer 2x2 matrix {a, b; c, d} acting as (x, y) -> (a x + b y, c x + d y).
struct LinearMap {
  int a, b, c, d;

  [[nodiscard]] Cell apply(Cell p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

inline LinearMap matrix_of(Dihedral g) {
  switch (g) {
    case Dihedral::identity: return {1, 0, 0, 1};
    case Dihedral::rotate90: return {0, -1, 1, 0};
    case Dihedral::rotate180: return {-1, 0, 0, -1};
    case Dihedral::rotate270: return {0, 1, -1, 0};
    case Dihedral::reflect_x: return {-1, 0, 0, 1};
    case Dihedral::reflect_y: return {1, 0, 0, -1};
    case Dihedral::reflect_diagonal: return {0, 1, 1, 0};
    case Dihedral::reflect_antidiagonal: return {0, -1, -1, 0};
  }
  throw std::invalid_argument("unknown dihedral element");
}

/// h after g, i.e. the element acting as p -> h(g(p)).
inline Dihedral compose(Dihedral h, Dihedral g) {
  LinearMap mh = matrix_of(h), mg = matrix_of(g);
  LinearMap prod{mh.a * mg.a + mh.b * mg.c, mh.a * mg.b + mh.b * mg.d, mh.c * mg.a + mh.d * mg.c,
                 mh.c * mg.b + mh.d * mg.d};
  for (Dihedral e : kDihedralGroup) {
    if (matrix_of(e) == prod) return e;
  }
  throw std::logic_error("dihedral group not closed under composition");
}

/// normalize(g applied cellwise).
inline CellSet transform(const CellSet& s, Dihedral g) {
  LinearMap m = matrix_of(g);
  std::vector<Cell> out;
  out.reserve(s.size());
  for (const Cell& c : s) out.push_back(m.apply(c));
  return normalize(CellSet(std::move(out)));
}

/// True iff the edge-adjacency graph on the cells has exactly one component.
inline bool is_connected(const CellSet& s) {
  if (s.empty()) return false;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  auto cells = s.cells();
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (Cell nb : edge_neighbors(cells[i])) {
      auto it = std::lower_bound(cells.begin(), cells.end(), nb);
      if (it == cells.end() || *it != nb) continue;
      auto j = static_cast<std::size_t>(it - cells.begin());
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == s.size();
}

inline std::string to_string(Cell c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

inline std::string to_string(const CellSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += to_string(s.cells()[i]);
  }
  return out + "}";
}

}  // namespace polyomino
