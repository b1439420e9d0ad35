#pragma once

// Transfer-matrix counting of mirror-symmetric polyominoes.
//
// Only the half on one side of the mirror axis is swept, cell by cell in
// row-major order. The sweep front holds one cell per column; a state records
// which front cells are occupied and how they are connected, using the
// well-nested labels of a Motzkin path (a component's front cells appear as
// lower, middle..., upper; a lone front cell is isolated). Planarity keeps
// components from interleaving, so the labels determine the connectivity.
//
// Counts are kept per accumulated weight: axis cells weigh 1 and all other
// cells 2, so the weight of a half-figure is the size of the whole polyomino.

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyomino/count_table.hpp"

namespace polyomino {

class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(const std::string& what, int largest_complete_n)
      : std::runtime_error(what), largest_complete_n_(largest_complete_n) {}
  /// Largest n whose count was final when the limit hit (0 if none).
  [[nodiscard]] int largest_complete_n() const { return largest_complete_n_; }

 private:
  int largest_complete_n_;
};

enum class Label : std::uint8_t { empty, isolated, lower, middle, upper };

/// Packed sweep-front state: 3 bits per front position plus touch flags.
class TMState {
 public:
  static constexpr int kMaxWidth = 32;
  static constexpr int kFlagShift = 112;

  using Bits = unsigned __int128;

  TMState() = default;

  [[nodiscard]] Label label(int pos) const { return static_cast<Label>(static_cast<unsigned>(bits_ >> (3 * pos)) & 7u); }
  void set_label(int pos, Label l) {
    bits_ &= ~(Bits{7} << (3 * pos));
    bits_ |= Bits{static_cast<unsigned>(l)} << (3 * pos);
  }
  [[nodiscard]] unsigned flags() const { return static_cast<unsigned>(bits_ >> kFlagShift) & 0xffu; }
  void add_flags(unsigned f) { bits_ |= Bits{f & 0xffu} << kFlagShift; }

  [[nodiscard]] Bits bits() const { return bits_; }
  [[nodiscard]] bool no_cells(int width) const {
    return (bits_ & ((Bits{1} << (3 * width)) - 1)) == 0;
  }

  /// Component id per position (0 = empty), numbered 1, 2, ... left to right.
  void decode(int width, std::array<std::uint8_t, kMaxWidth>& comp) const {
    std::array<std::uint8_t, kMaxWidth> stack{};
    int top = 0;
    std::uint8_t next = 1;
    for (int i = 0; i < width; ++i) {
      switch (label(i)) {
        case Label::empty: comp[i] = 0; break;
        case Label::isolated: comp[i] = next++; break;
        case Label::lower:
          comp[i] = next;
          stack[top++] = next++;
          break;
        case Label::middle: comp[i] = stack[top - 1]; break;
        case Label::upper: comp[i] = stack[--top]; break;
      }
    }
  }

  /// Labels from component ids; ids may be arbitrary small nonzero values.
  static TMState encode(int width, const std::array<std::uint8_t, kMaxWidth>& comp, unsigned flags) {
    std::array<std::int8_t, 2 * kMaxWidth + 2> last{};
    std::array<bool, 2 * kMaxWidth + 2> seen{};
    last.fill(-1);
    for (int i = 0; i < width; ++i) {
      if (comp[i]) last[comp[i]] = static_cast<std::int8_t>(i);
    }
    TMState s;
    for (int i = 0; i < width; ++i) {
      const std::uint8_t c = comp[i];
      if (!c) continue;
      const bool first = !seen[c];
      seen[c] = true;
      const bool is_last = last[c] == i;
      s.set_label(i, first && is_last ? Label::isolated : first ? Label::lower : is_last ? Label::upper : Label::middle);
    }
    s.add_flags(flags);
    return s;
  }

  /// Bracket-matching check: lower/upper balance and nest, middles sit inside a pair.
  [[nodiscard]] bool well_nested(int width) const {
    int depth = 0;
    for (int i = 0; i < width; ++i) {
      switch (label(i)) {
        case Label::lower: ++depth; break;
        case Label::middle:
          if (depth == 0) return false;
          break;
        case Label::upper:
          if (depth-- == 0) return false;
          break;
        case Label::empty:
        case Label::isolated: break;
      }
    }
    for (int i = width; i < kMaxWidth; ++i) {
      if (label(i) != Label::empty) return false;
    }
    return depth == 0;
  }

  friend bool operator==(const TMState&, const TMState&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const TMState& s) {
    return H::combine(std::move(h), static_cast<std::uint64_t>(s.bits_), static_cast<std::uint64_t>(s.bits_ >> 64));
  }

 private:
  Bits bits_ = 0;
};

/// States with their counts per accumulated weight 0..n_max.
class StateLedger {
 public:
  explicit StateLedger(int n_max) : stride_(static_cast<std::size_t>(n_max) + 1) {}

  [[nodiscard]] std::size_t size() const { return states_.size(); }
  [[nodiscard]] bool empty() const { return states_.empty(); }
  [[nodiscard]] int n_max() const { return static_cast<int>(stride_) - 1; }
  [[nodiscard]] const TMState& state(std::size_t i) const { return states_[i]; }
  [[nodiscard]] const std::uint64_t* counts(std::size_t i) const { return counts_.data() + i * stride_; }

  void add(const TMState& s, int weight, std::uint64_t value) {
    auto [it, inserted] = index_.try_emplace(s, states_.size());
    if (inserted) {
      states_.push_back(s);
      counts_.resize(counts_.size() + stride_, 0);
    }
    std::uint64_t& slot = counts_[it->second * stride_ + static_cast<std::size_t>(weight)];
    if (__builtin_add_overflow(slot, value, &slot)) throw std::overflow_error("transfer-matrix count overflow");
  }

  /// Adds counts[w] at weight w + shift for every w <= last.
  void add_shifted(const TMState& s, const std::uint64_t* counts, int shift, int last) {
    while (last >= 0 && counts[last] == 0) --last;
    if (last < 0) return;
    auto [it, inserted] = index_.try_emplace(s, states_.size());
    if (inserted) {
      states_.push_back(s);
      counts_.resize(counts_.size() + stride_, 0);
    }
    std::uint64_t* row = counts_.data() + it->second * stride_ + shift;
    for (int w = 0; w <= last; ++w) {
      if (__builtin_add_overflow(row[w], counts[w], &row[w])) throw std::overflow_error("transfer-matrix count overflow");
    }
  }

  /// Rough resident size, for the memory budget.
  [[nodiscard]] std::size_t bytes() const {
    return index_.capacity() * (sizeof(TMState) + sizeof(std::size_t) + 1) + states_.capacity() * sizeof(TMState) +
           counts_.capacity() * sizeof(std::uint64_t);
  }

  void clear() {
    index_.clear();
    states_.clear();
    counts_.clear();
  }

  void swap(StateLedger& other) noexcept {
    index_.swap(other.index_);
    states_.swap(other.states_);
    counts_.swap(other.counts_);
    std::swap(stride_, other.stride_);
  }

 private:
  std::size_t stride_;
  absl::flat_hash_map<TMState, std::size_t> index_;
  std::vector<TMState> states_;
  std::vector<std::uint64_t> counts_;
};

/// One cell of a sweep: its front position, weight and the flags it sets.
struct TMCell {
  int pos = 0;
  int weight = 1;
  unsigned touch = 0;
};

struct TMOptions {
  std::size_t memory_budget = 0;  // bytes; 0 means unlimited
};

/// Minimal extra weight needed to finish a state, given the next cell to sweep.
using TMBound = std::function<int(const std::array<std::uint8_t, TMState::kMaxWidth>& comp, unsigned flags)>;

/// Advances every state of `in` over one cell into `out`.
///
/// Completed figures (their last front cell leaves, no other component is
/// open and every flag in `required` is set) are added to `harvest`.
inline void tm_step(const StateLedger& in, StateLedger& out, int width, const TMCell& cell, unsigned required,
                    const TMBound& bound, std::vector<std::uint64_t>& harvest) {
  const int n_max = in.n_max();
  std::array<std::uint8_t, TMState::kMaxWidth> comp{};
  std::array<std::uint8_t, TMState::kMaxWidth> next{};
  out.clear();
  for (std::size_t i = 0; i < in.size(); ++i) {
    const TMState& s = in.state(i);
    const std::uint64_t* cnt = in.counts(i);
    s.decode(width, comp);
    const unsigned flags = s.flags();
    const std::uint8_t up = comp[cell.pos];
    const std::uint8_t left = cell.pos > 0 ? comp[cell.pos - 1] : 0;

    // Leave the cell empty.
    next = comp;
    next[cell.pos] = 0;
    bool vanishes = false;
    bool others = false;
    if (up) {
      vanishes = true;
      for (int p = 0; p < width; ++p) {
        if (p == cell.pos || !next[p]) continue;
        if (next[p] == up) vanishes = false;
        else others = true;
      }
    }
    if (vanishes) {
      if (!others && (flags & required) == required) {
        for (int w = 0; w <= n_max; ++w) {
          if (cnt[w] && __builtin_add_overflow(harvest[w], cnt[w], &harvest[w])) {
            throw std::overflow_error("transfer-matrix count overflow");
          }
        }
      }
    } else {
      const int need = bound(next, flags);
      const TMState t = TMState::encode(width, next, flags);
      out.add_shifted(t, cnt, 0, n_max - need);
    }

    // Occupy the cell.
    next = comp;
    std::uint8_t id = up ? up : left;
    if (!id) id = static_cast<std::uint8_t>(width + 1 + cell.pos);  // fresh, never collides with decoded ids
    if (up && left && up != left) {
      for (int p = 0; p < width; ++p) {
        if (next[p] == left) next[p] = up;
      }
    }
    next[cell.pos] = id;
    const unsigned nflags = flags | cell.touch;
    const int need = bound(next, nflags) + cell.weight;
    const TMState t = TMState::encode(width, next, nflags);
    out.add_shifted(t, cnt, cell.weight, n_max - need);
  }
}

namespace detail {

// Admissible estimate of the weight a state still needs, given the front
// position `next` of the next cell to sweep. `cost(x)` is the cheapest cell a
// future row can place in column x.
//
// Any future path joining two front cells covers every column between them,
// so "fill the columns between consecutive occupied positions" is a relaxed
// way of merging their components; the cheapest way to merge all components
// this way is a minimum spanning tree over those gaps. Every component that
// must still grow also needs a future cell in one of its own columns (the
// cell below a front cell), and reaching an untouched side fills every column
// up to it. These column sets are disjoint, so the costs add up.
template <typename Cost>
int completion_bound(const std::array<std::uint8_t, TMState::kMaxWidth>& comp, int width, int next, bool need_low,
                     bool need_high, bool must_grow, Cost&& cost) {
  std::array<std::uint8_t, TMState::kMaxWidth> pos{};
  int k = 0;
  for (int p = 0; p < width; ++p) {
    if (comp[p]) pos[k++] = static_cast<std::uint8_t>(p);
  }
  if (k == 0) {
    if (need_low && need_high) {
      int all = 0;
      for (int x = 0; x < width; ++x) all += cost(x);
      return all;
    }
    if (need_low) return cost(0);
    if (need_high) return cost(width - 1);
    return must_grow ? 1 : 0;
  }
  const int first = pos[0], last = pos[k - 1];
  int total = 0;
  if (need_low) {
    for (int x = 0; x < first; ++x) total += cost(x);
  }
  if (need_high) {
    for (int x = last + 1; x < width; ++x) total += cost(x);
  }

  constexpr int kIds = 2 * TMState::kMaxWidth + 2;
  std::array<std::uint8_t, kIds> parent{};
  std::array<int, kIds> exit_cost{};
  std::array<bool, kIds> present{};
  for (int i = 0; i < k; ++i) {
    const std::uint8_t c = comp[pos[i]];
    const int here = pos[i] == next - 1 ? 0 : cost(pos[i]);
    if (!present[c]) {
      present[c] = true;
      parent[c] = c;
      exit_cost[c] = here;
    } else {
      exit_cost[c] = std::min(exit_cost[c], here);
    }
  }
  int components = 0;
  int exits = 0;
  for (int c = 0; c < kIds; ++c) {
    if (!present[c]) continue;
    ++components;
    exits += exit_cost[c];
  }
  if (components > 1 || must_grow) total += exits;
  if (components == 1) return total;

  struct Gap {
    int w;
    std::uint8_t a, b;
  };
  std::array<Gap, TMState::kMaxWidth> gaps{};
  int g = 0;
  for (int i = 0; i + 1 < k; ++i) {
    const std::uint8_t a = comp[pos[i]], b = comp[pos[i + 1]];
    if (a == b) continue;
    int w = 0;
    for (int x = pos[i] + 1; x < pos[i + 1]; ++x) w += cost(x);
    gaps[g++] = Gap{w, a, b};
  }
  std::sort(gaps.begin(), gaps.begin() + g, [](const Gap& x, const Gap& y) { return x.w < y.w; });
  auto find = [&](std::uint8_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int merged = 1;
  for (int i = 0; i < g && merged < components; ++i) {
    const std::uint8_t ra = find(gaps[i].a), rb = find(gaps[i].b);
    if (ra == rb) continue;
    parent[ra] = rb;
    total += gaps[i].w;
    ++merged;
  }
  return total;
}

}  // namespace detail

/// Polyominoes with a vertical mirror axis through cell centers.
///
/// For each half-width W the half-figure lives in columns 0..W-1 (column 0 is
/// the axis) and must touch both column 0 and column W-1, so every polyomino
/// is counted at exactly one W. Rows are swept top to bottom; the first row
/// must be occupied, which fixes the vertical translation.
inline CountTable count_m90(int n_max, const TMOptions& options = {}) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if ((n_max + 1) / 2 > TMState::kMaxWidth || n_max > 255) throw std::invalid_argument("n_max too large for the transfer matrix");
  constexpr unsigned kAxis = 1, kFar = 2;
  std::vector<std::uint64_t> total(static_cast<std::size_t>(n_max) + 1, 0);
  StateLedger cur(n_max), nxt(n_max);
  for (int width = 1; 2 * width - 1 <= n_max; ++width) {
    auto cost = [](int x) { return x == 0 ? 1 : 2; };
    int next_pos = 0;
    const TMBound bound = [&](const std::array<std::uint8_t, TMState::kMaxWidth>& comp, unsigned flags) {
      const bool low = !(flags & kAxis), high = !(flags & kFar);
      return detail::completion_bound(comp, width, next_pos, low, high, low || high, cost);
    };
    cur.clear();
    cur.add(TMState{}, 0, 1);
    for (int row = 0; !cur.empty(); ++row) {
      for (int x = 0; x < width; ++x) {
        unsigned touch = (x == 0 ? kAxis : 0) | (x == width - 1 ? kFar : 0);
        next_pos = (x + 1) % width;
        tm_step(cur, nxt, width, TMCell{x, x == 0 ? 1 : 2, touch}, kAxis | kFar, bound, total);
        cur.swap(nxt);
        if (options.memory_budget && cur.bytes() + nxt.bytes() > options.memory_budget) {
          throw ResourceLimitExceeded("transfer-matrix memory budget exceeded at half-width " + std::to_string(width),
                                      std::max(0, std::min(n_max, 2 * width - 3)));
        }
      }
      if (row == 0) {
        // Drop the state whose first row stayed empty.
        StateLedger kept(n_max);
        for (std::size_t i = 0; i < cur.size(); ++i) {
          if (cur.state(i).no_cells(width)) continue;
          for (int w = 0; w <= n_max; ++w) {
            if (cur.counts(i)[w]) kept.add(cur.state(i), w, cur.counts(i)[w]);
          }
        }
        cur.swap(kept);
      }
    }
  }
  auto t = CountTable::from_weights("m90", total);
  return t;
}

/// Polyominoes symmetric about a main-diagonal line.
///
/// Such a polyomino has a square S x S bounding box with the axis on its
/// diagonal. The half on and below the diagonal, {0 <= y <= x < S}, is swept
/// in rows y = S-1 down to 0; it must meet the diagonal, column S-1 and row 0,
/// which pins down S and the placement.
inline CountTable count_m45(int n_max, const TMOptions& options = {}) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if ((n_max + 1) / 2 > TMState::kMaxWidth || n_max > 255) throw std::invalid_argument("n_max too large for the transfer matrix");
  constexpr unsigned kDiag = 1, kRight = 2, kBottom = 4;
  constexpr unsigned kAll = kDiag | kRight | kBottom;
  std::vector<std::uint64_t> total(static_cast<std::size_t>(n_max) + 1, 0);
  StateLedger cur(n_max), nxt(n_max);
  for (int side = 1; 2 * side - 1 <= n_max; ++side) {
    cur.clear();
    cur.add(TMState{}, 0, 1);
    for (int y = side - 1; y >= 0 && !cur.empty(); --y) {
      for (int x = y; x < side; ++x) {
        // The next cell after (x, y) in sweep order.
        int ny = y, nx = x + 1;
        if (nx == side) {
          --ny;
          nx = ny;
        }
        auto cost = [ny, nx](int col) { return col < ny || (col == ny && nx <= ny) ? 1 : 2; };
        const TMBound bound = [&, ny, nx](const std::array<std::uint8_t, TMState::kMaxWidth>& comp, unsigned flags) {
          int b = detail::completion_bound(comp, side, nx, false, !(flags & kRight), (flags & kAll) != kAll, cost);
          if (!(flags & kBottom)) b = std::max(b, ny >= 1 ? 2 * ny : (ny == 0 && nx == 0 ? 1 : 2));
          if (!(flags & kDiag)) b = std::max(b, 1);
          if (ny < 0 && (flags & kAll) != kAll) b = n_max + 1;
          return b;
        };
        unsigned touch = (x == y ? kDiag : 0) | (x == side - 1 ? kRight : 0) | (y == 0 ? kBottom : 0);
        tm_step(cur, nxt, side, TMCell{x, x == y ? 1 : 2, touch}, kAll, bound, total);
        cur.swap(nxt);
        if (options.memory_budget && cur.bytes() + nxt.bytes() > options.memory_budget) {
          throw ResourceLimitExceeded("transfer-matrix memory budget exceeded at side " + std::to_string(side),
                                      std::max(0, std::min(n_max, 2 * side - 3)));
        }
      }
    }
    // Figures still open after the last row are complete if they form one component.
    std::array<std::uint8_t, TMState::kMaxWidth> comp{};
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const TMState& s = cur.state(i);
      if ((s.flags() & kAll) != kAll) continue;
      s.decode(side, comp);
      std::uint8_t only = 0;
      bool single = true;
      for (int p = 0; p < side; ++p) {
        if (!comp[p]) continue;
        if (only && comp[p] != only) single = false;
        only = comp[p];
      }
      if (!single || !only) continue;
      for (int w = 0; w <= n_max; ++w) {
        if (cur.counts(i)[w] && __builtin_add_overflow(total[w], cur.counts(i)[w], &total[w])) {
          throw std::overflow_error("transfer-matrix count overflow");
        }
      }
    }
  }
  return CountTable::from_weights("m45", total);
}

}  // namespace polyomino
