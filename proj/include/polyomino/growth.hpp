#pragma once

// Frontier-growth backtracking (Redelmeier's method) over pluggable boards.
//
// A figure is grown from its seeds by repeatedly choosing a cell from the
// untried part of the frontier. Each domain cell carries a neighbor counter
// equal to the number of figure cells adjacent to it; a cell joins the
// frontier only when its counter goes from 0 to 1, so it is offered at most
// once along any path of the search tree. Cells that were tried and
// abandoned stay counted, which is what makes every figure appear once.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyomino/board.hpp"
#include "polyomino/count_table.hpp"

namespace polyomino {

/// Predicate over a completed figure, given as domain indices (seeds first).
using LeafFilter = std::function<bool(std::span<const int>)>;

struct GrowthProblem {
  std::shared_ptr<const Board> board;
  std::vector<int> seeds;
  std::vector<int> forbidden;
  int n_max = 0;
  LeafFilter leaf_filter;  // empty accepts every figure

  void validate() const {
    if (!board) throw std::invalid_argument("growth problem has no board");
    if (seeds.empty()) throw std::invalid_argument("growth problem needs at least one seed");
    if (n_max < 1) throw std::invalid_argument("growth problem n_max must be >= 1");
    std::vector<int> s = seeds;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("duplicate seed");
    std::vector<int> f = forbidden;
    std::sort(f.begin(), f.end());
    for (int i : s) {
      if (i < 0 || i >= board->size()) throw std::invalid_argument("seed outside the board");
      if (std::binary_search(f.begin(), f.end(), i)) throw std::invalid_argument("seed is forbidden");
    }
    for (int i : f) {
      if (i < 0 || i >= board->size()) throw std::invalid_argument("forbidden cell outside the board");
    }
  }
};

/// Deterministic share of the search tree assigned to one worker.
///
/// Every worker walks the tree above `split_depth` identically and numbers
/// the nodes it meets at that depth; worker k explores the subtrees whose
/// number is congruent to k modulo `worker_count`. Figures shallower than
/// the split depth are attributed to worker 0.
struct PartitionPolicy {
  int split_depth = 0;
  int worker_id = 0;
  int worker_count = 1;

  void validate() const {
    if (split_depth < 0) throw std::invalid_argument("split depth must be >= 0");
    if (worker_count < 1) throw std::invalid_argument("worker count must be >= 1");
    if (worker_id < 0 || worker_id >= worker_count) throw std::invalid_argument("worker id out of range");
  }
};

struct SearchOptions {
  /// Count the last two levels of each branch in closed form instead of
  /// visiting them. Ignored for problems with a leaf filter.
  bool aggregate_last_two = true;
};

/// Optional per-subtree bookkeeping for checkpoint/resume.
struct SubtreeHooks {
  std::function<bool(std::uint64_t)> skip;
  std::function<void(std::uint64_t, std::span<const std::uint64_t>)> completed;
};

struct GrowthStats {
  std::uint64_t nodes = 0;
  std::uint64_t subtrees = 0;
};

class GrowthEngine {
 public:
  explicit GrowthEngine(GrowthProblem problem) : problem_(std::move(problem)) {
    problem_.validate();
    const Board& b = *problem_.board;
    nbr_ = b.neighbor_table();
    wt_ = b.weight_table();
    blocked_.assign(static_cast<std::size_t>(b.size()) + 1, 0);
    blocked_[static_cast<std::size_t>(b.sentinel())] = 1;
    for (int i : problem_.forbidden) blocked_[static_cast<std::size_t>(i)] = 1;
    for (int i : problem_.seeds) blocked_[static_cast<std::size_t>(i)] = 1;
    min_weight_ = std::numeric_limits<int>::max();
    for (int i = 0; i < b.size(); ++i) {
      if (!blocked_[static_cast<std::size_t>(i)]) min_weight_ = std::min(min_weight_, b.weight(i));
    }
    seed_weight_ = 0;
    for (int i : problem_.seeds) seed_weight_ += b.weight(i);
    frontier_.assign(4 * (problem_.seeds.size() + static_cast<std::size_t>(problem_.n_max) + 2), 0);
  }

  [[nodiscard]] const GrowthProblem& problem() const { return problem_; }
  [[nodiscard]] const GrowthStats& stats() const { return stats_; }

  /// Weight-indexed counts (index 0..n_max) of the figures owned by `policy`.
  std::vector<std::uint64_t> count(const PartitionPolicy& policy, const SearchOptions& options = {},
                                   const SubtreeHooks* hooks = nullptr) {
    policy.validate();
    const int n_max = problem_.n_max;
    std::vector<std::uint64_t> entries(static_cast<std::size_t>(n_max) + 1, 0);
    if (seed_weight_ > n_max) return entries;

    const bool has_filter = static_cast<bool>(problem_.leaf_filter);
    const bool aggregate = options.aggregate_last_two && !has_filter;
    const bool record = hooks && hooks->completed;
    const int split = policy.split_depth;
    std::uint64_t split_counter = 0;
    std::uint64_t open_index = 0;
    std::vector<std::uint64_t> snapshot;

    auto counted = [&](int depth) { return depth >= split || policy.worker_id == 0; };
    auto accept = [&]() { return !has_filter || problem_.leaf_filter(figure_); };
    auto open_subtree = [&]() {
      const std::uint64_t idx = split_counter++;
      if (idx % static_cast<std::uint64_t>(policy.worker_count) != static_cast<std::uint64_t>(policy.worker_id)) {
        return false;
      }
      if (hooks && hooks->skip && hooks->skip(idx)) return false;
      ++stats_.subtrees;
      open_index = idx;
      if (record) snapshot = entries;
      return true;
    };
    auto close_subtree = [&](int depth) {
      if (depth != split || !record) return;
      std::vector<std::uint64_t> delta(entries.size());
      for (std::size_t i = 0; i < entries.size(); ++i) delta[i] = entries[i] - snapshot[i];
      hooks->completed(open_index, delta);
    };

    const int root_end = reset();
    std::vector<Frame> stack;
    stack.reserve(static_cast<std::size_t>(n_max) + 2);

    if (split == 0 && !open_subtree()) return entries;
    if (counted(0) && accept()) ++entries[static_cast<std::size_t>(seed_weight_)];
    if (n_max - seed_weight_ < min_weight_) {
      close_subtree(0);
      return entries;
    }
    if (aggregate && n_max - seed_weight_ < 3 * min_weight_) {
      if (counted(0)) aggregate_two(seed_weight_, 0, root_end, entries);
      close_subtree(0);
      return entries;
    }
    stack.push_back(Frame{0, root_end, -1, seed_weight_, 0});

    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.cursor == top.end) {
        close_subtree(top.depth);
        if (top.cell >= 0) {
          remove_cell(top.cell);
          figure_.pop_back();
        }
        stack.pop_back();
        continue;
      }
      const int c = frontier_[static_cast<std::size_t>(top.cursor++)];
      const int w = top.weight + wt_[static_cast<std::size_t>(c)];
      if (w > n_max) continue;
      const int depth = top.depth + 1;
      const int cursor = top.cursor;
      const int end = top.end;
      ++stats_.nodes;
      if (depth == split && !open_subtree()) continue;

      figure_.push_back(c);
      if (counted(depth) && accept()) ++entries[static_cast<std::size_t>(w)];
      if (n_max - w < min_weight_) {
        figure_.pop_back();
        close_subtree(depth);
        continue;
      }
      const int new_end = add_cell(c, end);
      if (aggregate && n_max - w < 3 * min_weight_) {
        if (counted(depth)) aggregate_two(w, cursor, new_end, entries);
        remove_cell(c);
        figure_.pop_back();
        close_subtree(depth);
        continue;
      }
      stack.push_back(Frame{cursor, new_end, c, w, depth});
    }
    return entries;
  }

  /// Visits every figure once, in search order. `visit(figure, weight)`
  /// returns whether to grow the figure further.
  template <typename Visitor>
  void enumerate(Visitor&& visit) {
    const int n_max = problem_.n_max;
    if (seed_weight_ > n_max) return;
    const int root_end = reset();
    std::vector<Frame> stack;
    if (!visit(std::span<const int>(figure_), seed_weight_)) return;
    stack.push_back(Frame{0, root_end, -1, seed_weight_, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.cursor == top.end) {
        if (top.cell >= 0) {
          remove_cell(top.cell);
          figure_.pop_back();
        }
        stack.pop_back();
        continue;
      }
      const int c = frontier_[static_cast<std::size_t>(top.cursor++)];
      const int w = top.weight + wt_[static_cast<std::size_t>(c)];
      if (w > n_max) continue;
      const int cursor = top.cursor;
      const int end = top.end;
      const int depth = top.depth + 1;
      ++stats_.nodes;
      figure_.push_back(c);
      if (!visit(std::span<const int>(figure_), w) || n_max - w < min_weight_) {
        figure_.pop_back();
        continue;
      }
      const int new_end = add_cell(c, end);
      stack.push_back(Frame{cursor, new_end, c, w, depth});
    }
  }

  /// Neighbor counter of a domain cell with the blocking bias removed.
  [[nodiscard]] int neighbor_count(int cell) const {
    int v = counter_[static_cast<std::size_t>(cell)];
    return blocked_[static_cast<std::size_t>(cell)] ? v - kBlockedBias : v;
  }

 private:
  struct Frame {
    int cursor;
    int end;
    int cell;
    int weight;
    int depth;
  };

  static constexpr int kBlockedBias = 0x4000;

  int reset() {
    const Board& b = *problem_.board;
    counter_.assign(static_cast<std::size_t>(b.size()) + 1, 0);
    for (std::size_t i = 0; i < blocked_.size(); ++i) {
      if (blocked_[i]) counter_[i] = kBlockedBias;
    }
    figure_.clear();
    std::vector<int> seeds = problem_.seeds;
    std::sort(seeds.begin(), seeds.end());
    std::vector<int> initial;
    for (int s : seeds) {
      figure_.push_back(s);
      for (int k = 0; k < Board::kMaxNeighbors; ++k) {
        const int nb = nbr_[static_cast<std::size_t>(s) * Board::kMaxNeighbors + k];
        if (counter_[static_cast<std::size_t>(nb)]++ == 0) initial.push_back(nb);
      }
    }
    // Domain indices follow row-major cell order, so this is row-major too.
    std::sort(initial.begin(), initial.end());
    std::copy(initial.begin(), initial.end(), frontier_.begin());
    return static_cast<int>(initial.size());
  }

  int add_cell(int c, int end) {
    const int* nb = nbr_.data() + static_cast<std::size_t>(c) * Board::kMaxNeighbors;
    for (int k = 0; k < Board::kMaxNeighbors; ++k) {
      if (counter_[static_cast<std::size_t>(nb[k])]++ == 0) frontier_[static_cast<std::size_t>(end++)] = nb[k];
    }
    return end;
  }

  void remove_cell(int c) {
    const int* nb = nbr_.data() + static_cast<std::size_t>(c) * Board::kMaxNeighbors;
    for (int k = 0; k < Board::kMaxNeighbors; ++k) --counter_[static_cast<std::size_t>(nb[k])];
  }

  // Children and grandchildren of a figure of weight `base` whose untried
  // frontier is frontier_[begin, end). Requires that no great-grandchild can
  // fit, i.e. n_max - base < 3 * min_weight_.
  void aggregate_two(int base, int begin, int end, std::vector<std::uint64_t>& entries) const {
    const int budget = problem_.n_max - base;
    std::array<std::uint64_t, 256> suffix{};
    int max_seen = 0;
    for (int j = end - 1; j >= begin; --j) {
      const int y = frontier_[static_cast<std::size_t>(j)];
      const int wy = wt_[static_cast<std::size_t>(y)];
      if (wy <= budget) {
        const int child = base + wy;
        ++entries[static_cast<std::size_t>(child)];
        const int rest = budget - wy;
        if (rest >= min_weight_) {
          for (int b = min_weight_; b <= std::min(rest, max_seen); ++b) {
            entries[static_cast<std::size_t>(child + b)] += suffix[static_cast<std::size_t>(b)];
          }
          const int* nb = nbr_.data() + static_cast<std::size_t>(y) * Board::kMaxNeighbors;
          for (int k = 0; k < Board::kMaxNeighbors; ++k) {
            const auto z = static_cast<std::size_t>(nb[k]);
            if (counter_[z] == 0 && wt_[z] <= rest) ++entries[static_cast<std::size_t>(child + wt_[z])];
          }
        }
      }
      ++suffix[static_cast<std::size_t>(wy)];
      max_seen = std::max(max_seen, wy);
    }
  }

  GrowthProblem problem_;
  std::span<const int> nbr_;
  std::span<const std::uint8_t> wt_;
  std::vector<std::uint8_t> blocked_;
  std::vector<std::uint16_t> counter_;
  std::vector<int> frontier_;
  std::vector<int> figure_;
  int min_weight_ = 1;
  int seed_weight_ = 0;
  GrowthStats stats_;
};

/// Summed table of one worker's share (the whole tree for a single worker).
inline CountTable count_growth(const GrowthProblem& problem, const PartitionPolicy& policy = {},
                               const SearchOptions& options = {}) {
  GrowthEngine engine(problem);
  auto counts = engine.count(policy, options);
  return CountTable::from_weights("growth", counts);
}

/// Fixed polyominoes by canonical anchoring: the row-major first cell sits at
/// the origin and every cell preceding it is forbidden.
inline GrowthProblem fixed_problem(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  GrowthProblem p;
  p.board = make_plane_board(n_max + 1);
  p.n_max = n_max;
  p.seeds = {*p.board->index_of({0, 0})};
  for (int i = 0; i < p.board->size(); ++i) {
    if (p.board->cell(i) < Cell{0, 0}) p.forbidden.push_back(i);
  }
  return p;
}

inline CountTable count_fixed(int n_max, const PartitionPolicy& policy = {}, const SearchOptions& options = {}) {
  auto t = count_growth(fixed_problem(n_max), policy, options);
  t.set_label("fixed");
  return t;
}

/// Mirror-symmetric polyominoes grown on the half-plane beside the axis.
///
/// The axis side of such a polyomino is connected on its own, so it is grown
/// from its row-major first axis cell, with earlier axis cells forbidden.
inline GrowthProblem mirror_problem(MirrorAxis axis, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  GrowthProblem p;
  p.board = make_mirror_board(axis, n_max + 1);
  p.n_max = n_max;
  p.seeds = {*p.board->index_of({0, 0})};
  for (int i = 0; i < p.board->size(); ++i) {
    Cell c = p.board->cell(i);
    const bool on_axis = axis == MirrorAxis::vertical_through_centers ? c.x == 0 : c.x == c.y;
    if (on_axis && c < Cell{0, 0}) p.forbidden.push_back(i);
  }
  return p;
}

inline CountTable count_mirror_growth(MirrorAxis axis, int n_max, const PartitionPolicy& policy = {},
                                      const SearchOptions& options = {}) {
  auto t = count_growth(mirror_problem(axis, n_max), policy, options);
  t.set_label(axis == MirrorAxis::vertical_through_centers ? "m90" : "m45");
  return t;
}

}  // namespace polyomino
