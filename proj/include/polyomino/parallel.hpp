#pragma once

// Worker pools and checkpoint records for partitioned searches.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "polyomino/count_table.hpp"
#include "polyomino/growth.hpp"

namespace polyomino {

/// Runs `work(policy)` for every worker id of one partition and sums the tables.
///
/// `threads` bounds how many workers run at once; it never changes the
/// result, only the schedule.
inline CountTable run_partitioned(int worker_count, int split_depth, int threads,
                                  const std::function<CountTable(const PartitionPolicy&)>& work) {
  if (worker_count < 1) throw std::invalid_argument("worker count must be >= 1");
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
  std::vector<CountTable> results(static_cast<std::size_t>(worker_count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(worker_count));
  auto run_one = [&](int k) {
    try {
      results[static_cast<std::size_t>(k)] = work(PartitionPolicy{split_depth, k, worker_count});
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  };
  for (int first = 0; first < worker_count; first += threads) {
    const int last = std::min(worker_count, first + threads);
    if (last - first == 1) {
      run_one(first);
      continue;
    }
    std::vector<std::thread> pool;
    for (int k = first; k < last; ++k) pool.emplace_back(run_one, k);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CountTable total = results.front();
  for (std::size_t k = 1; k < results.size(); ++k) total += results[k];
  return total;
}

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Append-only record of finished subtrees.
///
/// Line format: `subtree_index,n,value` for each nonzero entry of a finished
/// subtree, followed by the commit line `subtree_index,0,0`. A subtree whose
/// commit line is missing (the run died mid-write) is recomputed. Lines
/// starting with `#` describe the run; resuming with different settings is
/// refused because subtree numbering depends on them. Anything after the
/// last commit line is cut off before new records are appended.
class CheckpointStore {
 public:
  CheckpointStore(std::string path, std::string settings) : path_(std::move(path)), settings_(std::move(settings)) {
    load();
    if (valid_bytes_ >= 0) std::filesystem::resize_file(path_, static_cast<std::uintmax_t>(valid_bytes_));
    out_.open(path_, std::ios::app);
    if (!out_) throw CheckpointError("cannot open checkpoint file " + path_);
    if (fresh_) {
      out_ << "# " << settings_ << '\n';
      out_.flush();
    }
  }

  [[nodiscard]] bool done(std::uint64_t idx) const {
    std::lock_guard lock(mu_);
    return committed_.count(idx) != 0;
  }

  void record(std::uint64_t idx, std::span<const std::uint64_t> delta) {
    std::ostringstream buf;
    for (std::size_t n = 1; n < delta.size(); ++n) {
      if (delta[n]) buf << idx << ',' << n << ',' << delta[n] << '\n';
    }
    buf << idx << ",0,0\n";
    std::lock_guard lock(mu_);
    out_ << buf.str();
    out_.flush();
    if (!out_) throw CheckpointError("write failed on checkpoint file " + path_);
  }

  /// Sum of all committed subtrees found when the store was opened.
  [[nodiscard]] const std::map<int, std::uint64_t>& restored() const { return restored_; }
  [[nodiscard]] std::size_t restored_subtrees() const { return committed_.size(); }

  SubtreeHooks hooks() {
    SubtreeHooks h;
    h.skip = [this](std::uint64_t idx) { return done(idx); };
    h.completed = [this](std::uint64_t idx, std::span<const std::uint64_t> delta) { record(idx, delta); };
    return h;
  }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::map<std::uint64_t, std::map<int, std::uint64_t>> pending;
    bool saw_header = false;
    std::streamoff good = 0;
    while (std::getline(in, line)) {
      if (in.eof()) break;  // no newline: torn tail
      if (line.empty()) continue;
      if (line[0] == '#') {
        const auto start = line.find_first_not_of("# ");
        std::string s = start == std::string::npos ? "" : line.substr(start);
        if (s != settings_) throw CheckpointError("checkpoint " + path_ + " was written for: " + s);
        saw_header = true;
        good = in.tellg();
        continue;
      }
      std::uint64_t idx = 0, value = 0;
      int n = 0;
      char c1 = 0, c2 = 0;
      std::istringstream ls(line);
      if (!(ls >> idx >> c1 >> n >> c2 >> value) || c1 != ',' || c2 != ',') break;  // torn tail
      if (n == 0) {
        for (auto [k, v] : pending[idx]) restored_[k] += v;
        pending.erase(idx);
        committed_.insert(idx);
        good = in.tellg();
      } else {
        pending[idx][n] += value;
      }
    }
    // Records of uncommitted subtrees are dropped with the tail; the
    // subtree will be recomputed and written again.
    valid_bytes_ = saw_header ? good : 0;
    if (!saw_header && !committed_.empty()) throw CheckpointError("checkpoint " + path_ + " has no header");
    fresh_ = !saw_header;
  }

  std::string path_;
  std::string settings_;
  bool fresh_ = true;
  std::streamoff valid_bytes_ = -1;  // file length to keep; -1 if there was no file
  std::set<std::uint64_t> committed_;
  std::map<int, std::uint64_t> restored_;
  std::ofstream out_;
  mutable std::mutex mu_;
};

/// Counts a growth problem with `worker_count` workers; optional checkpointing.
inline CountTable count_growth_parallel(const GrowthProblem& problem, int worker_count, int split_depth,
                                        int threads, const SearchOptions& options = {},
                                        CheckpointStore* checkpoint = nullptr) {
  SubtreeHooks hooks;
  if (checkpoint) hooks = checkpoint->hooks();
  CountTable total = run_partitioned(worker_count, split_depth, threads, [&](const PartitionPolicy& policy) {
    GrowthEngine engine(problem);
    auto counts = engine.count(policy, options, checkpoint ? &hooks : nullptr);
    return CountTable::from_weights("growth", counts);
  });
  if (checkpoint) {
    CountTable restored("growth");
    for (int n = 1; n <= problem.n_max; ++n) {
      auto it = checkpoint->restored().find(n);
      restored.set(n, BigCount(it == checkpoint->restored().end() ? 0 : it->second));
    }
    total += restored;
  }
  return total;
}

}  // namespace polyomino
