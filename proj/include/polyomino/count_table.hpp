#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyomino/big_count.hpp"

namespace polyomino {

/// Symmetry populations counted for Burnside's lemma, plus the unrestricted class.
///
/// Each symmetric class counts fixed polyominoes that have *at least* the named
/// symmetry in a canonical orientation:
///   m90   vertical mirror axis through cell centers
///   m90v  vertical mirror axis along cell boundaries
///   m45   mirror about a main-diagonal line
///   r180c / r180m / r180v  half-turn about a cell center / the midpoint of a
///         vertical edge (two horizontally adjacent cells) / a lattice vertex
///   r90c / r90v  quarter-turn about a cell center / a lattice vertex
enum class SymmetryClass : std::uint8_t { fixed, m90, m90v, m45, r180c, r180m, r180v, r90c, r90v };

inline constexpr std::array<SymmetryClass, 9> kAllClasses{
    SymmetryClass::fixed, SymmetryClass::m90,   SymmetryClass::m90v,  SymmetryClass::m45,  SymmetryClass::r180c,
    SymmetryClass::r180m, SymmetryClass::r180v, SymmetryClass::r90c, SymmetryClass::r90v};

inline constexpr std::array<SymmetryClass, 8> kSymmetricClasses{
    SymmetryClass::m90,   SymmetryClass::m90v,  SymmetryClass::m45,  SymmetryClass::r180c,
    SymmetryClass::r180m, SymmetryClass::r180v, SymmetryClass::r90c, SymmetryClass::r90v};

inline std::string_view name_of(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::fixed: return "fixed";
    case SymmetryClass::m90: return "m90";
    case SymmetryClass::m90v: return "m90v";
    case SymmetryClass::m45: return "m45";
    case SymmetryClass::r180c: return "r180c";
    case SymmetryClass::r180m: return "r180m";
    case SymmetryClass::r180v: return "r180v";
    case SymmetryClass::r90c: return "r90c";
    case SymmetryClass::r90v: return "r90v";
  }
  return "?";
}

inline std::optional<SymmetryClass> parse_class(std::string_view s) {
  for (SymmetryClass c : kAllClasses) {
    if (name_of(c) == s) return c;
  }
  return std::nullopt;
}

/// Sizes at which a class is empty for purely arithmetic reasons.
inline bool forced_zero(SymmetryClass c, int n) {
  switch (c) {
    case SymmetryClass::m90v:
    case SymmetryClass::r180m:
    case SymmetryClass::r180v: return n % 2 != 0;
    case SymmetryClass::r90v: return n % 4 != 0;
    case SymmetryClass::r90c: return n % 4 != 0 && n % 4 != 1;
    default: return false;
  }
}

enum class EntryStatus : std::uint8_t { exact, incomplete };

/// Counts for one population, indexed by cell count n >= 1.
class CountTable {
 public:
  struct Entry {
    BigCount value;
    EntryStatus status = EntryStatus::exact;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  CountTable() = default;
  explicit CountTable(std::string label) : label_(std::move(label)) {}

  /// Table with exact entries 1..counts.size()-1 taken from a weight-indexed array.
  static CountTable from_weights(std::string label, std::span<const std::uint64_t> counts) {
    CountTable t(std::move(label));
    for (std::size_t n = 1; n < counts.size(); ++n) t.set(static_cast<int>(n), BigCount(counts[n]));
    return t;
  }

  [[nodiscard]] const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  void set(int n, BigCount value, EntryStatus status = EntryStatus::exact) {
    if (n < 1) throw std::out_of_range("count table index must be >= 1");
    auto it = entries_.find(n);
    if (it != entries_.end() && it->second.status == EntryStatus::exact && status == EntryStatus::exact &&
        it->second.value != value) {
      throw std::logic_error("exact entry " + label_ + "(" + std::to_string(n) + ") would be revised");
    }
    entries_[n] = Entry{std::move(value), status};
  }

  [[nodiscard]] std::optional<BigCount> exact(int n) const {
    auto it = entries_.find(n);
    if (it == entries_.end() || it->second.status != EntryStatus::exact) return std::nullopt;
    return it->second.value;
  }

  [[nodiscard]] bool has_exact(int n) const { return exact(n).has_value(); }

  /// Value at n; throws when absent or incomplete.
  [[nodiscard]] const BigCount& at(int n) const {
    auto it = entries_.find(n);
    if (it == entries_.end() || it->second.status != EntryStatus::exact) {
      throw std::out_of_range("no exact entry " + label_ + "(" + std::to_string(n) + ")");
    }
    return it->second.value;
  }

  [[nodiscard]] const std::map<int, Entry>& entries() const { return entries_; }
  [[nodiscard]] int max_n() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  /// Entrywise sum; a sum is exact only where both operands are exact.
  CountTable& operator+=(const CountTable& other) {
    for (const auto& [n, e] : other.entries_) {
      auto it = entries_.find(n);
      if (it == entries_.end()) {
        entries_[n] = e;
      } else {
        it->second.value += e.value;
        if (e.status != EntryStatus::exact) it->second.status = EntryStatus::incomplete;
      }
    }
    return *this;
  }

  /// Same numbers at the same sizes (labels are ignored).
  [[nodiscard]] bool same_values(const CountTable& other) const { return entries_ == other.entries_; }

 private:
  std::string label_;
  std::map<int, Entry> entries_;
};

}  // namespace polyomino
