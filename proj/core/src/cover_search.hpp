#pragma once

// Exhaustive searches over a set system: a universe {0..u-1} and a list of
// moves, each covering a subset of the universe. A move is legal in state D
// (the covered set) when it covers something outside D. Total dominating
// sequences (moves = open neighborhoods), dominating sequences (closed
// neighborhoods), edge covering sequences (moves = hyperedges) and
// transversal sequences (moves = vertex stars over the edge set) are all
// instances.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "tds/vertex_set.hpp"

namespace tds::detail {

/// Memo keyed on a state bitmask: a flat array for small universes, a hash
/// map otherwise.
template <typename T>
class MemoTable {
 public:
  static constexpr int kDenseLimit = 22;

  MemoTable(int universe_bits, T empty) : empty_(empty), dense_(universe_bits <= kDenseLimit) {
    if (dense_) table_.assign(std::size_t{1} << universe_bits, empty);
  }

  /// Pointer to the stored value, or nullptr when absent.
  const T* find(std::uint64_t key) const {
    if (dense_) {
      const T& v = table_[key];
      return v == empty_ ? nullptr : &v;
    }
    auto it = sparse_.find(key);
    return it == sparse_.end() ? nullptr : &it->second;
  }

  void store(std::uint64_t key, T value) {
    if (dense_) {
      table_[key] = value;
    } else {
      sparse_[key] = value;
    }
  }

 private:
  T empty_;
  bool dense_;
  std::vector<T> table_;
  std::unordered_map<std::uint64_t, T> sparse_;
};

struct SetSystem {
  int universe_size = 0;
  std::vector<VertexSet> moves;

  VertexSet universe() const { return VertexSet::full(universe_size); }
};

struct CoverSequence {
  int value = 0;
  std::vector<int> moves;
};

/// Longest legal sequence of distinct moves that ends with the universe
/// covered. Every move must be nonempty and the moves must cover the universe.
class LongestCover {
 public:
  explicit LongestCover(const SetSystem& system)
      : system_(system), memo_(system.universe_size, std::int8_t{-1}) {}

  /// Remaining length of the longest completion from covered set D.
  int best(VertexSet covered) {
    if (covered == system_.universe()) return 0;
    if (const auto* hit = memo_.find(covered.bits())) return *hit;
    int result = 0;
    for (const VertexSet& m : system_.moves) {
      if (m.is_subset_of(covered)) continue;
      const int r = 1 + best(covered | m);
      if (r > result) result = r;
    }
    memo_.store(covered.bits(), static_cast<std::int8_t>(result));
    return result;
  }

  /// Lowest-index optimal continuation from `covered`, assuming best(covered) is known.
  CoverSequence solve(VertexSet start = {}) {
    CoverSequence out;
    out.value = best(start);
    VertexSet covered = start;
    int remaining = out.value;
    while (remaining > 0) {
      for (std::size_t i = 0; i < system_.moves.size(); ++i) {
        const VertexSet m = system_.moves[i];
        if (m.is_subset_of(covered)) continue;
        if (1 + best(covered | m) == remaining) {
          out.moves.push_back(static_cast<int>(i));
          covered |= m;
          --remaining;
          break;
        }
      }
    }
    return out;
  }

 private:
  const SetSystem& system_;
  MemoTable<std::int8_t> memo_;
};

/// Bitmask of achievable completion lengths from each covered state.
class CoverLengths {
 public:
  explicit CoverLengths(const SetSystem& system)
      : system_(system), memo_(system.universe_size, std::uint64_t{0}) {}

  std::uint64_t lengths(VertexSet covered) {
    if (covered == system_.universe()) return 1;
    if (const auto* hit = memo_.find(covered.bits())) return *hit;
    std::uint64_t result = 0;
    for (const VertexSet& m : system_.moves) {
      if (m.is_subset_of(covered)) continue;
      result |= lengths(covered | m) << 1;
    }
    memo_.store(covered.bits(), result);
    return result;
  }

  /// Lowest-index legal covering sequence of exactly `length` moves, or empty.
  std::vector<int> witness(int length) {
    if (((lengths({}) >> length) & 1U) == 0) return {};
    std::vector<int> out;
    VertexSet covered;
    for (int remaining = length; remaining > 0; --remaining) {
      for (std::size_t i = 0; i < system_.moves.size(); ++i) {
        const VertexSet m = system_.moves[i];
        if (m.is_subset_of(covered)) continue;
        if ((lengths(covered | m) >> (remaining - 1)) & 1U) {
          out.push_back(static_cast<int>(i));
          covered |= m;
          break;
        }
      }
    }
    return out;
  }

 private:
  const SetSystem& system_;
  MemoTable<std::uint64_t> memo_;
};

/// Minimum number of moves covering the universe, by iterative deepening on
/// the cover size; each level branches over the moves that cover the lowest
/// uncovered element.
std::vector<int> minimum_cover(const SetSystem& system);

}  // namespace tds::detail
