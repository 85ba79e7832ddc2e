#pragma once

#include <vector>

#include "sdw/algebra.hpp"

namespace sdw {

/// A partition of {0,..,n-1} in canonical form: each element maps to the
/// least element of its block. Value type; all operations pure.
class Partition {
 public:
  Partition() = default;

  /// The identity partition (all singletons).
  static Partition zero(int n);
  /// The one-block partition.
  static Partition one(int n);
  /// Normalizes an arbitrary idempotent-or-not representative map.
  static Partition from_rep_map(std::vector<El> rep);
  /// Adopts an already-canonical map: rep[x] <= x and rep idempotent.
  static Partition from_canonical_rep(std::vector<El> rep);
  /// Builds the partition whose blocks are the given classes (must cover
  /// {0..n-1} disjointly).
  static Partition from_blocks(int n, const std::vector<std::vector<El>>& blocks);

  int size() const { return static_cast<int>(rep_.size()); }
  El rep(El x) const { return rep_[static_cast<size_t>(x)]; }
  bool same_block(El x, El y) const { return rep_[static_cast<size_t>(x)] == rep_[static_cast<size_t>(y)]; }
  const std::vector<El>& rep_map() const { return rep_; }

  int block_count() const;
  /// Blocks sorted by least element, elements ascending.
  std::vector<std::vector<El>> blocks() const;
  /// Dense block index of each element (blocks numbered by least element).
  std::vector<int> block_index() const;

  bool is_zero() const;
  bool is_one() const;

  /// True if every block of this partition lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition& other) const { return rep_ == other.rep_; }
  bool operator!=(const Partition& other) const { return rep_ != other.rep_; }
  /// Lexicographic order on representative maps; a deterministic total order.
  bool operator<(const Partition& other) const { return rep_ < other.rep_; }

 private:
  std::vector<El> rep_;
};

/// Least upper bound: transitive closure of the union (a congruence whenever
/// both arguments are).
Partition join(const Partition& a, const Partition& b);

/// Greatest lower bound: blockwise intersection.
Partition meet(const Partition& a, const Partition& b);

/// Union-find with union by size, used to build partitions incrementally.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  /// Returns true if the classes were distinct (a merge happened).
  bool unite(int x, int y);
  int size() const { return static_cast<int>(parent_.size()); }
  Partition to_partition();

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace sdw
