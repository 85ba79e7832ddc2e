#pragma once

#include <optional>
#include <vector>

#include "sdw/error.hpp"

namespace sdw {

/// An abstract finite lattice on elements 0..n-1, given by its order
/// relation. Join/meet are computed from the order and verified to exist.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  /// `leq[i][j]` = (i <= j). Must be a partial order with all binary joins
  /// and meets; otherwise InputError.
  explicit FiniteLattice(std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int join(int a, int b) const { return join_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int meet(int a, int b) const { return meet_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

  /// Covering pairs (lower, upper).
  std::vector<std::pair<int, int>> hasse_edges() const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> join_, meet_;
};

/// Five elements forming a pentagon sublattice: o < u < v < i, o < b < i,
/// b incomparable with u and v.
struct PentagonWitness {
  int bottom, side, lower, upper, top;
};

/// True iff the lattice is modular; on failure returns the pentagon witness
/// found from a failing instance of the modular law.
struct ModularityReport {
  bool modular;
  std::optional<PentagonWitness> witness;
};
ModularityReport is_modular(const FiniteLattice& L);

}  // namespace sdw
