#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sdw/algebra.hpp"

namespace sdw {

/// A power/product universe: tuples over factor algebras sharing one
/// signature, with operations acting coordinatewise. Factors are not
/// materialized; elements are coordinate vectors.
class TupleUniverse {
 public:
  /// Heterogeneous product A_1 x ... x A_n.
  explicit TupleUniverse(std::vector<const FiniteAlgebra*> factors);
  /// Power A^ncoords.
  TupleUniverse(const FiniteAlgebra& algebra, int ncoords);

  int ncoords() const { return static_cast<int>(factors_.size()); }
  const Signature& signature() const { return *sig_; }
  const FiniteAlgebra& factor(int i) const { return *factors_[static_cast<size_t>(i)]; }

  /// result[c] = op applied coordinatewise; args are element vectors.
  void apply(int op, std::span<const El* const> args, El* result) const;

 private:
  std::vector<const FiniteAlgebra*> factors_;
  const Signature* sig_;
};

/// Worklist subuniverse closure over a TupleUniverse. Elements are explored
/// in first-discovery order: generators, then constants, then derived
/// elements with ops applied in signature order and arguments in insertion
/// order (every visited tuple mentions at least one new element).
/// Deterministic; recipes record the first discovered derivation.
struct ClosureOptions {
  std::int64_t max_elements = -1;  ///< element budget; -1 = unlimited
  bool track_recipes = false;
  /// Early exit: closure stops as soon as an element satisfies this.
  std::function<bool(std::span<const El>)> stop_when;
};

struct ClosureResult {
  int ncoords = 0;
  std::int64_t count = 0;
  std::vector<El> pool;  ///< concatenated element vectors, discovery order

  /// recipe of element i: op < 0 means generator args[0]; otherwise the
  /// signature symbol applied to the listed element ids.
  struct Recipe {
    int op = -1;
    std::vector<std::int64_t> args;
  };
  std::vector<Recipe> recipes;

  bool hit_budget = false;
  std::int64_t stop_index = -1;  ///< element that satisfied stop_when, or -1

  std::span<const El> at(std::int64_t i) const {
    return {pool.data() + i * ncoords, static_cast<size_t>(ncoords)};
  }
};

ClosureResult close_under_ops(const TupleUniverse& universe,
                              const std::vector<std::vector<El>>& generators,
                              const ClosureOptions& options = {});

}  // namespace sdw
