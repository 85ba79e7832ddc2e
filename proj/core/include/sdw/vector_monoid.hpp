#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdw/error.hpp"

namespace sdw {

/// Additive submonoids of N_0^k given by generators: literal tuples plus
/// one-parameter families with a single pumped coordinate (the others
/// fixed), e.g. (0,2,n) for n >= 7.
struct VectorGeneratorFamily {
  std::vector<int> base;  ///< coordinate values; pumped coordinate holds lo
  int pumped_coord = -1;  ///< -1 for literal generators
  int lo = 0;             ///< parameter lower bound
};

struct VectorMonoidGenerators {
  int arity = 0;
  std::vector<VectorGeneratorFamily> families;

  /// Generators with every coordinate <= box.
  std::vector<std::vector<int>> expand(int box) const;
};

/// File format, one generator per line: `(1,0,3)` or `(0,2,n) : n >= 7`.
VectorMonoidGenerators parse_vector_generators(const std::string& text);
VectorMonoidGenerators load_vector_generators(const std::string& path);

/// All elements of the generated submonoid with every coordinate <= box
/// (partial sums of generators are monotone, so the box closure is exact).
class BoxedSubmonoid {
 public:
  BoxedSubmonoid(const VectorMonoidGenerators& gens, int box);
  int arity() const { return arity_; }
  int box() const { return box_; }
  bool contains(const std::vector<int>& v) const;
  std::int64_t size() const { return count_; }

 private:
  std::int64_t index_of(const std::vector<int>& v) const;
  int arity_, box_;
  std::int64_t count_ = 0;
  std::vector<char> member_;
};

/// Pair surjectivity certificate: for coordinates (i, j), generators
/// projecting to (1,0) and (0,1) — their existence makes the projection all
/// of N_0^2.
struct PairSurjectivity {
  int i, j;
  bool certified;
  std::vector<int> unit_i, unit_j;  ///< witnessing generators (when certified)
};
std::vector<PairSurjectivity> pair_surjectivity(const VectorMonoidGenerators& gens, int box);

/// Indecomposability of e within the box: no two nonzero members of the
/// generated submonoid sum to e. Requires every coordinate of e <= box.
struct Indecomposability {
  bool indecomposable;
  std::vector<int> part1, part2;  ///< a decomposition when found
};
Indecomposability check_indecomposable(const BoxedSubmonoid& S, const std::vector<int>& e);

}  // namespace sdw
