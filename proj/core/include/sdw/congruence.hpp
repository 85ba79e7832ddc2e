#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sdw/algebra.hpp"
#include "sdw/algebra_ops.hpp"
#include "sdw/caps.hpp"
#include "sdw/lattice.hpp"
#include "sdw/partition.hpp"

namespace sdw {

/// A partition verified to be compatible with every operation of its algebra.
class Congruence {
 public:
  Congruence(AlgebraPtr algebra, Partition part);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Partition& partition() const { return part_; }
  int size() const { return part_.size(); }

 private:
  AlgebraPtr algebra_;
  Partition part_;
};

/// Smallest congruence of A containing the given pairs. Worklist fixpoint:
/// every merged pair is pushed through every operation in every argument
/// position against all choices of remaining arguments. `seed` (optional)
/// is a congruence the result must contain.
Partition cg(const FiniteAlgebra& A, const std::vector<std::pair<El, El>>& pairs,
             const Partition* seed = nullptr, const Caps& caps = global_caps());

/// True iff the relational composites theta1 o theta2 and theta2 o theta1
/// coincide as sets of pairs.
bool permute(const Partition& theta1, const Partition& theta2);

/// All congruences of A: the join closure of principal congruences plus the
/// trivial congruence, with Hasse diagram and an abstract lattice view.
/// Congruences are sorted by (block count descending, representative map),
/// so index 0 is the trivial congruence and the last is the total one.
struct CongruenceLattice {
  std::vector<Partition> congruences;
  std::vector<std::pair<int, int>> hasse_edges;  ///< (lower, upper) covers
  FiniteLattice lattice;                         ///< order/join/meet on indices

  int index_of(const Partition& p) const;  ///< -1 if absent
};
CongruenceLattice con_lattice(const FiniteAlgebra& A, const Caps& caps = global_caps());

/// Finds a small set of pairs generating the given congruence: greedily adds
/// a pair from theta not yet in the generated congruence until equal.
std::vector<std::pair<El, El>> generating_pairs(const FiniteAlgebra& A, const Partition& theta,
                                                const Caps& caps = global_caps());

/// Projects a congruence of the domain through a surjective map onto the
/// codomain carrier: the transitive closure of the image relation.
Partition project_partition(const Partition& theta, const std::vector<El>& map, int codomain_size);

}  // namespace sdw
