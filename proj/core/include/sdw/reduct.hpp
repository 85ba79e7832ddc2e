#pragma once

#include <optional>

#include "sdw/algebra.hpp"

namespace sdw {

/// Detected group reduct: symbols behaving as group multiplication and
/// inverse, with the identity element. Detection is by axiom checking over
/// the full carrier; the first matching symbol pair in signature order wins.
struct GroupReduct {
  int mul = -1;
  int inv = -1;
  El identity = -1;
  bool abelian = false;
};
std::optional<GroupReduct> find_group_reduct(const FiniteAlgebra& A);

/// Detected ring reduct (add, neg, mul) with additive identity `zero`:
/// (add, neg) an abelian group, mul associative and two-sided distributive
/// over add.
struct RingReduct {
  int add = -1;
  int neg = -1;
  int mul = -1;
  El zero = -1;
};
std::optional<RingReduct> find_ring_reduct(const FiniteAlgebra& A);

/// Detected lattice reduct. A lattice and its dual both satisfy the axioms,
/// so the orientation is resolved by symbol names ("meet"/"and"/"min" vs
/// "join"/"or"/"max") and falls back to signature order.
struct LatticeReduct {
  int meet = -1;
  int join = -1;
};
std::optional<LatticeReduct> find_lattice_reduct(const FiniteAlgebra& A);

}  // namespace sdw
