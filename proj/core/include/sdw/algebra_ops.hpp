#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdw/algebra.hpp"
#include "sdw/caps.hpp"
#include "sdw/partition.hpp"
#include "sdw/term.hpp"

namespace sdw {

/// An element of a generated subuniverse together with a replayable recipe:
/// a term over the generators (variable i stands for the i-th generator)
/// whose evaluation reproduces the element.
struct DerivedElement {
  El element = 0;
  Term recipe;
};

/// Smallest subset of the carrier containing X and closed under all
/// operations (constants included even for empty X). Elements are reported
/// in first-discovery order with their recipes.
std::vector<DerivedElement> subuniverse_closure(const FiniteAlgebra& A, const std::vector<El>& X,
                                                const Caps& caps = global_caps());

/// Replays a recipe through the operation tables.
El replay_recipe(const FiniteAlgebra& A, const DerivedElement& d, const std::vector<El>& X);

/// Quotient A/theta. `theta` must be compatible with every operation;
/// otherwise InputError names the violating operation and tuple. Blocks are
/// numbered by least element, ascending; `surjection` maps elements to block
/// indices.
struct Quotient {
  AlgebraPtr algebra;
  std::vector<int> surjection;
  std::vector<El> block_rep;  ///< least element of each block
};
Quotient quotient(const FiniteAlgebra& A, const Partition& theta, std::string name = "");

/// Compatibility check with witness. Returns std::nullopt when theta is a
/// congruence; otherwise the violating operation and argument tuples.
struct CompatibilityViolation {
  int op;
  std::vector<El> args_u, args_v;  ///< related coordinatewise, images differ
};
std::optional<CompatibilityViolation> compatibility_violation(const FiniteAlgebra& A,
                                                              const Partition& theta);

/// Homomorphism check for a total map f : A -> B, with a counterexample on
/// failure.
struct HomWitness {
  int op;
  std::vector<El> args;  ///< f(op(args)) != op(f(args))
  El lhs, rhs;
};
struct HomCheck {
  bool ok;
  std::optional<HomWitness> witness;
};
HomCheck is_homomorphism(const FiniteAlgebra& A, const FiniteAlgebra& B,
                         const std::vector<El>& f);

bool is_surjective(const FiniteAlgebra& B, const std::vector<El>& f);

/// Brute-force isomorphism search for carriers of size <= 8.
bool brute_force_isomorphic(const FiniteAlgebra& A, const FiniteAlgebra& B);

}  // namespace sdw
