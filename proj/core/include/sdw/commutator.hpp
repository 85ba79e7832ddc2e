#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdw/algebra.hpp"
#include "sdw/caps.hpp"
#include "sdw/partition.hpp"
#include "sdw/reduct.hpp"
#include "sdw/subproduct.hpp"

namespace sdw {

/// An element of A^{2^k}: values indexed by bit vectors (x_1,..,x_k) with
/// x_1 most significant. The "result direction" of the commutator fixpoint
/// is the last coordinate x_k.
struct CubeFunction {
  int k = 0;
  std::vector<El> values;  ///< length exactly 2^k

  El at_bits(unsigned bits) const { return values[bits]; }
};

/// One generator per (direction i, related pair (a,b)): value a on the
/// half-cube x_i = 0 and b on x_i = 1. Pairs are enumerated in lexicographic
/// order, diagonal pairs included.
std::vector<CubeFunction> cube_generators(const FiniteAlgebra& A, int k,
                                          const std::vector<Partition>& alphas,
                                          const Caps& caps = global_caps());

/// Subuniverse of A^{2^k} generated by the cube generators.
struct MGenStats {
  std::int64_t size = 0;
  std::int64_t reached_before_cap = 0;
};
std::vector<CubeFunction> generate_M(const FiniteAlgebra& A, int k,
                                     const std::vector<Partition>& alphas,
                                     const Caps& caps = global_caps(), MGenStats* stats = nullptr);

enum class MalcevStatus { verified, none, unknown };

struct CommutatorResult {
  std::vector<Partition> inputs;
  Partition gamma;
  int rounds = 0;
  std::int64_t m_size = 0;
  MalcevStatus malcev = MalcevStatus::unknown;
};

/// Memoizing engine for term-condition commutators of one algebra.
/// The computation for (a_1,..,a_k) is literally invariant under permuting
/// the first k-1 arguments, so results are cached on (sorted prefix, last).
class CommutatorEngine {
 public:
  explicit CommutatorEngine(AlgebraPtr algebra, Caps caps = global_caps());

  const FiniteAlgebra& algebra() const { return *algebra_; }

  /// The k-ary term-condition commutator [a_1,..,a_k]: the least congruence
  /// gamma such that every member of the cube-term algebra whose non-final
  /// face pairs are gamma-related also has its final edge gamma-related.
  Partition commutator(const std::vector<Partition>& alphas, int* rounds = nullptr,
                       std::int64_t* m_size = nullptr);

  CommutatorResult commutator_result(const std::vector<Partition>& alphas);

  std::int64_t computations() const { return computations_; }

 private:
  /// Literal definition: generate the cube-term algebra and scan it every
  /// round. Exact but quadratic in |M|.
  Partition commutator_via_cube_scan(const std::vector<Partition>& alphas, int* rounds_out,
                                     std::int64_t* m_size_out);
  /// Equivalent route for Mal'cev-verified algebras: the cube-term algebra,
  /// split along the result direction, is the congruence of the half-cube
  /// algebra generated by the constant pairs (reflexive compatible
  /// relations are congruences under a Mal'cev term).
  Partition commutator_via_pair_congruence(const std::vector<Partition>& alphas, int* rounds_out,
                                           std::int64_t* m_size_out);
  bool use_congruence_route();

  AlgebraPtr algebra_;
  Caps caps_;
  std::map<std::vector<El>, Partition> memo_;
  std::int64_t computations_ = 0;
  int malcev_state_ = 0;  // 0 = unchecked, 1 = verified, -1 = not verified
};

/// Classical group oracle: for congruences identified with normal subgroups
/// via the identity class, the k-ary commutator is the product over all
/// permutations of the left-associated iterated binary subgroup commutators.
Partition group_oracle(const FiniteAlgebra& A, const std::vector<Partition>& alphas,
                       const std::optional<GroupReduct>& reduct = std::nullopt);

/// Classical ring oracle: for congruences identified with ideals via the
/// zero class, the k-ary commutator is the sum over all permutations of the
/// k-fold ideal products.
Partition ring_oracle(const FiniteAlgebra& A, const std::vector<Partition>& alphas,
                      const std::optional<RingReduct>& reduct = std::nullopt);

/// Monotonicity/symmetry/join-distributivity checks over the whole
/// congruence lattice (exhaustive up to `max_instances` per property, then
/// deterministically subsampled).
struct PropertyCheck {
  std::string property;
  std::int64_t instances = 0;
  bool passed = true;
  std::string witness;  ///< first failing instance, if any
};
struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_passed = true;
};
struct PropertySuiteOptions {
  int max_arity = 3;
  std::int64_t max_instances = 2'000'000;
};
PropertyReport property_suite(AlgebraPtr A, const PropertySuiteOptions& opts = {},
                              const Caps& caps = global_caps(),
                              CommutatorEngine* shared_engine = nullptr);

/// Checks the subdirect-product commutator containment: the commutator of
/// congruences of a 2-factor subdirect product embeds subdirectly into the
/// product of the factorwise commutators of the projected congruences.
struct SdcomResult {
  bool contained = false;
  bool onto_left = false;
  bool onto_right = false;
  bool ok() const { return contained && onto_left && onto_right; }
};
SdcomResult sdcom_check(const SubproductAlgebra& C, const std::vector<Partition>& gammas,
                        const Caps& caps = global_caps());

/// Least k with the (k+1)-fold self-commutator of `relative_to` trivial.
struct SupernilpotenceResult {
  std::optional<int> cls;             ///< empty when it exceeds max_k
  std::vector<std::int64_t> chain;    ///< block counts of the computed self-commutators
  int max_k;
};
SupernilpotenceResult supernilpotence_class(AlgebraPtr A, const Partition& relative_to, int max_k,
                                            const Caps& caps = global_caps());

}  // namespace sdw
