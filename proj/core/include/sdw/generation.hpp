#pragma once

#include <string>
#include <vector>

#include "sdw/caps.hpp"
#include "sdw/malcev.hpp"
#include "sdw/subproduct.hpp"

namespace sdw {

/// A generating set for a subproduct together with the evidence that it
/// generates: the closure size and, for the pairwise-projection criterion,
/// which clause each check certifies.
struct GenerationCertificate {
  std::vector<std::int64_t> generators;  ///< flat product indices
  std::int64_t closure_size = 0;
  bool generates = false;
  std::vector<std::string> evidence;
  std::string failed_clause;  ///< empty on success
};

/// Lifts generating data through a 2-factor subdirect product: X generates
/// the left factor, Y the right factor, U generates the right factor kernel
/// as a congruence, and m is a Mal'cev term valid on both factors. The
/// lifted set {(x,b_x)} u {(a_y,y)} u {(a_uv,u),(a_uv,v)} is returned and
/// verified by closure to generate C exactly. Witnesses take the least
/// admissible flat index.
GenerationCertificate lift_generators(const SubproductAlgebra& C, const std::vector<El>& X,
                                      const std::vector<El>& Y,
                                      const std::vector<std::pair<El, El>>& U, const Term& malcev,
                                      const Caps& caps = global_caps());

/// Per-factor commutators of the pairwise factor kernels: for each factor j,
/// the (n-1)-ary commutator of the kernels lambda_ij induced on factor j by
/// the pairwise projections (i != j).
struct FactorKernelCommutators {
  PairReport pairs;
  std::vector<Partition> gammas;  ///< one congruence per factor
};
FactorKernelCommutators factor_kernel_commutators(const SubproductAlgebra& C,
                                                  const Caps& caps = global_caps());

/// The class-union property of those commutators: C is a union of
/// gamma_1 x ... x gamma_n classes.
struct ClassUnionCheck {
  bool holds;
  FactorKernelCommutators gammas;
  UnionOfClassesResult detail;
};
ClassUnionCheck verify_class_union(const SubproductAlgebra& C, const Caps& caps = global_caps());

/// Finite-generation certificate for a candidate subset X of C: checks that
/// (i) X generates C modulo gamma_1 x ... x gamma_n and (ii) the pairwise
/// projections of X generate those of C, then asserts <X> = C by direct
/// closure. On failure the report names the clause that failed.
GenerationCertificate fg_certificate(const SubproductAlgebra& C,
                                     const std::vector<std::int64_t>& X,
                                     const Caps& caps = global_caps());

/// Greedy generating-set search: grows X by the element whose addition
/// maximizes the closure size, ties broken by least flat index.
std::vector<std::int64_t> greedy_generating_set(const SubproductAlgebra& C,
                                                const Caps& caps = global_caps());

}  // namespace sdw
