#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdw/algebra.hpp"
#include "sdw/caps.hpp"
#include "sdw/congruence.hpp"
#include "sdw/partition.hpp"
#include "sdw/product.hpp"

namespace sdw {

/// A subuniverse of a direct product tagged with its factor list. Elements
/// are stored as sorted flat product indices (mixed radix, factor 1 most
/// significant); a bitset over the product carrier gives O(1) membership.
class SubproductAlgebra {
 public:
  /// From an explicit element list (closedness under all operations is
  /// verified).
  static SubproductAlgebra from_elements(std::vector<AlgebraPtr> factors,
                                         std::vector<std::int64_t> elements,
                                         const Caps& caps = global_caps());
  /// From generators: the subuniverse they generate.
  static SubproductAlgebra from_generators(std::vector<AlgebraPtr> factors,
                                           const std::vector<std::vector<El>>& generators,
                                           const Caps& caps = global_caps());

  int num_factors() const { return static_cast<int>(factors_.size()); }
  const AlgebraPtr& factor(int i) const { return factors_[static_cast<size_t>(i)]; }
  const std::vector<AlgebraPtr>& factors() const { return factors_; }
  const ProductCodec& codec() const { return codec_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }

  bool contains(std::int64_t flat) const;
  bool contains_coords(std::span<const El> coords) const { return contains(codec_.encode(coords)); }
  /// Position of a flat index in the sorted element list, or -1.
  std::int64_t position_of(std::int64_t flat) const;
  std::vector<El> coords_of_position(std::int64_t pos) const;

  /// Coordinate projection of the element at a list position.
  El coord(std::int64_t pos, int i) const;

  /// Kernel of the i-th projection: partition of list positions by equality
  /// of coordinate i.
  Partition projection_kernel(int i) const;
  /// Values of coordinate i across elements (indexed by list position).
  std::vector<El> projection_map(int i) const;

  /// Materializes the subproduct as a FiniteAlgebra on its list positions.
  AlgebraPtr as_algebra(const Caps& caps = global_caps()) const;

 private:
  std::vector<AlgebraPtr> factors_;
  ProductCodec codec_;
  std::vector<std::int64_t> elements_;
  std::vector<std::uint64_t> member_bits_;
};

/// --- subdirectness -------------------------------------------------------

struct SubdirectCheck {
  bool subdirect;
  int missing_coordinate = -1;  ///< witness on failure
  El missing_value = -1;
};
SubdirectCheck is_subdirect(const SubproductAlgebra& C);

/// --- fiber products ------------------------------------------------------

struct FiberProduct {
  SubproductAlgebra C;
  AlgebraPtr left, right, quotient;
  std::vector<El> g, h;  ///< the verified epimorphisms onto the quotient
};

/// The equalizer {(a,b) : g(a) = h(b)} of verified epimorphisms g : A -> D,
/// h : B -> D. Guaranteed subdirect.
FiberProduct fiber_product(AlgebraPtr A, AlgebraPtr B, AlgebraPtr D, std::vector<El> g,
                           std::vector<El> h, const Caps& caps = global_caps());

/// Factor kernels of a 2-factor subdirect product: the projections of
/// (ker pi_A v ker pi_B) onto the factors, plus the common quotient, with
/// the canonical bijection between A/lambda_A and B/lambda_B verified.
struct FactorKernels {
  Partition lambda_left, lambda_right;  ///< on the factor carriers
  Partition kernel_join;                ///< on C's list positions
  AlgebraPtr quotient;                  ///< C / kernel_join
  std::int64_t quotient_size;
};
FactorKernels factor_kernels(const SubproductAlgebra& C, const Caps& caps = global_caps());

/// Fleischer's criterion: a 2-factor subdirect product is a fiber product
/// iff its projection kernels permute. When they do, the witnessing
/// (g, h, D) built from the factor kernels is returned and re-verified.
struct FleischerResult {
  bool fiber;
  std::optional<FiberProduct> witness;
};
FleischerResult is_fiber_product(const SubproductAlgebra& C, const Caps& caps = global_caps());

/// --- multiple factors ----------------------------------------------------

/// Image of C under deletion of the coordinates outside I (1-based order of
/// I is the given order; indices are 0-based positions into the factor
/// list).
SubproductAlgebra project(const SubproductAlgebra& C, const std::vector<int>& I,
                          const Caps& caps = global_caps());

/// Pairwise projection analysis: for each i < j the surjectivity flag, the
/// factor kernels lambda_ij (on factor j) and lambda_ji (on factor i), and
/// the common quotient size.
struct PairEntry {
  int i, j;
  bool surjective;
  Partition lambda_ji;  ///< congruence on factor i
  Partition lambda_ij;  ///< congruence on factor j
  std::int64_t quotient_size;
};
struct PairReport {
  std::vector<PairEntry> entries;
};
PairReport pair_report(const SubproductAlgebra& C, const Caps& caps = global_caps());

/// True iff C is a union of theta_1 x ... x theta_n classes; on failure the
/// witness is an escaping tuple (in C's product but outside C, related to a
/// member of C).
struct UnionOfClassesResult {
  bool is_union;
  std::vector<El> member, escape;
};
UnionOfClassesResult union_of_classes(const SubproductAlgebra& C,
                                      const std::vector<Partition>& thetas);

/// Finite check of the module-style quotient identity for a fiber product
/// over expansions of abelian groups: |A x B| / |C| = |D| and the map
/// (a, b) -> g(a) - h(b) has kernel exactly C and image D.
struct ModuleQuotientCheck {
  bool ok;
  std::string detail;
};
ModuleQuotientCheck module_fiber_quotient_check(const FiberProduct& fp,
                                                const Caps& caps = global_caps());

}  // namespace sdw
