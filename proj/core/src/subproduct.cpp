#include "sdw/subproduct.hpp"

#include <algorithm>

#include "sdw/algebra_ops.hpp"
#include "sdw/closure.hpp"
#include "sdw/reduct.hpp"

namespace sdw {

namespace {

ProductCodec codec_for(const std::vector<AlgebraPtr>& factors) {
  if (factors.empty()) throw InputError("subproduct: no factors");
  const Signature& sig = factors[0]->signature();
  std::vector<int> sizes;
  for (const auto& f : factors) {
    if (!(f->signature() == sig)) throw InputError("subproduct: factors must share one signature");
    sizes.push_back(f->size());
  }
  return ProductCodec(std::move(sizes));
}

}  // namespace

SubproductAlgebra SubproductAlgebra::from_elements(std::vector<AlgebraPtr> factors,
                                                   std::vector<std::int64_t> elements,
                                                   const Caps& caps) {
  SubproductAlgebra C;
  C.factors_ = std::move(factors);
  C.codec_ = codec_for(C.factors_);
  std::int64_t carrier = C.codec_.carrier_size();
  if (carrier > caps.max_carrier)
    throw BoundError("max_carrier", "subproduct: product carrier " + std::to_string(carrier) +
                                        " exceeds cap");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw InputError("subproduct: empty element set");
  for (std::int64_t e : elements)
    if (e < 0 || e >= carrier) throw InputError("subproduct: element index out of carrier");
  C.elements_ = std::move(elements);
  C.member_bits_.assign(static_cast<size_t>((carrier + 63) / 64), 0);
  for (std::int64_t e : C.elements_)
    C.member_bits_[static_cast<size_t>(e >> 6)] |= (1ULL << (e & 63));

  // Verify closedness under all operations (acting coordinatewise).
  const Signature& sig = C.factors_[0]->signature();
  int nf = C.num_factors();
  std::int64_t m = C.size();
  std::vector<std::vector<El>> coords(static_cast<size_t>(m));
  for (std::int64_t p = 0; p < m; ++p) coords[static_cast<size_t>(p)] = C.codec_.decode(C.elements_[static_cast<size_t>(p)]);
  std::vector<El> result(static_cast<size_t>(nf));
  for (int op = 0; op < sig.size(); ++op) {
    int r = sig.arity(op);
    std::vector<std::int64_t> tuple(static_cast<size_t>(r), 0);
    std::vector<El> args(static_cast<size_t>(r));
    while (true) {
      for (int c = 0; c < nf; ++c) {
        for (int i = 0; i < r; ++i) args[static_cast<size_t>(i)] = coords[static_cast<size_t>(tuple[static_cast<size_t>(i)])][static_cast<size_t>(c)];
        result[static_cast<size_t>(c)] = C.factors_[static_cast<size_t>(c)]->apply(op, args);
      }
      if (!C.contains(C.codec_.encode(result)))
        throw InputError("subproduct: element set is not closed under operation '" +
                         sig.name(op) + "'");
      int i = r - 1;
      while (i >= 0 && tuple[static_cast<size_t>(i)] == m - 1) {
        tuple[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++tuple[static_cast<size_t>(i)];
    }
  }
  return C;
}

SubproductAlgebra SubproductAlgebra::from_generators(std::vector<AlgebraPtr> factors,
                                                     const std::vector<std::vector<El>>& generators,
                                                     const Caps& caps) {
  if (factors.empty()) throw InputError("subproduct: no factors");
  ProductCodec codec = codec_for(factors);
  if (codec.carrier_size() > caps.max_carrier)
    throw BoundError("max_carrier", "subproduct: product carrier exceeds cap");
  std::vector<const FiniteAlgebra*> raw;
  for (const auto& f : factors) raw.push_back(f.get());
  TupleUniverse universe(std::move(raw));
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != static_cast<int>(factors.size()))
      throw InputError("subproduct: generator has wrong number of coordinates");
    for (size_t i = 0; i < g.size(); ++i)
      if (g[i] < 0 || g[i] >= factors[i]->size())
        throw InputError("subproduct: generator coordinate out of carrier");
  }
  if (generators.empty() && factors[0]->signature().size() == 0)
    throw InputError("subproduct: no generators and no constants");
  ClosureOptions opts;
  opts.max_elements = caps.max_carrier;
  ClosureResult cl = close_under_ops(universe, generators, opts);
  if (cl.hit_budget) throw BoundError("max_carrier", "subproduct: closure budget exhausted");
  if (cl.count == 0) throw InputError("subproduct: empty subuniverse (no generators, no constants)");

  std::vector<std::int64_t> elements;
  elements.reserve(static_cast<size_t>(cl.count));
  for (std::int64_t i = 0; i < cl.count; ++i) {
    auto coords = cl.at(i);
    elements.push_back(codec.encode(coords));
  }
  // from_elements re-verifies closedness; harmless and keeps one code path.
  return from_elements(std::move(factors), std::move(elements), caps);
}

bool SubproductAlgebra::contains(std::int64_t flat) const {
  if (flat < 0 || flat >= codec_.carrier_size()) return false;
  return (member_bits_[static_cast<size_t>(flat >> 6)] >> (flat & 63)) & 1;
}

std::int64_t SubproductAlgebra::position_of(std::int64_t flat) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), flat);
  if (it == elements_.end() || *it != flat) return -1;
  return it - elements_.begin();
}

std::vector<El> SubproductAlgebra::coords_of_position(std::int64_t pos) const {
  return codec_.decode(elements_[static_cast<size_t>(pos)]);
}

El SubproductAlgebra::coord(std::int64_t pos, int i) const {
  std::int64_t flat = elements_[static_cast<size_t>(pos)];
  for (int c = num_factors() - 1; c > i; --c) flat /= codec_.coord_size(c);
  return static_cast<El>(flat % codec_.coord_size(i));
}

Partition SubproductAlgebra::projection_kernel(int i) const {
  std::int64_t m = size();
  std::vector<El> first_with(static_cast<size_t>(factor(i)->size()), -1);
  std::vector<El> rep(static_cast<size_t>(m));
  for (std::int64_t p = 0; p < m; ++p) {
    El v = coord(p, i);
    if (first_with[static_cast<size_t>(v)] < 0) first_with[static_cast<size_t>(v)] = static_cast<El>(p);
    rep[static_cast<size_t>(p)] = first_with[static_cast<size_t>(v)];
  }
  return Partition::from_rep_map(std::move(rep));
}

std::vector<El> SubproductAlgebra::projection_map(int i) const {
  std::int64_t m = size();
  std::vector<El> out(static_cast<size_t>(m));
  for (std::int64_t p = 0; p < m; ++p) out[static_cast<size_t>(p)] = coord(p, i);
  return out;
}

AlgebraPtr SubproductAlgebra::as_algebra(const Caps& caps) const {
  const Signature& sig = factors_[0]->signature();
  std::int64_t m = size();
  int nf = num_factors();
  std::vector<std::vector<El>> tables(static_cast<size_t>(sig.size()));
  std::vector<std::vector<El>> coords(static_cast<size_t>(m));
  for (std::int64_t p = 0; p < m; ++p) coords[static_cast<size_t>(p)] = coords_of_position(p);
  for (int op = 0; op < sig.size(); ++op) {
    int r = sig.arity(op);
    std::int64_t entries = 1;
    for (int i = 0; i < r; ++i) {
      if (entries > caps.max_table_entries / std::max<std::int64_t>(m, 1))
        throw BoundError("max_table_entries", "subproduct: materialized table exceeds cap");
      entries *= m;
    }
    std::vector<El>& table = tables[static_cast<size_t>(op)];
    table.resize(static_cast<size_t>(entries));
    std::vector<std::int64_t> tuple(static_cast<size_t>(r));
    std::vector<El> args(static_cast<size_t>(r));
    std::vector<El> result(static_cast<size_t>(nf));
    for (std::int64_t idx = 0; idx < entries; ++idx) {
      std::int64_t rest = idx;
      for (int i = r; i-- > 0;) {
        tuple[static_cast<size_t>(i)] = rest % m;
        rest /= m;
      }
      for (int c = 0; c < nf; ++c) {
        for (int i = 0; i < r; ++i) args[static_cast<size_t>(i)] = coords[static_cast<size_t>(tuple[static_cast<size_t>(i)])][static_cast<size_t>(c)];
        result[static_cast<size_t>(c)] = factors_[static_cast<size_t>(c)]->apply(op, args);
      }
      std::int64_t pos = position_of(codec_.encode(result));
      if (pos < 0) throw Error("subproduct: closure invariant violated");
      table[static_cast<size_t>(idx)] = static_cast<El>(pos);
    }
  }
  std::string name = "sub(";
  for (int i = 0; i < nf; ++i) name += (i ? "x" : "") + factors_[static_cast<size_t>(i)]->name();
  name += ")";
  return std::make_shared<FiniteAlgebra>(name, static_cast<int>(m), sig, std::move(tables));
}

SubdirectCheck is_subdirect(const SubproductAlgebra& C) {
  for (int i = 0; i < C.num_factors(); ++i) {
    std::vector<char> hit(static_cast<size_t>(C.factor(i)->size()), 0);
    for (std::int64_t p = 0; p < C.size(); ++p) hit[static_cast<size_t>(C.coord(p, i))] = 1;
    for (El v = 0; v < C.factor(i)->size(); ++v)
      if (!hit[static_cast<size_t>(v)]) return {false, i, v};
  }
  return {true, -1, -1};
}

FiberProduct fiber_product(AlgebraPtr A, AlgebraPtr B, AlgebraPtr D, std::vector<El> g,
                           std::vector<El> h, const Caps& caps) {
  HomCheck cg_ = is_homomorphism(*A, *D, g);
  if (!cg_.ok)
    throw InputError("fiber_product: g is not a homomorphism (operation '" +
                     A->signature().name(cg_.witness->op) + "')");
  HomCheck ch = is_homomorphism(*B, *D, h);
  if (!ch.ok)
    throw InputError("fiber_product: h is not a homomorphism (operation '" +
                     B->signature().name(ch.witness->op) + "')");
  if (!is_surjective(*D, g)) throw InputError("fiber_product: g is not surjective onto D");
  if (!is_surjective(*D, h)) throw InputError("fiber_product: h is not surjective onto D");

  std::vector<std::int64_t> elements;
  std::int64_t nb = B->size();
  for (El a = 0; a < A->size(); ++a)
    for (El b = 0; b < B->size(); ++b)
      if (g[static_cast<size_t>(a)] == h[static_cast<size_t>(b)])
        elements.push_back(static_cast<std::int64_t>(a) * nb + b);
  SubproductAlgebra C = SubproductAlgebra::from_elements({A, B}, std::move(elements), caps);
  return FiberProduct{std::move(C), std::move(A), std::move(B), std::move(D), std::move(g),
                      std::move(h)};
}

namespace {

/// Quotient of C by a congruence on its list positions, materialized
/// directly from the factor tables.
AlgebraPtr subproduct_quotient(const SubproductAlgebra& C, const Partition& theta,
                               const Caps& caps) {
  std::vector<int> block_of = theta.block_index();
  std::vector<std::int64_t> reps;
  for (std::int64_t p = 0; p < C.size(); ++p)
    if (theta.rep(static_cast<El>(p)) == static_cast<El>(p)) reps.push_back(p);
  std::int64_t m = static_cast<std::int64_t>(reps.size());
  const Signature& sig = C.factor(0)->signature();
  int nf = C.num_factors();
  std::vector<std::vector<El>> tables(static_cast<size_t>(sig.size()));
  for (int op = 0; op < sig.size(); ++op) {
    int r = sig.arity(op);
    std::int64_t entries = 1;
    for (int i = 0; i < r; ++i) {
      if (entries > caps.max_table_entries / std::max<std::int64_t>(m, 1))
        throw BoundError("max_table_entries", "subproduct quotient: table exceeds cap");
      entries *= m;
    }
    tables[static_cast<size_t>(op)].resize(static_cast<size_t>(entries));
    std::vector<El> args(static_cast<size_t>(r));
    std::vector<El> result(static_cast<size_t>(nf));
    for (std::int64_t idx = 0; idx < entries; ++idx) {
      std::int64_t rest = idx;
      std::vector<std::int64_t> tuple(static_cast<size_t>(r));
      for (int i = r; i-- > 0;) {
        tuple[static_cast<size_t>(i)] = reps[static_cast<size_t>(rest % m)];
        rest /= m;
      }
      for (int c = 0; c < nf; ++c) {
        for (int i = 0; i < r; ++i) args[static_cast<size_t>(i)] = C.coord(tuple[static_cast<size_t>(i)], c);
        result[static_cast<size_t>(c)] = C.factor(c)->apply(op, args);
      }
      std::int64_t pos = C.position_of(C.codec().encode(result));
      if (pos < 0) throw Error("subproduct quotient: closure invariant violated");
      tables[static_cast<size_t>(op)][static_cast<size_t>(idx)] =
          static_cast<El>(block_of[static_cast<size_t>(pos)]);
    }
  }
  return std::make_shared<FiniteAlgebra>("quotient", static_cast<int>(m), sig, std::move(tables));
}

}  // namespace

FactorKernels factor_kernels(const SubproductAlgebra& C, const Caps& caps) {
  if (C.num_factors() != 2) throw InputError("factor_kernels: exactly 2 factors required");
  SubdirectCheck sd = is_subdirect(C);
  if (!sd.subdirect)
    throw InputError("factor_kernels: not subdirect (coordinate " +
                     std::to_string(sd.missing_coordinate) + " misses " +
                     std::to_string(sd.missing_value) + ")");
  Partition ker_a = C.projection_kernel(0);
  Partition ker_b = C.projection_kernel(1);
  Partition joined = join(ker_a, ker_b);
  FactorKernels out;
  out.lambda_left = project_partition(joined, C.projection_map(0), C.factor(0)->size());
  out.lambda_right = project_partition(joined, C.projection_map(1), C.factor(1)->size());
  out.kernel_join = joined;
  out.quotient = subproduct_quotient(C, joined, caps);
  out.quotient_size = out.quotient->size();

  // The quotients of both factors have the same size and are matched by the
  // bijection induced through C.
  if (out.lambda_left.block_count() != out.quotient_size ||
      out.lambda_right.block_count() != out.quotient_size)
    throw Error("factor_kernels: quotient sizes disagree");
  std::vector<int> ia = out.lambda_left.block_index();
  std::vector<int> ib = out.lambda_right.block_index();
  std::vector<int> bij(static_cast<size_t>(out.quotient_size), -1);
  std::vector<char> hit(static_cast<size_t>(out.quotient_size), 0);
  for (std::int64_t p = 0; p < C.size(); ++p) {
    int ba = ia[static_cast<size_t>(C.coord(p, 0))];
    int bb = ib[static_cast<size_t>(C.coord(p, 1))];
    if (bij[static_cast<size_t>(ba)] == -1) {
      bij[static_cast<size_t>(ba)] = bb;
      hit[static_cast<size_t>(bb)] = 1;
    } else if (bij[static_cast<size_t>(ba)] != bb) {
      throw Error("factor_kernels: induced map is not well defined");
    }
  }
  for (int i = 0; i < out.quotient_size; ++i)
    if (bij[static_cast<size_t>(i)] == -1 || !hit[static_cast<size_t>(i)])
      throw Error("factor_kernels: induced map is not a bijection");
  return out;
}

FleischerResult is_fiber_product(const SubproductAlgebra& C, const Caps& caps) {
  if (C.num_factors() != 2) throw InputError("is_fiber_product: exactly 2 factors required");
  SubdirectCheck sd = is_subdirect(C);
  if (!sd.subdirect) throw InputError("is_fiber_product: not subdirect");
  Partition ker_a = C.projection_kernel(0);
  Partition ker_b = C.projection_kernel(1);
  if (!permute(ker_a, ker_b)) return {false, std::nullopt};

  // Build the witnessing (g, h, D) from the factor kernels and re-verify
  // that C is exactly the equalizer.
  FactorKernels fk = factor_kernels(C, caps);
  Partition joined = fk.kernel_join;
  std::vector<int> block_of = joined.block_index();
  std::vector<El> g(static_cast<size_t>(C.factor(0)->size()), -1);
  std::vector<El> h(static_cast<size_t>(C.factor(1)->size()), -1);
  for (std::int64_t p = 0; p < C.size(); ++p) {
    g[static_cast<size_t>(C.coord(p, 0))] = static_cast<El>(block_of[static_cast<size_t>(p)]);
    h[static_cast<size_t>(C.coord(p, 1))] = static_cast<El>(block_of[static_cast<size_t>(p)]);
  }
  FiberProduct witness = fiber_product(C.factor(0), C.factor(1), fk.quotient, std::move(g),
                                       std::move(h), caps);
  if (witness.C.elements() != C.elements())
    throw Error("is_fiber_product: witness verification failed despite permuting kernels");
  return {true, std::move(witness)};
}

SubproductAlgebra project(const SubproductAlgebra& C, const std::vector<int>& I,
                          const Caps& caps) {
  if (I.empty()) throw InputError("project: empty coordinate set");
  for (int i : I)
    if (i < 0 || i >= C.num_factors()) throw InputError("project: coordinate out of range");
  std::vector<AlgebraPtr> factors;
  for (int i : I) factors.push_back(C.factor(i));
  ProductCodec codec = codec_for(factors);
  std::vector<std::int64_t> elements;
  elements.reserve(static_cast<size_t>(C.size()));
  std::vector<El> coords(I.size());
  for (std::int64_t p = 0; p < C.size(); ++p) {
    for (size_t k = 0; k < I.size(); ++k) coords[k] = C.coord(p, I[k]);
    elements.push_back(codec.encode(coords));
  }
  return SubproductAlgebra::from_elements(std::move(factors), std::move(elements), caps);
}

PairReport pair_report(const SubproductAlgebra& C, const Caps& caps) {
  if (C.num_factors() < 2) throw InputError("pair_report: at least 2 factors required");
  PairReport report;
  for (int i = 0; i < C.num_factors(); ++i)
    for (int j = i + 1; j < C.num_factors(); ++j) {
      SubproductAlgebra Cij = project(C, {i, j}, caps);
      Partition ker_i = Cij.projection_kernel(0);
      Partition ker_j = Cij.projection_kernel(1);
      Partition joined = join(ker_i, ker_j);
      PairEntry e;
      e.i = i;
      e.j = j;
      e.surjective = Cij.size() == static_cast<std::int64_t>(C.factor(i)->size()) *
                                       static_cast<std::int64_t>(C.factor(j)->size());
      e.lambda_ji = project_partition(joined, Cij.projection_map(0), C.factor(i)->size());
      e.lambda_ij = project_partition(joined, Cij.projection_map(1), C.factor(j)->size());
      e.quotient_size = joined.block_count();
      if (e.lambda_ji.block_count() != e.quotient_size ||
          e.lambda_ij.block_count() != e.quotient_size)
        throw Error("pair_report: quotient sizes disagree");
      report.entries.push_back(std::move(e));
    }
  return report;
}

UnionOfClassesResult union_of_classes(const SubproductAlgebra& C,
                                      const std::vector<Partition>& thetas) {
  int nf = C.num_factors();
  if (static_cast<int>(thetas.size()) != nf)
    throw InputError("union_of_classes: one congruence per factor required");
  for (int i = 0; i < nf; ++i)
    if (thetas[static_cast<size_t>(i)].size() != C.factor(i)->size())
      throw InputError("union_of_classes: congruence size mismatch at factor " + std::to_string(i));

  std::vector<std::vector<std::vector<El>>> blocks(static_cast<size_t>(nf));
  for (int i = 0; i < nf; ++i) blocks[static_cast<size_t>(i)] = thetas[static_cast<size_t>(i)].blocks();
  std::vector<std::vector<int>> block_of(static_cast<size_t>(nf));
  for (int i = 0; i < nf; ++i) {
    block_of[static_cast<size_t>(i)].assign(static_cast<size_t>(C.factor(i)->size()), 0);
    for (size_t b = 0; b < blocks[static_cast<size_t>(i)].size(); ++b)
      for (El x : blocks[static_cast<size_t>(i)][b]) block_of[static_cast<size_t>(i)][static_cast<size_t>(x)] = static_cast<int>(b);
  }

  std::vector<char> class_seen;
  // Classes are keyed by the tuple of block indices, encoded mixed-radix.
  std::vector<std::int64_t> radix(static_cast<size_t>(nf));
  std::int64_t total_classes = 1;
  for (int i = 0; i < nf; ++i) {
    radix[static_cast<size_t>(i)] = static_cast<std::int64_t>(blocks[static_cast<size_t>(i)].size());
    total_classes *= radix[static_cast<size_t>(i)];
  }
  class_seen.assign(static_cast<size_t>(total_classes), 0);

  for (std::int64_t p = 0; p < C.size(); ++p) {
    std::vector<El> member = C.coords_of_position(p);
    std::int64_t key = 0;
    for (int i = 0; i < nf; ++i) key = key * radix[static_cast<size_t>(i)] + block_of[static_cast<size_t>(i)][static_cast<size_t>(member[static_cast<size_t>(i)])];
    if (class_seen[static_cast<size_t>(key)]) continue;
    class_seen[static_cast<size_t>(key)] = 1;
    // Walk the whole theta-class of this member.
    std::vector<size_t> pick(static_cast<size_t>(nf), 0);
    std::vector<const std::vector<El>*> cls(static_cast<size_t>(nf));
    for (int i = 0; i < nf; ++i) cls[static_cast<size_t>(i)] = &blocks[static_cast<size_t>(i)][static_cast<size_t>(block_of[static_cast<size_t>(i)][static_cast<size_t>(member[static_cast<size_t>(i)])])];
    std::vector<El> tuple(static_cast<size_t>(nf));
    while (true) {
      for (int i = 0; i < nf; ++i) tuple[static_cast<size_t>(i)] = (*cls[static_cast<size_t>(i)])[pick[static_cast<size_t>(i)]];
      if (!C.contains(C.codec().encode(tuple)))
        return {false, std::move(member), std::move(tuple)};
      int i = nf - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] + 1 == cls[static_cast<size_t>(i)]->size()) {
        pick[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
    }
  }
  return {true, {}, {}};
}

ModuleQuotientCheck module_fiber_quotient_check(const FiberProduct& fp, const Caps& caps) {
  (void)caps;
  const FiniteAlgebra& A = *fp.left;
  const FiniteAlgebra& B = *fp.right;
  const FiniteAlgebra& D = *fp.quotient;
  auto ga = find_group_reduct(A);
  auto gb = find_group_reduct(B);
  auto gd = find_group_reduct(D);
  if (!ga || !gb || !gd || !ga->abelian || !gb->abelian || !gd->abelian)
    throw InputError("module_fiber_quotient_check: factors and quotient must have an abelian "
                     "group reduct");

  std::int64_t na = A.size(), nb = B.size();
  std::int64_t product = na * nb;
  if (product % fp.C.size() != 0 || product / fp.C.size() != D.size())
    return {false, "|A x B| / |C| != |D|"};

  // f(a,b) = g(a) - h(b); its fibers must be the C-cosets: f^{-1}(0) = C,
  // every fiber of size |C|, image all of D.
  std::vector<std::int64_t> fiber_count(static_cast<size_t>(D.size()), 0);
  for (El a = 0; a < na; ++a)
    for (El b = 0; b < nb; ++b) {
      El d = D.apply2(gd->mul, fp.g[static_cast<size_t>(a)],
                      D.apply1(gd->inv, fp.h[static_cast<size_t>(b)]));
      ++fiber_count[static_cast<size_t>(d)];
      bool in_c = fp.C.contains(static_cast<std::int64_t>(a) * nb + b);
      if ((d == gd->identity) != in_c)
        return {false, "kernel of (a,b) -> g(a) - h(b) differs from C at (" + std::to_string(a) +
                           "," + std::to_string(b) + ")"};
    }
  for (El d = 0; d < D.size(); ++d)
    if (fiber_count[static_cast<size_t>(d)] != fp.C.size())
      return {false, "fiber over " + std::to_string(d) + " has size " +
                         std::to_string(fiber_count[static_cast<size_t>(d)]) + ", expected |C|"};
  return {true, ""};
}

}  // namespace sdw
