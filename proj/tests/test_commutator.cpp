#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sdw/commutator.hpp"
#include "sdw/congruence.hpp"
#include "sdw/corpus.hpp"
#include "sdw/subproduct.hpp"
#include "test_util.hpp"

using namespace sdw;

namespace {

Partition total(const AlgebraPtr& A) { return Partition::one(A->size()); }
Partition trivial(const AlgebraPtr& A) { return Partition::zero(A->size()); }

}  // namespace

TEST_CASE("cube_generators: shapes and counts") {
  auto z2 = corpus::cyclic_group(2);
  // k=1: one generator per related pair, values (a, b).
  auto g1 = cube_generators(*z2, 1, {total(z2)});
  CHECK(g1.size() == 4);
  for (const CubeFunction& f : g1) CHECK(f.values.size() == 2);

  // k=2 at direction 1: values (a,a,b,b) in index order 00,01,10,11.
  auto g2 = cube_generators(*z2, 2, {total(z2), total(z2)});
  CHECK(g2.size() == 8);  // 4 pairs x 2 directions, diagonal included
  bool found = false;
  for (const CubeFunction& f : g2)
    if (f.values == std::vector<El>{0, 0, 1, 1}) found = true;
  CHECK(found);

  // Degenerate pairs give constants.
  bool constant = false;
  for (const CubeFunction& f : g2)
    if (f.values == std::vector<El>{1, 1, 1, 1}) constant = true;
  CHECK(constant);
}

TEST_CASE("generate_M: GF(2) linear-algebra oracle for Z2, k=2") {
  auto z2 = corpus::cyclic_group_no_inverse(2);
  auto M = generate_M(*z2, 2, {Partition::one(2), Partition::one(2)});
  // Oracle: all 16 functions with f(00)+f(01)+f(10)+f(11) = 0 over GF(2).
  std::set<std::vector<El>> expect;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<El> f{static_cast<El>(mask & 1), static_cast<El>((mask >> 1) & 1),
                      static_cast<El>((mask >> 2) & 1), static_cast<El>((mask >> 3) & 1)};
    if ((f[0] + f[1] + f[2] + f[3]) % 2 == 0) expect.insert(f);
  }
  std::set<std::vector<El>> got;
  for (const CubeFunction& f : M) got.insert(f.values);
  CHECK(got == expect);
  CHECK(got.size() == 8);
}

TEST_CASE("generate_M at k=1 over the total congruence is the full square") {
  auto z4 = corpus::cyclic_group(4);
  auto M = generate_M(*z4, 1, {Partition::one(4)});
  CHECK(M.size() == 16);  // the generators already exhaust A^2
}

TEST_CASE("generate_M is subdirect in every coordinate") {
  for (const auto& A : {corpus::symmetric3(), corpus::dihedral4()}) {
    CongruenceLattice lat = con_lattice(*A);
    const Partition& mid = lat.congruences[1];
    auto M = generate_M(*A, 2, {mid, Partition::one(A->size())});
    for (unsigned c = 0; c < 4; ++c) {
      std::set<El> seen;
      for (const CubeFunction& f : M) seen.insert(f.values[c]);
      CHECK(static_cast<int>(seen.size()) == A->size());
    }
  }
}

TEST_CASE("commutator: unary case is the congruence itself") {
  auto s3 = corpus::symmetric3();
  CommutatorEngine engine(s3);
  for (const Partition& p : con_lattice(*s3).congruences)
    CHECK(engine.commutator({p}) == p);
}

TEST_CASE("commutator: [1,1] on Z4 vanishes, on S3 it is the alternating congruence") {
  auto z4 = corpus::cyclic_group(4);
  CommutatorEngine ez4(z4);
  CHECK(ez4.commutator({total(z4), total(z4)}).is_zero());

  auto s3 = corpus::symmetric3();
  CommutatorEngine es3(s3);
  Partition c = es3.commutator({total(s3), total(s3)});
  CHECK(c == Partition::from_blocks(6, {{0, 3, 4}, {1, 2, 5}}));
  CHECK(c == group_oracle(*s3, {total(s3), total(s3)}));
}

TEST_CASE("commutator: D4 has supernilpotence class 2") {
  auto d4 = corpus::dihedral4();
  CommutatorEngine e(d4);
  Partition binary = e.commutator({total(d4), total(d4)});
  CHECK_FALSE(binary.is_zero());
  Partition ternary = e.commutator({total(d4), total(d4), total(d4)});
  CHECK(ternary.is_zero());

  SupernilpotenceResult sn = supernilpotence_class(d4, total(d4), 2);
  REQUIRE(sn.cls.has_value());
  CHECK(*sn.cls == 2);

  SupernilpotenceResult abelian = supernilpotence_class(corpus::cyclic_group(4),
                                                        Partition::one(4), 2);
  REQUIRE(abelian.cls.has_value());
  CHECK(*abelian.cls == 1);

  SupernilpotenceResult s3r = supernilpotence_class(corpus::symmetric3(), Partition::one(6), 2);
  CHECK_FALSE(s3r.cls.has_value());
}

TEST_CASE("group_oracle: classical identities") {
  auto s3 = corpus::symmetric3();
  Partition a3 = Partition::from_blocks(6, {{0, 3, 4}, {1, 2, 5}});
  CHECK(group_oracle(*s3, {total(s3), total(s3)}) == a3);
  CHECK(group_oracle(*s3, {total(s3), trivial(s3)}).is_zero());

  auto d4 = corpus::dihedral4();
  CHECK(group_oracle(*d4, {total(d4), total(d4), total(d4)}).is_zero());
  CHECK_THROWS_AS(group_oracle(*corpus::two_chain_lattice(), {Partition::one(2)}), InputError);
}

TEST_CASE("ring_oracle: powers of the even ideal") {
  auto z4 = corpus::ring_zn(4);
  Partition even4 = cg(*z4, {{0, 2}});
  CHECK(ring_oracle(*z4, {even4, even4}).is_zero());

  auto z8 = corpus::ring_zn(8);
  Partition even8 = cg(*z8, {{0, 2}});
  Partition four8 = cg(*z8, {{0, 4}});
  CHECK(ring_oracle(*z8, {even8, even8}) == four8);
  CHECK(ring_oracle(*z8, {even8, even8, even8}).is_zero());
}

TEST_CASE("term-condition commutator satisfies the term condition and is minimal") {
  // Direct re-check over all of M plus brute-force minimality for small
  // Mal'cev algebras, binary case.
  for (const auto& A : {corpus::cyclic_group(4), corpus::symmetric3(), corpus::klein_group()}) {
    CongruenceLattice lat = con_lattice(*A);
    CommutatorEngine engine(A);
    auto satisfies_tc = [&](const Partition& gamma, const std::vector<CubeFunction>& M) {
      for (const CubeFunction& f : M) {
        if (!gamma.same_block(f.values[0], f.values[1])) continue;
        if (!gamma.same_block(f.values[2], f.values[3])) return false;
      }
      return true;
    };
    for (const Partition& a : lat.congruences)
      for (const Partition& b : lat.congruences) {
        Partition gamma = engine.commutator({a, b});
        auto M = generate_M(*A, 2, {a, b});
        CHECK(satisfies_tc(gamma, M));
        // Minimal among all congruences satisfying the term condition.
        for (const Partition& theta : lat.congruences)
          if (satisfies_tc(theta, M)) CHECK(gamma.refines(theta));
      }
  }
}

TEST_CASE("commutator equals the group oracle on every tuple of S3 and D4, k <= 3") {
  for (const auto& A : {corpus::symmetric3(), corpus::dihedral4()}) {
    CongruenceLattice lat = con_lattice(*A);
    CommutatorEngine engine(A);
    auto reduct = find_group_reduct(*A);
    for (const Partition& a : lat.congruences)
      for (const Partition& b : lat.congruences) {
        CHECK(engine.commutator({a, b}) == group_oracle(*A, {a, b}, reduct));
        for (const Partition& c : lat.congruences)
          CHECK(engine.commutator({a, b, c}) == group_oracle(*A, {a, b, c}, reduct));
      }
  }
}

TEST_CASE("property suite passes on a Mal'cev corpus sample") {
  for (const auto& A : {corpus::symmetric3(), corpus::ring_zn(8), corpus::quaternion8()}) {
    PropertyReport rep = property_suite(A);
    for (const PropertyCheck& c : rep.checks) {
      INFO(A->name() << ": " << c.property << " " << c.witness);
      CHECK(c.passed);
      CHECK(c.instances > 0);
    }
  }
}

TEST_CASE("sdcom_check: trivial congruences, sign fiber, diagonal of D4") {
  auto s3 = corpus::symmetric3();
  auto z2 = corpus::cyclic_group(2);
  std::vector<int> sgn = corpus::s3_signs();
  std::vector<El> sgn_map(6);
  for (El g = 0; g < 6; ++g) sgn_map[static_cast<size_t>(g)] = static_cast<El>(sgn[static_cast<size_t>(g)]);
  FiberProduct fp = fiber_product(s3, s3, z2, sgn_map, sgn_map);
  CHECK(fp.C.size() == 18);

  SdcomResult triv_case = sdcom_check(fp.C, {Partition::zero(18), Partition::zero(18)});
  CHECK(triv_case.ok());

  SdcomResult full_case = sdcom_check(fp.C, {Partition::one(18), Partition::one(18)});
  CHECK(full_case.ok());

  auto d4 = corpus::dihedral4();
  std::vector<std::int64_t> diag;
  ProductCodec codec({8, 8});
  for (El a = 0; a < 8; ++a) diag.push_back(codec.encode(std::vector<El>{a, a}));
  SubproductAlgebra D = SubproductAlgebra::from_elements({d4, d4}, std::move(diag));
  SdcomResult diag_case = sdcom_check(D, {Partition::one(8), Partition::one(8)});
  CHECK(diag_case.ok());
}

TEST_CASE("commutator arity and size caps raise named bounds") {
  auto d4 = corpus::dihedral4();
  Caps caps;
  caps.max_cube_arity = 2;
  CommutatorEngine engine(d4, caps);
  CHECK_THROWS_AS(engine.commutator({total(d4), total(d4), total(d4)}), BoundError);

  Caps tiny;
  tiny.max_cube_functions = 10;
  CommutatorEngine small_engine(d4, tiny);
  try {
    small_engine.commutator({total(d4), total(d4)});
    CHECK(false);
  } catch (const BoundError& e) {
    CHECK(e.bound() == "max_cube_functions");
  }
}
