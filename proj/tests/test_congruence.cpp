#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdw/congruence.hpp"
#include "sdw/corpus.hpp"
#include "sdw/malcev.hpp"
#include "test_util.hpp"

using namespace sdw;

TEST_CASE("cg: principal congruence of Z4 and the enumeration oracle") {
  auto z4 = corpus::cyclic_group(4);
  Partition p = cg(*z4, {{0, 2}});
  CHECK(p == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK(p == testutil::cg_oracle(*z4, {{0, 2}}));
  CHECK(cg(*z4, {}) == Partition::zero(4));
}

TEST_CASE("cg: S3 pair (e, 3-cycle) generates the alternating congruence") {
  auto s3 = corpus::symmetric3();
  Partition p = cg(*s3, {{0, 3}});
  CHECK(p == Partition::from_blocks(6, {{0, 3, 4}, {1, 2, 5}}));
  CHECK(p == testutil::cg_oracle(*s3, {{0, 3}}));
}

TEST_CASE("cg agrees with the oracle on every pair set of small algebras") {
  std::vector<AlgebraPtr> algebras = {corpus::cyclic_group(4), corpus::klein_group(),
                                      corpus::two_chain_lattice(), corpus::bool_and_monoid()};
  for (const auto& A : algebras) {
    int n = A->size();
    for (El a = 0; a < n; ++a)
      for (El b = a + 1; b < n; ++b) {
        std::vector<std::pair<El, El>> pairs{{a, b}};
        CHECK(cg(*A, pairs) == testutil::cg_oracle(*A, pairs));
      }
  }
}

TEST_CASE("join and meet: lattice identities and the Z6 oracle") {
  auto z6 = corpus::cyclic_group(6);
  Partition mod2 = cg(*z6, {{0, 2}});
  Partition mod3 = cg(*z6, {{0, 3}});
  CHECK(join(mod2, Partition::zero(6)) == mod2);
  CHECK(meet(mod2, Partition::one(6)) == mod2);
  CHECK(join(mod2, mod3) == Partition::one(6));
  CHECK(meet(mod2, mod3) == Partition::zero(6));
}

TEST_CASE("join of the projection kernels on Z2 x Z2 is total") {
  auto v4 = corpus::klein_group();
  Partition k1 = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  Partition k2 = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(join(k1, k2) == Partition::one(4));
}

TEST_CASE("join/meet are least upper / greatest lower bounds in Con") {
  for (const auto& A : {corpus::cyclic_group(6), corpus::symmetric3()}) {
    CongruenceLattice lat = con_lattice(*A);
    for (const Partition& p : lat.congruences)
      for (const Partition& q : lat.congruences) {
        Partition j = join(p, q), m = meet(p, q);
        CHECK(lat.index_of(j) >= 0);
        CHECK(lat.index_of(m) >= 0);
        for (const Partition& r : lat.congruences) {
          if (p.refines(r) && q.refines(r)) CHECK(j.refines(r));
          if (r.refines(p) && r.refines(q)) CHECK(r.refines(m));
        }
      }
  }
}

TEST_CASE("permute: reflexive case and group congruences") {
  auto s3 = corpus::symmetric3();
  Partition a3 = cg(*s3, {{0, 3}});
  CHECK(permute(a3, a3));
  CongruenceLattice lat = con_lattice(*s3);
  for (const Partition& p : lat.congruences)
    for (const Partition& q : lat.congruences) CHECK(permute(p, q));
  CHECK(permute(Partition::zero(6), a3));
}

TEST_CASE("con_lattice: Z4 and S3 are 3-chains, the 2-element lattice a 2-chain") {
  CongruenceLattice z4 = con_lattice(*corpus::cyclic_group(4));
  CHECK(z4.congruences.size() == 3);
  CHECK(z4.hasse_edges.size() == 2);

  CongruenceLattice s3 = con_lattice(*corpus::symmetric3());
  CHECK(s3.congruences.size() == 3);
  CHECK(s3.congruences[1] == Partition::from_blocks(6, {{0, 3, 4}, {1, 2, 5}}));

  CongruenceLattice lat2 = con_lattice(*corpus::two_chain_lattice());
  CHECK(lat2.congruences.size() == 2);
}

TEST_CASE("con_lattice equals the enumeration oracle on small algebras") {
  std::vector<AlgebraPtr> algebras = {corpus::cyclic_group(6), corpus::klein_group(),
                                      corpus::bool_and_monoid(), corpus::diamond_m3()};
  for (const auto& A : algebras) {
    CongruenceLattice lat = con_lattice(*A);
    std::vector<Partition> oracle = testutil::congruences_oracle(*A);
    CHECK(lat.congruences.size() == oracle.size());
    for (const Partition& p : oracle) CHECK(lat.index_of(p) >= 0);
  }
}

TEST_CASE("con_lattice respects the congruence-count cap") {
  Caps caps;
  caps.max_congruences = 2;
  CHECK_THROWS_AS(con_lattice(*corpus::cyclic_group(6), caps), BoundError);
}

TEST_CASE("is_modular: groups yes, hand-built pentagon no") {
  ModularityReport groups = is_modular(con_lattice(*corpus::dihedral4()).lattice);
  CHECK(groups.modular);

  ModularityReport chain = is_modular(con_lattice(*corpus::two_chain_lattice()).lattice);
  CHECK(chain.modular);

  // Pentagon as a raw order: 0 < 1 < 2 < 4, 0 < 3 < 4.
  std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
  auto set = [&](int a, int b) { leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = true; };
  for (int i = 0; i < 5; ++i) set(i, i);
  set(0, 1);
  set(0, 2);
  set(0, 3);
  set(0, 4);
  set(1, 2);
  set(1, 4);
  set(2, 4);
  set(3, 4);
  ModularityReport pentagon = is_modular(FiniteLattice(std::move(leq)));
  CHECK_FALSE(pentagon.modular);
  REQUIRE(pentagon.witness.has_value());
  // The witness really is a pentagon.
  const PentagonWitness& w = *pentagon.witness;
  std::set<int> distinct{w.bottom, w.side, w.lower, w.upper, w.top};
  CHECK(distinct.size() == 5);
}

TEST_CASE("congruence lattice of the pentagon algebra is modular but its order is not") {
  // Con(N5) as an algebra is a different object from N5 itself; the raw
  // pentagon order above is the modularity counterexample input.
  ModularityReport rep = is_modular(con_lattice(*corpus::pentagon_n5()).lattice);
  CHECK(rep.modular);
}

TEST_CASE("Mal'cev algebras: congruences permute and Con is modular") {
  for (const auto& A : {corpus::cyclic_group(8), corpus::dihedral4(), corpus::quaternion8()}) {
    MalcevOutcome out = find_malcev_term(*A);
    REQUIRE(out.status == MalcevOutcome::Status::found);
    CongruenceLattice lat = con_lattice(*A);
    for (const Partition& p : lat.congruences)
      for (const Partition& q : lat.congruences) CHECK(permute(p, q));
    CHECK(is_modular(lat.lattice).modular);
  }
}

TEST_CASE("generating_pairs recovers congruences") {
  auto s3 = corpus::symmetric3();
  Partition a3 = cg(*s3, {{0, 3}});
  auto pairs = generating_pairs(*s3, a3);
  CHECK(cg(*s3, pairs) == a3);
  CHECK(generating_pairs(*s3, Partition::zero(6)).empty());
}

TEST_CASE("cg step budget raises a named bound error") {
  Caps caps;
  caps.cg_step_budget = 1;
  auto z6 = corpus::cyclic_group(6);
  try {
    cg(*z6, {{0, 1}}, nullptr, caps);
    CHECK(false);
  } catch (const BoundError& e) {
    CHECK(e.bound() == "cg_step_budget");
  }
}
