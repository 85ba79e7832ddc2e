#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sdw/algebra_ops.hpp"
#include "sdw/corpus.hpp"
#include "sdw/io.hpp"
#include "sdw/product.hpp"
#include "sdw/rng.hpp"
#include "test_util.hpp"

using namespace sdw;

TEST_CASE("eval_term: modular addition, identity, group cancellation") {
  auto z4 = corpus::cyclic_group(4);
  const Signature& sig = z4->signature();
  Term sum = parse_term(sig, "mul(x0, x1)");
  CHECK(eval_term(*z4, sum, std::vector<El>{3, 2}) == 1);

  Term id = Term::variable(0);
  for (El a = 0; a < 4; ++a) CHECK(eval_term(*z4, id, std::vector<El>{a}) == a);

  auto s3 = corpus::symmetric3();
  Term cancel = parse_term(s3->signature(), "mul(x0, inv(x1))");
  for (El g = 0; g < 6; ++g) CHECK(eval_term(*s3, cancel, std::vector<El>{g, g}) == 0);
}

TEST_CASE("eval_term rejects bad input") {
  auto z4 = corpus::cyclic_group(4);
  Term t = Term::variable(2);
  CHECK_THROWS_AS(eval_term(*z4, t, std::vector<El>{0}), InputError);
  CHECK_THROWS_AS(parse_term(z4->signature(), "mul(x0)"), InputError);
}

TEST_CASE("subuniverse closure: cyclic generators") {
  auto z4 = corpus::cyclic_group(4);
  auto gen1 = subuniverse_closure(*z4, {1});
  CHECK(gen1.size() == 4);
  auto gen2 = subuniverse_closure(*z4, {2});
  std::set<El> got;
  for (const auto& d : gen2) got.insert(d.element);
  CHECK(got == std::set<El>{0, 2});
}

TEST_CASE("subuniverse closure: transposition and 3-cycle generate S3") {
  auto s3 = corpus::symmetric3();
  // index 1 = (021) fixing 0? one-line 021 swaps 1,2 -> a transposition;
  // index 3 = 120, a 3-cycle.
  auto all = subuniverse_closure(*s3, {1, 3});
  CHECK(all.size() == 6);
}

TEST_CASE("closure equals brute-force oracle on small algebras") {
  std::vector<AlgebraPtr> algebras = {corpus::cyclic_group(4), corpus::cyclic_group(5),
                                      corpus::klein_group(), corpus::two_chain_lattice(),
                                      corpus::meet_semilattice2()};
  for (const auto& A : algebras) {
    for (unsigned mask = 0; mask < (1u << A->size()); ++mask) {
      std::vector<El> X;
      for (El x = 0; x < A->size(); ++x)
        if ((mask >> x) & 1u) X.push_back(x);
      auto derived = subuniverse_closure(*A, X);
      std::vector<El> got;
      for (const auto& d : derived) got.push_back(d.element);
      std::sort(got.begin(), got.end());
      CHECK(got == testutil::closure_oracle(*A, X));
    }
  }
}

TEST_CASE("closure is extensive, monotone, idempotent") {
  auto s3 = corpus::symmetric3();
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<El> X, Y;
    for (El x = 0; x < 6; ++x) {
      if (rng.below(3) == 0) X.push_back(x);
      if (rng.below(2) == 0) Y.push_back(x);
    }
    for (El x : X)
      if (std::find(Y.begin(), Y.end(), x) == Y.end()) Y.push_back(x);
    auto cx = subuniverse_closure(*s3, X);
    auto cy = subuniverse_closure(*s3, Y);
    std::set<El> sx, sy;
    for (const auto& d : cx) sx.insert(d.element);
    for (const auto& d : cy) sy.insert(d.element);
    for (El x : X) CHECK(sx.count(x));  // extensive
    for (El e : sx) CHECK(sy.count(e));  // monotone
    std::vector<El> cx_elems(sx.begin(), sx.end());
    auto cxx = subuniverse_closure(*s3, cx_elems);
    CHECK(cxx.size() == cx.size());  // idempotent
  }
}

TEST_CASE("recipes replay to their elements") {
  auto s3 = corpus::symmetric3();
  std::vector<El> X{1, 3};
  for (const auto& d : subuniverse_closure(*s3, X))
    CHECK(replay_recipe(*s3, d, X) == d.element);
  // Generator-index tie break: generators appear as variables of their index.
  auto derived = subuniverse_closure(*s3, X);
  CHECK(derived[0].recipe.nodes().back().symbol == -1);
}

TEST_CASE("direct product: Klein group and cyclic Z6") {
  auto z2 = corpus::cyclic_group(2);
  DirectProduct v4 = direct_product({z2, z2});
  CHECK(v4.algebra->size() == 4);
  // Every non-identity element has order 2.
  for (El a = 1; a < 4; ++a) CHECK(v4.algebra->apply2(0, a, a) == 0);

  DirectProduct one = direct_product({z2});
  CHECK(one.algebra->size() == 2);
  CHECK(one.codec.encode(std::vector<El>{1}) == 1);

  DirectProduct z6 = direct_product({corpus::cyclic_group(2), corpus::cyclic_group(3)});
  CHECK(brute_force_isomorphic(*z6.algebra, *corpus::cyclic_group(6)));
}

TEST_CASE("direct product codec round-trips with factor 1 most significant") {
  DirectProduct p = direct_product({corpus::cyclic_group(4), corpus::cyclic_group(3),
                                    corpus::cyclic_group(2)});
  CHECK(p.codec.carrier_size() == 24);
  CHECK(p.codec.encode(std::vector<El>{1, 0, 0}) == 6);
  CHECK(p.codec.encode(std::vector<El>{0, 0, 1}) == 1);
  for (std::int64_t i = 0; i < 24; ++i) CHECK(p.codec.encode(p.codec.decode(i)) == i);
}

TEST_CASE("direct product rejects mismatched signatures and oversized carriers") {
  CHECK_THROWS_AS(direct_product({corpus::cyclic_group(2), corpus::ring_zn(2)}), InputError);
  Caps caps;
  caps.max_carrier = 10;
  CHECK_THROWS_AS(direct_product({corpus::cyclic_group(4), corpus::cyclic_group(4)}, caps),
                  BoundError);
}

TEST_CASE("quotient: Z4 mod 2, trivial congruence, S3 mod A3") {
  auto z4 = corpus::cyclic_group(4);
  Partition mod2 = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  Quotient q = quotient(*z4, mod2);
  CHECK(q.algebra->size() == 2);
  CHECK(brute_force_isomorphic(*q.algebra, *corpus::cyclic_group(2)));
  CHECK(is_homomorphism(*z4, *q.algebra,
                        std::vector<El>(q.surjection.begin(), q.surjection.end()))
            .ok);

  Quotient copy = quotient(*z4, Partition::zero(4));
  CHECK(copy.algebra->size() == 4);
  CHECK(brute_force_isomorphic(*copy.algebra, *z4));

  auto s3 = corpus::symmetric3();
  Partition a3 = Partition::from_blocks(6, {{0, 3, 4}, {1, 2, 5}});
  Quotient qs = quotient(*s3, a3);
  CHECK(qs.algebra->size() == 2);
  CHECK(brute_force_isomorphic(*qs.algebra, *corpus::cyclic_group(2)));
}

TEST_CASE("quotient rejects incompatible partitions with a witness message") {
  auto z4 = corpus::cyclic_group(4);
  Partition bad = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  CHECK_THROWS_WITH_AS(quotient(*z4, bad), doctest::Contains("mul"), InputError);
}

TEST_CASE("is_homomorphism: mod-2 map, shifted map, constants") {
  auto z4 = corpus::cyclic_group(4);
  auto z2 = corpus::cyclic_group(2);
  CHECK(is_homomorphism(*z4, *z2, {0, 1, 0, 1}).ok);
  HomCheck bad = is_homomorphism(*z4, *z4, {1, 2, 3, 0});
  CHECK_FALSE(bad.ok);
  // The shift breaks the constant e: witness is the nullary operation.
  CHECK(bad.witness.has_value());
}

TEST_CASE("algebra JSON round trip and diagnostics") {
  auto d4 = corpus::dihedral4();
  AlgebraPtr back = parse_algebra(algebra_to_json(*d4), "roundtrip");
  CHECK(back->same_structure(*d4));
  CHECK(back->name() == d4->name());

  CHECK_THROWS_WITH_AS(parse_algebra("{\"name\": 3}", "bad.json"),
                       doctest::Contains("bad.json"), InputError);
  CHECK_THROWS_WITH_AS(parse_algebra("{", "bad.json"), doctest::Contains("bad.json:1"),
                       InputError);
  // Wrong table length.
  std::string text = R"({"name":"x","size":2,
    "signature":[{"name":"f","arity":1}],
    "tables":{"f":[0]}})";
  CHECK_THROWS_WITH_AS(parse_algebra(text, "short.json"), doctest::Contains("f"), InputError);
  // Out-of-range entry named with its index.
  std::string range = R"({"name":"x","size":2,
    "signature":[{"name":"f","arity":1}],
    "tables":{"f":[0,5]}})";
  CHECK_THROWS_WITH_AS(parse_algebra(range, "range.json"), doctest::Contains("out of range"),
                       InputError);
}

TEST_CASE("quotient followed by canonical surjection is a homomorphism") {
  for (const auto& A : corpus::small_groups()) {
    if (A->size() > 6) continue;
    for (const Partition& theta : testutil::congruences_oracle(*A)) {
      Quotient q = quotient(*A, theta);
      std::vector<El> f(q.surjection.begin(), q.surjection.end());
      CHECK(is_homomorphism(*A, *q.algebra, f).ok);
    }
  }
}
