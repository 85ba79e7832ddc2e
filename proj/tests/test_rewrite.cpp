#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdw/monomial.hpp"
#include "sdw/rewrite.hpp"
#include "sdw/rng.hpp"
#include "sdw/vector_monoid.hpp"

using namespace sdw;

namespace {

// The three presentations of the two-generator free monoid example.
const char* kSigma = R"(
x y^i x = x y x : i >= 1
x^2 y^2 = x^2 y
y^2 x^2 = y x^2
)";
const char* kTau = R"(
y x^i y = y x y : i >= 1
y^2 x^2 = y^2 x
x^2 y^2 = x y^2
)";
const char* kRho = R"(
x y^2 x = x y x
y x^2 y = y x y
x^2 y^2 = x^2 y
y^2 x^2 = y x^2
y^2 x^2 = y^2 x
x^2 y^2 = x y^2
)";

bool single_step(const RewritePresentation& pres, const Word& a, const Word& b, int max_len) {
  for (const auto& [l, r] : pres.expand(max_len))
    for (int dir = 0; dir < 2; ++dir) {
      const Word& from = dir ? r : l;
      const Word& to = dir ? l : r;
      for (size_t pos = 0; pos + from.size() <= a.size(); ++pos) {
        if (a.compare(pos, from.size(), from) != 0) continue;
        if (a.substr(0, pos) + to + a.substr(pos + from.size()) == b) return true;
      }
    }
  return false;
}

}  // namespace

TEST_CASE("presentation parsing: families, literals, bounds") {
  RewritePresentation sigma = parse_presentation(kSigma);
  CHECK(sigma.families.size() == 3);
  CHECK(sigma.families[0].pumped());
  CHECK(sigma.families[0].lo == 1);
  CHECK_FALSE(sigma.families[1].pumped());
  CHECK(parse_word("xy^3x") == "xyyyx");
  CHECK(parse_word("x y x") == "xyx");

  auto expanded = sigma.expand(8);
  // xy^i x fits for i <= 6 within length 8.
  int pumped = 0;
  for (const auto& [l, r] : expanded)
    if (r == "xyx") ++pumped;
  CHECK(pumped == 6);
}

TEST_CASE("monoid_relate: the pumped family collapses under the finite set") {
  RewritePresentation rho = parse_presentation(kRho);
  RelateResult r = monoid_relate(rho, parse_word("xy^3x"), "xyx", {12, 1000000});
  REQUIRE(r.status == RelateResult::Status::related);
  // The path replays by single-factor replacements.
  for (size_t i = 0; i + 1 < r.path.size(); ++i)
    CHECK(single_step(rho, r.path[i], r.path[i + 1], 12));
  CHECK(r.path.front() == "xyyyx");
  CHECK(r.path.back() == "xyx");

  RelateResult refl = monoid_relate(rho, "xyx", "xyx", {12, 1000000});
  CHECK(refl.status == RelateResult::Status::related);
  CHECK(refl.path.size() == 1);
}

TEST_CASE("monoid_relate: sigma never relates x and y (count invariant), bounded answer") {
  RewritePresentation sigma = parse_presentation(kSigma);
  RelateResult r = monoid_relate(sigma, "x", "y", {12, 1000000});
  CHECK(r.status == RelateResult::Status::not_within_bounds);
  CHECK_FALSE(r.bound_hit.empty());
}

TEST_CASE("monoid_relate reports the state cap when it trips") {
  RewritePresentation sigma = parse_presentation(kSigma);
  RelateResult r = monoid_relate(sigma, parse_word("xy^3x"), "y", {12, 3});
  CHECK(r.status == RelateResult::Status::not_within_bounds);
  CHECK(r.bound_hit == "max_states");
}

TEST_CASE("related verdicts are closed under context within bounds") {
  RewritePresentation rho = parse_presentation(kRho);
  RelateResult base = monoid_relate(rho, parse_word("xy^3x"), "xyx", {12, 1000000});
  REQUIRE(base.status == RelateResult::Status::related);
  for (const Word& w : {Word("x"), Word("yx")}) {
    RelateResult ctx = monoid_relate(rho, w + parse_word("xy^3x"), w + Word("xyx"),
                                     {12, 1000000});
    CHECK(ctx.status == RelateResult::Status::related);
  }
}

TEST_CASE("check_cong_join_claim: the 6-pair set reaches every pumped generator") {
  RewritePresentation sigma = parse_presentation(kSigma);
  RewritePresentation tau = parse_presentation(kTau);
  RewritePresentation rho = parse_presentation(kRho);
  CongJoinClaimReport rep =
      check_cong_join_claim(sigma, tau, rho, 'x', 'y', 6, {12, 1000000}, 8);
  CHECK(rep.all_generators_related);
  CHECK(rep.unrelated.empty());
  CHECK(rep.sigma_invariant);
  CHECK(rep.tau_invariant);
  CHECK(rep.intersection_trivial);
  CHECK(rep.checked_generators >= 14);  // 6+2 sigma, 6+2 tau within bounds
}

TEST_CASE("bounded intersection detects overlap when presentations share a pair") {
  RewritePresentation sigma = parse_presentation(kSigma);
  CongJoinClaimReport rep =
      check_cong_join_claim(sigma, sigma, sigma, 'x', 'x', 3, {10, 100000}, 6);
  CHECK_FALSE(rep.intersection_trivial);
  CHECK_FALSE(rep.common_pairs.empty());
}

TEST_CASE("monomial membership in the two example ideals") {
  MonomialGenerators I = parse_monomial_generators(
      "x y^i x : i >= 1\nx^2 y^2\ny^2 x^2\ny x y\n");
  MonomialGenerators J = parse_monomial_generators(
      "y x^i y : i >= 1\ny^2 x^2\nx^2 y^2\nx y x\n");

  CHECK(monomial_ideal_member(I, parse_word("x^2y^2"), Sidedness::two_sided).member);
  CHECK(monomial_ideal_member(J, parse_word("x^2y^2"), Sidedness::two_sided).member);

  MembershipResult in_i = monomial_ideal_member(I, parse_word("xy^2x"), Sidedness::two_sided);
  CHECK(in_i.member);
  CHECK(in_i.witness->generator == "xyyx");
  CHECK_FALSE(monomial_ideal_member(J, parse_word("xy^2x"), Sidedness::two_sided).member);

  CHECK_FALSE(monomial_ideal_member(I, parse_word("x^5"), Sidedness::two_sided).member);
  CHECK_FALSE(monomial_ideal_member(J, parse_word("x^5"), Sidedness::two_sided).member);

  // xyx and yxy are in both (pump index 1 and the literal lists).
  for (const char* m : {"xyx", "yxy"}) {
    CHECK(monomial_ideal_member(I, m, Sidedness::two_sided).member);
    CHECK(monomial_ideal_member(J, m, Sidedness::two_sided).member);
  }
}

TEST_CASE("sided membership: prefixes for right submodules, suffixes for left") {
  // The two right submodules generated by x^i y and y^i x meet trivially.
  MonomialGenerators K = parse_monomial_generators("x^i y : i >= 1\n");
  MonomialGenerators L = parse_monomial_generators("y^i x : i >= 1\n");
  CHECK(monomial_ideal_member(K, parse_word("x^3yxy"), Sidedness::right).member);
  CHECK_FALSE(monomial_ideal_member(K, parse_word("yx^3y"), Sidedness::right).member);
  CHECK(monomial_ideal_member(L, parse_word("y^2xx"), Sidedness::right).member);

  // Two-sided membership would accept interior factors; right-sided must not.
  CHECK(monomial_ideal_member(K, parse_word("yx^2y"), Sidedness::two_sided).member);
  CHECK_FALSE(monomial_ideal_member(K, parse_word("yx^2y"), Sidedness::right).member);

  // Left-sided: generator as suffix.
  CHECK(monomial_ideal_member(K, parse_word("yx^2y"), Sidedness::left).member);
  CHECK_FALSE(monomial_ideal_member(K, parse_word("x^2yx"), Sidedness::left).member);

  // Bounded disjointness of the two right submodules.
  std::vector<Monomial> frontier{""};
  for (int d = 1; d <= 8; ++d) {
    std::vector<Monomial> next;
    for (const Monomial& w : frontier)
      for (char c : std::string("xy")) next.push_back(w + c);
    frontier = std::move(next);
    for (const Monomial& m : frontier)
      CHECK_FALSE((monomial_ideal_member(K, m, Sidedness::right).member &&
                   monomial_ideal_member(L, m, Sidedness::right).member));
  }
}

TEST_CASE("verify_intersection_generation: the four-element candidate set") {
  MonomialGenerators I = parse_monomial_generators(
      "x y^i x : i >= 1\nx^2 y^2\ny^2 x^2\ny x y\n");
  MonomialGenerators J = parse_monomial_generators(
      "y x^i y : i >= 1\ny^2 x^2\nx^2 y^2\nx y x\n");
  MonomialGenerators cand = parse_monomial_generators("x^2y^2\ny^2x^2\nxyx\nyxy\n");

  IntersectionReport rep = verify_intersection_generation(I, J, cand, 8);
  CHECK(rep.agree);
  CHECK(rep.checked == 510);

  // Dropping xyx breaks agreement exactly there.
  MonomialGenerators missing = parse_monomial_generators("x^2y^2\ny^2x^2\nyxy\n");
  IntersectionReport broken = verify_intersection_generation(I, J, missing, 3);
  CHECK_FALSE(broken.agree);
  REQUIRE_FALSE(broken.in_intersection_not_candidate.empty());
  CHECK(broken.in_intersection_not_candidate.front() == "xyx");

  // Degree 1: no monomial is in the intersection at all.
  IntersectionReport deg1 = verify_intersection_generation(I, J, cand, 1);
  CHECK(deg1.agree);
}

TEST_CASE("vector monoid: three-factor example generators") {
  VectorMonoidGenerators gens = parse_vector_generators(R"(
(1,0,3)
(1,3,0)
(0,1,3)
(0,3,1)
(3,0,1)
(3,1,0)
(0,2,n) : n >= 7
)");
  CHECK(gens.arity == 3);
  CHECK(gens.families.size() == 7);

  for (const PairSurjectivity& p : pair_surjectivity(gens, 40)) CHECK(p.certified);

  BoxedSubmonoid S(gens, 40);
  for (int n = 7; n <= 20; ++n) {
    Indecomposability ind = check_indecomposable(S, {0, 2, n});
    CHECK(ind.indecomposable);
  }
  Indecomposability dec = check_indecomposable(S, {0, 2, 6});
  CHECK_FALSE(dec.indecomposable);
  CHECK(dec.part1 == std::vector<int>{0, 1, 3});
  CHECK(dec.part2 == std::vector<int>{0, 1, 3});

  CHECK_THROWS_AS(check_indecomposable(S, {0, 2, 41}), InputError);
}

TEST_CASE("vector monoid: one-generator fiber pair as bounded evidence") {
  // {(1,1)} + families (i,1) and (1,j): the order-2 fiber example. Every
  // (i,1) is indecomposable, so no finite generating set suffices.
  VectorMonoidGenerators gens = parse_vector_generators("(n,1) : n >= 1\n(1,n) : n >= 1\n");
  BoxedSubmonoid S(gens, 20);
  CHECK(S.contains({1, 1}));
  CHECK(S.contains({5, 7}));
  CHECK_FALSE(S.contains({1, 0}));
  for (int i = 1; i <= 20; ++i) CHECK(check_indecomposable(S, {i, 1}).indecomposable);
  CHECK_FALSE(check_indecomposable(S, {2, 2}).indecomposable);
}
