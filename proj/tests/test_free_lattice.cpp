#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdw/corpus.hpp"
#include "sdw/free_lattice.hpp"
#include "sdw/rng.hpp"

using namespace sdw;

namespace {

int random_term(LatticeTermArena& arena, Rng& rng, int depth, int alphabet) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (depth == 0 || rng.below(3) == 0)
    return arena.generator(names[rng.below(static_cast<std::uint64_t>(alphabet))]);
  int l = random_term(arena, rng, depth - 1, alphabet);
  int r = random_term(arena, rng, depth - 1, alphabet);
  return rng.below(2) ? arena.meet2(l, r) : arena.join2(l, r);
}

}  // namespace

TEST_CASE("whitman_leq: base comparisons") {
  LatticeTermArena arena;
  WhitmanSolver w(arena);
  int x = arena.generator("x"), y = arena.generator("y"), z = arena.generator("z");
  CHECK(w.leq(arena.meet2(x, y), x));
  int x1 = arena.join2(x, arena.meet2(y, z));
  CHECK(w.leq(x, x1));
  CHECK_FALSE(w.leq(x1, x));
  // x1 /\ y1 is not below x: generators are meet prime.
  int y1 = arena.join2(y, arena.meet2(x, z));
  CHECK_FALSE(w.leq(arena.meet2(x1, y1), x));
}

TEST_CASE("lattice term parsing, canonical form, printing") {
  LatticeTermArena arena;
  int p = arena.parse("x /\\ (y \\/ z)");
  int q = arena.parse("(z \\/ y) /\\ x");
  CHECK(p == q);  // AC-canonical interning
  int flat = arena.parse("x \\/ y \\/ z");
  int nested = arena.parse("(x \\/ y) \\/ z");
  CHECK(flat == nested);
  CHECK(arena.parse(arena.to_string(p)) == p);
  CHECK_THROWS_AS(arena.parse("x /\\"), InputError);
}

TEST_CASE("whitman_leq is reflexive and transitive on random terms") {
  LatticeTermArena arena;
  WhitmanSolver w(arena);
  Rng rng(5150);
  std::vector<int> terms;
  for (int i = 0; i < 40; ++i) terms.push_back(random_term(arena, rng, 5, 4));
  for (int p : terms) CHECK(w.leq(p, p));
  for (int p : terms)
    for (int q : terms)
      for (int r : terms)
        if (w.leq(p, q) && w.leq(q, r)) CHECK(w.leq(p, r));
}

TEST_CASE("whitman_leq is antisymmetric up to canonical equality") {
  LatticeTermArena arena;
  WhitmanSolver w(arena);
  Rng rng(99);
  std::vector<int> terms;
  for (int i = 0; i < 60; ++i) terms.push_back(random_term(arena, rng, 4, 3));
  // Mutual <= means equal in the free lattice; canonical ids may differ
  // (e.g. absorption), so check semantic coincidence against both orders.
  for (int p : terms)
    for (int q : terms)
      if (w.leq(p, q) && w.leq(q, p))
        for (int r : terms) {
          CHECK(w.leq(p, r) == w.leq(q, r));
          CHECK(w.leq(r, p) == w.leq(r, q));
        }
}

TEST_CASE("whitman_leq is sound for every assignment into small lattices") {
  LatticeTermArena arena;
  WhitmanSolver w(arena);
  Rng rng(31337);
  std::vector<int> terms;
  for (int i = 0; i < 25; ++i) terms.push_back(random_term(arena, rng, 4, 3));
  std::vector<AlgebraPtr> lattices = {corpus::two_chain_lattice(), corpus::diamond_m3(),
                                      corpus::pentagon_n5()};
  for (const auto& L : lattices) {
    auto reduct = find_lattice_reduct(*L);
    REQUIRE(reduct.has_value());
    int n = L->size();
    for (int p : terms)
      for (int q : terms) {
        if (!w.leq(p, q)) continue;
        // Exhaust all assignments of the 3 generators.
        for (El a = 0; a < n; ++a)
          for (El b = 0; b < n; ++b)
            for (El c = 0; c < n; ++c) {
              std::vector<El> assign{a, b, c};
              El vp = lattice_eval(arena, p, *L, assign);
              El vq = lattice_eval(arena, q, *L, assign);
              CHECK(L->apply2(reduct->meet, vp, vq) == vp);
            }
      }
  }
}

TEST_CASE("generators are meet prime") {
  LatticeTermArena arena;
  WhitmanSolver w(arena);
  Rng rng(404);
  std::vector<int> gens{arena.generator("x"), arena.generator("y"), arena.generator("z")};
  for (int i = 0; i < 300; ++i) {
    int p1 = random_term(arena, rng, 4, 3);
    int p2 = random_term(arena, rng, 4, 3);
    for (int g : gens)
      if (w.leq(arena.meet2(p1, p2), g)) CHECK((w.leq(p1, g) || w.leq(p2, g)));
  }
}

TEST_CASE("xyz_sequence: base case and unrolled steps") {
  LatticeTermArena arena;
  XyzTriple t0 = xyz_sequence(arena, 0);
  CHECK(arena.to_string(t0.x) == "x");
  XyzTriple t1 = xyz_sequence(arena, 1);
  CHECK(t1.x == arena.parse("x \\/ (y /\\ z)"));
  XyzTriple t2 = xyz_sequence(arena, 2);
  CHECK(t2.x == arena.parse("x \\/ ((y \\/ (x /\\ z)) /\\ (z \\/ (x /\\ y)))"));
}

TEST_CASE("diamond homomorphism fixes the generators' images along the sequence") {
  LatticeTermArena arena;
  auto m3 = corpus::diamond_m3();
  // x -> a=1, y -> b=2, z -> c=3.
  std::vector<El> phi{1, 2, 3};
  for (int n = 0; n <= 8; ++n) {
    XyzTriple t = xyz_sequence(arena, n);
    CHECK(lattice_eval(arena, t.x, *m3, phi) == 1);
    CHECK(lattice_eval(arena, t.y, *m3, phi) == 2);
    CHECK(lattice_eval(arena, t.z, *m3, phi) == 3);
  }
  int x = arena.generator("x"), y = arena.generator("y");
  CHECK(lattice_eval(arena, arena.meet2(x, y), *m3, phi) == 0);
  CHECK(lattice_eval(arena, arena.join2(x, y), *m3, phi) == 4);
}

TEST_CASE("the xyz chain is strictly increasing and escapes meets: claims at n <= 6") {
  LatticeTermArena arena;
  WhitmanSolver w(arena);
  std::vector<XyzTriple> seq;
  for (int n = 0; n <= 7; ++n) seq.push_back(xyz_sequence(arena, n));

  // (c) strict increase.
  for (int n = 0; n <= 6; ++n) {
    CHECK(w.leq(seq[static_cast<size_t>(n)].x, seq[static_cast<size_t>(n + 1)].x));
    CHECK_FALSE(w.leq(seq[static_cast<size_t>(n + 1)].x, seq[static_cast<size_t>(n)].x));
  }
  // (b) x_n incomparable with y_m and z_m.
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m) {
      CHECK_FALSE(w.leq(seq[static_cast<size_t>(n)].x, seq[static_cast<size_t>(m)].y));
      CHECK_FALSE(w.leq(seq[static_cast<size_t>(m)].y, seq[static_cast<size_t>(n)].x));
      CHECK_FALSE(w.leq(seq[static_cast<size_t>(n)].x, seq[static_cast<size_t>(m)].z));
      CHECK_FALSE(w.leq(seq[static_cast<size_t>(m)].z, seq[static_cast<size_t>(n)].x));
    }
  // (d) x_{n+1} /\ y_{n+1} stays above no x_m for m <= n.
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) {
      int meet_xy = arena.meet2(seq[static_cast<size_t>(n + 1)].x, seq[static_cast<size_t>(n + 1)].y);
      CHECK_FALSE(w.leq(meet_xy, seq[static_cast<size_t>(m)].x));
    }
}
