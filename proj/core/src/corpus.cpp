#include "sdw/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "sdw/product.hpp"

namespace sdw::corpus {

namespace {

AlgebraPtr rename(const DirectProduct& p, const std::string& name) {
  const FiniteAlgebra& a = *p.algebra;
  std::vector<std::vector<El>> tables;
  for (int op = 0; op < a.signature().size(); ++op) tables.push_back(a.table(op));
  return std::make_shared<FiniteAlgebra>(name, a.size(), a.signature(), std::move(tables));
}

}  // namespace

AlgebraPtr make_group(const std::string& name, int n, const std::function<El(El, El)>& mul) {
  std::vector<El> mul_table(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (El a = 0; a < n; ++a)
    for (El b = 0; b < n; ++b) mul_table[static_cast<size_t>(a * n + b)] = mul(a, b);
  // Locate the identity, then invert.
  El e = -1;
  for (El c = 0; c < n && e < 0; ++c) {
    bool ident = true;
    for (El a = 0; a < n; ++a)
      if (mul(c, a) != a || mul(a, c) != a) ident = false;
    if (ident) e = c;
  }
  if (e < 0) throw InputError("make_group: no identity element in '" + name + "'");
  std::vector<El> inv_table(static_cast<size_t>(n), -1);
  for (El a = 0; a < n; ++a)
    for (El b = 0; b < n; ++b)
      if (mul(a, b) == e && mul(b, a) == e) inv_table[static_cast<size_t>(a)] = b;
  for (El a = 0; a < n; ++a)
    if (inv_table[static_cast<size_t>(a)] < 0)
      throw InputError("make_group: missing inverse in '" + name + "'");
  Signature sig({{"mul", 2}, {"inv", 1}, {"e", 0}});
  return std::make_shared<FiniteAlgebra>(
      name, n, sig,
      std::vector<std::vector<El>>{std::move(mul_table), std::move(inv_table), {e}});
}

AlgebraPtr cyclic_group(int n) {
  return make_group("z" + std::to_string(n), n, [n](El a, El b) { return (a + b) % n; });
}

AlgebraPtr cyclic_group_no_inverse(int n) {
  std::vector<El> add(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (El a = 0; a < n; ++a)
    for (El b = 0; b < n; ++b) add[static_cast<size_t>(a * n + b)] = (a + b) % n;
  Signature sig({{"add", 2}, {"zero", 0}});
  return std::make_shared<FiniteAlgebra>("z" + std::to_string(n) + "_add", n, sig,
                                         std::vector<std::vector<El>>{std::move(add), {0}});
}

AlgebraPtr klein_group() {
  return rename(direct_product({cyclic_group(2), cyclic_group(2)}), "v4");
}

namespace {

// Permutations of {0,1,2} in lexicographic one-line order:
// 012, 021, 102, 120, 201, 210.
const std::array<std::array<El, 3>, 6> kS3Perms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

int s3_compose(int f, int g) {
  // (f*g)(x) = f(g(x))
  std::array<El, 3> h{};
  for (int x = 0; x < 3; ++x) h[static_cast<size_t>(x)] = kS3Perms[static_cast<size_t>(f)][static_cast<size_t>(kS3Perms[static_cast<size_t>(g)][static_cast<size_t>(x)])];
  for (int i = 0; i < 6; ++i)
    if (kS3Perms[static_cast<size_t>(i)] == h) return i;
  return -1;
}

}  // namespace

AlgebraPtr symmetric3() {
  return make_group("s3", 6, [](El a, El b) { return static_cast<El>(s3_compose(a, b)); });
}

std::vector<El> s3_even_permutations() { return {0, 3, 4}; }

std::vector<int> s3_signs() { return {0, 1, 1, 0, 0, 1}; }

AlgebraPtr dihedral4() {
  // Elements r^i s^j with index i + 4j.
  return make_group("d4", 8, [](El a, El b) {
    int i = a % 4, j = a / 4, k = b % 4, l = b / 4;
    int rot = j ? (i - k + 8) % 4 : (i + k) % 4;
    return static_cast<El>(rot + 4 * ((j + l) % 2));
  });
}

AlgebraPtr quaternion8() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k.
  static const int table[8][8] = {
      {0, 1, 2, 3, 4, 5, 6, 7},  // 1
      {1, 0, 3, 2, 5, 4, 7, 6},  // -1
      {2, 3, 1, 0, 6, 7, 5, 4},  // i   (i*i=-1, i*j=k, i*k=-j)
      {3, 2, 0, 1, 7, 6, 4, 5},  // -i
      {4, 5, 7, 6, 1, 0, 2, 3},  // j   (j*i=-k, j*j=-1, j*k=i)
      {5, 4, 6, 7, 0, 1, 3, 2},  // -j
      {6, 7, 4, 5, 3, 2, 1, 0},  // k   (k*i=j, k*j=-i, k*k=-1)
      {7, 6, 5, 4, 2, 3, 0, 1},  // -k
  };
  return make_group("q8", 8, [](El a, El b) { return static_cast<El>(table[a][b]); });
}

AlgebraPtr z4xz2() { return rename(direct_product({cyclic_group(4), cyclic_group(2)}), "z4xz2"); }

AlgebraPtr z2cubed() {
  return rename(direct_product({cyclic_group(2), cyclic_group(2), cyclic_group(2)}), "z2xz2xz2");
}

AlgebraPtr ring_zn(int n) {
  std::vector<El> add(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<El> neg(static_cast<size_t>(n));
  std::vector<El> mul(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (El a = 0; a < n; ++a) {
    neg[static_cast<size_t>(a)] = static_cast<El>((n - a) % n);
    for (El b = 0; b < n; ++b) {
      add[static_cast<size_t>(a * n + b)] = static_cast<El>((a + b) % n);
      mul[static_cast<size_t>(a * n + b)] = static_cast<El>((a * b) % n);
    }
  }
  Signature sig({{"add", 2}, {"neg", 1}, {"zero", 0}, {"mul", 2}});
  return std::make_shared<FiniteAlgebra>(
      "ring_z" + std::to_string(n), n, sig,
      std::vector<std::vector<El>>{std::move(add), std::move(neg), {0}, std::move(mul)});
}

AlgebraPtr ring_z2xz2() { return rename(direct_product({ring_zn(2), ring_zn(2)}), "ring_z2xz2"); }

AlgebraPtr ring_ut2_z2() {
  // Matrices [[a,b],[0,c]] over Z2, index = 4a + 2b + c.
  auto unpack = [](El m, int& a, int& b, int& c) {
    a = (m >> 2) & 1;
    b = (m >> 1) & 1;
    c = m & 1;
  };
  int n = 8;
  std::vector<El> add(64), mul(64), neg(8);
  for (El x = 0; x < n; ++x) {
    neg[static_cast<size_t>(x)] = x;  // characteristic 2
    for (El y = 0; y < n; ++y) {
      int a, b, c, d, e2, f;
      unpack(x, a, b, c);
      unpack(y, d, e2, f);
      add[static_cast<size_t>(x * 8 + y)] = static_cast<El>(((a ^ d) << 2) | ((b ^ e2) << 1) | (c ^ f));
      int pa = a & d, pb = (a & e2) ^ (b & f), pc = c & f;
      mul[static_cast<size_t>(x * 8 + y)] = static_cast<El>((pa << 2) | (pb << 1) | pc);
    }
  }
  Signature sig({{"add", 2}, {"neg", 1}, {"zero", 0}, {"mul", 2}});
  return std::make_shared<FiniteAlgebra>(
      "ring_ut2_z2", n, sig,
      std::vector<std::vector<El>>{std::move(add), std::move(neg), {0}, std::move(mul)});
}

namespace {

AlgebraPtr lattice_from_order(const std::string& name, int n,
                              const std::function<bool(El, El)>& leq) {
  std::vector<El> meet_t(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<El> join_t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (El a = 0; a < n; ++a)
    for (El b = 0; b < n; ++b) {
      El glb = -1, lub = -1;
      for (El c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b) && (glb == -1 || leq(glb, c))) glb = c;
        if (leq(a, c) && leq(b, c) && (lub == -1 || leq(c, lub))) lub = c;
      }
      meet_t[static_cast<size_t>(a * n + b)] = glb;
      join_t[static_cast<size_t>(a * n + b)] = lub;
    }
  Signature sig({{"meet", 2}, {"join", 2}});
  return std::make_shared<FiniteAlgebra>(
      name, n, sig, std::vector<std::vector<El>>{std::move(meet_t), std::move(join_t)});
}

}  // namespace

AlgebraPtr two_chain_lattice() {
  return lattice_from_order("lat2", 2, [](El a, El b) { return a <= b; });
}

AlgebraPtr meet_semilattice2() {
  std::vector<El> meet_t = {0, 0, 0, 1};
  Signature sig({{"meet", 2}});
  return std::make_shared<FiniteAlgebra>("semilat2", 2, sig,
                                         std::vector<std::vector<El>>{std::move(meet_t)});
}

AlgebraPtr diamond_m3() {
  // 0 = bottom, 1 = a, 2 = b, 3 = c, 4 = top.
  return lattice_from_order("m3", 5, [](El a, El b) {
    if (a == b || a == 0 || b == 4) return true;
    return false;
  });
}

AlgebraPtr pentagon_n5() {
  // 0 < 1 < 2 < 4 and 0 < 3 < 4; 3 incomparable with 1, 2.
  return lattice_from_order("n5", 5, [](El a, El b) {
    if (a == b || a == 0 || b == 4) return true;
    if (a == 1 && b == 2) return true;
    return false;
  });
}

AlgebraPtr bool_and_monoid() {
  std::vector<El> mul = {0, 0, 0, 1};
  Signature sig({{"mul", 2}, {"e", 0}});
  return std::make_shared<FiniteAlgebra>("bool_and", 2, sig,
                                         std::vector<std::vector<El>>{std::move(mul), {1}});
}

std::vector<AlgebraPtr> small_groups() {
  return {cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_group(),
          cyclic_group(5), cyclic_group(6), symmetric3(),    cyclic_group(7),
          cyclic_group(8), z4xz2(),         z2cubed(),       dihedral4(),
          quaternion8()};
}

std::vector<AlgebraPtr> small_rings() {
  return {ring_zn(4), ring_zn(8), ring_z2xz2(), ring_ut2_z2()};
}

}  // namespace sdw::corpus
