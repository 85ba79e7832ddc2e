#include "sdw/reduct.hpp"

#include <algorithm>

namespace sdw {

namespace {

bool associative(const FiniteAlgebra& A, int op) {
  int n = A.size();
  for (El a = 0; a < n; ++a)
    for (El b = 0; b < n; ++b)
      for (El c = 0; c < n; ++c)
        if (A.apply2(op, A.apply2(op, a, b), c) != A.apply2(op, a, A.apply2(op, b, c)))
          return false;
  return true;
}

bool commutative(const FiniteAlgebra& A, int op) {
  int n = A.size();
  for (El a = 0; a < n; ++a)
    for (El b = a + 1; b < n; ++b)
      if (A.apply2(op, a, b) != A.apply2(op, b, a)) return false;
  return true;
}

El two_sided_identity(const FiniteAlgebra& A, int op) {
  int n = A.size();
  for (El e = 0; e < n; ++e) {
    bool ok = true;
    for (El a = 0; a < n && ok; ++a)
      if (A.apply2(op, e, a) != a || A.apply2(op, a, e) != a) ok = false;
    if (ok) return e;
  }
  return -1;
}

bool gives_inverses(const FiniteAlgebra& A, int op, int inv, El e) {
  int n = A.size();
  for (El a = 0; a < n; ++a) {
    El b = A.apply1(inv, a);
    if (A.apply2(op, a, b) != e || A.apply2(op, b, a) != e) return false;
  }
  return true;
}

}  // namespace

std::optional<GroupReduct> find_group_reduct(const FiniteAlgebra& A) {
  const Signature& sig = A.signature();
  for (int m = 0; m < sig.size(); ++m) {
    if (sig.arity(m) != 2 || !associative(A, m)) continue;
    El e = two_sided_identity(A, m);
    if (e < 0) continue;
    for (int u = 0; u < sig.size(); ++u) {
      if (sig.arity(u) != 1 || !gives_inverses(A, m, u, e)) continue;
      GroupReduct g;
      g.mul = m;
      g.inv = u;
      g.identity = e;
      g.abelian = commutative(A, m);
      return g;
    }
  }
  return std::nullopt;
}

std::optional<RingReduct> find_ring_reduct(const FiniteAlgebra& A) {
  const Signature& sig = A.signature();
  int n = A.size();
  for (int add = 0; add < sig.size(); ++add) {
    if (sig.arity(add) != 2 || !associative(A, add) || !commutative(A, add)) continue;
    El zero = two_sided_identity(A, add);
    if (zero < 0) continue;
    for (int neg = 0; neg < sig.size(); ++neg) {
      if (sig.arity(neg) != 1 || !gives_inverses(A, add, neg, zero)) continue;
      for (int mul = 0; mul < sig.size(); ++mul) {
        if (mul == add || sig.arity(mul) != 2 || !associative(A, mul)) continue;
        bool distributive = true;
        for (El a = 0; a < n && distributive; ++a)
          for (El b = 0; b < n && distributive; ++b)
            for (El c = 0; c < n && distributive; ++c) {
              if (A.apply2(mul, a, A.apply2(add, b, c)) !=
                  A.apply2(add, A.apply2(mul, a, b), A.apply2(mul, a, c)))
                distributive = false;
              if (A.apply2(mul, A.apply2(add, b, c), a) !=
                  A.apply2(add, A.apply2(mul, b, a), A.apply2(mul, c, a)))
                distributive = false;
            }
        if (!distributive) continue;
        return RingReduct{add, neg, mul, zero};
      }
    }
  }
  return std::nullopt;
}

namespace {

bool lattice_pair(const FiniteAlgebra& A, int m, int j) {
  int n = A.size();
  for (El a = 0; a < n; ++a) {
    if (A.apply2(m, a, a) != a || A.apply2(j, a, a) != a) return false;
    for (El b = 0; b < n; ++b) {
      if (A.apply2(m, a, A.apply2(j, a, b)) != a) return false;
      if (A.apply2(j, a, A.apply2(m, a, b)) != a) return false;
    }
  }
  return associative(A, m) && associative(A, j) && commutative(A, m) && commutative(A, j);
}

bool name_suggests_meet(const std::string& s) {
  return s == "meet" || s == "and" || s == "min" || s == "wedge" || s == "inf";
}
bool name_suggests_join(const std::string& s) {
  return s == "join" || s == "or" || s == "max" || s == "vee" || s == "sup";
}

}  // namespace

std::optional<LatticeReduct> find_lattice_reduct(const FiniteAlgebra& A) {
  const Signature& sig = A.signature();
  std::vector<std::pair<int, int>> candidates;
  for (int m = 0; m < sig.size(); ++m)
    for (int j = 0; j < sig.size(); ++j) {
      if (m == j || sig.arity(m) != 2 || sig.arity(j) != 2) continue;
      if (lattice_pair(A, m, j)) candidates.emplace_back(m, j);
    }
  if (candidates.empty()) return std::nullopt;
  for (auto [m, j] : candidates)
    if (name_suggests_meet(sig.name(m)) || name_suggests_join(sig.name(j)))
      return LatticeReduct{m, j};
  auto [m, j] = candidates.front();
  return LatticeReduct{m, j};
}

}  // namespace sdw
