#include "sdw/lattice.hpp"

namespace sdw {

FiniteLattice::FiniteLattice(std::vector<std::vector<bool>> order) : leq_(std::move(order)) {
  int n = size();
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(leq_[static_cast<size_t>(a)].size()) != n)
      throw InputError("lattice: order matrix is not square");
    if (!leq_[static_cast<size_t>(a)][static_cast<size_t>(a)]) throw InputError("lattice: order not reflexive");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (leq(a, b) && leq(b, a) && a != b) throw InputError("lattice: order not antisymmetric");
      if (leq(a, b))
        for (int c = 0; c < n; ++c)
          if (leq(b, c) && !leq(a, c)) throw InputError("lattice: order not transitive");
    }

  join_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  meet_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lub = -1, glb = -1;
      for (int c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c) && (lub == -1 || leq(c, lub))) lub = c;
        if (leq(c, a) && leq(c, b) && (glb == -1 || leq(glb, c))) glb = c;
      }
      // Verify the candidates really bound every competitor.
      if (lub == -1 || glb == -1)
        throw InputError("lattice: missing join or meet");
      for (int c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c) && !leq(lub, c)) throw InputError("lattice: join not unique");
        if (leq(c, a) && leq(c, b) && !leq(c, glb)) throw InputError("lattice: meet not unique");
      }
      join_[static_cast<size_t>(a)][static_cast<size_t>(b)] = lub;
      meet_[static_cast<size_t>(a)][static_cast<size_t>(b)] = glb;
    }
}

std::vector<std::pair<int, int>> FiniteLattice::hasse_edges() const {
  std::vector<std::pair<int, int>> edges;
  int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

ModularityReport is_modular(const FiniteLattice& L) {
  int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!L.leq(a, c)) continue;
      for (int b = 0; b < n; ++b) {
        int lhs = L.join(a, L.meet(b, c));
        int rhs = L.meet(L.join(a, b), c);
        if (lhs == rhs) continue;
        // A failing instance of the modular law always yields a pentagon:
        // {b^c, b, a v (b^c), (a v b)^c, b v a}.
        PentagonWitness w;
        w.bottom = L.meet(b, c);
        w.side = b;
        w.lower = lhs;
        w.upper = rhs;
        w.top = L.join(b, a);
        return {false, w};
      }
    }
  return {true, std::nullopt};
}

}  // namespace sdw
