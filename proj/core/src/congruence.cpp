#include "sdw/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sdw {

Congruence::Congruence(AlgebraPtr algebra, Partition part)
    : algebra_(std::move(algebra)), part_(std::move(part)) {
  if (!algebra_) throw InputError("congruence: null algebra");
  if (part_.size() != algebra_->size()) throw InputError("congruence: partition size mismatch");
  if (auto v = compatibility_violation(*algebra_, part_))
    throw InputError("congruence: partition is not compatible with operation '" +
                     algebra_->signature().name(v->op) + "'");
}

Partition cg(const FiniteAlgebra& A, const std::vector<std::pair<El, El>>& pairs,
             const Partition* seed, const Caps& caps) {
  int n = A.size();
  UnionFind uf(n);
  std::deque<std::pair<El, El>> work;
  auto push_union = [&](El a, El b) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("cg: pair element out of carrier");
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  if (seed) {
    if (seed->size() != n) throw InputError("cg: seed size mismatch");
    for (El x = 0; x < n; ++x) push_union(x, seed->rep(x));
  }
  // Process generator pairs in lexicographic (min,max) order.
  std::vector<std::pair<El, El>> sorted;
  sorted.reserve(pairs.size());
  for (auto [a, b] : pairs) sorted.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(sorted.begin(), sorted.end());
  for (auto [a, b] : sorted) push_union(a, b);

  const Signature& sig = A.signature();
  std::int64_t steps = 0;
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    for (int op = 0; op < sig.size(); ++op) {
      int r = sig.arity(op);
      if (r == 0) continue;
      // For every position and every choice of remaining arguments, relate
      // the two translated values.
      std::vector<El> args(static_cast<size_t>(r), 0);
      for (int p = 0; p < r; ++p) {
        std::fill(args.begin(), args.end(), 0);
        while (true) {
          args[static_cast<size_t>(p)] = u;
          El image_u = A.apply(op, args);
          args[static_cast<size_t>(p)] = v;
          El image_v = A.apply(op, args);
          push_union(image_u, image_v);
          if (++steps > caps.cg_step_budget)
            throw BoundError("cg_step_budget", "cg: step budget exhausted on '" + A.name() + "'");
          // Advance the remaining arguments (skip position p).
          int i = r - 1;
          while (i >= 0) {
            if (i == p) {
              --i;
              continue;
            }
            if (args[static_cast<size_t>(i)] < n - 1) {
              ++args[static_cast<size_t>(i)];
              break;
            }
            args[static_cast<size_t>(i)] = 0;
            --i;
          }
          if (i < 0) break;
        }
      }
    }
  }
  return uf.to_partition();
}

bool permute(const Partition& theta1, const Partition& theta2) {
  if (theta1.size() != theta2.size()) throw InputError("permute: size mismatch");
  int n = theta1.size();
  // (x,z) in theta1 o theta2 iff some y has theta1(x,y) and theta2(y,z);
  // equivalently the theta2-block of z meets the theta1-block of x.
  std::vector<int> b1 = theta1.block_index();
  std::vector<int> b2 = theta2.block_index();
  int n1 = theta1.block_count(), n2 = theta2.block_count();
  std::vector<char> meets12(static_cast<size_t>(n1) * static_cast<size_t>(n2), 0);
  for (El y = 0; y < n; ++y)
    meets12[static_cast<size_t>(b1[static_cast<size_t>(y)]) * static_cast<size_t>(n2) +
            static_cast<size_t>(b2[static_cast<size_t>(y)])] = 1;
  // theta1 o theta2 contains (x,z) iff meets12[b1(x)][b2(z)];
  // theta2 o theta1 contains (x,z) iff meets12[b1(z)][b2(x)].
  for (El x = 0; x < n; ++x)
    for (El z = 0; z < n; ++z) {
      bool fwd = meets12[static_cast<size_t>(b1[static_cast<size_t>(x)]) * static_cast<size_t>(n2) +
                         static_cast<size_t>(b2[static_cast<size_t>(z)])] != 0;
      bool bwd = meets12[static_cast<size_t>(b1[static_cast<size_t>(z)]) * static_cast<size_t>(n2) +
                         static_cast<size_t>(b2[static_cast<size_t>(x)])] != 0;
      if (fwd != bwd) return false;
    }
  return true;
}

int CongruenceLattice::index_of(const Partition& p) const {
  for (size_t i = 0; i < congruences.size(); ++i)
    if (congruences[i] == p) return static_cast<int>(i);
  return -1;
}

CongruenceLattice con_lattice(const FiniteAlgebra& A, const Caps& caps) {
  int n = A.size();
  std::vector<Partition> found;
  std::map<std::vector<El>, int> seen;
  auto add = [&](const Partition& p) -> bool {
    auto [it, fresh] = seen.emplace(p.rep_map(), static_cast<int>(found.size()));
    (void)it;
    if (fresh) {
      found.push_back(p);
      if (static_cast<std::int64_t>(found.size()) > caps.max_congruences)
        throw BoundError("max_congruences",
                         "con_lattice: more than " + std::to_string(caps.max_congruences) +
                             " congruences on '" + A.name() + "'");
    }
    return fresh;
  };

  add(Partition::zero(n));
  // All principal congruences.
  std::vector<Partition> principals;
  for (El a = 0; a < n; ++a)
    for (El b = a + 1; b < n; ++b) {
      Partition p = cg(A, {{a, b}}, nullptr, caps);
      if (add(p)) principals.push_back(p);
    }
  // Close under binary joins. Every congruence is a join of principal
  // congruences, so this reaches all of them.
  std::deque<int> work;
  for (size_t i = 0; i < found.size(); ++i) work.push_back(static_cast<int>(i));
  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    size_t count = found.size();
    for (size_t j = 0; j < count; ++j) {
      Partition joined = join(found[static_cast<size_t>(i)], found[j]);
      if (add(joined)) work.push_back(static_cast<int>(found.size()) - 1);
    }
  }

  // Canonical order: finer congruences first.
  std::sort(found.begin(), found.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a < b;
  });

  int m = static_cast<int>(found.size());
  std::vector<std::vector<bool>> leq(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          found[static_cast<size_t>(i)].refines(found[static_cast<size_t>(j)]);

  CongruenceLattice out;
  out.congruences = std::move(found);
  out.lattice = FiniteLattice(std::move(leq));
  out.hasse_edges = out.lattice.hasse_edges();
  return out;
}

std::vector<std::pair<El, El>> generating_pairs(const FiniteAlgebra& A, const Partition& theta,
                                                const Caps& caps) {
  std::vector<std::pair<El, El>> gens;
  Partition current = Partition::zero(A.size());
  while (current != theta) {
    // First pair (lexicographic) related by theta but not yet generated.
    bool advanced = false;
    for (El a = 0; a < A.size() && !advanced; ++a)
      for (El b = a + 1; b < A.size() && !advanced; ++b)
        if (theta.same_block(a, b) && !current.same_block(a, b)) {
          gens.emplace_back(a, b);
          current = cg(A, gens, nullptr, caps);
          advanced = true;
        }
    if (!advanced)
      throw InputError("generating_pairs: target is not a congruence above the generated one");
    if (!current.refines(theta))
      throw InputError("generating_pairs: input partition is not a congruence");
  }
  return gens;
}

Partition project_partition(const Partition& theta, const std::vector<El>& map,
                            int codomain_size) {
  if (static_cast<int>(map.size()) != theta.size())
    throw InputError("project_partition: map size mismatch");
  UnionFind uf(codomain_size);
  for (El x = 0; x < theta.size(); ++x)
    uf.unite(map[static_cast<size_t>(x)], map[static_cast<size_t>(theta.rep(x))]);
  return uf.to_partition();
}

}  // namespace sdw
