#include "sdw/commutator.hpp"

#include <algorithm>
#include <numeric>

#include <deque>

#include "sdw/closure.hpp"
#include "sdw/congruence.hpp"
#include "sdw/malcev.hpp"

namespace sdw {

namespace {

void check_alphas(const FiniteAlgebra& A, const std::vector<Partition>& alphas, const Caps& caps) {
  if (alphas.empty()) throw InputError("commutator: at least one congruence required");
  if (static_cast<int>(alphas.size()) > caps.max_cube_arity)
    throw BoundError("max_cube_arity", "commutator: arity " + std::to_string(alphas.size()) +
                                           " exceeds cap " + std::to_string(caps.max_cube_arity));
  for (const Partition& a : alphas)
    if (a.size() != A.size()) throw InputError("commutator: congruence size mismatch");
}

}  // namespace

std::vector<CubeFunction> cube_generators(const FiniteAlgebra& A, int k,
                                          const std::vector<Partition>& alphas, const Caps& caps) {
  if (k != static_cast<int>(alphas.size()))
    throw InputError("cube_generators: k must match the number of congruences");
  check_alphas(A, alphas, caps);
  int n = A.size();
  unsigned m = 1u << k;
  std::vector<CubeFunction> out;
  for (int i = 1; i <= k; ++i) {
    const Partition& alpha = alphas[static_cast<size_t>(i - 1)];
    for (El a = 0; a < n; ++a)
      for (El b = 0; b < n; ++b) {
        if (!alpha.same_block(a, b)) continue;
        CubeFunction f;
        f.k = k;
        f.values.resize(m);
        for (unsigned bits = 0; bits < m; ++bits) {
          bool xi = (bits >> (k - i)) & 1u;  // x_1 is the most significant bit
          f.values[bits] = xi ? b : a;
        }
        out.push_back(std::move(f));
      }
  }
  return out;
}

namespace {

/// Packed closure in A^{2^k} for |A| <= 255 and k <= 3: one byte per
/// coordinate inside a uint64. Membership via a bitset over the mixed-radix
/// universe when it fits, else an open-addressing hash set.
class PackedCubeClosure {
 public:
  PackedCubeClosure(const FiniteAlgebra& A, int ncoords, std::int64_t cap)
      : A_(A), n_(A.size()), ncoords_(ncoords), cap_(cap) {
    // Bitset membership only while the universe stays around 32 MB.
    std::int64_t universe = 1;
    bool fits = true;
    for (int c = 0; c < ncoords_; ++c) {
      if (universe > (std::int64_t(1) << 28) / n_) {
        fits = false;
        break;
      }
      universe *= n_;
    }
    use_bitset_ = fits && universe <= (std::int64_t(1) << 28);
    if (use_bitset_)
      bits_.assign(static_cast<size_t>((universe + 63) / 64), 0);
    else
      slots_.assign(1 << 14, kEmpty);
  }

  // Returns true if the element was new.
  bool insert(std::uint64_t packed) {
    if (use_bitset_) {
      std::int64_t idx = 0;
      for (int c = ncoords_ - 1; c >= 0; --c)
        idx = idx * n_ + static_cast<std::int64_t>((packed >> (8 * c)) & 0xff);
      std::uint64_t& word = bits_[static_cast<size_t>(idx >> 6)];
      std::uint64_t mask = 1ULL << (idx & 63);
      if (word & mask) return false;
      word |= mask;
    } else {
      if ((hash_count_ + 1) * 10 > slots_.size() * 7) grow();
      size_t mask = slots_.size() - 1;
      std::uint64_t h = packed * 0x9e3779b97f4a7c15ULL;
      h ^= h >> 29;
      size_t pos = static_cast<size_t>(h) & mask;
      while (slots_[pos] != kEmpty) {
        if (slots_[pos] == packed) return false;
        pos = (pos + 1) & mask;
      }
      slots_[pos] = packed;
      ++hash_count_;
    }
    elements_.push_back(packed);
    return true;
  }

  std::uint64_t apply1(int op, std::uint64_t x) const {
    const std::vector<El>& t = A_.table(op);
    std::uint64_t r = 0;
    for (int c = 0; c < ncoords_; ++c)
      r |= static_cast<std::uint64_t>(t[static_cast<size_t>((x >> (8 * c)) & 0xff)]) << (8 * c);
    return r;
  }
  std::uint64_t apply2(int op, std::uint64_t x, std::uint64_t y) const {
    const std::vector<El>& t = A_.table(op);
    std::uint64_t r = 0;
    std::size_t n = static_cast<std::size_t>(n_);
    for (int c = 0; c < ncoords_; ++c) {
      std::size_t a = static_cast<std::size_t>((x >> (8 * c)) & 0xff);
      std::size_t b = static_cast<std::size_t>((y >> (8 * c)) & 0xff);
      r |= static_cast<std::uint64_t>(t[a * n + b]) << (8 * c);
    }
    return r;
  }

  /// Runs the worklist closure; returns false when the cap was exhausted.
  bool run() {
    const Signature& sig = A_.signature();
    // Constants.
    for (int op = 0; op < sig.size(); ++op) {
      if (sig.arity(op) != 0) continue;
      std::uint64_t v = 0;
      for (int c = 0; c < ncoords_; ++c)
        v |= static_cast<std::uint64_t>(A_.apply0(op)) << (8 * c);
      if (insert(v) && over_cap()) return false;
    }
    std::vector<El> scratch(static_cast<size_t>(ncoords_));
    for (size_t t = 0; t < elements_.size(); ++t) {
      std::uint64_t u = elements_[t];
      for (int op = 0; op < sig.size(); ++op) {
        int r = sig.arity(op);
        if (r == 0) continue;
        if (r == 1) {
          if (insert(apply1(op, u)) && over_cap()) return false;
        } else if (r == 2) {
          for (size_t j = 0; j <= t; ++j) {
            std::uint64_t v = elements_[j];
            if (insert(apply2(op, u, v)) && over_cap()) return false;
            if (j < t && insert(apply2(op, v, u)) && over_cap()) return false;
          }
        } else {
          // Rare: arity >= 3 via odometer over [0..t]^r tuples mentioning t.
          std::vector<size_t> tuple(static_cast<size_t>(r), 0);
          std::vector<std::uint64_t> args(static_cast<size_t>(r));
          for (int p = 0; p < r; ++p) {
            if (t == 0 && p > 0) break;
            std::fill(tuple.begin(), tuple.end(), 0);
            tuple[static_cast<size_t>(p)] = t;
            while (true) {
              std::uint64_t res = 0;
              for (int c = 0; c < ncoords_; ++c) {
                for (int i = 0; i < r; ++i)
                  scratch[static_cast<size_t>(i)] =
                      static_cast<El>((elements_[tuple[static_cast<size_t>(i)]] >> (8 * c)) & 0xff);
                res |= static_cast<std::uint64_t>(
                           A_.apply(op, {scratch.data(), static_cast<size_t>(r)}))
                       << (8 * c);
              }
              if (insert(res) && over_cap()) return false;
              int i = r - 1;
              while (i >= 0) {
                if (i == p) {
                  --i;
                  continue;
                }
                size_t limit = (i < p) ? t - 1 : t;
                if (tuple[static_cast<size_t>(i)] < limit) {
                  ++tuple[static_cast<size_t>(i)];
                  break;
                }
                tuple[static_cast<size_t>(i)] = 0;
                --i;
              }
              if (i < 0) break;
            }
          }
        }
      }
    }
    return true;
  }

  const std::vector<std::uint64_t>& elements() const { return elements_; }

 private:
  bool over_cap() const { return static_cast<std::int64_t>(elements_.size()) > cap_; }
  void grow() {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    size_t mask = slots_.size() - 1;
    for (std::uint64_t v : old) {
      if (v == kEmpty) continue;
      std::uint64_t h = v * 0x9e3779b97f4a7c15ULL;
      h ^= h >> 29;
      size_t pos = static_cast<size_t>(h) & mask;
      while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
      slots_[pos] = v;
    }
  }

  static constexpr std::uint64_t kEmpty = ~0ULL;
  const FiniteAlgebra& A_;
  int n_, ncoords_;
  std::int64_t cap_;
  bool use_bitset_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> slots_;
  size_t hash_count_ = 0;
  std::vector<std::uint64_t> elements_;
};

std::uint64_t pack_cube(const CubeFunction& f) {
  std::uint64_t v = 0;
  for (size_t c = 0; c < f.values.size(); ++c)
    v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(f.values[c])) << (8 * c);
  return v;
}

/// Cube-term algebra as packed words. Falls back to the generic closure
/// engine when packing does not apply (carrier > 255 or more than 8
/// coordinates).
std::vector<std::uint64_t> generate_M_packed(const FiniteAlgebra& A, int k,
                                             const std::vector<Partition>& alphas,
                                             const Caps& caps, MGenStats* stats) {
  unsigned m = 1u << k;
  if (A.size() > 255 || m > 8)
    throw BoundError("max_cube_arity",
                     "commutator: carrier or cube size too large for the packed kernel");
  std::vector<CubeFunction> gens = cube_generators(A, k, alphas, caps);
  PackedCubeClosure closure(A, static_cast<int>(m), caps.max_cube_functions);
  bool ok = true;
  for (const CubeFunction& g : gens) {
    closure.insert(pack_cube(g));
    if (static_cast<std::int64_t>(closure.elements().size()) > caps.max_cube_functions) {
      ok = false;
      break;
    }
  }
  if (ok) ok = closure.run();
  if (stats) {
    stats->size = static_cast<std::int64_t>(closure.elements().size());
    stats->reached_before_cap = stats->size;
  }
  if (!ok)
    throw BoundError("max_cube_functions",
                     "commutator: cube-term algebra exceeded " +
                         std::to_string(caps.max_cube_functions) + " elements (reached " +
                         std::to_string(closure.elements().size()) + ")");
  return closure.elements();
}

}  // namespace

std::vector<CubeFunction> generate_M(const FiniteAlgebra& A, int k,
                                     const std::vector<Partition>& alphas, const Caps& caps,
                                     MGenStats* stats) {
  if (A.size() <= 255 && (1u << k) <= 8) {
    std::vector<std::uint64_t> packed = generate_M_packed(A, k, alphas, caps, stats);
    std::vector<CubeFunction> out;
    out.reserve(packed.size());
    unsigned m = 1u << k;
    for (std::uint64_t v : packed) {
      CubeFunction f;
      f.k = k;
      f.values.resize(m);
      for (unsigned c = 0; c < m; ++c) f.values[c] = static_cast<El>((v >> (8 * c)) & 0xff);
      out.push_back(std::move(f));
    }
    return out;
  }
  // Generic path.
  std::vector<CubeFunction> gens = cube_generators(A, k, alphas, caps);
  TupleUniverse universe(A, 1 << k);
  std::vector<std::vector<El>> gen_vecs;
  gen_vecs.reserve(gens.size());
  for (const CubeFunction& g : gens) gen_vecs.push_back(g.values);
  ClosureOptions opts;
  opts.max_elements = caps.max_cube_functions;
  ClosureResult cl = close_under_ops(universe, gen_vecs, opts);
  if (stats) {
    stats->size = cl.count;
    stats->reached_before_cap = cl.count;
  }
  if (cl.hit_budget)
    throw BoundError("max_cube_functions", "commutator: cube-term algebra exceeded cap");
  std::vector<CubeFunction> out(static_cast<size_t>(cl.count));
  for (std::int64_t i = 0; i < cl.count; ++i) {
    out[static_cast<size_t>(i)].k = k;
    auto s = cl.at(i);
    out[static_cast<size_t>(i)].values.assign(s.begin(), s.end());
  }
  return out;
}

namespace {

/// A subpower of A on packed-uint64 tuples with position lookup.
struct Subpower {
  const FiniteAlgebra* A = nullptr;
  int ncoords = 0;
  std::vector<std::uint64_t> elems;
  std::vector<std::int64_t> slots;  // open addressing: position+1, 0 empty

  void build_index() {
    size_t cap = 16;
    while (cap < elems.size() * 2) cap <<= 1;
    slots.assign(cap, 0);
    for (size_t i = 0; i < elems.size(); ++i) put(elems[i], static_cast<std::int64_t>(i));
  }
  void put(std::uint64_t v, std::int64_t pos) {
    size_t mask = slots.size() - 1;
    std::uint64_t h = v * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 29;
    size_t s = static_cast<size_t>(h) & mask;
    while (slots[s] != 0) s = (s + 1) & mask;
    slots[s] = pos + 1;
  }
  std::int64_t position(std::uint64_t v) const {
    size_t mask = slots.size() - 1;
    std::uint64_t h = v * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 29;
    size_t s = static_cast<size_t>(h) & mask;
    while (slots[s] != 0) {
      std::int64_t pos = slots[s] - 1;
      if (elems[static_cast<size_t>(pos)] == v) return pos;
      s = (s + 1) & mask;
    }
    return -1;
  }

  std::uint64_t apply1(int op, std::uint64_t x) const {
    const std::vector<El>& t = A->table(op);
    std::uint64_t r = 0;
    for (int c = 0; c < ncoords; ++c)
      r |= static_cast<std::uint64_t>(t[static_cast<size_t>((x >> (8 * c)) & 0xff)]) << (8 * c);
    return r;
  }
  std::uint64_t apply2(int op, std::uint64_t x, std::uint64_t y) const {
    const std::vector<El>& t = A->table(op);
    std::uint64_t r = 0;
    std::size_t n = static_cast<std::size_t>(A->size());
    for (int c = 0; c < ncoords; ++c) {
      std::size_t a = static_cast<std::size_t>((x >> (8 * c)) & 0xff);
      std::size_t b = static_cast<std::size_t>((y >> (8 * c)) & 0xff);
      r |= static_cast<std::uint64_t>(t[a * n + b]) << (8 * c);
    }
    return r;
  }
};

/// Congruence generation on a subpower: the worklist pushes every merged
/// pair through every basic translation with arguments from the subpower.
Partition cg_on_subpower(const Subpower& B, const std::vector<std::pair<int, int>>& pairs,
                         const Caps& caps) {
  int m = static_cast<int>(B.elems.size());
  UnionFind uf(m);
  std::deque<std::pair<int, int>> work;
  auto push_union = [&](int a, int b) {
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  for (auto [a, b] : pairs) push_union(a, b);
  const Signature& sig = B.A->signature();
  std::int64_t steps = 0;
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    std::uint64_t eu = B.elems[static_cast<size_t>(u)], ev = B.elems[static_cast<size_t>(v)];
    for (int op = 0; op < sig.size(); ++op) {
      int r = sig.arity(op);
      if (r == 1) {
        push_union(static_cast<int>(B.position(B.apply1(op, eu))),
                   static_cast<int>(B.position(B.apply1(op, ev))));
        ++steps;
      } else if (r == 2) {
        for (int w = 0; w < m; ++w) {
          std::uint64_t ew = B.elems[static_cast<size_t>(w)];
          push_union(static_cast<int>(B.position(B.apply2(op, eu, ew))),
                     static_cast<int>(B.position(B.apply2(op, ev, ew))));
          push_union(static_cast<int>(B.position(B.apply2(op, ew, eu))),
                     static_cast<int>(B.position(B.apply2(op, ew, ev))));
          steps += 2;
        }
      } else if (r >= 3) {
        // Rare at desk scale; odometer over the remaining argument tuple.
        std::vector<int> args(static_cast<size_t>(r), 0);
        std::vector<std::uint64_t> packed(static_cast<size_t>(r));
        for (int p = 0; p < r; ++p) {
          std::fill(args.begin(), args.end(), 0);
          while (true) {
            auto apply_with = [&](std::uint64_t at_p) {
              std::vector<El> coords(static_cast<size_t>(r));
              std::uint64_t res = 0;
              for (int c = 0; c < B.ncoords; ++c) {
                for (int i = 0; i < r; ++i) {
                  std::uint64_t e = (i == p) ? at_p : B.elems[static_cast<size_t>(args[static_cast<size_t>(i)])];
                  coords[static_cast<size_t>(i)] = static_cast<El>((e >> (8 * c)) & 0xff);
                }
                res |= static_cast<std::uint64_t>(
                           B.A->apply(op, {coords.data(), static_cast<size_t>(r)}))
                       << (8 * c);
              }
              return res;
            };
            push_union(static_cast<int>(B.position(apply_with(eu))),
                       static_cast<int>(B.position(apply_with(ev))));
            ++steps;
            int i = r - 1;
            while (i >= 0) {
              if (i == p) {
                --i;
                continue;
              }
              if (args[static_cast<size_t>(i)] < m - 1) {
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
      if (steps > caps.cg_step_budget)
        throw BoundError("cg_step_budget", "commutator: congruence generation budget exhausted");
    }
  }
  return uf.to_partition();
}

}  // namespace

CommutatorEngine::CommutatorEngine(AlgebraPtr algebra, Caps caps)
    : algebra_(std::move(algebra)), caps_(caps) {
  if (!algebra_) throw InputError("commutator engine: null algebra");
}

bool CommutatorEngine::use_congruence_route() {
  if (malcev_state_ == 0) {
    MalcevStatus s = malcev_status(*algebra_, caps_);
    malcev_state_ = (s == MalcevStatus::verified) ? 1 : -1;
  }
  return malcev_state_ == 1 && algebra_->size() <= 255;
}

Partition CommutatorEngine::commutator(const std::vector<Partition>& alphas, int* rounds_out,
                                       std::int64_t* m_size_out) {
  const FiniteAlgebra& A = *algebra_;
  check_alphas(A, alphas, caps_);
  int k = static_cast<int>(alphas.size());

  // Cache key: the rep maps of the first k-1 arguments sorted, then the
  // last. Permuting the non-result directions permutes the cube-term
  // algebra by a bit permutation and leaves every face/edge pair intact.
  std::vector<std::vector<El>> prefix;
  for (int i = 0; i + 1 < k; ++i) prefix.push_back(alphas[static_cast<size_t>(i)].rep_map());
  std::sort(prefix.begin(), prefix.end());
  std::vector<El> key;
  for (const auto& p : prefix) key.insert(key.end(), p.begin(), p.end());
  const auto& last = alphas.back().rep_map();
  key.insert(key.end(), last.begin(), last.end());

  auto it = memo_.find(key);
  if (it != memo_.end()) {
    if (rounds_out) *rounds_out = 0;
    if (m_size_out) *m_size_out = -1;
    return it->second;
  }

  ++computations_;
  int rounds = 0;
  std::int64_t m_count = 0;
  Partition gamma = (k > 1 && use_congruence_route())
                        ? commutator_via_pair_congruence(alphas, &rounds, &m_count)
                        : commutator_via_cube_scan(alphas, &rounds, &m_count);
  if (rounds_out) *rounds_out = rounds;
  if (m_size_out) *m_size_out = m_count;
  memo_.emplace(std::move(key), gamma);
  return gamma;
}

Partition CommutatorEngine::commutator_via_cube_scan(const std::vector<Partition>& alphas,
                                                     int* rounds_out, std::int64_t* m_size_out) {
  const FiniteAlgebra& A = *algebra_;
  int k = static_cast<int>(alphas.size());
  MGenStats stats;
  std::vector<std::uint64_t> M;
  std::vector<CubeFunction> M_wide;
  bool packed = A.size() <= 255 && (1u << k) <= 8;
  if (packed)
    M = generate_M_packed(A, k, alphas, caps_, &stats);
  else
    M_wide = generate_M(A, k, alphas, caps_, &stats);
  std::int64_t m_count = packed ? static_cast<std::int64_t>(M.size())
                                : static_cast<std::int64_t>(M_wide.size());

  unsigned half = 1u << (k - 1);
  auto value_at = [&](std::int64_t f, unsigned bits) -> El {
    return packed ? static_cast<El>((M[static_cast<size_t>(f)] >> (8 * bits)) & 0xff)
                  : M_wide[static_cast<size_t>(f)].values[bits];
  };

  Partition gamma = Partition::zero(A.size());
  std::vector<char> done(static_cast<size_t>(m_count), 0);
  int rounds = 0;
  while (true) {
    ++rounds;
    std::vector<std::pair<El, El>> pairs;
    for (std::int64_t f = 0; f < m_count; ++f) {
      if (done[static_cast<size_t>(f)]) continue;
      bool faces_ok = true;
      for (unsigned t = 0; t + 1 < half; ++t) {
        if (!gamma.same_block(value_at(f, 2 * t), value_at(f, 2 * t + 1))) {
          faces_ok = false;
          break;
        }
      }
      if (!faces_ok) continue;
      done[static_cast<size_t>(f)] = 1;
      El u = value_at(f, 2 * (half - 1));
      El v = value_at(f, 2 * (half - 1) + 1);
      if (!gamma.same_block(u, v)) pairs.emplace_back(u, v);
    }
    if (pairs.empty()) break;
    Partition next = cg(A, pairs, &gamma, caps_);
    if (next == gamma) break;
    gamma = std::move(next);
  }
  if (rounds_out) *rounds_out = rounds;
  if (m_size_out) *m_size_out = m_count;
  return gamma;
}

Partition CommutatorEngine::commutator_via_pair_congruence(const std::vector<Partition>& alphas,
                                                           int* rounds_out,
                                                           std::int64_t* m_size_out) {
  // The cube-term algebra splits along the result direction into a
  // reflexive symmetric compatible relation R on the (k-1)-cube algebra B,
  // generated by the constant pairs of the last congruence. On an algebra
  // with a verified Mal'cev term every such relation is a congruence, so R
  // is exactly Cg_B(constant pairs) and never needs materializing as a set
  // of pairs. The fixpoint then scans B once per round, grouping elements
  // by (R-class, non-final coordinates mod gamma) and relating the final
  // coordinates within each group.
  const FiniteAlgebra& A = *algebra_;
  int k = static_cast<int>(alphas.size());
  int half = 1 << (k - 1);
  if (half > 8 || A.size() > 255)
    return commutator_via_cube_scan(alphas, rounds_out, m_size_out);

  std::vector<Partition> front(alphas.begin(), alphas.end() - 1);
  Subpower B;
  B.A = &A;
  B.ncoords = half;
  {
    PackedCubeClosure closure(A, half, caps_.max_cube_functions);
    std::vector<CubeFunction> gens = cube_generators(A, k - 1, front, caps_);
    bool ok = true;
    for (const CubeFunction& g : gens) {
      closure.insert(pack_cube(g));
      if (static_cast<std::int64_t>(closure.elements().size()) > caps_.max_cube_functions) {
        ok = false;
        break;
      }
    }
    if (ok) ok = closure.run();
    if (!ok)
      throw BoundError("max_cube_functions", "commutator: half-cube algebra exceeded cap");
    B.elems = closure.elements();
  }
  B.build_index();
  int m = static_cast<int>(B.elems.size());

  // Constant tuples and the generating pairs from the last congruence.
  auto constant_of = [&](El a) {
    std::uint64_t v = 0;
    for (int c = 0; c < half; ++c) v |= static_cast<std::uint64_t>(a) << (8 * c);
    return v;
  };
  const Partition& alpha_k = alphas.back();
  std::vector<std::pair<int, int>> const_pairs;
  for (El a = 0; a < A.size(); ++a)
    for (El b = a + 1; b < A.size(); ++b) {
      if (!alpha_k.same_block(a, b)) continue;
      std::int64_t pa = B.position(constant_of(a));
      std::int64_t pb = B.position(constant_of(b));
      if (pa < 0 || pb < 0) throw Error("commutator: constants missing from the cube algebra");
      const_pairs.emplace_back(static_cast<int>(pa), static_cast<int>(pb));
    }
  Partition R = cg_on_subpower(B, const_pairs, caps_);

  if (m_size_out) {
    // |M| equals the number of R-related ordered pairs.
    std::vector<std::int64_t> class_size(static_cast<size_t>(m), 0);
    for (int g = 0; g < m; ++g) ++class_size[static_cast<size_t>(R.rep(g))];
    std::int64_t total = 0;
    for (std::int64_t s : class_size) total += s * s;
    *m_size_out = total;
  }

  Partition gamma = Partition::zero(A.size());
  int rounds = 0;
  while (true) {
    ++rounds;
    // Group B by (R-class, gamma-classes of the non-final coordinates).
    std::map<std::vector<El>, El> first_last;
    std::vector<std::pair<El, El>> pairs;
    std::vector<El> group_key(static_cast<size_t>(half));
    for (int g = 0; g < m; ++g) {
      std::uint64_t e = B.elems[static_cast<size_t>(g)];
      group_key[0] = R.rep(g);
      for (int c = 0; c + 1 < half; ++c)
        group_key[static_cast<size_t>(c + 1)] = gamma.rep(static_cast<El>((e >> (8 * c)) & 0xff));
      El last_val = static_cast<El>((e >> (8 * (half - 1))) & 0xff);
      auto [it2, fresh] = first_last.emplace(group_key, last_val);
      if (!fresh && !gamma.same_block(it2->second, last_val))
        pairs.emplace_back(it2->second, last_val);
    }
    if (pairs.empty()) break;
    Partition next = cg(A, pairs, &gamma, caps_);
    if (next == gamma) break;
    gamma = std::move(next);
  }
  if (rounds_out) *rounds_out = rounds;
  return gamma;
}

CommutatorResult CommutatorEngine::commutator_result(const std::vector<Partition>& alphas) {
  CommutatorResult res;
  res.inputs = alphas;
  res.gamma = commutator(alphas, &res.rounds, &res.m_size);
  return res;
}

namespace {

/// Closure of a subset under the listed operations only.
std::vector<El> closure_subset(const FiniteAlgebra& A, const std::vector<int>& ops,
                               std::vector<El> seed) {
  std::vector<char> in(static_cast<size_t>(A.size()), 0);
  std::vector<El> elems;
  auto add = [&](El x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      elems.push_back(x);
    }
  };
  for (El x : seed) add(x);
  for (int op : ops)
    if (A.signature().arity(op) == 0) add(A.apply0(op));
  for (size_t t = 0; t < elems.size(); ++t) {
    El u = elems[t];
    for (int op : ops) {
      int r = A.signature().arity(op);
      if (r == 1) add(A.apply1(op, u));
      if (r == 2) {
        for (size_t j = 0; j <= t; ++j) {
          add(A.apply2(op, u, elems[j]));
          if (j < t) add(A.apply2(op, elems[j], u));
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Partition coset_partition(const FiniteAlgebra& A, int mul, const std::vector<El>& subgroup) {
  UnionFind uf(A.size());
  for (El a = 0; a < A.size(); ++a)
    for (El s : subgroup) uf.unite(a, A.apply2(mul, s, a));
  return uf.to_partition();
}

}  // namespace

Partition group_oracle(const FiniteAlgebra& A, const std::vector<Partition>& alphas,
                       const std::optional<GroupReduct>& reduct_in) {
  std::optional<GroupReduct> reduct = reduct_in ? reduct_in : find_group_reduct(A);
  if (!reduct) throw InputError("group_oracle: '" + A.name() + "' has no group reduct");
  int mul = reduct->mul, inv = reduct->inv;
  El e = reduct->identity;
  std::vector<int> group_ops{mul, inv};

  int k = static_cast<int>(alphas.size());
  if (k < 1) throw InputError("group_oracle: at least one congruence required");
  // Normal subgroups = identity classes.
  std::vector<std::vector<El>> normals;
  for (const Partition& a : alphas) {
    if (a.size() != A.size()) throw InputError("group_oracle: congruence size mismatch");
    std::vector<El> block;
    for (El x = 0; x < A.size(); ++x)
      if (a.same_block(x, e)) block.push_back(x);
    normals.push_back(std::move(block));
  }

  auto binary_commutator = [&](const std::vector<El>& X, const std::vector<El>& Y) {
    std::vector<El> gens{e};
    for (El x : X)
      for (El y : Y) {
        El c = A.apply2(mul, A.apply2(mul, A.apply1(inv, x), A.apply1(inv, y)),
                        A.apply2(mul, x, y));
        gens.push_back(c);
      }
    return closure_subset(A, group_ops, std::move(gens));
  };

  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<El> product_gens{e};
  do {
    std::vector<El> acc = normals[static_cast<size_t>(perm[0])];
    for (int i = 1; i < k; ++i) acc = binary_commutator(acc, normals[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
    product_gens.insert(product_gens.end(), acc.begin(), acc.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<El> subgroup = closure_subset(A, group_ops, std::move(product_gens));
  return coset_partition(A, mul, subgroup);
}

Partition ring_oracle(const FiniteAlgebra& A, const std::vector<Partition>& alphas,
                      const std::optional<RingReduct>& reduct_in) {
  std::optional<RingReduct> reduct = reduct_in ? reduct_in : find_ring_reduct(A);
  if (!reduct) throw InputError("ring_oracle: '" + A.name() + "' has no ring reduct");
  int add = reduct->add, neg = reduct->neg, mul = reduct->mul;
  El zero = reduct->zero;
  std::vector<int> additive_ops{add, neg};

  int k = static_cast<int>(alphas.size());
  if (k < 1) throw InputError("ring_oracle: at least one congruence required");
  std::vector<std::vector<El>> ideals;
  for (const Partition& a : alphas) {
    if (a.size() != A.size()) throw InputError("ring_oracle: congruence size mismatch");
    std::vector<El> block;
    for (El x = 0; x < A.size(); ++x)
      if (a.same_block(x, zero)) block.push_back(x);
    ideals.push_back(std::move(block));
  }

  auto ideal_product = [&](const std::vector<El>& X, const std::vector<El>& Y) {
    std::vector<El> gens{zero};
    for (El x : X)
      for (El y : Y) gens.push_back(A.apply2(mul, x, y));
    return closure_subset(A, additive_ops, std::move(gens));
  };

  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<El> sum_gens{zero};
  do {
    std::vector<El> acc = ideals[static_cast<size_t>(perm[0])];
    for (int i = 1; i < k; ++i) acc = ideal_product(acc, ideals[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
    sum_gens.insert(sum_gens.end(), acc.begin(), acc.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<El> ideal = closure_subset(A, additive_ops, std::move(sum_gens));

  UnionFind uf(A.size());
  for (El a = 0; a < A.size(); ++a)
    for (El i : ideal) uf.unite(a, A.apply2(add, a, i));
  return uf.to_partition();
}

PropertyReport property_suite(AlgebraPtr A, const PropertySuiteOptions& opts, const Caps& caps,
                              CommutatorEngine* shared_engine) {
  CongruenceLattice lat = con_lattice(*A, caps);
  int m = static_cast<int>(lat.congruences.size());
  CommutatorEngine local_engine(A, caps);
  CommutatorEngine& engine = shared_engine ? *shared_engine : local_engine;
  int max_k = std::min(opts.max_arity, caps.max_cube_arity);

  // Commutator of a tuple of lattice indices, as a lattice index.
  std::map<std::vector<int>, int> cache;
  auto comm_idx = [&](const std::vector<int>& tuple) -> int {
    auto it = cache.find(tuple);
    if (it != cache.end()) return it->second;
    std::vector<Partition> alphas;
    for (int i : tuple) alphas.push_back(lat.congruences[static_cast<size_t>(i)]);
    Partition g = engine.commutator(alphas);
    int idx = lat.index_of(g);
    if (idx < 0) throw Error("property_suite: commutator not in the congruence lattice");
    cache.emplace(tuple, idx);
    return idx;
  };

  auto tuple_str = [&](const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
  };

  // Enumerate all tuples over [0,m)^k for k = 1..max_k.
  std::vector<std::vector<int>> tuples;
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> t(static_cast<size_t>(k), 0);
    while (true) {
      tuples.push_back(t);
      int i = k - 1;
      while (i >= 0 && t[static_cast<size_t>(i)] == m - 1) {
        t[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++t[static_cast<size_t>(i)];
    }
  }

  PropertyReport report;
  auto check = [&](const std::string& name, auto&& body) {
    PropertyCheck c;
    c.property = name;
    body(c);
    report.checks.push_back(c);
    if (!c.passed) report.all_passed = false;
  };

  // C1: [a_1..a_k] below every argument.
  check("C1 meet bound", [&](PropertyCheck& c) {
    for (const auto& t : tuples) {
      int g = comm_idx(t);
      ++c.instances;
      for (int i : t)
        if (!lat.lattice.leq(g, i)) {
          c.passed = false;
          c.witness = tuple_str(t);
          return;
        }
    }
  });

  // C2: monotone in every argument.
  check("C2 monotonicity", [&](PropertyCheck& c) {
    std::int64_t budget = opts.max_instances;
    for (const auto& t : tuples) {
      for (const auto& s : tuples) {
        if (s.size() != t.size()) continue;
        bool leq_all = true;
        for (size_t i = 0; i < t.size(); ++i)
          if (!lat.lattice.leq(t[i], s[i])) {
            leq_all = false;
            break;
          }
        if (!leq_all) continue;
        if (--budget < 0) return;
        ++c.instances;
        if (!lat.lattice.leq(comm_idx(t), comm_idx(s))) {
          c.passed = false;
          c.witness = tuple_str(t) + " vs " + tuple_str(s);
          return;
        }
      }
    }
  });

  // C3: dropping the first argument can only enlarge the commutator.
  check("C3 arity reduction", [&](PropertyCheck& c) {
    for (const auto& t : tuples) {
      if (t.size() < 2) continue;
      std::vector<int> tail(t.begin() + 1, t.end());
      ++c.instances;
      if (!lat.lattice.leq(comm_idx(t), comm_idx(tail))) {
        c.passed = false;
        c.witness = tuple_str(t);
        return;
      }
    }
  });

  // C4: invariance under permutations of the arguments.
  check("C4 symmetry", [&](PropertyCheck& c) {
    for (const auto& t : tuples) {
      std::vector<int> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      ++c.instances;
      if (comm_idx(t) != comm_idx(sorted)) {
        c.passed = false;
        c.witness = tuple_str(t);
        return;
      }
    }
  });

  // C5: join distributivity in the first argument (binary joins).
  check("C5 join distributivity", [&](PropertyCheck& c) {
    std::int64_t budget = opts.max_instances;
    for (int k = 1; k <= max_k; ++k) {
      std::vector<int> rest(static_cast<size_t>(k - 1), 0);
      while (true) {
        for (int b1 = 0; b1 < m; ++b1)
          for (int b2 = b1; b2 < m; ++b2) {
            if (--budget < 0) return;
            ++c.instances;
            std::vector<int> t1{b1}, t2{b2}, tj{lat.lattice.join(b1, b2)};
            for (int x : rest) {
              t1.push_back(x);
              t2.push_back(x);
              tj.push_back(x);
            }
            int lhs = comm_idx(tj);
            int rhs = lat.lattice.join(comm_idx(t1), comm_idx(t2));
            if (lhs != rhs) {
              c.passed = false;
              c.witness = "join(" + std::to_string(b1) + "," + std::to_string(b2) + ") with " +
                          tuple_str(rest);
              return;
            }
          }
        int i = k - 2;
        while (i >= 0 && rest[static_cast<size_t>(i)] == m - 1) {
          rest[static_cast<size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++rest[static_cast<size_t>(i)];
      }
    }
  });

  // C6: nesting flattens downward, [[a_1..a_k], b_1..b_l] <= [a_1..a_k,b_1..b_l].
  check("C6 nesting", [&](PropertyCheck& c) {
    std::int64_t budget = opts.max_instances;
    for (const auto& t : tuples) {
      for (const auto& b : tuples) {
        if (static_cast<int>(t.size() + b.size()) > max_k) continue;
        if (--budget < 0) return;
        ++c.instances;
        std::vector<int> nested{comm_idx(t)};
        nested.insert(nested.end(), b.begin(), b.end());
        std::vector<int> flat = t;
        flat.insert(flat.end(), b.begin(), b.end());
        if (!lat.lattice.leq(comm_idx(nested), comm_idx(flat))) {
          c.passed = false;
          c.witness = tuple_str(t) + " ; " + tuple_str(b);
          return;
        }
      }
    }
  });

  return report;
}

SdcomResult sdcom_check(const SubproductAlgebra& C, const std::vector<Partition>& gammas,
                        const Caps& caps) {
  if (C.num_factors() != 2) throw InputError("sdcom_check: exactly 2 factors required");
  AlgebraPtr Calg = C.as_algebra(caps);
  for (const Partition& g : gammas)
    if (g.size() != Calg->size()) throw InputError("sdcom_check: congruence size mismatch");

  CommutatorEngine engine_c(Calg, caps);
  Partition delta = engine_c.commutator(gammas);

  SdcomResult res;
  for (int side = 0; side < 2; ++side) {
    std::vector<El> pmap = C.projection_map(side);
    const AlgebraPtr& F = C.factor(side);
    std::vector<Partition> projected;
    for (const Partition& g : gammas) {
      Partition p = project_partition(g, pmap, F->size());
      if (compatibility_violation(*F, p))
        throw InputError("sdcom_check: projected congruence is not compatible on factor " +
                         std::to_string(side));
      projected.push_back(std::move(p));
    }
    CommutatorEngine engine_f(F, caps);
    Partition bracket = engine_f.commutator(projected);

    // Containment: every delta-pair projects into the factor bracket.
    // Subdirectness: every bracket pair is realized by some delta pair.
    int nf = F->size();
    std::vector<char> realized(static_cast<size_t>(nf) * static_cast<size_t>(nf), 0);
    bool contained = true;
    auto dblocks = delta.blocks();
    for (const auto& block : dblocks)
      for (El p : block)
        for (El q : block) {
          El a = pmap[static_cast<size_t>(p)], b = pmap[static_cast<size_t>(q)];
          if (!bracket.same_block(a, b)) contained = false;
          realized[static_cast<size_t>(a) * static_cast<size_t>(nf) + static_cast<size_t>(b)] = 1;
        }
    bool onto = true;
    for (El a = 0; a < nf; ++a)
      for (El b = 0; b < nf; ++b)
        if (bracket.same_block(a, b) &&
            !realized[static_cast<size_t>(a) * static_cast<size_t>(nf) + static_cast<size_t>(b)])
          onto = false;
    if (side == 0) {
      res.onto_left = onto;
      res.contained = contained;
    } else {
      res.onto_right = onto;
      res.contained = res.contained && contained;
    }
  }
  return res;
}

SupernilpotenceResult supernilpotence_class(AlgebraPtr A, const Partition& relative_to, int max_k,
                                            const Caps& caps) {
  if (max_k < 1) throw InputError("supernilpotence_class: max_k must be at least 1");
  if (max_k + 1 > caps.max_cube_arity)
    throw BoundError("max_cube_arity",
                     "supernilpotence_class: class " + std::to_string(max_k) + " needs " +
                         std::to_string(max_k + 1) + "-ary commutators (cap " +
                         std::to_string(caps.max_cube_arity) + ")");
  CommutatorEngine engine(A, caps);
  SupernilpotenceResult res;
  res.max_k = max_k;
  Partition prev = relative_to;  // the 1-ary self-commutator
  res.chain.push_back(prev.block_count());
  if (prev.is_zero()) {
    res.cls = 0;
    return res;
  }
  for (int k = 1; k <= max_k; ++k) {
    std::vector<Partition> alphas(static_cast<size_t>(k + 1), relative_to);
    Partition c = engine.commutator(alphas);
    res.chain.push_back(c.block_count());
    if (c.is_zero()) {
      res.cls = k;
      return res;
    }
  }
  return res;
}

}  // namespace sdw
