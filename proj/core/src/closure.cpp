#include "sdw/closure.hpp"

#include <cstring>

namespace sdw {

TupleUniverse::TupleUniverse(std::vector<const FiniteAlgebra*> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("tuple universe: no factors");
  sig_ = &factors_[0]->signature();
  for (const FiniteAlgebra* f : factors_)
    if (!(f->signature() == *sig_))
      throw InputError("tuple universe: factors must share one signature");
}

TupleUniverse::TupleUniverse(const FiniteAlgebra& algebra, int ncoords)
    : factors_(static_cast<size_t>(ncoords), &algebra), sig_(&algebra.signature()) {
  if (ncoords <= 0) throw InputError("tuple universe: ncoords must be positive");
}

void TupleUniverse::apply(int op, std::span<const El* const> args, El* result) const {
  int n = ncoords();
  int r = static_cast<int>(args.size());
  switch (r) {
    case 1:
      for (int c = 0; c < n; ++c) result[c] = factors_[static_cast<size_t>(c)]->apply1(op, args[0][c]);
      return;
    case 2:
      for (int c = 0; c < n; ++c)
        result[c] = factors_[static_cast<size_t>(c)]->apply2(op, args[0][c], args[1][c]);
      return;
    default: {
      El local[8];
      std::vector<El> heap;
      El* buf = local;
      if (r > 8) {
        heap.resize(static_cast<size_t>(r));
        buf = heap.data();
      }
      for (int c = 0; c < n; ++c) {
        for (int i = 0; i < r; ++i) buf[i] = args[static_cast<size_t>(i)][c];
        result[c] = factors_[static_cast<size_t>(c)]->apply(op, {buf, static_cast<size_t>(r)});
      }
      return;
    }
  }
}

namespace {

std::uint64_t hash_slice(const El* p, int n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(p[i]));
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
  }
  return h;
}

// Open-addressing set of element ids, keyed by the pooled coordinate slices.
class SliceSet {
 public:
  SliceSet(const std::vector<El>* pool, int ncoords) : pool_(pool), ncoords_(ncoords) {
    slots_.assign(1024, -1);
  }

  // Returns the id already present for this slice, or -1 after reserving the
  // slot for `id` (the caller must then append the slice to the pool).
  std::int64_t find_or_reserve(const El* candidate, std::int64_t id) {
    if ((count_ + 1) * 10 > slots_.size() * 7) grow();
    std::uint64_t h = hash_slice(candidate, ncoords_);
    size_t mask = slots_.size() - 1;
    size_t pos = static_cast<size_t>(h) & mask;
    while (true) {
      std::int64_t s = slots_[pos];
      if (s < 0) {
        slots_[pos] = id;
        ++count_;
        return -1;
      }
      if (std::memcmp(pool_->data() + s * ncoords_, candidate,
                      sizeof(El) * static_cast<size_t>(ncoords_)) == 0)
        return s;
      pos = (pos + 1) & mask;
    }
  }

 private:
  void grow() {
    std::vector<std::int64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, -1);
    size_t mask = slots_.size() - 1;
    for (std::int64_t s : old) {
      if (s < 0) continue;
      std::uint64_t h = hash_slice(pool_->data() + s * ncoords_, ncoords_);
      size_t pos = static_cast<size_t>(h) & mask;
      while (slots_[pos] >= 0) pos = (pos + 1) & mask;
      slots_[pos] = s;
    }
  }

  const std::vector<El>* pool_;
  int ncoords_;
  std::vector<std::int64_t> slots_;
  size_t count_ = 0;
};

}  // namespace

ClosureResult close_under_ops(const TupleUniverse& universe,
                              const std::vector<std::vector<El>>& generators,
                              const ClosureOptions& options) {
  const Signature& sig = universe.signature();
  int n = universe.ncoords();
  ClosureResult res;
  res.ncoords = n;
  SliceSet seen(&res.pool, n);

  auto over_budget = [&]() {
    return options.max_elements >= 0 && res.count >= options.max_elements;
  };

  // Inserts a candidate; returns its id, or -2 when the early-exit or budget
  // tripped (stop_index / hit_budget set accordingly).
  auto insert = [&](const El* cand, int op, std::span<const std::int64_t> args) -> std::int64_t {
    std::int64_t id = seen.find_or_reserve(cand, res.count);
    if (id >= 0) return id;
    if (over_budget()) {
      res.hit_budget = true;
      return -2;
    }
    res.pool.insert(res.pool.end(), cand, cand + n);
    if (options.track_recipes) {
      ClosureResult::Recipe r;
      r.op = op;
      r.args.assign(args.begin(), args.end());
      res.recipes.push_back(std::move(r));
    }
    std::int64_t new_id = res.count++;
    if (options.stop_when && options.stop_when({cand, static_cast<size_t>(n)})) {
      res.stop_index = new_id;
      return -2;
    }
    return new_id;
  };

  // Generators first (recipe ties break toward generator index), then
  // constants.
  for (size_t g = 0; g < generators.size(); ++g) {
    if (static_cast<int>(generators[g].size()) != n)
      throw InputError("closure: generator arity mismatch");
    std::int64_t gen_idx = static_cast<std::int64_t>(g);
    if (insert(generators[g].data(), -1, {&gen_idx, 1}) == -2) return res;
  }
  std::vector<El> scratch(static_cast<size_t>(n));
  for (int op = 0; op < sig.size(); ++op) {
    if (sig.arity(op) != 0) continue;
    universe.apply(op, {}, scratch.data());
    if (insert(scratch.data(), op, {}) == -2) return res;
  }

  // Worklist: for element t, apply every op to every argument tuple over
  // [0..t] that mentions t. Tuples are grouped by the first position holding
  // t (earlier positions range over [0..t-1], later ones over [0..t]) so each
  // tuple is visited exactly once across the whole run.
  std::vector<const El*> arg_ptrs;
  for (std::int64_t t = 0; t < res.count; ++t) {
    for (int op = 0; op < sig.size(); ++op) {
      int r = sig.arity(op);
      if (r == 0) continue;
      arg_ptrs.assign(static_cast<size_t>(r), nullptr);
      std::vector<std::int64_t> tuple(static_cast<size_t>(r), 0);
      for (int p = 0; p < r; ++p) {
        if (t == 0 && p > 0) break;  // no values available before position p
        for (int i = 0; i < p; ++i) tuple[static_cast<size_t>(i)] = 0;
        tuple[static_cast<size_t>(p)] = t;
        for (int i = p + 1; i < r; ++i) tuple[static_cast<size_t>(i)] = 0;
        while (true) {
          for (int i = 0; i < r; ++i)
            arg_ptrs[static_cast<size_t>(i)] = res.pool.data() + tuple[static_cast<size_t>(i)] * n;
          universe.apply(op, arg_ptrs, scratch.data());
          if (insert(scratch.data(), op, tuple) == -2) return res;
          // Odometer over all positions except p; position i < p counts to
          // t-1, position i > p counts to t.
          int i = r - 1;
          while (i >= 0) {
            if (i == p) {
              --i;
              continue;
            }
            std::int64_t limit = (i < p) ? t - 1 : t;
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
  return res;
}

}  // namespace sdw
