#include "sdw/partition.hpp"

#include <algorithm>
#include <numeric>

namespace sdw {

Partition Partition::zero(int n) {
  Partition p;
  p.rep_.resize(static_cast<size_t>(n));
  std::iota(p.rep_.begin(), p.rep_.end(), 0);
  return p;
}

Partition Partition::one(int n) {
  Partition p;
  p.rep_.assign(static_cast<size_t>(n), 0);
  return p;
}

Partition Partition::from_rep_map(std::vector<El> rep) {
  int n = static_cast<int>(rep.size());
  // Normalize: canonical representative is the least element of the block.
  UnionFind uf(n);
  for (El x = 0; x < n; ++x) {
    El r = rep[static_cast<size_t>(x)];
    if (r < 0 || r >= n) throw InputError("partition: representative out of range");
    uf.unite(x, r);
  }
  return uf.to_partition();
}

Partition Partition::from_canonical_rep(std::vector<El> rep) {
  int n = static_cast<int>(rep.size());
  for (El x = 0; x < n; ++x) {
    El r = rep[static_cast<size_t>(x)];
    if (r < 0 || r > x || rep[static_cast<size_t>(r)] != r)
      throw InputError("partition: representative map is not canonical");
  }
  Partition p;
  p.rep_ = std::move(rep);
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<El>>& blocks) {
  std::vector<El> rep(static_cast<size_t>(n), -1);
  for (const auto& block : blocks) {
    if (block.empty()) throw InputError("partition: empty block");
    El least = *std::min_element(block.begin(), block.end());
    for (El x : block) {
      if (x < 0 || x >= n) throw InputError("partition: element out of range");
      if (rep[static_cast<size_t>(x)] != -1) throw InputError("partition: blocks overlap");
      rep[static_cast<size_t>(x)] = least;
    }
  }
  for (El x = 0; x < n; ++x)
    if (rep[static_cast<size_t>(x)] == -1)
      throw InputError("partition: element " + std::to_string(x) + " not covered");
  Partition p;
  p.rep_ = std::move(rep);
  return p;
}

int Partition::block_count() const {
  int c = 0;
  for (El x = 0; x < size(); ++x)
    if (rep_[static_cast<size_t>(x)] == x) ++c;
  return c;
}

std::vector<std::vector<El>> Partition::blocks() const {
  std::vector<std::vector<El>> out;
  std::vector<int> slot(rep_.size(), -1);
  for (El x = 0; x < size(); ++x) {
    El r = rep_[static_cast<size_t>(x)];
    if (slot[static_cast<size_t>(r)] == -1) {
      slot[static_cast<size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<size_t>(slot[static_cast<size_t>(r)])].push_back(x);
  }
  return out;
}

std::vector<int> Partition::block_index() const {
  std::vector<int> idx(rep_.size(), -1);
  int next = 0;
  for (El x = 0; x < size(); ++x) {
    El r = rep_[static_cast<size_t>(x)];
    if (idx[static_cast<size_t>(r)] == -1) idx[static_cast<size_t>(r)] = next++;
    idx[static_cast<size_t>(x)] = idx[static_cast<size_t>(r)];
  }
  return idx;
}

bool Partition::is_zero() const {
  for (El x = 0; x < size(); ++x)
    if (rep_[static_cast<size_t>(x)] != x) return false;
  return true;
}

bool Partition::is_one() const {
  for (El x = 0; x < size(); ++x)
    if (rep_[static_cast<size_t>(x)] != 0) return false;
  return size() > 0;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) throw InputError("partition: size mismatch in refines");
  for (El x = 0; x < size(); ++x)
    if (coarser.rep(x) != coarser.rep(rep(x))) return false;
  return true;
}

Partition join(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw InputError("partition: size mismatch in join");
  UnionFind uf(a.size());
  for (El x = 0; x < a.size(); ++x) {
    uf.unite(x, a.rep(x));
    uf.unite(x, b.rep(x));
  }
  return uf.to_partition();
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw InputError("partition: size mismatch in meet");
  int n = a.size();
  // Pairs (rep_a, rep_b) identify meet blocks; pick least member as rep.
  std::vector<El> rep(static_cast<size_t>(n));
  std::vector<std::pair<std::int64_t, El>> keyed(static_cast<size_t>(n));
  for (El x = 0; x < n; ++x)
    keyed[static_cast<size_t>(x)] = {static_cast<std::int64_t>(a.rep(x)) * n + b.rep(x), x};
  std::vector<std::pair<std::int64_t, El>> sorted = keyed;
  std::sort(sorted.begin(), sorted.end());
  std::int64_t cur_key = -1;
  El cur_rep = -1;
  std::vector<El> least_for(static_cast<size_t>(n), -1);
  for (auto& [key, x] : sorted) {
    if (key != cur_key) {
      cur_key = key;
      cur_rep = x;
    }
    least_for[static_cast<size_t>(x)] = cur_rep;
  }
  for (El x = 0; x < n; ++x) rep[static_cast<size_t>(x)] = least_for[static_cast<size_t>(x)];
  return Partition::from_rep_map(std::move(rep));
}

UnionFind::UnionFind(int n) : parent_(static_cast<size_t>(n)), rank_(static_cast<size_t>(n), 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  int root = x;
  while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
  while (parent_[static_cast<size_t>(x)] != root) {
    int next = parent_[static_cast<size_t>(x)];
    parent_[static_cast<size_t>(x)] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(int x, int y) {
  int rx = find(x), ry = find(y);
  if (rx == ry) return false;
  if (rank_[static_cast<size_t>(rx)] < rank_[static_cast<size_t>(ry)]) std::swap(rx, ry);
  parent_[static_cast<size_t>(ry)] = rx;
  if (rank_[static_cast<size_t>(rx)] == rank_[static_cast<size_t>(ry)]) ++rank_[static_cast<size_t>(rx)];
  return true;
}

Partition UnionFind::to_partition() {
  int n = size();
  std::vector<El> least(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (least[static_cast<size_t>(r)] == -1 || x < least[static_cast<size_t>(r)])
      least[static_cast<size_t>(r)] = static_cast<El>(x);
  }
  std::vector<El> rep(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) rep[static_cast<size_t>(x)] = least[static_cast<size_t>(find(x))];
  return Partition::from_canonical_rep(std::move(rep));
}

}  // namespace sdw
