#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdw/algebra.hpp"
#include "sdw/caps.hpp"

namespace sdw {

/// Mixed-radix codec between flat product indices and coordinate tuples.
/// Factor 1 is most significant: the last coordinate varies fastest.
class ProductCodec {
 public:
  ProductCodec() = default;
  explicit ProductCodec(std::vector<int> sizes);

  int arity() const { return static_cast<int>(sizes_.size()); }
  std::int64_t carrier_size() const { return total_; }
  int coord_size(int i) const { return sizes_[static_cast<size_t>(i)]; }
  const std::vector<int>& sizes() const { return sizes_; }

  std::int64_t encode(std::span<const El> coords) const {
    std::int64_t idx = 0;
    for (size_t i = 0; i < sizes_.size(); ++i)
      idx = idx * sizes_[i] + coords[i];
    return idx;
  }
  void decode(std::int64_t idx, std::span<El> coords) const {
    for (size_t i = sizes_.size(); i-- > 0;) {
      coords[i] = static_cast<El>(idx % sizes_[i]);
      idx /= sizes_[i];
    }
  }
  std::vector<El> decode(std::int64_t idx) const {
    std::vector<El> coords(sizes_.size());
    decode(idx, coords);
    return coords;
  }

 private:
  std::vector<int> sizes_;
  std::int64_t total_ = 1;
};

/// Materializes the direct product of the given factors: carrier size is the
/// product of the factor sizes, operations act coordinatewise. All factors
/// must share one signature. The codec of the result is returned alongside.
struct DirectProduct {
  AlgebraPtr algebra;
  ProductCodec codec;
};
DirectProduct direct_product(const std::vector<AlgebraPtr>& factors,
                             const Caps& caps = global_caps());

}  // namespace sdw
