#include "sdw/product.hpp"

namespace sdw {

ProductCodec::ProductCodec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int s : sizes_) {
    if (s <= 0) throw InputError("product codec: factor size must be positive");
    if (total_ > (static_cast<std::int64_t>(1) << 62) / s)
      throw InputError("product codec: carrier size overflow");
    total_ *= s;
  }
}

DirectProduct direct_product(const std::vector<AlgebraPtr>& factors, const Caps& caps) {
  if (factors.empty()) throw InputError("direct_product: no factors");
  const Signature& sig = factors[0]->signature();
  std::string name;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    if (!(f->signature() == sig))
      throw InputError("direct_product: signature mismatch between '" + factors[0]->name() +
                       "' and '" + f->name() + "'");
    sizes.push_back(f->size());
    if (!name.empty()) name += "x";
    name += f->name();
  }
  ProductCodec codec(std::move(sizes));
  std::int64_t n = codec.carrier_size();
  if (n > caps.max_carrier)
    throw BoundError("max_carrier", "direct_product: carrier size " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(caps.max_carrier));

  int nf = codec.arity();
  std::vector<std::vector<El>> tables(static_cast<size_t>(sig.size()));
  for (int op = 0; op < sig.size(); ++op) {
    int r = sig.arity(op);
    // Table size n^r must fit the table cap.
    std::int64_t entries = 1;
    for (int i = 0; i < r; ++i) {
      if (entries > caps.max_table_entries / std::max<std::int64_t>(n, 1))
        throw BoundError("max_table_entries",
                         "direct_product: table of '" + sig.name(op) + "' exceeds cap");
      entries *= n;
    }
    if (entries > caps.max_table_entries)
      throw BoundError("max_table_entries",
                       "direct_product: table of '" + sig.name(op) + "' exceeds cap");
    std::vector<El>& table = tables[static_cast<size_t>(op)];
    table.resize(static_cast<size_t>(entries));

    std::vector<std::int64_t> args(static_cast<size_t>(r), 0);
    std::vector<std::vector<El>> arg_coords(static_cast<size_t>(r),
                                            std::vector<El>(static_cast<size_t>(nf)));
    std::vector<El> res_coords(static_cast<size_t>(nf));
    std::vector<El> op_args(static_cast<size_t>(r));
    for (std::int64_t idx = 0; idx < entries; ++idx) {
      // idx enumerates argument tuples row-major, last argument fastest.
      std::int64_t rest = idx;
      for (int i = r; i-- > 0;) {
        args[static_cast<size_t>(i)] = rest % n;
        rest /= n;
      }
      for (int i = 0; i < r; ++i) codec.decode(args[static_cast<size_t>(i)], arg_coords[static_cast<size_t>(i)]);
      for (int c = 0; c < nf; ++c) {
        for (int i = 0; i < r; ++i) op_args[static_cast<size_t>(i)] = arg_coords[static_cast<size_t>(i)][static_cast<size_t>(c)];
        res_coords[static_cast<size_t>(c)] = factors[static_cast<size_t>(c)]->apply(op, op_args);
      }
      table[static_cast<size_t>(idx)] = static_cast<El>(codec.encode(res_coords));
    }
  }
  auto alg = std::make_shared<FiniteAlgebra>(name, static_cast<int>(n), sig, std::move(tables));
  return DirectProduct{std::move(alg), std::move(codec)};
}

}  // namespace sdw
