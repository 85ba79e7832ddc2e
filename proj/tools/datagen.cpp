// Regenerates the shipped data/ directory (algebras, maps, congruences,
// subproducts) from the built-in corpus. Run from the repository root:
//   build/tools/sdw-datagen [data]
#include <filesystem>
#include <iostream>

#include <json.hpp>

#include "sdw/algebra_ops.hpp"
#include "sdw/corpus.hpp"
#include "sdw/io.hpp"
#include "sdw/subproduct.hpp"

using namespace sdw;
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

void write_subproduct(const SubproductAlgebra& C, const std::vector<std::string>& factor_paths,
                      const std::string& path) {
  Json j;
  j["factors"] = factor_paths;
  Json elems = Json::array();
  for (std::int64_t e : C.elements()) {
    Json row = Json::array();
    for (El v : C.codec().decode(e)) row.push_back(v);
    elems.push_back(row);
  }
  j["elements"] = elems;
  write_text_file(path, j.dump() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  std::string root = argc > 1 ? argv[1] : "data";
  fs::create_directories(root + "/algebras");
  fs::create_directories(root + "/maps");
  fs::create_directories(root + "/congruences");
  fs::create_directories(root + "/subproducts");

  auto alg = [&](const AlgebraPtr& A) {
    save_algebra(*A, root + "/algebras/" + A->name() + ".json");
  };
  for (const AlgebraPtr& A : corpus::small_groups()) alg(A);
  for (const AlgebraPtr& A : corpus::small_rings()) alg(A);
  alg(corpus::cyclic_group_no_inverse(2));
  alg(corpus::two_chain_lattice());
  alg(corpus::meet_semilattice2());
  alg(corpus::diamond_m3());
  alg(corpus::pentagon_n5());
  alg(corpus::bool_and_monoid());
  auto z1 = std::make_shared<FiniteAlgebra>(
      "z1", 1, corpus::cyclic_group(2)->signature(),
      std::vector<std::vector<El>>{{0}, {0}, {0}});
  alg(z1);

  save_map({0, 1, 0, 1}, root + "/maps/z4_mod2.json");
  save_map({0, 1, 2, 3}, root + "/maps/z4_id.json");
  std::vector<int> sgn = corpus::s3_signs();
  save_map({static_cast<El>(sgn[0]), static_cast<El>(sgn[1]), static_cast<El>(sgn[2]),
            static_cast<El>(sgn[3]), static_cast<El>(sgn[4]), static_cast<El>(sgn[5])},
           root + "/maps/s3_sign.json");
  save_map({0, 0, 0, 0}, root + "/maps/z4_collapse.json");
  save_map({0, 0}, root + "/maps/z2_collapse.json");
  save_map({0, 0, 0, 0, 0, 0}, root + "/maps/s3_collapse.json");

  save_partition(Partition::from_blocks(4, {{0, 2}, {1, 3}}), root + "/congruences/z4_mod2.json");
  save_partition(Partition::one(4), root + "/congruences/z4_total.json");
  save_partition(Partition::zero(4), root + "/congruences/z4_zero.json");
  save_partition(Partition::from_blocks(6, {{0, 3, 4}, {1, 2, 5}}),
                 root + "/congruences/s3_a3.json");
  save_partition(Partition::one(6), root + "/congruences/s3_total.json");
  save_partition(Partition::one(8), root + "/congruences/d4_total.json");
  save_partition(Partition::from_blocks(8, {{0, 2, 4, 6}, {1, 3, 5, 7}}),
                 root + "/congruences/ring_z8_even.json");

  // Fiber product of Z4 with itself over Z2 (reduction mod 2 on both sides).
  {
    auto z4 = corpus::cyclic_group(4);
    auto z2 = corpus::cyclic_group(2);
    FiberProduct fp = fiber_product(z4, z4, z2, {0, 1, 0, 1}, {0, 1, 0, 1});
    write_subproduct(fp.C, {"../algebras/z4.json", "../algebras/z4.json"},
                     root + "/subproducts/fiber_z4_over_z2.json");
  }
  // Sign triple inside S3^3.
  {
    auto s3 = corpus::symmetric3();
    ProductCodec codec({6, 6, 6});
    std::vector<std::int64_t> elements;
    for (El g = 0; g < 6; ++g)
      for (El h = 0; h < 6; ++h)
        for (El k = 0; k < 6; ++k)
          if ((sgn[static_cast<size_t>(g)] + sgn[static_cast<size_t>(h)] +
               sgn[static_cast<size_t>(k)]) % 2 == 0)
            elements.push_back(codec.encode(std::vector<El>{g, h, k}));
    SubproductAlgebra C = SubproductAlgebra::from_elements({s3, s3, s3}, std::move(elements));
    write_subproduct(C,
                     {"../algebras/s3.json", "../algebras/s3.json", "../algebras/s3.json"},
                     root + "/subproducts/sign_triple_s3.json");
  }
  // Triples of Z4 congruent mod 2 in every coordinate.
  {
    auto z4 = corpus::cyclic_group(4);
    ProductCodec codec({4, 4, 4});
    std::vector<std::int64_t> elements;
    for (El a = 0; a < 4; ++a)
      for (El b = 0; b < 4; ++b)
        for (El c = 0; c < 4; ++c)
          if (a % 2 == b % 2 && b % 2 == c % 2)
            elements.push_back(codec.encode(std::vector<El>{a, b, c}));
    SubproductAlgebra C = SubproductAlgebra::from_elements({z4, z4, z4}, std::move(elements));
    write_subproduct(C,
                     {"../algebras/z4.json", "../algebras/z4.json", "../algebras/z4.json"},
                     root + "/subproducts/z4_mod2_triple.json");
  }
  // Sign fiber of S3 x S3 over Z2.
  {
    auto s3 = corpus::symmetric3();
    auto z2 = corpus::cyclic_group(2);
    std::vector<El> sgn_map(6);
    for (El g = 0; g < 6; ++g) sgn_map[static_cast<size_t>(g)] = static_cast<El>(sgn[static_cast<size_t>(g)]);
    FiberProduct fp = fiber_product(s3, s3, z2, sgn_map, sgn_map);
    write_subproduct(fp.C, {"../algebras/s3.json", "../algebras/s3.json"},
                     root + "/subproducts/sign_fiber_s3.json");
  }
  // The order relation inside the squared 2-chain: subdirect, kernels do
  // not permute.
  {
    auto lat2 = corpus::two_chain_lattice();
    SubproductAlgebra C =
        SubproductAlgebra::from_elements({lat2, lat2}, std::vector<std::int64_t>{0, 1, 3});
    write_subproduct(C, {"../algebras/lat2.json", "../algebras/lat2.json"},
                     root + "/subproducts/order_lat2.json");
  }
  // Order submonoid of the squared 2-element multiplicative monoid.
  {
    auto t = corpus::bool_and_monoid();
    SubproductAlgebra C =
        SubproductAlgebra::from_elements({t, t}, std::vector<std::int64_t>{0, 1, 3});
    write_subproduct(C, {"../algebras/bool_and.json", "../algebras/bool_and.json"},
                     root + "/subproducts/order_bool.json");
  }
  // Diagonal of D4 squared.
  {
    auto d4 = corpus::dihedral4();
    ProductCodec codec({8, 8});
    std::vector<std::int64_t> elements;
    for (El a = 0; a < 8; ++a) elements.push_back(codec.encode(std::vector<El>{a, a}));
    SubproductAlgebra C = SubproductAlgebra::from_elements({d4, d4}, std::move(elements));
    write_subproduct(C, {"../algebras/d4.json", "../algebras/d4.json"},
                     root + "/subproducts/diag_d4.json");
  }
  std::cout << "data written under " << root << "\n";
  return 0;
}
