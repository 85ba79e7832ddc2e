#include "sdw/generation.hpp"

#include <algorithm>

#include "sdw/algebra_ops.hpp"
#include "sdw/closure.hpp"
#include "sdw/commutator.hpp"
#include "sdw/congruence.hpp"

namespace sdw {

namespace {

std::vector<std::int64_t> closure_flat(const SubproductAlgebra& C,
                                       const std::vector<std::int64_t>& gens, const Caps& caps) {
  std::vector<std::vector<El>> gen_coords;
  for (std::int64_t g : gens) gen_coords.push_back(C.codec().decode(g));
  std::vector<const FiniteAlgebra*> raw;
  for (const auto& f : C.factors()) raw.push_back(f.get());
  TupleUniverse universe(std::move(raw));
  ClosureOptions opts;
  opts.max_elements = caps.max_carrier;
  ClosureResult cl = close_under_ops(universe, gen_coords, opts);
  if (cl.hit_budget) throw BoundError("max_carrier", "closure budget exhausted");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<size_t>(cl.count));
  for (std::int64_t i = 0; i < cl.count; ++i) out.push_back(C.codec().encode(cl.at(i)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

GenerationCertificate lift_generators(const SubproductAlgebra& C, const std::vector<El>& X,
                                      const std::vector<El>& Y,
                                      const std::vector<std::pair<El, El>>& U, const Term& malcev,
                                      const Caps& caps) {
  if (C.num_factors() != 2) throw InputError("lift_generators: exactly 2 factors required");
  SubdirectCheck sd = is_subdirect(C);
  if (!sd.subdirect) throw InputError("lift_generators: C is not subdirect");
  const FiniteAlgebra& A = *C.factor(0);
  const FiniteAlgebra& B = *C.factor(1);

  if (static_cast<int>(subuniverse_closure(A, X, caps).size()) != A.size())
    throw InputError("lift_generators: X does not generate the left factor");
  if (static_cast<int>(subuniverse_closure(B, Y, caps).size()) != B.size())
    throw InputError("lift_generators: Y does not generate the right factor");

  FactorKernels fk = factor_kernels(C, caps);
  std::vector<std::pair<El, El>> upairs(U.begin(), U.end());
  Partition generated = cg(B, upairs, nullptr, caps);
  if (generated != fk.lambda_right)
    throw InputError("lift_generators: U does not generate the right factor kernel");

  if (!verify_malcev_term(A, malcev).ok || !verify_malcev_term(B, malcev).ok)
    throw InputError("lift_generators: term is not Mal'cev on both factors");

  std::int64_t nb = B.size();
  auto flat = [nb](El a, El b) { return static_cast<std::int64_t>(a) * nb + b; };

  GenerationCertificate cert;
  for (El x : X) {
    El bx = -1;
    for (El b = 0; b < nb && bx < 0; ++b)
      if (C.contains(flat(x, b))) bx = b;
    if (bx < 0) throw Error("lift_generators: subdirectness witness missing");
    cert.generators.push_back(flat(x, bx));
    cert.evidence.push_back("left generator " + std::to_string(x) + " lifted with " +
                            std::to_string(bx));
  }
  for (El y : Y) {
    El ay = -1;
    for (El a = 0; a < A.size() && ay < 0; ++a)
      if (C.contains(flat(a, y))) ay = a;
    if (ay < 0) throw Error("lift_generators: subdirectness witness missing");
    cert.generators.push_back(flat(ay, y));
    cert.evidence.push_back("right generator " + std::to_string(y) + " lifted with " +
                            std::to_string(ay));
  }
  for (auto [u, v] : U) {
    El auv = -1;
    for (El a = 0; a < A.size() && auv < 0; ++a)
      if (C.contains(flat(a, u)) && C.contains(flat(a, v))) auv = a;
    if (auv < 0)
      throw InputError("lift_generators: no common lift for kernel pair (" + std::to_string(u) +
                       "," + std::to_string(v) +
                       "); C is not a fiber product or the kernel is mis-specified");
    cert.generators.push_back(flat(auv, u));
    cert.generators.push_back(flat(auv, v));
    cert.evidence.push_back("kernel pair (" + std::to_string(u) + "," + std::to_string(v) +
                            ") lifted through " + std::to_string(auv));
  }
  std::sort(cert.generators.begin(), cert.generators.end());
  cert.generators.erase(std::unique(cert.generators.begin(), cert.generators.end()),
                        cert.generators.end());

  std::vector<std::int64_t> closed = closure_flat(C, cert.generators, caps);
  cert.closure_size = static_cast<std::int64_t>(closed.size());
  cert.generates = closed == C.elements();
  if (!cert.generates) cert.failed_clause = "closure";
  return cert;
}

FactorKernelCommutators factor_kernel_commutators(const SubproductAlgebra& C, const Caps& caps) {
  int n = C.num_factors();
  if (n < 2) throw InputError("factor_kernel_commutators: at least 2 factors required");
  if (n - 1 > caps.max_cube_arity)
    throw BoundError("max_cube_arity",
                     "factor_kernel_commutators: " + std::to_string(n) + " factors need " +
                         std::to_string(n - 1) + "-ary commutators (cap " +
                         std::to_string(caps.max_cube_arity) + ")");
  FactorKernelCommutators out;
  out.pairs = pair_report(C, caps);
  for (int j = 0; j < n; ++j) {
    std::vector<Partition> lambdas;
    for (const PairEntry& e : out.pairs.entries) {
      if (e.j == j) lambdas.push_back(e.lambda_ij);
      if (e.i == j) lambdas.push_back(e.lambda_ji);
    }
    CommutatorEngine engine(C.factor(j), caps);
    out.gammas.push_back(engine.commutator(lambdas));
  }
  return out;
}

ClassUnionCheck verify_class_union(const SubproductAlgebra& C, const Caps& caps) {
  ClassUnionCheck out{false, factor_kernel_commutators(C, caps), {}};
  out.detail = union_of_classes(C, out.gammas.gammas);
  out.holds = out.detail.is_union;
  return out;
}

GenerationCertificate fg_certificate(const SubproductAlgebra& C,
                                     const std::vector<std::int64_t>& X, const Caps& caps) {
  GenerationCertificate cert;
  cert.generators = X;
  std::sort(cert.generators.begin(), cert.generators.end());
  cert.generators.erase(std::unique(cert.generators.begin(), cert.generators.end()),
                        cert.generators.end());
  for (std::int64_t x : cert.generators)
    if (!C.contains(x)) throw InputError("fg_certificate: candidate element not in C");

  FactorKernelCommutators fkc = factor_kernel_commutators(C, caps);
  int n = C.num_factors();

  // Clause (i): X and C have the same image modulo gamma_1 x .. x gamma_n.
  std::vector<std::vector<int>> gamma_idx;
  std::vector<std::int64_t> radix;
  for (int i = 0; i < n; ++i) {
    gamma_idx.push_back(fkc.gammas[static_cast<size_t>(i)].block_index());
    radix.push_back(fkc.gammas[static_cast<size_t>(i)].block_count());
  }
  auto gamma_key = [&](std::int64_t flat) {
    std::vector<El> coords = C.codec().decode(flat);
    std::int64_t key = 0;
    for (int i = 0; i < n; ++i)
      key = key * radix[static_cast<size_t>(i)] +
            gamma_idx[static_cast<size_t>(i)][static_cast<size_t>(coords[static_cast<size_t>(i)])];
    return key;
  };
  std::vector<std::int64_t> closedX = closure_flat(C, cert.generators, caps);
  std::vector<std::int64_t> keysX, keysC;
  for (std::int64_t x : closedX) keysX.push_back(gamma_key(x));
  for (std::int64_t c : C.elements()) keysC.push_back(gamma_key(c));
  std::sort(keysX.begin(), keysX.end());
  keysX.erase(std::unique(keysX.begin(), keysX.end()), keysX.end());
  std::sort(keysC.begin(), keysC.end());
  keysC.erase(std::unique(keysC.begin(), keysC.end()), keysC.end());
  if (keysX != keysC) {
    cert.failed_clause = "quotient";
    cert.evidence.push_back("X misses classes of the commutator quotient");
    cert.closure_size = static_cast<std::int64_t>(closedX.size());
    return cert;
  }
  cert.evidence.push_back("X covers C modulo the factor-kernel commutators");

  // Clause (ii): pairwise projections of X generate those of C.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SubproductAlgebra Cij = project(C, {i, j}, caps);
      std::vector<std::int64_t> gens_ij;
      for (std::int64_t x : cert.generators) {
        std::vector<El> coords = C.codec().decode(x);
        gens_ij.push_back(Cij.codec().encode(
            std::vector<El>{coords[static_cast<size_t>(i)], coords[static_cast<size_t>(j)]}));
      }
      std::vector<std::int64_t> closed_ij = closure_flat(Cij, gens_ij, caps);
      if (closed_ij != Cij.elements()) {
        cert.failed_clause =
            "pair(" + std::to_string(i) + "," + std::to_string(j) + ")";
        cert.evidence.push_back("projection of X does not generate the (" + std::to_string(i) +
                                "," + std::to_string(j) + ") projection of C");
        cert.closure_size = static_cast<std::int64_t>(closedX.size());
        return cert;
      }
      cert.evidence.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") projection generated");
    }

  cert.closure_size = static_cast<std::int64_t>(closedX.size());
  cert.generates = closedX == C.elements();
  if (!cert.generates) cert.failed_clause = "closure";
  return cert;
}

std::vector<std::int64_t> greedy_generating_set(const SubproductAlgebra& C, const Caps& caps) {
  std::vector<std::int64_t> X;
  std::vector<std::int64_t> closed;
  while (true) {
    if (!X.empty()) {
      closed = closure_flat(C, X, caps);
      if (closed == C.elements()) return X;
    }
    std::int64_t best = -1, best_size = -1;
    for (std::int64_t cand : C.elements()) {
      if (std::binary_search(closed.begin(), closed.end(), cand)) continue;
      std::vector<std::int64_t> trial = X;
      trial.push_back(cand);
      std::int64_t sz = static_cast<std::int64_t>(closure_flat(C, trial, caps).size());
      if (sz > best_size) {
        best_size = sz;
        best = cand;
      }
    }
    if (best < 0) throw Error("greedy_generating_set: no progress");
    X.push_back(best);
    if (best_size == C.size()) return X;
  }
}

}  // namespace sdw
