#include "sdw/algebra_ops.hpp"

#include <algorithm>
#include <numeric>

#include "sdw/closure.hpp"

namespace sdw {

namespace {

Term recipe_to_term(const ClosureResult& cl, std::int64_t id, std::vector<Term>& memo,
                    std::vector<char>& done) {
  if (done[static_cast<size_t>(id)]) return memo[static_cast<size_t>(id)];
  const ClosureResult::Recipe& r = cl.recipes[static_cast<size_t>(id)];
  Term t;
  if (r.op < 0) {
    t = Term::variable(static_cast<int>(r.args[0]));
  } else {
    std::vector<Term> kids;
    kids.reserve(r.args.size());
    for (std::int64_t a : r.args) kids.push_back(recipe_to_term(cl, a, memo, done));
    t = Term::apply(r.op, kids);
  }
  memo[static_cast<size_t>(id)] = t;
  done[static_cast<size_t>(id)] = 1;
  return t;
}

}  // namespace

std::vector<DerivedElement> subuniverse_closure(const FiniteAlgebra& A, const std::vector<El>& X,
                                                const Caps& caps) {
  for (El x : X)
    if (x < 0 || x >= A.size())
      throw InputError("subuniverse_closure: generator " + std::to_string(x) + " out of carrier");
  TupleUniverse universe(A, 1);
  std::vector<std::vector<El>> gens;
  gens.reserve(X.size());
  for (El x : X) gens.push_back({x});
  ClosureOptions opts;
  opts.track_recipes = true;
  opts.max_elements = caps.max_carrier;
  ClosureResult cl = close_under_ops(universe, gens, opts);
  if (cl.hit_budget)
    throw BoundError("max_carrier", "subuniverse_closure: element budget exhausted");

  std::vector<DerivedElement> out(static_cast<size_t>(cl.count));
  std::vector<Term> memo(static_cast<size_t>(cl.count));
  std::vector<char> done(static_cast<size_t>(cl.count), 0);
  for (std::int64_t i = 0; i < cl.count; ++i) {
    out[static_cast<size_t>(i)].element = cl.at(i)[0];
    out[static_cast<size_t>(i)].recipe = recipe_to_term(cl, i, memo, done);
  }
  return out;
}

El replay_recipe(const FiniteAlgebra& A, const DerivedElement& d, const std::vector<El>& X) {
  return eval_term(A, d.recipe, X);
}

std::optional<CompatibilityViolation> compatibility_violation(const FiniteAlgebra& A,
                                                              const Partition& theta) {
  if (theta.size() != A.size()) throw InputError("compatibility: partition size mismatch");
  int n = A.size();
  const Signature& sig = A.signature();
  // A partition is compatible iff replacing one argument by a related one
  // never moves the image to a different block.
  for (int op = 0; op < sig.size(); ++op) {
    int r = sig.arity(op);
    if (r == 0) continue;
    std::vector<El> args(static_cast<size_t>(r), 0);
    while (true) {
      El base = A.apply(op, args);
      for (int p = 0; p < r; ++p) {
        El orig = args[static_cast<size_t>(p)];
        for (El v = 0; v < n; ++v) {
          if (v == orig || !theta.same_block(orig, v)) continue;
          std::vector<El> args2 = args;
          args2[static_cast<size_t>(p)] = v;
          El other = A.apply(op, args2);
          if (!theta.same_block(base, other))
            return CompatibilityViolation{op, args, std::move(args2)};
        }
      }
      int i = r - 1;
      while (i >= 0 && args[static_cast<size_t>(i)] == n - 1) {
        args[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++args[static_cast<size_t>(i)];
    }
  }
  return std::nullopt;
}

Quotient quotient(const FiniteAlgebra& A, const Partition& theta, std::string name) {
  if (auto violation = compatibility_violation(A, theta)) {
    std::string msg = "quotient: partition is not a congruence of '" + A.name() +
                      "': operation '" + A.signature().name(violation->op) + "' maps related tuples (";
    for (size_t i = 0; i < violation->args_u.size(); ++i)
      msg += (i ? "," : "") + std::to_string(violation->args_u[i]);
    msg += ") and (";
    for (size_t i = 0; i < violation->args_v.size(); ++i)
      msg += (i ? "," : "") + std::to_string(violation->args_v[i]);
    msg += ") to unrelated values";
    throw InputError(msg);
  }

  std::vector<int> block_of = theta.block_index();
  std::vector<El> reps;
  reps.reserve(static_cast<size_t>(theta.block_count()));
  for (El x = 0; x < A.size(); ++x)
    if (theta.rep(x) == x) reps.push_back(x);
  int m = static_cast<int>(reps.size());

  const Signature& sig = A.signature();
  std::vector<std::vector<El>> tables(static_cast<size_t>(sig.size()));
  for (int op = 0; op < sig.size(); ++op) {
    int r = sig.arity(op);
    std::size_t entries = 1;
    for (int i = 0; i < r; ++i) entries *= static_cast<std::size_t>(m);
    std::vector<El>& table = tables[static_cast<size_t>(op)];
    table.resize(entries);
    std::vector<El> args(static_cast<size_t>(r));
    for (std::size_t idx = 0; idx < entries; ++idx) {
      std::size_t rest = idx;
      for (int i = r; i-- > 0;) {
        args[static_cast<size_t>(i)] = reps[rest % static_cast<size_t>(m)];
        rest /= static_cast<size_t>(m);
      }
      table[idx] = static_cast<El>(block_of[static_cast<size_t>(A.apply(op, args))]);
    }
  }
  if (name.empty()) name = A.name() + "/~";
  Quotient q;
  q.algebra = std::make_shared<FiniteAlgebra>(std::move(name), m, sig, std::move(tables));
  q.surjection = std::move(block_of);
  q.block_rep = std::move(reps);
  return q;
}

HomCheck is_homomorphism(const FiniteAlgebra& A, const FiniteAlgebra& B,
                         const std::vector<El>& f) {
  if (!(A.signature() == B.signature()))
    throw InputError("is_homomorphism: signature mismatch");
  if (static_cast<int>(f.size()) != A.size())
    throw InputError("is_homomorphism: map must be total on the domain carrier");
  for (El v : f)
    if (v < 0 || v >= B.size()) throw InputError("is_homomorphism: value out of codomain");

  const Signature& sig = A.signature();
  int n = A.size();
  for (int op = 0; op < sig.size(); ++op) {
    int r = sig.arity(op);
    std::vector<El> args(static_cast<size_t>(r), 0);
    std::vector<El> mapped(static_cast<size_t>(r));
    while (true) {
      for (int i = 0; i < r; ++i) mapped[static_cast<size_t>(i)] = f[static_cast<size_t>(args[static_cast<size_t>(i)])];
      El lhs = f[static_cast<size_t>(A.apply(op, args))];
      El rhs = B.apply(op, mapped);
      if (lhs != rhs) return {false, HomWitness{op, args, lhs, rhs}};
      int i = r - 1;
      while (i >= 0 && args[static_cast<size_t>(i)] == n - 1) {
        args[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++args[static_cast<size_t>(i)];
    }
  }
  return {true, std::nullopt};
}

bool is_surjective(const FiniteAlgebra& B, const std::vector<El>& f) {
  std::vector<char> hit(static_cast<size_t>(B.size()), 0);
  for (El v : f) hit[static_cast<size_t>(v)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool brute_force_isomorphic(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  if (A.size() != B.size() || !(A.signature() == B.signature())) return false;
  if (A.size() > 8) throw InputError("brute_force_isomorphic: carriers larger than 8");
  std::vector<El> perm(static_cast<size_t>(A.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_homomorphism(A, B, perm).ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace sdw
