#include "sdw/malcev.hpp"

#include <cstring>
#include <map>

#include "sdw/closure.hpp"

namespace sdw {

namespace {

Term recipe_term(const ClosureResult& cl, std::int64_t id) {
  // Recipes only reference earlier ids, so a forward pass suffices.
  std::vector<Term> memo(static_cast<size_t>(id) + 1);
  for (std::int64_t i = 0; i <= id; ++i) {
    const ClosureResult::Recipe& r = cl.recipes[static_cast<size_t>(i)];
    if (r.op < 0) {
      memo[static_cast<size_t>(i)] = Term::variable(static_cast<int>(r.args[0]));
    } else {
      std::vector<Term> kids;
      for (std::int64_t a : r.args) kids.push_back(memo[static_cast<size_t>(a)]);
      memo[static_cast<size_t>(i)] = Term::apply(r.op, kids);
    }
  }
  return memo[static_cast<size_t>(id)];
}

}  // namespace

MalcevVerification verify_malcev_term(const FiniteAlgebra& A, const Term& term) {
  if (term.num_vars() > 3) throw InputError("malcev: term must use at most x0, x1, x2");
  MalcevWitness w;
  w.term = term;
  for (El a = 0; a < A.size(); ++a)
    for (El b = 0; b < A.size(); ++b) {
      El left = eval_term(A, term, std::vector<El>{a, a, b});
      El right = eval_term(A, term, std::vector<El>{b, a, a});
      if (left != b || right != b) return {false, std::nullopt, a, b};
      w.table.push_back({a, b, left, right});
    }
  return {true, std::move(w), -1, -1};
}

MalcevOutcome find_malcev_term(const FiniteAlgebra& A, std::int64_t budget,
                               const std::optional<Term>& hint, const Caps& caps) {
  if (budget < 0) budget = caps.malcev_budget;
  MalcevOutcome out;
  out.budget = budget;

  if (hint) {
    MalcevVerification v = verify_malcev_term(A, *hint);
    if (v.ok) {
      out.status = MalcevOutcome::Status::found;
      out.witness = std::move(v.witness);
      return out;
    }
    throw InputError("malcev: hint term fails at (a,b) = (" + std::to_string(v.fail_a) + "," +
                     std::to_string(v.fail_b) + ")");
  }

  int n = A.size();
  std::int64_t ncoords64 = 2LL * n * n - n;
  if (ncoords64 > caps.max_carrier)
    throw BoundError("max_carrier", "malcev: constrained coordinate space exceeds cap");
  int ncoords = static_cast<int>(ncoords64);

  // Constrained assignments: (a,a,b) for all a,b, then (b,a,a) for b != a.
  // A ternary term is Mal'cev iff its restriction to these assignments
  // equals `target`.
  std::vector<El> proj1, proj2, proj3, target;
  proj1.reserve(static_cast<size_t>(ncoords));
  proj2.reserve(static_cast<size_t>(ncoords));
  proj3.reserve(static_cast<size_t>(ncoords));
  target.reserve(static_cast<size_t>(ncoords));
  for (El a = 0; a < n; ++a)
    for (El b = 0; b < n; ++b) {
      proj1.push_back(a);
      proj2.push_back(a);
      proj3.push_back(b);
      target.push_back(b);
    }
  for (El a = 0; a < n; ++a)
    for (El b = 0; b < n; ++b) {
      if (b == a) continue;
      proj1.push_back(b);
      proj2.push_back(a);
      proj3.push_back(a);
      target.push_back(b);
    }

  TupleUniverse universe(A, ncoords);
  ClosureOptions opts;
  opts.max_elements = budget;
  opts.track_recipes = true;
  opts.stop_when = [&target](std::span<const El> f) {
    return std::memcmp(f.data(), target.data(), target.size() * sizeof(El)) == 0;
  };
  ClosureResult cl = close_under_ops(universe, {proj1, proj2, proj3}, opts);
  out.explored = cl.count;

  if (cl.stop_index >= 0) {
    Term term = recipe_term(cl, cl.stop_index);
    MalcevVerification v = verify_malcev_term(A, term);
    if (!v.ok) throw Error("malcev: extracted term failed verification");
    out.status = MalcevOutcome::Status::found;
    out.witness = std::move(v.witness);
    return out;
  }
  out.status = cl.hit_budget ? MalcevOutcome::Status::exhausted : MalcevOutcome::Status::none;
  return out;
}

MalcevStatus malcev_status(const FiniteAlgebra& A, const Caps& caps) {
  try {
    MalcevOutcome out = find_malcev_term(A, caps.malcev_budget, std::nullopt, caps);
    switch (out.status) {
      case MalcevOutcome::Status::found:
        return MalcevStatus::verified;
      case MalcevOutcome::Status::none:
        return MalcevStatus::none;
      default:
        return MalcevStatus::unknown;
    }
  } catch (const BoundError&) {
    return MalcevStatus::unknown;
  }
}

}  // namespace sdw
