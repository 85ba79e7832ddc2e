#pragma once

#include <optional>
#include <vector>

#include "sdw/algebra.hpp"
#include "sdw/caps.hpp"
#include "sdw/commutator.hpp"
#include "sdw/term.hpp"

namespace sdw {

/// A ternary term together with its full verification table:
/// eval(m, (a,a,b)) = b and eval(m, (b,a,a)) = b for every a, b.
struct MalcevWitness {
  Term term;
  struct Row {
    El a, b, left, right;  ///< left = m(a,a,b), right = m(b,a,a)
  };
  std::vector<Row> table;
};

struct MalcevOutcome {
  enum class Status { found, none, exhausted } status;
  std::optional<MalcevWitness> witness;
  std::int64_t explored = 0;  ///< distinct ternary term functions examined
  std::int64_t budget = 0;
};

/// Searches the free algebra on three generators over V(A) for a Mal'cev
/// term. Only the coordinates constrained by the identities are tracked
/// (the restriction of the free algebra to assignments of the shapes
/// (a,a,b) and (b,a,a)), which is exact: the identities hold in V(A) iff
/// the restricted generators generate the restricted target.
///
/// Outcomes: a verified witness; a definitive "none in V(A)" when the
/// closure completes without one; or "exhausted" when the element budget
/// runs out first. A hint term, when given, is verified before searching.
MalcevOutcome find_malcev_term(const FiniteAlgebra& A, std::int64_t budget = -1,
                               const std::optional<Term>& hint = std::nullopt,
                               const Caps& caps = global_caps());

/// Verifies both Mal'cev identities for a candidate term on the full
/// carrier; returns the witness table on success, the failing pair
/// otherwise.
struct MalcevVerification {
  bool ok;
  std::optional<MalcevWitness> witness;
  El fail_a = -1, fail_b = -1;
};
MalcevVerification verify_malcev_term(const FiniteAlgebra& A, const Term& term);

/// Cached Mal'cev status used to stamp commutator results.
MalcevStatus malcev_status(const FiniteAlgebra& A, const Caps& caps = global_caps());

}  // namespace sdw
