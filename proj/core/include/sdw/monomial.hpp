#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdw/rewrite.hpp"

namespace sdw {

/// Free-ring monomials are nonempty words over the ring alphabet; generator
/// families reuse the pumped pattern language of presentations (pattern
/// u a^i v, one pumped block).
using Monomial = Word;

enum class Sidedness { two_sided, left, right };

struct MonomialGenerators {
  std::string alphabet;
  std::vector<PairFamily::Side> gens;  ///< literal or single-pump patterns
  std::vector<int> lo;                 ///< pump lower bound per generator
};

/// Generator file format: one monomial per line, e.g. `x y^i x : i >= 1` or
/// `x^2 y^2`. Comments with '#'.
MonomialGenerators parse_monomial_generators(const std::string& text);
MonomialGenerators load_monomial_generators(const std::string& path);

/// Membership of m in the monomial ideal: some generator instance occurs as
/// a factor of m (two-sided), as a prefix (right ideal g.R), or as a suffix
/// (left ideal R.g). The witness is the matched generator instance and its
/// position.
struct MembershipWitness {
  Monomial generator;  ///< the matched instance
  int position;        ///< offset of the factor within m
};
struct MembershipResult {
  bool member;
  std::optional<MembershipWitness> witness;
};
MembershipResult monomial_ideal_member(const MonomialGenerators& gens, const Monomial& m,
                                       Sidedness sided);

/// Degree-bounded comparison: membership in I cap J (via two two-sided
/// membership tests) against membership in the ideal generated by the
/// candidate set, for every monomial of degree <= d.
struct IntersectionReport {
  bool agree = true;
  std::int64_t checked = 0;
  std::vector<Monomial> in_intersection_not_candidate;
  std::vector<Monomial> in_candidate_not_intersection;
};
IntersectionReport verify_intersection_generation(const MonomialGenerators& gens_i,
                                                  const MonomialGenerators& gens_j,
                                                  const MonomialGenerators& candidate,
                                                  int degree_bound);

}  // namespace sdw
