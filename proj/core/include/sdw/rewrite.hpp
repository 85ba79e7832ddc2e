#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdw/error.hpp"

namespace sdw {

/// Words over a small letter alphabet; plain strings like "xyyx".
using Word = std::string;

/// A pair family for a monoid congruence presentation: either one literal
/// pair of words, or a one-parameter family with a single pumped letter
/// block per side, written  u a^i v  with the parameter shared by both
/// sides. The parameter ranges over i >= lo (optionally <= hi).
struct PairFamily {
  struct Side {
    Word prefix;      ///< literal prefix
    char pump = 0;    ///< pumped letter, 0 when none
    Word suffix;      ///< literal suffix
    bool pumped() const { return pump != 0; }
  };
  Side lhs, rhs;
  int lo = 1;
  int hi = -1;  ///< -1 = unbounded
  bool pumped() const { return lhs.pumped() || rhs.pumped(); }
};

struct RewritePresentation {
  std::string alphabet;  ///< letters in order of first appearance
  std::vector<PairFamily> families;

  /// All pairs whose sides fit within max_len (families expanded).
  std::vector<std::pair<Word, Word>> expand(int max_len) const;
};

/// Presentation text format, one family per line:
///   x y^i x = x y x : i >= 1
///   x^2 y^2 = x^2 y
/// Carets abbreviate repetition; `i` marks the pumped block. Words may also
/// be written compactly ("xyx"). Lines starting with '#' are comments.
RewritePresentation parse_presentation(const std::string& text);
RewritePresentation load_presentation(const std::string& path);

/// Parses a single word, accepting "xyyx" and "x y^3 x".
Word parse_word(const std::string& text);

struct RelateBounds {
  int max_len = 12;
  std::int64_t max_states = 1'000'000;
};

/// Bidirectional breadth-first search over single-factor replacements by
/// generator pairs (both directions), confined to words within the length
/// bound. Related(path) gives the rewrite chain from u to v; the relation
/// is only semi-decided, so failure is NotWithinBounds, never "no".
struct RelateResult {
  enum class Status { related, not_within_bounds } status;
  std::vector<Word> path;      ///< from u to v when related
  std::string bound_hit;       ///< which bound stopped the search
  std::int64_t states = 0;
};
RelateResult monoid_relate(const RewritePresentation& pres, const Word& u, const Word& v,
                           const RelateBounds& bounds = {});

/// Verifies that every expanded generator pair of `sigma` and `tau` (pump
/// index <= pump_bound) is related under `rho` within the bounds, that the
/// bounded closures of sigma and tau intersect trivially up to
/// intersect_len, and that the letter-count invariants hold (sigma
/// preserves the count of `sigma_letter`, tau of `tau_letter`).
struct CongJoinClaimReport {
  bool all_generators_related = true;
  std::vector<std::pair<Word, Word>> unrelated;  ///< pairs that missed the bound
  bool intersection_trivial = true;
  std::vector<std::pair<Word, Word>> common_pairs;  ///< nontrivial common pairs found
  bool sigma_invariant = true;  ///< every sigma generator preserves sigma_letter count
  bool tau_invariant = true;
  std::int64_t checked_generators = 0;
  std::int64_t intersection_words = 0;
};
CongJoinClaimReport check_cong_join_claim(const RewritePresentation& sigma,
                                          const RewritePresentation& tau,
                                          const RewritePresentation& rho, char sigma_letter,
                                          char tau_letter, int pump_bound,
                                          const RelateBounds& relate_bounds = {},
                                          int intersect_len = 8);

/// Partition of all words of length <= max_len into congruence classes of
/// the bounded closure (single-factor replacements staying within the
/// bound). Words are indexed in length-lexicographic order.
std::vector<Word> words_up_to(const std::string& alphabet, int max_len);
std::vector<int> bounded_classes(const RewritePresentation& pres, int max_len);

/// Bounded evidence that a presentation is not finitely generated: for each
/// expanded generator pair (pump index <= pump_bound), search whether the
/// pair is still related when that one instance is removed (the rest of its
/// family stays). Pairs not derivable from the others must appear in every
/// generating set of the bounded fragment. The verdicts are bounded
/// evidence only, never a proof about the full congruence.
struct IndependenceReport {
  struct Entry {
    Word lhs, rhs;
    bool derivable_without;
  };
  std::vector<Entry> entries;
  int independent = 0;
  int derivable = 0;
};
IndependenceReport bounded_independence(const RewritePresentation& pres, int pump_bound,
                                        const RelateBounds& bounds = {});

}  // namespace sdw
