#pragma once

#include <string>
#include <vector>

#include "sdw/algebra.hpp"
#include "sdw/reduct.hpp"

namespace sdw {

/// Hash-consed lattice terms in canonical form: associative-commutative
/// chains are flattened, children sorted and deduplicated, singletons
/// collapsed. Terms are ids into a shared arena.
class LatticeTermArena {
 public:
  enum class Kind { generator, meet, join };
  struct Node {
    Kind kind;
    int generator = -1;          ///< for Kind::generator, index into names()
    std::vector<int> children;   ///< sorted ids, size >= 2
  };

  int generator(const std::string& name);
  int meet(std::vector<int> children);
  int join(std::vector<int> children);
  int meet2(int a, int b) { return meet({a, b}); }
  int join2(int a, int b) { return join({a, b}); }

  const Node& node(int id) const { return nodes_[static_cast<size_t>(id)]; }
  const std::vector<std::string>& names() const { return names_; }
  int term_size(int id) const;  ///< node count of the fully expanded tree

  std::string to_string(int id) const;

  /// Parses `x /\ (y \/ z)`; meet binds tighter than join. Generator names
  /// are identifiers.
  int parse(const std::string& text);

 private:
  int intern(Node n);
  std::vector<Node> nodes_;
  std::vector<std::string> names_;
  std::vector<int> name_ids_;
};

/// Decides p <= q in the free lattice by the standard recursion on canonical
/// terms, memoized on term-id pairs:
///   - a join is below q iff every joinand is;
///   - p is below a meet iff it is below every meetand;
///   - a generator is below a join iff it is below some joinand;
///   - a meet is below a generator iff some meetand is;
///   - a meet is below a join iff some meetand is below the join or the
///     meet is below some joinand;
///   - generators compare by equality.
class WhitmanSolver {
 public:
  explicit WhitmanSolver(LatticeTermArena& arena) : arena_(&arena) {}
  bool leq(int p, int q);

  /// Human-readable refutation: the failing branch of the recursion.
  std::string explain_failure(int p, int q);

 private:
  LatticeTermArena* arena_;
  std::vector<std::vector<signed char>> memo_;  // -1 unknown, 0 false, 1 true
  signed char& cell(int p, int q);
};

/// The recursive triple x_{n+1} = x v (y_n ^ z_n), y_{n+1} = y v (x_n ^ z_n),
/// z_{n+1} = z v (x_n ^ y_n) over generators x, y, z.
struct XyzTriple {
  int x, y, z;
};
XyzTriple xyz_sequence(LatticeTermArena& arena, int n);

/// Bottom-up evaluation of a lattice term in an algebra with verified
/// lattice reduct. `assignment` maps generator index -> carrier element.
El lattice_eval(const LatticeTermArena& arena, int term, const FiniteAlgebra& L,
                const std::vector<El>& assignment);

}  // namespace sdw
