#pragma once

#include <string>
#include <vector>

#include "sdw/algebra.hpp"

namespace sdw {

/// A term over a signature: leaves are variable indices, internal nodes are
/// signature symbols with arity-many children. Stored as a flat arena; the
/// root is the last node.
class Term {
 public:
  struct Node {
    int symbol = -1;  // -1 => variable leaf
    int var = -1;     // variable index when symbol == -1
    std::vector<int> kids;
  };

  static Term variable(int index);
  static Term apply(int symbol, const std::vector<Term>& args);

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return static_cast<int>(nodes_.size()) - 1; }
  bool empty() const { return nodes_.empty(); }

  /// 1 + the largest variable index occurring, 0 for variable-free terms.
  int num_vars() const;

  /// Number of nodes.
  int size() const { return static_cast<int>(nodes_.size()); }

  /// Functional rendering, e.g. "mul(x0, inv(x1))".
  std::string to_string(const Signature& sig) const;

 private:
  std::vector<Node> nodes_;
};

/// Bottom-up evaluation by table lookup. The assignment must cover all
/// variables of t; arities are validated against the signature of A.
El eval_term(const FiniteAlgebra& A, const Term& t, std::span<const El> assignment);

/// Parses the functional term grammar: `name(arg, ...)` with variables
/// `x0, x1, ...`. Symbol names come from the signature.
Term parse_term(const Signature& sig, const std::string& text);

}  // namespace sdw
