#include "sdw/term.hpp"

#include <algorithm>
#include <cctype>

namespace sdw {

Term Term::variable(int index) {
  if (index < 0) throw InputError("term: negative variable index");
  Term t;
  t.nodes_.push_back(Node{-1, index, {}});
  return t;
}

Term Term::apply(int symbol, const std::vector<Term>& args) {
  Term t;
  std::vector<int> kids;
  for (const Term& a : args) {
    int offset = static_cast<int>(t.nodes_.size());
    for (const Node& n : a.nodes_) {
      Node m = n;
      for (int& k : m.kids) k += offset;
      t.nodes_.push_back(std::move(m));
    }
    kids.push_back(offset + a.root());
  }
  t.nodes_.push_back(Node{symbol, -1, std::move(kids)});
  return t;
}

int Term::num_vars() const {
  int m = 0;
  for (const Node& n : nodes_)
    if (n.symbol < 0) m = std::max(m, n.var + 1);
  return m;
}

std::string Term::to_string(const Signature& sig) const {
  if (nodes_.empty()) return "<empty>";
  std::string out;
  // Iterative rendering to survive deep terms.
  struct Frame {
    int node;
    size_t next_kid = 0;
  };
  std::vector<Frame> stack{{root()}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Node& n = nodes_[static_cast<size_t>(f.node)];
    if (n.symbol < 0) {
      out += "x" + std::to_string(n.var);
      stack.pop_back();
      continue;
    }
    if (f.next_kid == 0) {
      out += sig.name(n.symbol);
      if (!n.kids.empty()) out += "(";
    }
    if (f.next_kid < n.kids.size()) {
      if (f.next_kid > 0) out += ", ";
      int kid = n.kids[f.next_kid++];
      stack.push_back(Frame{kid});
    } else {
      if (!n.kids.empty()) out += ")";
      stack.pop_back();
    }
  }
  return out;
}

El eval_term(const FiniteAlgebra& A, const Term& t, std::span<const El> assignment) {
  if (t.empty()) throw InputError("eval_term: empty term");
  const auto& nodes = t.nodes();
  std::vector<El> val(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    const Term::Node& n = nodes[i];
    if (n.symbol < 0) {
      if (n.var >= static_cast<int>(assignment.size()))
        throw InputError("eval_term: variable x" + std::to_string(n.var) +
                         " not covered by assignment of size " +
                         std::to_string(assignment.size()));
      El a = assignment[static_cast<size_t>(n.var)];
      if (a < 0 || a >= A.size()) throw InputError("eval_term: assignment value out of carrier");
      val[i] = a;
    } else {
      if (n.symbol >= A.signature().size())
        throw InputError("eval_term: unknown symbol index " + std::to_string(n.symbol));
      if (static_cast<int>(n.kids.size()) != A.signature().arity(n.symbol))
        throw InputError("eval_term: arity mismatch at '" + A.signature().name(n.symbol) + "'");
      std::vector<El> args(n.kids.size());
      for (size_t k = 0; k < n.kids.size(); ++k) args[k] = val[static_cast<size_t>(n.kids[k])];
      val[i] = A.apply(n.symbol, args);
    }
  }
  return val[static_cast<size_t>(t.root())];
}

namespace {

struct Parser {
  const Signature& sig;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '+' || text[pos] == '-' || text[pos] == '*' || text[pos] == '.'))
      ++pos;
    if (start == pos) throw InputError("term parse error at position " + std::to_string(pos));
    return text.substr(start, pos - start);
  }

  Term expr() {
    std::string id = ident();
    if (id.size() >= 2 && id[0] == 'x' && std::isdigit(static_cast<unsigned char>(id[1]))) {
      bool all_digits = true;
      for (size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) all_digits = false;
      if (all_digits) return Term::variable(std::stoi(id.substr(1)));
    }
    int sym = sig.find(id);
    if (sym < 0) throw InputError("term parse error: unknown symbol '" + id + "'");
    std::vector<Term> args;
    if (eat('(')) {
      if (!eat(')')) {
        do {
          args.push_back(expr());
        } while (eat(','));
        if (!eat(')')) throw InputError("term parse error: expected ')'");
      }
    }
    if (static_cast<int>(args.size()) != sig.arity(sym))
      throw InputError("term parse error: '" + id + "' expects " +
                       std::to_string(sig.arity(sym)) + " arguments, got " +
                       std::to_string(args.size()));
    return Term::apply(sym, args);
  }
};

}  // namespace

Term parse_term(const Signature& sig, const std::string& text) {
  Parser p{sig, text};
  Term t = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw InputError("term parse error: trailing input at position " + std::to_string(p.pos));
  return t;
}

}  // namespace sdw
