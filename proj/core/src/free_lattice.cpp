#include "sdw/free_lattice.hpp"

#include <algorithm>
#include <cctype>

namespace sdw {

int LatticeTermArena::intern(Node n) {
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& m = nodes_[i];
    if (m.kind == n.kind && m.generator == n.generator && m.children == n.children)
      return static_cast<int>(i);
  }
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int LatticeTermArena::generator(const std::string& name) {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return name_ids_[i];
  names_.push_back(name);
  Node n;
  n.kind = Kind::generator;
  n.generator = static_cast<int>(names_.size()) - 1;
  int id = intern(std::move(n));
  name_ids_.push_back(id);
  return id;
}

namespace {

void flatten_into(const LatticeTermArena& arena, LatticeTermArena::Kind kind, int id,
                  std::vector<int>& out) {
  const auto& n = arena.node(id);
  if (n.kind == kind) {
    for (int c : n.children) flatten_into(arena, kind, c, out);
  } else {
    out.push_back(id);
  }
}

}  // namespace

int LatticeTermArena::meet(std::vector<int> children) {
  if (children.empty()) throw InputError("lattice term: empty meet");
  std::vector<int> flat;
  for (int c : children) flatten_into(*this, Kind::meet, c, flat);
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.size() == 1) return flat[0];
  Node n;
  n.kind = Kind::meet;
  n.children = std::move(flat);
  return intern(std::move(n));
}

int LatticeTermArena::join(std::vector<int> children) {
  if (children.empty()) throw InputError("lattice term: empty join");
  std::vector<int> flat;
  for (int c : children) flatten_into(*this, Kind::join, c, flat);
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.size() == 1) return flat[0];
  Node n;
  n.kind = Kind::join;
  n.children = std::move(flat);
  return intern(std::move(n));
}

int LatticeTermArena::term_size(int id) const {
  const Node& n = node(id);
  if (n.kind == Kind::generator) return 1;
  int s = 1;
  for (int c : n.children) s += term_size(c);
  return s;
}

std::string LatticeTermArena::to_string(int id) const {
  const Node& n = node(id);
  if (n.kind == Kind::generator) return names_[static_cast<size_t>(n.generator)];
  std::string sep = n.kind == Kind::meet ? " /\\ " : " \\/ ";
  std::string out;
  for (size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += sep;
    const Node& c = node(n.children[i]);
    bool parens = c.kind != Kind::generator;
    if (parens) out += "(";
    out += to_string(n.children[i]);
    if (parens) out += ")";
  }
  return out;
}

namespace {

struct LatticeParser {
  LatticeTermArena& arena;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool match(const char* tok) {
    skip_ws();
    size_t len = std::char_traits<char>::length(tok);
    if (text.compare(pos, len, tok) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  int atom() {
    skip_ws();
    if (pos >= text.size()) throw InputError("lattice term: unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      int e = expr();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw InputError("lattice term: expected ')' at position " + std::to_string(pos));
      ++pos;
      return e;
    }
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    if (start == pos)
      throw InputError("lattice term: expected generator at position " + std::to_string(pos));
    return arena.generator(text.substr(start, pos - start));
  }

  int mterm() {
    std::vector<int> parts{atom()};
    while (match("/\\")) parts.push_back(atom());
    return parts.size() == 1 ? parts[0] : arena.meet(std::move(parts));
  }

  int expr() {
    std::vector<int> parts{mterm()};
    while (match("\\/")) parts.push_back(mterm());
    return parts.size() == 1 ? parts[0] : arena.join(std::move(parts));
  }
};

}  // namespace

int LatticeTermArena::parse(const std::string& text) {
  LatticeParser p{*this, text};
  int id = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw InputError("lattice term: trailing input at position " + std::to_string(p.pos));
  return id;
}

signed char& WhitmanSolver::cell(int p, int q) {
  size_t need = static_cast<size_t>(std::max(p, q)) + 1;
  if (memo_.size() < need) memo_.resize(need);
  for (auto& row : memo_)
    if (row.size() < need) row.resize(need, -1);
  return memo_[static_cast<size_t>(p)][static_cast<size_t>(q)];
}

bool WhitmanSolver::leq(int p, int q) {
  signed char& m = cell(p, q);
  if (m != -1) return m != 0;
  using Kind = LatticeTermArena::Kind;
  const auto& np = arena_->node(p);
  const auto& nq = arena_->node(q);
  bool result;
  if (np.kind == Kind::join) {
    result = true;
    for (int c : np.children)
      if (!leq(c, q)) {
        result = false;
        break;
      }
  } else if (nq.kind == Kind::meet) {
    result = true;
    for (int c : nq.children)
      if (!leq(p, c)) {
        result = false;
        break;
      }
  } else if (np.kind == Kind::generator && nq.kind == Kind::generator) {
    result = p == q;
  } else if (np.kind == Kind::generator) {
    // q is a join.
    result = false;
    for (int c : nq.children)
      if (leq(p, c)) {
        result = true;
        break;
      }
  } else if (nq.kind == Kind::generator) {
    // p is a meet.
    result = false;
    for (int c : np.children)
      if (leq(c, q)) {
        result = true;
        break;
      }
  } else {
    // p is a meet, q is a join: Whitman's condition.
    result = false;
    for (int c : np.children)
      if (leq(c, q)) {
        result = true;
        break;
      }
    if (!result)
      for (int c : nq.children)
        if (leq(p, c)) {
          result = true;
          break;
        }
  }
  m = result ? 1 : 0;
  return result;
}

std::string WhitmanSolver::explain_failure(int p, int q) {
  if (leq(p, q)) return "";
  using Kind = LatticeTermArena::Kind;
  const auto& np = arena_->node(p);
  const auto& nq = arena_->node(q);
  std::string head = arena_->to_string(p) + " <= " + arena_->to_string(q) + " fails: ";
  if (np.kind == Kind::join) {
    for (int c : np.children)
      if (!leq(c, q)) return head + "joinand fails; " + explain_failure(c, q);
  }
  if (nq.kind == Kind::meet) {
    for (int c : nq.children)
      if (!leq(p, c)) return head + "meetand fails; " + explain_failure(p, c);
  }
  if (np.kind == Kind::generator && nq.kind == Kind::generator)
    return head + "distinct generators";
  return head + "no branch of the meet/join split applies";
}

XyzTriple xyz_sequence(LatticeTermArena& arena, int n) {
  if (n < 0) throw InputError("xyz_sequence: n must be non-negative");
  XyzTriple t{arena.generator("x"), arena.generator("y"), arena.generator("z")};
  int gx = t.x, gy = t.y, gz = t.z;
  for (int i = 0; i < n; ++i) {
    XyzTriple next;
    next.x = arena.join2(gx, arena.meet2(t.y, t.z));
    next.y = arena.join2(gy, arena.meet2(t.x, t.z));
    next.z = arena.join2(gz, arena.meet2(t.x, t.y));
    t = next;
  }
  return t;
}

El lattice_eval(const LatticeTermArena& arena, int term, const FiniteAlgebra& L,
                const std::vector<El>& assignment) {
  auto reduct = find_lattice_reduct(L);
  if (!reduct) throw InputError("lattice_eval: '" + L.name() + "' has no lattice reduct");
  using Kind = LatticeTermArena::Kind;
  // Memoized over the arena: shared subterms evaluate once.
  std::vector<El> value(static_cast<size_t>(term) + 1, -1);
  auto eval = [&](auto&& self, int id) -> El {
    if (value[static_cast<size_t>(id)] >= 0) return value[static_cast<size_t>(id)];
    const auto& n = arena.node(id);
    El result;
    if (n.kind == Kind::generator) {
      if (n.generator >= static_cast<int>(assignment.size()))
        throw InputError("lattice_eval: generator '" +
                         arena.names()[static_cast<size_t>(n.generator)] + "' not assigned");
      result = assignment[static_cast<size_t>(n.generator)];
    } else {
      int op = n.kind == Kind::meet ? reduct->meet : reduct->join;
      result = self(self, n.children[0]);
      for (size_t i = 1; i < n.children.size(); ++i)
        result = L.apply2(op, result, self(self, n.children[i]));
    }
    value[static_cast<size_t>(id)] = result;
    return result;
  };
  return eval(eval, term);
}

}  // namespace sdw
