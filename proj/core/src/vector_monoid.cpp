#include "sdw/vector_monoid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "sdw/io.hpp"

namespace sdw {

std::vector<std::vector<int>> VectorMonoidGenerators::expand(int box) const {
  std::vector<std::vector<int>> out;
  for (const VectorGeneratorFamily& f : families) {
    if (f.pumped_coord < 0) {
      bool fits = true;
      for (int v : f.base)
        if (v > box) fits = false;
      if (fits) out.push_back(f.base);
      continue;
    }
    for (int v = f.lo; v <= box; ++v) {
      std::vector<int> g = f.base;
      g[static_cast<size_t>(f.pumped_coord)] = v;
      bool fits = true;
      for (int x : g)
        if (x > box) fits = false;
      if (!fits) break;
      out.push_back(std::move(g));
    }
  }
  return out;
}

VectorMonoidGenerators parse_vector_generators(const std::string& text) {
  VectorMonoidGenerators out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string compact;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) continue;

    VectorGeneratorFamily fam;
    std::string body = compact;
    size_t colon = compact.find(':');
    char param = 0;
    if (colon != std::string::npos) {
      body = compact.substr(0, colon);
      std::string constraint = compact.substr(colon + 1);
      size_t ge = constraint.find(">=");
      if (ge == std::string::npos || ge == 0)
        throw InputError("vector generators: bad constraint '" + constraint + "'");
      param = constraint[0];
      fam.lo = std::stoi(constraint.substr(ge + 2));
    }
    if (body.front() != '(' || body.back() != ')')
      throw InputError("vector generators: expected (v1,...,vk) in '" + line + "'");
    body = body.substr(1, body.size() - 2);
    std::istringstream parts(body);
    std::string tok;
    int coord = 0;
    while (std::getline(parts, tok, ',')) {
      if (!tok.empty() && std::isalpha(static_cast<unsigned char>(tok[0]))) {
        if (param == 0 || tok[0] != param)
          throw InputError("vector generators: unbound parameter '" + tok + "'");
        if (fam.pumped_coord >= 0)
          throw InputError("vector generators: two pumped coordinates");
        fam.pumped_coord = coord;
        fam.base.push_back(fam.lo);
      } else {
        fam.base.push_back(std::stoi(tok));
        if (fam.base.back() < 0) throw InputError("vector generators: negative coordinate");
      }
      ++coord;
    }
    if (param != 0 && fam.pumped_coord < 0)
      throw InputError("vector generators: constraint without pumped coordinate");
    if (out.arity == 0)
      out.arity = coord;
    else if (out.arity != coord)
      throw InputError("vector generators: mixed arities");
    out.families.push_back(std::move(fam));
  }
  if (out.families.empty()) throw InputError("vector generators: none given");
  return out;
}

VectorMonoidGenerators load_vector_generators(const std::string& path) {
  try {
    return parse_vector_generators(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

BoxedSubmonoid::BoxedSubmonoid(const VectorMonoidGenerators& gens, int box)
    : arity_(gens.arity), box_(box) {
  std::int64_t cells = 1;
  for (int i = 0; i < arity_; ++i) {
    if (cells > 100'000'000 / (box + 1))
      throw InputError("vector monoid: box too large for this arity");
    cells *= box + 1;
  }
  member_.assign(static_cast<size_t>(cells), 0);
  std::vector<std::vector<int>> gen_list = gens.expand(box);

  // BFS closure under addition; partial sums stay within the box, so this
  // enumerates the submonoid inside the box exactly.
  std::deque<std::vector<int>> work;
  std::vector<int> zero(static_cast<size_t>(arity_), 0);
  member_[static_cast<size_t>(index_of(zero))] = 1;
  count_ = 1;
  work.push_back(zero);
  while (!work.empty()) {
    std::vector<int> v = std::move(work.front());
    work.pop_front();
    for (const auto& g : gen_list) {
      std::vector<int> w(static_cast<size_t>(arity_));
      bool fits = true;
      for (int i = 0; i < arity_; ++i) {
        w[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] + g[static_cast<size_t>(i)];
        if (w[static_cast<size_t>(i)] > box) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      std::int64_t idx = index_of(w);
      if (!member_[static_cast<size_t>(idx)]) {
        member_[static_cast<size_t>(idx)] = 1;
        ++count_;
        work.push_back(std::move(w));
      }
    }
  }
}

std::int64_t BoxedSubmonoid::index_of(const std::vector<int>& v) const {
  std::int64_t idx = 0;
  for (int i = 0; i < arity_; ++i) idx = idx * (box_ + 1) + v[static_cast<size_t>(i)];
  return idx;
}

bool BoxedSubmonoid::contains(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != arity_) throw InputError("vector monoid: arity mismatch");
  for (int x : v)
    if (x < 0 || x > box_) return false;
  return member_[static_cast<size_t>(index_of(v))] != 0;
}

std::vector<PairSurjectivity> pair_surjectivity(const VectorMonoidGenerators& gens, int box) {
  std::vector<std::vector<int>> gen_list = gens.expand(box);
  std::vector<PairSurjectivity> out;
  for (int i = 0; i < gens.arity; ++i)
    for (int j = i + 1; j < gens.arity; ++j) {
      PairSurjectivity p;
      p.i = i;
      p.j = j;
      p.certified = false;
      for (const auto& g : gen_list) {
        if (g[static_cast<size_t>(i)] == 1 && g[static_cast<size_t>(j)] == 0) {
          p.unit_i = g;
          break;
        }
      }
      for (const auto& g : gen_list) {
        if (g[static_cast<size_t>(i)] == 0 && g[static_cast<size_t>(j)] == 1) {
          p.unit_j = g;
          break;
        }
      }
      p.certified = !p.unit_i.empty() && !p.unit_j.empty();
      out.push_back(std::move(p));
    }
  return out;
}

Indecomposability check_indecomposable(const BoxedSubmonoid& S, const std::vector<int>& e) {
  if (static_cast<int>(e.size()) != S.arity())
    throw InputError("check_indecomposable: arity mismatch");
  for (int x : e)
    if (x < 0 || x > S.box())
      throw InputError("check_indecomposable: element outside the box; enlarge --box");
  // Enumerate candidates s <= e componentwise; membership of s and e - s.
  int k = S.arity();
  std::vector<int> s(static_cast<size_t>(k), 0);
  while (true) {
    bool zero = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
    bool full = true;
    for (int i = 0; i < k; ++i)
      if (s[static_cast<size_t>(i)] != e[static_cast<size_t>(i)]) full = false;
    if (!zero && !full && S.contains(s)) {
      std::vector<int> rest(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i)
        rest[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] - s[static_cast<size_t>(i)];
      if (S.contains(rest)) return {false, s, rest};
    }
    int i = k - 1;
    while (i >= 0 && s[static_cast<size_t>(i)] == e[static_cast<size_t>(i)]) {
      s[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++s[static_cast<size_t>(i)];
  }
  return {true, {}, {}};
}

}  // namespace sdw
