#include "sdw/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "sdw/io.hpp"
#include "sdw/partition.hpp"

namespace sdw {

namespace {

// Tokenizes one side of a family into (prefix, pump, suffix). Accepts
// compact words ("xy^ix", "xyyx") and spaced ("x y^i x").
PairFamily::Side parse_side(const std::string& text) {
  PairFamily::Side side;
  Word current;
  size_t i = 0;
  auto flush_letter = [&](char c, int count) {
    for (int k = 0; k < count; ++k) current += c;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw InputError("word parse error: unexpected '" + std::string(1, c) + "'");
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i < text.size() && (text[i] == 'i' || text[i] == 'n')) {
        // pumped block
        if (side.pump != 0) throw InputError("word parse error: two pumped blocks in one side");
        side.prefix = current;
        side.pump = c;
        current.clear();
        ++i;
      } else {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw InputError("word parse error: expected exponent after '^'");
        flush_letter(c, std::stoi(text.substr(start, i - start)));
      }
    } else {
      current += c;
    }
  }
  if (side.pump != 0)
    side.suffix = current;
  else
    side.prefix = current;
  return side;
}

void note_letters(std::string& alphabet, const Word& w) {
  for (char c : w)
    if (alphabet.find(c) == std::string::npos) alphabet += c;
}

}  // namespace

Word parse_word(const std::string& text) {
  PairFamily::Side s = parse_side(text);
  if (s.pump != 0) throw InputError("word parse error: pumped block not allowed here");
  return s.prefix;
}

RewritePresentation parse_presentation(const std::string& text) {
  RewritePresentation pres;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;

    // Split off the parameter constraint, then the two sides.
    int lo = 1, hi = -1;
    size_t colon = line.find(':');
    if (colon != std::string::npos) {
      std::string constraint = line.substr(colon + 1);
      line = line.substr(0, colon);
      std::string compact;
      for (char c : constraint)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      // Accept i>=N and N<=i<=M.
      size_t ge = compact.find(">=");
      if (ge != std::string::npos && (compact[0] == 'i' || compact[0] == 'n')) {
        lo = std::stoi(compact.substr(ge + 2));
      } else {
        size_t le1 = compact.find("<=");
        size_t le2 = compact.rfind("<=");
        if (le1 == std::string::npos || le2 == le1)
          throw InputError("presentation: bad parameter constraint '" + constraint + "'");
        lo = std::stoi(compact.substr(0, le1));
        hi = std::stoi(compact.substr(le2 + 2));
      }
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw InputError("presentation: missing '=' in '" + line + "'");
    PairFamily fam;
    fam.lhs = parse_side(line.substr(0, eq));
    fam.rhs = parse_side(line.substr(eq + 1));
    fam.lo = lo;
    fam.hi = hi;
    auto side_empty = [](const PairFamily::Side& s) {
      return s.prefix.empty() && s.suffix.empty() && !s.pumped();
    };
    if (side_empty(fam.lhs) || side_empty(fam.rhs))
      throw InputError("presentation: empty side in '" + line + "'");
    note_letters(pres.alphabet, fam.lhs.prefix);
    note_letters(pres.alphabet, fam.lhs.suffix);
    if (fam.lhs.pump) note_letters(pres.alphabet, std::string(1, fam.lhs.pump));
    note_letters(pres.alphabet, fam.rhs.prefix);
    note_letters(pres.alphabet, fam.rhs.suffix);
    if (fam.rhs.pump) note_letters(pres.alphabet, std::string(1, fam.rhs.pump));
    pres.families.push_back(std::move(fam));
  }
  if (pres.families.empty()) throw InputError("presentation: no generator pairs");
  return pres;
}

RewritePresentation load_presentation(const std::string& path) {
  try {
    return parse_presentation(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

Word instantiate(const PairFamily::Side& side, int i) {
  Word w = side.prefix;
  if (side.pumped()) w += Word(static_cast<size_t>(i), side.pump);
  w += side.suffix;
  return w;
}

}  // namespace

std::vector<std::pair<Word, Word>> RewritePresentation::expand(int max_len) const {
  std::vector<std::pair<Word, Word>> out;
  for (const PairFamily& fam : families) {
    if (!fam.pumped()) {
      if (static_cast<int>(fam.lhs.prefix.size()) <= max_len &&
          static_cast<int>(fam.rhs.prefix.size()) <= max_len)
        out.emplace_back(fam.lhs.prefix, fam.rhs.prefix);
      continue;
    }
    for (int i = fam.lo;; ++i) {
      if (fam.hi >= 0 && i > fam.hi) break;
      Word l = instantiate(fam.lhs, i);
      Word r = instantiate(fam.rhs, i);
      if (static_cast<int>(std::max(l.size(), r.size())) > max_len) break;
      out.emplace_back(std::move(l), std::move(r));
    }
  }
  return out;
}

namespace {

/// All single-factor replacements of `w` by the expanded rules, both
/// directions, within the length bound.
void neighbors(const Word& w, const std::vector<std::pair<Word, Word>>& rules, int max_len,
               std::vector<Word>& out) {
  out.clear();
  for (const auto& [l, r] : rules) {
    for (int dir = 0; dir < 2; ++dir) {
      const Word& from = dir ? r : l;
      const Word& to = dir ? l : r;
      if (from == to) continue;
      if (static_cast<int>(w.size() - from.size() + to.size()) > max_len) continue;
      for (size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (w.compare(pos, from.size(), from) != 0) continue;
        Word next = w.substr(0, pos);
        next += to;
        next += w.substr(pos + from.size());
        out.push_back(std::move(next));
      }
    }
  }
}

}  // namespace

RelateResult monoid_relate(const RewritePresentation& pres, const Word& u, const Word& v,
                           const RelateBounds& bounds) {
  RelateResult res;
  if (u == v) {
    res.status = RelateResult::Status::related;
    res.path = {u};
    return res;
  }
  if (static_cast<int>(u.size()) > bounds.max_len || static_cast<int>(v.size()) > bounds.max_len) {
    res.status = RelateResult::Status::not_within_bounds;
    res.bound_hit = "max_len";
    return res;
  }
  std::vector<std::pair<Word, Word>> rules = pres.expand(bounds.max_len);

  // Bidirectional BFS; parent maps reconstruct the path (roots are their
  // own parent).
  std::map<Word, Word> from_u{{u, u}}, from_v{{v, v}};
  std::deque<Word> qu{u}, qv{v};
  std::vector<Word> next;
  std::int64_t states = 2;
  std::optional<Word> meeting;

  auto expand_side = [&](std::deque<Word>& queue, std::map<Word, Word>& mine,
                         std::map<Word, Word>& theirs) -> bool {
    size_t layer = queue.size();
    for (size_t t = 0; t < layer && !meeting; ++t) {
      Word w = queue.front();
      queue.pop_front();
      neighbors(w, rules, bounds.max_len, next);
      for (Word& x : next) {
        if (mine.count(x)) continue;
        mine.emplace(x, w);
        ++states;
        if (states > bounds.max_states) return false;
        if (theirs.count(x)) {
          meeting = x;
          break;
        }
        queue.push_back(std::move(x));
      }
    }
    return true;
  };

  while (!meeting && (!qu.empty() || !qv.empty())) {
    bool ok = true;
    if (!qu.empty() && (qv.empty() || qu.size() <= qv.size()))
      ok = expand_side(qu, from_u, from_v);
    else
      ok = expand_side(qv, from_v, from_u);
    res.states = states;
    if (!ok) {
      res.status = RelateResult::Status::not_within_bounds;
      res.bound_hit = "max_states";
      return res;
    }
  }
  res.states = states;
  if (!meeting) {
    res.status = RelateResult::Status::not_within_bounds;
    res.bound_hit = "max_len";
    return res;
  }

  // Stitch the two half-paths together.
  std::vector<Word> path;
  for (Word w = *meeting;;) {
    path.push_back(w);
    const Word& p = from_u.at(w);
    if (p == w) break;
    w = p;
  }
  std::reverse(path.begin(), path.end());
  for (Word w = *meeting;;) {
    const Word& p = from_v.at(w);
    if (p == w) break;
    w = p;
    path.push_back(w);
  }
  res.status = RelateResult::Status::related;
  res.path = std::move(path);
  return res;
}

std::vector<Word> words_up_to(const std::string& alphabet, int max_len) {
  std::vector<Word> out{""};
  size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = start; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    start = end;
  }
  return out;
}

std::vector<int> bounded_classes(const RewritePresentation& pres, int max_len) {
  std::vector<Word> words = words_up_to(pres.alphabet, max_len);
  std::map<Word, int> index;
  for (size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
  std::vector<std::pair<Word, Word>> rules = pres.expand(max_len);
  UnionFind uf(static_cast<int>(words.size()));
  std::vector<Word> next;
  for (size_t i = 0; i < words.size(); ++i) {
    neighbors(words[i], rules, max_len, next);
    for (const Word& x : next) uf.unite(static_cast<int>(i), index.at(x));
  }
  Partition p = uf.to_partition();
  std::vector<int> classes(words.size());
  for (size_t i = 0; i < words.size(); ++i) classes[i] = p.rep(static_cast<int>(i));
  return classes;
}

namespace {

int letter_count(const Word& w, char c) {
  return static_cast<int>(std::count(w.begin(), w.end(), c));
}

}  // namespace

CongJoinClaimReport check_cong_join_claim(const RewritePresentation& sigma,
                                          const RewritePresentation& tau,
                                          const RewritePresentation& rho, char sigma_letter,
                                          char tau_letter, int pump_bound,
                                          const RelateBounds& relate_bounds, int intersect_len) {
  CongJoinClaimReport report;

  // Letter-count invariants over the expanded generator lists.
  int expand_len = relate_bounds.max_len;
  for (const auto& [l, r] : sigma.expand(expand_len))
    if (letter_count(l, sigma_letter) != letter_count(r, sigma_letter))
      report.sigma_invariant = false;
  for (const auto& [l, r] : tau.expand(expand_len))
    if (letter_count(l, tau_letter) != letter_count(r, tau_letter))
      report.tau_invariant = false;

  // Every sigma/tau generator with pump index <= pump_bound is rho-related.
  auto check_gens = [&](const RewritePresentation& pres) {
    for (const PairFamily& fam : pres.families) {
      int lo = fam.pumped() ? fam.lo : 0;
      int hi = fam.pumped() ? pump_bound : 0;
      if (fam.pumped() && fam.hi >= 0) hi = std::min(hi, fam.hi);
      for (int i = lo; i <= hi; ++i) {
        Word l = instantiate(fam.lhs, i);
        Word r = instantiate(fam.rhs, i);
        if (static_cast<int>(std::max(l.size(), r.size())) > relate_bounds.max_len) continue;
        ++report.checked_generators;
        RelateResult rel = monoid_relate(rho, l, r, relate_bounds);
        if (rel.status != RelateResult::Status::related) {
          report.all_generators_related = false;
          report.unrelated.emplace_back(l, r);
        }
      }
    }
  };
  check_gens(sigma);
  check_gens(tau);

  // Bounded intersection: common nontrivial pairs of the bounded closures.
  std::string alphabet = sigma.alphabet;
  for (char c : tau.alphabet)
    if (alphabet.find(c) == std::string::npos) alphabet += c;
  RewritePresentation sigma2 = sigma;
  sigma2.alphabet = alphabet;
  RewritePresentation tau2 = tau;
  tau2.alphabet = alphabet;
  std::vector<Word> words = words_up_to(alphabet, intersect_len);
  report.intersection_words = static_cast<std::int64_t>(words.size());
  std::vector<int> cs = bounded_classes(sigma2, intersect_len);
  std::vector<int> ct = bounded_classes(tau2, intersect_len);
  std::map<std::pair<int, int>, size_t> first_with;
  for (size_t i = 0; i < words.size(); ++i) {
    auto key = std::make_pair(cs[i], ct[i]);
    auto [it, fresh] = first_with.emplace(key, i);
    if (!fresh) {
      report.intersection_trivial = false;
      if (report.common_pairs.size() < 10)
        report.common_pairs.emplace_back(words[it->second], words[i]);
    }
  }
  return report;
}

}  // namespace sdw
