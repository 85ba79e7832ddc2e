#include "sdw/monomial.hpp"

#include <sstream>

#include "sdw/io.hpp"

namespace sdw {

namespace {

// Reuses the presentation side parser through a tiny shim: a generator line
// is one side of a family.
PairFamily::Side parse_gen_side(const std::string& text) {
  RewritePresentation p = parse_presentation(text + " = " + text);
  return p.families[0].lhs;
}

}  // namespace

MonomialGenerators parse_monomial_generators(const std::string& text) {
  MonomialGenerators out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    int lo = 1;
    size_t colon = line.find(':');
    if (colon != std::string::npos) {
      std::string constraint = line.substr(colon + 1);
      line = line.substr(0, colon);
      std::string compact;
      for (char c : constraint)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      size_t ge = compact.find(">=");
      if (ge == std::string::npos)
        throw InputError("monomial generators: bad constraint '" + constraint + "'");
      lo = std::stoi(compact.substr(ge + 2));
    }
    PairFamily::Side side = parse_gen_side(line);
    if (side.prefix.empty() && side.suffix.empty() && !side.pumped())
      throw InputError("monomial generators: empty monomial");
    for (char c : side.prefix)
      if (out.alphabet.find(c) == std::string::npos) out.alphabet += c;
    if (side.pumped() && out.alphabet.find(side.pump) == std::string::npos)
      out.alphabet += side.pump;
    for (char c : side.suffix)
      if (out.alphabet.find(c) == std::string::npos) out.alphabet += c;
    out.gens.push_back(std::move(side));
    out.lo.push_back(lo);
  }
  if (out.gens.empty()) throw InputError("monomial generators: none given");
  return out;
}

MonomialGenerators load_monomial_generators(const std::string& path) {
  try {
    return parse_monomial_generators(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

// Does some instance of `side` (pump exponent >= lo) occur in m starting at
// `pos` as a factor of length `len`? The pump block is matched by scanning.
bool matches_at(const PairFamily::Side& side, int lo, const Monomial& m, size_t pos, size_t len) {
  if (!side.pumped()) {
    const Word& g = side.prefix;
    if (g.size() != len) return false;
    return m.compare(pos, len, g) == 0;
  }
  size_t fixed = side.prefix.size() + side.suffix.size();
  if (len < fixed + static_cast<size_t>(lo)) return false;
  size_t pump_len = len - fixed;
  if (m.compare(pos, side.prefix.size(), side.prefix) != 0) return false;
  for (size_t i = 0; i < pump_len; ++i)
    if (m[pos + side.prefix.size() + i] != side.pump) return false;
  return m.compare(pos + side.prefix.size() + pump_len, side.suffix.size(), side.suffix) == 0;
}

}  // namespace

MembershipResult monomial_ideal_member(const MonomialGenerators& gens, const Monomial& m,
                                       Sidedness sided) {
  if (m.empty()) throw InputError("monomial membership: empty monomial");
  size_t n = m.size();
  for (size_t gi = 0; gi < gens.gens.size(); ++gi) {
    const PairFamily::Side& side = gens.gens[gi];
    int lo = gens.lo[gi];
    size_t min_len = side.prefix.size() + side.suffix.size() +
                     (side.pumped() ? static_cast<size_t>(lo) : 0);
    for (size_t len = std::max<size_t>(min_len, 1); len <= n; ++len) {
      size_t pos_lo = 0, pos_hi = n - len;
      if (sided == Sidedness::right) pos_hi = 0;             // generator is a prefix
      if (sided == Sidedness::left) pos_lo = pos_hi = n - len;  // generator is a suffix
      for (size_t pos = pos_lo; pos <= pos_hi; ++pos) {
        if (matches_at(side, lo, m, pos, len))
          return {true, MembershipWitness{m.substr(pos, len), static_cast<int>(pos)}};
      }
      if (!side.pumped()) break;  // literal generators have one length
    }
  }
  return {false, std::nullopt};
}

IntersectionReport verify_intersection_generation(const MonomialGenerators& gens_i,
                                                  const MonomialGenerators& gens_j,
                                                  const MonomialGenerators& candidate,
                                                  int degree_bound) {
  std::string alphabet = gens_i.alphabet;
  for (char c : gens_j.alphabet)
    if (alphabet.find(c) == std::string::npos) alphabet += c;
  for (char c : candidate.alphabet)
    if (alphabet.find(c) == std::string::npos) alphabet += c;

  IntersectionReport report;
  std::vector<Monomial> frontier{""};
  for (int d = 1; d <= degree_bound; ++d) {
    std::vector<Monomial> next;
    for (const Monomial& w : frontier)
      for (char c : alphabet) next.push_back(w + c);
    frontier = std::move(next);
    for (const Monomial& m : frontier) {
      ++report.checked;
      bool in_both = monomial_ideal_member(gens_i, m, Sidedness::two_sided).member &&
                     monomial_ideal_member(gens_j, m, Sidedness::two_sided).member;
      bool in_cand = monomial_ideal_member(candidate, m, Sidedness::two_sided).member;
      if (in_both == in_cand) continue;
      report.agree = false;
      if (in_both && static_cast<int>(report.in_intersection_not_candidate.size()) < 10)
        report.in_intersection_not_candidate.push_back(m);
      if (in_cand && static_cast<int>(report.in_candidate_not_intersection.size()) < 10)
        report.in_candidate_not_intersection.push_back(m);
    }
  }
  return report;
}

}  // namespace sdw
