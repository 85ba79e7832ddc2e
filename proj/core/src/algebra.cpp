#include "sdw/algebra.hpp"

#include <set>

#include "sdw/caps.hpp"

namespace sdw {

Signature::Signature(std::vector<OpSymbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.arity < 0) throw InputError("signature: negative arity for '" + s.name + "'");
    if (!seen.insert(s.name).second)
      throw InputError("signature: duplicate symbol name '" + s.name + "'");
  }
}

int Signature::find(const std::string& name) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return static_cast<int>(i);
  return -1;
}

bool Signature::operator==(const Signature& other) const {
  if (symbols_.size() != other.symbols_.size()) return false;
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name != other.symbols_[i].name || symbols_[i].arity != other.symbols_[i].arity)
      return false;
  return true;
}

namespace {
std::size_t pow_checked(int base, int exp, const std::string& what) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (static_cast<std::size_t>(1) << 60) / static_cast<std::size_t>(base))
      throw InputError(what + ": table size overflow");
    r *= static_cast<std::size_t>(base);
  }
  return r;
}
}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig,
                             std::vector<std::vector<El>> tables)
    : name_(std::move(name)), size_(size), sig_(std::move(sig)), tables_(std::move(tables)) {
  if (size_ <= 0) throw InputError("algebra '" + name_ + "': size must be positive");
  if (tables_.size() != static_cast<size_t>(sig_.size()))
    throw InputError("algebra '" + name_ + "': expected " + std::to_string(sig_.size()) +
                     " tables, got " + std::to_string(tables_.size()));
  for (int op = 0; op < sig_.size(); ++op) {
    std::size_t want = pow_checked(size_, sig_.arity(op), "operation '" + sig_.name(op) + "'");
    const auto& t = tables_[static_cast<size_t>(op)];
    if (t.size() != want)
      throw InputError("algebra '" + name_ + "': table of '" + sig_.name(op) + "' has " +
                       std::to_string(t.size()) + " entries, expected " + std::to_string(want));
    for (size_t i = 0; i < t.size(); ++i)
      if (t[i] < 0 || t[i] >= size_)
        throw InputError("algebra '" + name_ + "': table of '" + sig_.name(op) + "' entry " +
                         std::to_string(i) + " = " + std::to_string(t[i]) + " out of range [0," +
                         std::to_string(size_ - 1) + "]");
  }
}

bool same_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return &a == &b || a.same_structure(b);
}

Caps& global_caps() {
  static Caps caps;
  return caps;
}

}  // namespace sdw
