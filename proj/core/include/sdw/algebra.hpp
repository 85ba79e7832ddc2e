#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sdw/error.hpp"

namespace sdw {

/// Carrier elements are dense integers 0..n-1.
using El = std::int32_t;

struct OpSymbol {
  std::string name;
  int arity = 0;
};

/// An ordered list of operation symbols. Names are unique; arity 0 denotes
/// constants.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const OpSymbol& symbol(int i) const { return symbols_[static_cast<size_t>(i)]; }
  const std::vector<OpSymbol>& symbols() const { return symbols_; }
  int arity(int i) const { return symbols_[static_cast<size_t>(i)].arity; }
  const std::string& name(int i) const { return symbols_[static_cast<size_t>(i)].name; }

  /// Index of the symbol with the given name, or -1.
  int find(const std::string& name) const;

  bool operator==(const Signature& other) const;

 private:
  std::vector<OpSymbol> symbols_;
};

/// A finite algebra: carrier {0,..,n-1} plus one total operation table per
/// signature symbol. Tables are flat, row-major with the last argument
/// varying fastest. Immutable after construction; safe to share across
/// threads.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size, Signature sig,
                std::vector<std::vector<El>> tables);

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  const Signature& signature() const { return sig_; }
  const std::vector<El>& table(int op) const { return tables_[static_cast<size_t>(op)]; }

  /// Flat table index of an argument tuple.
  std::size_t table_index(int /*op*/, std::span<const El> args) const {
    std::size_t idx = 0;
    for (El a : args) idx = idx * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
    return idx;
  }

  El apply(int op, std::span<const El> args) const {
    return tables_[static_cast<size_t>(op)][table_index(op, args)];
  }
  El apply0(int op) const { return tables_[static_cast<size_t>(op)][0]; }
  El apply1(int op, El a) const { return tables_[static_cast<size_t>(op)][static_cast<size_t>(a)]; }
  El apply2(int op, El a, El b) const {
    return tables_[static_cast<size_t>(op)][static_cast<size_t>(a) * static_cast<size_t>(size_) +
                                            static_cast<size_t>(b)];
  }

  /// Structural equality (name ignored).
  bool same_structure(const FiniteAlgebra& other) const {
    return size_ == other.size_ && sig_ == other.sig_ && tables_ == other.tables_;
  }

 private:
  std::string name_;
  int size_;
  Signature sig_;
  std::vector<std::vector<El>> tables_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// True if the two handles denote the same algebra (pointer or structure).
bool same_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace sdw
