#pragma once

#include <string>
#include <vector>

#include "sdw/algebra.hpp"
#include "sdw/partition.hpp"

namespace sdw {

/// Algebra file format:
///   {"name": str, "size": int,
///    "signature": [{"name": str, "arity": int}, ...],
///    "tables": {opname: [flat row-major ints, last argument fastest]}}
/// All structural invariants are validated; malformed input raises
/// InputError with a line-level diagnostic.
AlgebraPtr load_algebra(const std::string& path);
AlgebraPtr parse_algebra(const std::string& json_text, const std::string& origin = "<string>");
std::string algebra_to_json(const FiniteAlgebra& A);
void save_algebra(const FiniteAlgebra& A, const std::string& path);

/// Congruence serialization: block list in canonical order, e.g.
/// [[0,2],[1,3]].
Partition load_partition(const std::string& path, int carrier_size);
Partition parse_partition(const std::string& json_text, int carrier_size,
                          const std::string& origin = "<string>");
std::string partition_to_json(const Partition& p);
void save_partition(const Partition& p, const std::string& path);

/// Map file format: {"map": [ints]} (f(i) = map[i]).
std::vector<El> load_map(const std::string& path);
void save_map(const std::vector<El>& map, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sdw
