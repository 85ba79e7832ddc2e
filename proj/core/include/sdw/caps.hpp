#pragma once

#include <cstdint>

namespace sdw {

/// Global resource caps. Exceeding any of them raises BoundError naming the
/// cap; results are never silently truncated.
struct Caps {
  /// Largest product carrier (and closure universe) handled at all.
  /// Overridden by the SDW_MAX_CARRIER environment variable in the CLI.
  std::int64_t max_carrier = 10'000'000;

  /// Largest number of table entries a materialized algebra may hold.
  std::int64_t max_table_entries = 10'000'000;

  /// Translation-application budget for a single congruence-generation call.
  std::int64_t cg_step_budget = 200'000'000;

  /// Largest congruence lattice enumerated.
  std::int64_t max_congruences = 100'000;

  /// Largest commutator arity (number of congruence arguments).
  int max_cube_arity = 3;

  /// Largest cube-term algebra generated during a commutator computation.
  std::int64_t max_cube_functions = 1'000'000;

  /// Element budget for free-algebra closures (Mal'cev term search).
  std::int64_t malcev_budget = 50'000;
};

/// Process-wide defaults; the CLI mutates this once at startup from flags
/// and SDW_MAX_CARRIER, library code only reads it.
Caps& global_caps();

}  // namespace sdw
