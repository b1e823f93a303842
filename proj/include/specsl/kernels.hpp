#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version with
// identical output; the OpenMP versions are what the library calls by
// default, the serial ones are kept for tests and the benchmark.

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "specsl/core.hpp"

namespace specsl::kernels {

/// Definition of (a,b) ~ (c,d) on a structure with no argument checking.
bool sim_pair(const SpecSemilattice& s, int a, int b, int c, int d);

/// Row-major n^2 x n^2 matrix of sim_pair over pair indices p = a*n + b.
std::vector<std::uint8_t> sim_matrix_serial(const SpecSemilattice& s);
std::vector<std::uint8_t> sim_matrix_parallel(const SpecSemilattice& s);

/// Lexicographically least (p, q, r) with rel[p][q], rel[q][r] and not
/// rel[p][r], if any.
std::optional<std::array<int, 3>> find_intransitive_serial(
    const std::vector<std::uint8_t>& rel, int size);
std::optional<std::array<int, 3>> find_intransitive_parallel(
    const std::vector<std::uint8_t>& rel, int size);

/// A constraint-satisfaction view of "find all maps f: [n] -> [m] that
/// preserve some structure". Constraints are bucketed by the largest source
/// index they mention so they fire as soon as they are fully assigned.
struct MapProblem {
  struct JoinCheck {
    int x, y, z;  // f(z) == join_T(f(x), f(y))
  };
  struct SqCheck {
    int x, y;  // sq_T(f(x), f(y))
  };
  struct ClosureCheck {
    int x, kx;  // f(kx) == K_T(f(x))
  };

  int source_size = 0;
  int target_size = 0;
  std::vector<int> target_join;
  std::vector<std::uint8_t> target_sq;
  std::vector<int> target_closure;  // empty unless closure checks exist

  std::vector<std::vector<int>> domain;
  std::vector<std::vector<JoinCheck>> join_checks;
  std::vector<std::vector<SqCheck>> sq_checks;
  std::vector<std::vector<ClosureCheck>> closure_checks;
};

/// Complete lexicographic enumeration of all maps satisfying `problem`.
/// Every tentative assignment counts against `budget`; exceeding it throws
/// BudgetExceeded. Serial and parallel visit the same node set.
std::vector<std::vector<int>> search_maps_serial(const MapProblem& problem,
                                                 std::uint64_t budget);
std::vector<std::vector<int>> search_maps_parallel(const MapProblem& problem,
                                                   std::uint64_t budget);

}  // namespace specsl::kernels
