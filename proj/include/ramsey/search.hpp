#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/census.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

struct SearchParams {
  int n = 17;
  int k = 3;  // number of colors, 2 or 3
  std::uint64_t seed = 1;
  int restarts = 10;
  int steps_per_restart = 20000;
  // Consecutive non-improving (zero-delta) moves tolerated before a restart
  // is declared stuck.
  int sideways_limit = 1000;
  // Worker threads for independent restarts; 0 picks the hardware count.
  // The result does not depend on this value.
  int threads = 1;
};

struct SearchResult {
  EdgeColoring best;
  std::uint64_t best_count = 0;
  MonoCounts best_mono{};
  int best_restart = 0;
  // Best total reached in each restart that ran, in restart order.
  std::vector<std::uint64_t> trace;
  // Candidate recolorings evaluated, summed over restarts.
  std::uint64_t evaluations = 0;
};

/// Each edge gets color (engine() % k) where engine is std::mt19937_64 seeded
/// with `seed`, drawn in edge-ordinal order. Throws InvalidArgument unless
/// k is 2 or 3.
EdgeColoring random_coloring(int n, int k, std::uint64_t seed);

/// Seed of restart r: splitmix64(splitmix64(seed) + r).
std::uint64_t restart_seed(std::uint64_t seed, int restart);

/// Change in the total monochromatic count if edge e is recolored to x.
/// Throws InvalidArgument if x is already its color.
std::int64_t move_delta(const EdgeColoring& c, EdgeOrdinal e, Color x);

/// Restarted best-improvement hill climbing on the total monochromatic
/// triangle count.
///
/// Each restart starts from random_coloring(n, k, restart_seed(seed, r)) and
/// repeatedly applies the most improving single-edge recoloring, ties broken
/// by lowest edge ordinal and then color order. When no move improves, a
/// zero-delta move is taken at random (never undoing the previous move) up to
/// sideways_limit times in a row; otherwise the restart ends. A restart also
/// ends after steps_per_restart moves, and the whole search stops once a
/// triangle-free coloring is found. The best coloring over all restarts wins,
/// ties going to the earliest restart.
SearchResult minimize(const SearchParams& p);

/// Default state budget for exhaustive_min: 2^25, overridable through the
/// RAMSEY_EXHAUSTIVE_BUDGET environment variable.
std::uint64_t exhaustive_budget();

struct ExhaustiveResult {
  std::uint64_t minimum = 0;
  EdgeColoring witness;
  std::uint64_t states = 0;  // colorings visited
};

/// Minimum total monochromatic count over all k-colorings of K_n, with the
/// first edge fixed to Blue. Throws CapacityError when k^C(n,2) exceeds the
/// budget, InvalidArgument unless k is 2 or 3.
ExhaustiveResult exhaustive_min(int n, int k, std::uint64_t budget = exhaustive_budget());

}  // namespace ramsey
