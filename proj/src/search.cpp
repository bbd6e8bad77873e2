#include "ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

void check_colors(int k) {
  if (k != 2 && k != 3) throw InvalidArgument("number of colors must be 2 or 3");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct RestartOutcome {
  EdgeColoring best;
  std::uint64_t best_count = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t evaluations = 0;
};

RestartOutcome climb(const SearchParams& p, int restart) {
  const std::uint64_t seed = restart_seed(p.seed, restart);
  EdgeColoring c = random_coloring(p.n, p.k, seed);
  ColorRows rows(c);
  std::mt19937_64 sideways_rng(splitmix64(seed ^ 0x5eedULL));

  std::vector<Edge> ends;
  ends.reserve(c.edge_count());
  for (Vertex u = 0; u < p.n; ++u)
    for (Vertex v = u + 1; v < p.n; ++v) ends.push_back({u, v});

  RestartOutcome out;
  std::uint64_t current = mono_total(fast_mono_counts(c));
  out.best = c;
  out.best_count = current;

  struct Move {
    EdgeOrdinal edge;
    Color color;
  };
  std::vector<Move> plateau;
  EdgeOrdinal last_edge = std::numeric_limits<EdgeOrdinal>::max();
  int sideways_run = 0;

  for (int step = 0; step < p.steps_per_restart && current > 0; ++step) {
    std::int64_t best_delta = std::numeric_limits<std::int64_t>::max();
    Move best_move{0, Color::Blue};
    plateau.clear();
    for (EdgeOrdinal e = 0; e < ends.size(); ++e) {
      const auto [u, v] = ends[e];
      const Color from = c.at(e);
      const int lost = rows.common(from, u, v);
      for (int xi = 0; xi < p.k; ++xi) {
        const Color to = color_from_index(xi);
        if (to == from) continue;
        const std::int64_t d = rows.common(to, u, v) - lost;
        ++out.evaluations;
        if (d < best_delta) {
          best_delta = d;
          best_move = {e, to};
        }
        if (d == 0 && e != last_edge) plateau.push_back({e, to});
      }
    }

    Move chosen;
    if (best_delta < 0) {
      chosen = best_move;
      sideways_run = 0;
    } else if (best_delta == 0 && !plateau.empty() && sideways_run < p.sideways_limit) {
      chosen = plateau[sideways_rng() % plateau.size()];
      ++sideways_run;
    } else {
      break;  // local optimum
    }

    const auto [u, v] = ends[chosen.edge];
    const Color from = c.at(chosen.edge);
    current = static_cast<std::uint64_t>(static_cast<std::int64_t>(current) +
                                         rows.common(chosen.color, u, v) - rows.common(from, u, v));
    rows.recolor(u, v, from, chosen.color);
    c.set(chosen.edge, chosen.color);
    last_edge = chosen.edge;
    if (current < out.best_count) {
      out.best_count = current;
      out.best = c;
    }
  }
  return out;
}

}  // namespace

EdgeColoring random_coloring(int n, int k, std::uint64_t seed) {
  check_colors(k);
  std::mt19937_64 engine(seed);
  std::vector<Color> colors(num_edges(n));
  for (Color& x : colors) x = color_from_index(static_cast<int>(engine() % static_cast<unsigned>(k)));
  return EdgeColoring(n, std::move(colors));
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  return splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(restart));
}

std::int64_t move_delta(const EdgeColoring& c, EdgeOrdinal e, Color x) {
  if (e >= c.edge_count()) throw InvalidArgument("edge ordinal out of range");
  const Color from = c.at(e);
  if (from == x) throw InvalidArgument("recoloring an edge to its current color is a no-op");
  const ColorRows rows(c);
  const auto [u, v] = edge_endpoints(e, c.vertex_count());
  return static_cast<std::int64_t>(rows.common(x, u, v)) - rows.common(from, u, v);
}

SearchResult minimize(const SearchParams& p) {
  check_colors(p.k);
  if (p.n < 1 || p.restarts < 1 || p.steps_per_restart < 1 || p.sideways_limit < 0)
    throw InvalidArgument("search parameters must be positive");
  if (p.n > kWordCeiling) throw CapacityError("search is limited to n <= 64");

  std::vector<RestartOutcome> outcomes(p.restarts);
  std::vector<bool> done(p.restarts, false);
  // Lowest restart index that reached zero; restarts after it are skipped.
  std::atomic<int> stop_at{p.restarts};
  std::atomic<int> next{0};

  auto worker = [&] {
    for (int r = next++; r < p.restarts; r = next++) {
      if (r > stop_at.load()) continue;
      outcomes[r] = climb(p, r);
      done[r] = true;
      if (outcomes[r].best_count == 0) {
        int cur = stop_at.load();
        while (r < cur && !stop_at.compare_exchange_weak(cur, r)) {
        }
      }
    }
  };

  int threads = p.threads > 0 ? p.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, p.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const int last = std::min(stop_at.load(), p.restarts - 1);
  SearchResult result;
  result.best_count = std::numeric_limits<std::uint64_t>::max();
  for (int r = 0; r <= last; ++r) {
    const RestartOutcome& o = outcomes[r];
    result.trace.push_back(o.best_count);
    result.evaluations += o.evaluations;
    if (o.best_count < result.best_count) {
      result.best_count = o.best_count;
      result.best = o.best;
      result.best_restart = r;
    }
  }
  result.best_mono = fast_mono_counts(result.best);
  return result;
}

std::uint64_t exhaustive_budget() {
  if (const char* env = std::getenv("RAMSEY_EXHAUSTIVE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 25;
}

ExhaustiveResult exhaustive_min(int n, int k, std::uint64_t budget) {
  check_colors(k);
  if (n < 1) throw InvalidArgument("vertex count must be at least 1");
  const std::size_t m = num_edges(n);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (space > budget / static_cast<std::uint64_t>(k))
      throw CapacityError(std::to_string(k) + "^" + std::to_string(m) +
                          " colorings exceed the exhaustive budget of " + std::to_string(budget));
    space *= static_cast<std::uint64_t>(k);
  }

  // Odometer over edges 1..m-1 (edge 0 stays Blue); the count is updated
  // incrementally with the same common-neighbour rule as move_delta.
  EdgeColoring c(n, Color::Blue);
  ColorRows rows(c);
  std::vector<Edge> ends;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) ends.push_back({u, v});

  std::int64_t current = static_cast<std::int64_t>(num_triangles(n));
  ExhaustiveResult r;
  r.minimum = static_cast<std::uint64_t>(current);
  r.witness = c;
  r.states = 1;

  auto recolor = [&](EdgeOrdinal e, Color to) {
    const auto [u, v] = ends[e];
    const Color from = c.at(e);
    current += rows.common(to, u, v) - rows.common(from, u, v);
    rows.recolor(u, v, from, to);
    c.set(e, to);
  };

  while (true) {
    EdgeOrdinal e = 1;
    while (e < m && to_index(c.at(e)) == k - 1) {
      recolor(e, Color::Blue);
      ++e;
    }
    if (e >= m) break;
    recolor(e, color_from_index(to_index(c.at(e)) + 1));
    ++r.states;
    if (static_cast<std::uint64_t>(current) < r.minimum) {
      r.minimum = static_cast<std::uint64_t>(current);
      r.witness = c;
    }
  }
  return r;
}

}  // namespace ramsey
