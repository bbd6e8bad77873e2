#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// library's fast paths.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey::testing {

inline EdgeColoring random_k_coloring(int n, int k, std::mt19937_64& rng) {
  std::vector<Color> colors(num_edges(n));
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (Color& c : colors) c = color_from_index(pick(rng));
  return EdgeColoring(n, std::move(colors));
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Per-color monochromatic counts from an adjacency matrix, all ordered triples / 6.
inline std::array<std::uint64_t, 3> matrix_mono_counts(const EdgeColoring& c) {
  const int n = c.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) m[i][j] = to_index(c.at(i, j));
  std::array<std::uint64_t, 3> ordered{};
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex d = 0; d < n; ++d)
        if (a != b && b != d && a != d && m[a][b] == m[b][d] && m[b][d] == m[a][d])
          ++ordered[m[a][b]];
  for (auto& x : ordered) x /= 6;
  return ordered;
}

// Induced sub-coloring on the given vertices, in the given order.
inline EdgeColoring induced(const EdgeColoring& c, const std::vector<Vertex>& vs) {
  const int m = static_cast<int>(vs.size());
  EdgeColoring out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out.set(i, j, c.at(vs[i], vs[j]));
  return out;
}

}  // namespace ramsey::testing
