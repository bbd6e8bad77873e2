#include "ramsey/census.hpp"

#include <bit>

#include "ramsey/errors.hpp"

namespace ramsey {

TriangleCensus census(const EdgeColoring& c) {
  TriangleCensus t;
  const int n = c.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const Color ab = c.at(a, b);
      for (Vertex d = b + 1; d < n; ++d) {
        const Color ad = c.at(a, d);
        const Color bd = c.at(b, d);
        if (ab == ad && ad == bd) {
          ++t.mono[to_index(ab)];
          t.mono_list.push_back({a, b, d, ab});
        } else if (ab != ad && ab != bd && ad != bd) {
          ++t.rainbow;
        } else {
          ++t.bichromatic;
        }
      }
    }
  return t;
}

MonoCounts fast_mono_counts(const EdgeColoring& c) {
  const int n = c.vertex_count();
  const ColorRows rows(c);  // throws CapacityError above the ceiling
  MonoCounts m{};
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const Color x = c.at(i, j);
      // Keep only k > j so each triangle is counted once, at its lowest edge.
      const std::uint64_t above = j + 1 >= 64 ? 0 : ~std::uint64_t{0} << (j + 1);
      m[to_index(x)] += std::popcount(rows.row(x, i) & rows.row(x, j) & above);
    }
  return m;
}

}  // namespace ramsey
