#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

using MonoCounts = std::array<std::uint64_t, kNumColors>;

struct MonoTriangle {
  Vertex a;
  Vertex b;
  Vertex c;
  Color color;
  friend bool operator==(const MonoTriangle&, const MonoTriangle&) = default;
};

/// Classification of every triangle of a coloring.
struct TriangleCensus {
  MonoCounts mono{};
  std::uint64_t bichromatic = 0;
  std::uint64_t rainbow = 0;
  // Sorted lexicographically by (a, b, c), a < b < c.
  std::vector<MonoTriangle> mono_list;

  std::uint64_t mono_total() const { return mono[0] + mono[1] + mono[2]; }
  std::uint64_t total() const { return mono_total() + bichromatic + rainbow; }
};

/// Exact census by visiting all C(n,3) triples. No size ceiling.
TriangleCensus census(const EdgeColoring& c);

/// Monochromatic counts per color from per-color bit rows: for each edge
/// (i, j) of color x, the number of k > j with (i, k) and (j, k) also x.
/// Throws CapacityError when n > kWordCeiling.
MonoCounts fast_mono_counts(const EdgeColoring& c);

inline std::uint64_t mono_total(const MonoCounts& m) { return m[0] + m[1] + m[2]; }

}  // namespace ramsey
