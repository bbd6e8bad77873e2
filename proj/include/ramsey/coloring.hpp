#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ramsey/color.hpp"

namespace ramsey {

using Vertex = int;
using EdgeOrdinal = std::size_t;

/// Largest vertex count handled by the bit-row fast paths (one 64-bit word
/// per adjacency row). The plain census has no such limit.
inline constexpr int kWordCeiling = 64;

constexpr std::size_t num_edges(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}
constexpr std::uint64_t num_triangles(int n) {
  return n < 3 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 6;
}

/// Lexicographic ordinal of edge (i, j): (0,1),(0,2),...,(0,n-1),(1,2),...
/// Throws InvalidArgument unless 0 <= i < j < n.
EdgeOrdinal edge_index(Vertex i, Vertex j, int n);

/// Unchecked variant of edge_index that accepts the endpoints in any order.
constexpr EdgeOrdinal edge_ordinal(Vertex a, Vertex b, int n) {
  const auto i = static_cast<std::size_t>(a < b ? a : b);
  const auto j = static_cast<std::size_t>(a < b ? b : a);
  return i * (2 * static_cast<std::size_t>(n) - i - 1) / 2 + (j - i - 1);
}

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Inverse of edge_index.
Edge edge_endpoints(EdgeOrdinal e, int n);

/// Total assignment of colors to the edges of K_n, in edge-ordinal order.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  // K_n with every edge colored `fill`.
  explicit EdgeColoring(int n, Color fill = Color::Blue);
  // Throws InvalidArgument if colors.size() != C(n,2).
  EdgeColoring(int n, std::vector<Color> colors);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return colors_.size(); }

  Color at(Vertex u, Vertex v) const { return colors_[edge_ordinal(u, v, n_)]; }
  Color at(EdgeOrdinal e) const { return colors_[e]; }
  void set(Vertex u, Vertex v, Color c) { colors_[edge_ordinal(u, v, n_)] = c; }
  void set(EdgeOrdinal e, Color c) { colors_[e] = c; }

  std::span<const Color> colors() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int n_ = 0;
  std::vector<Color> colors_;
};

EdgeColoring permute_colors(const EdgeColoring& c, const ColorPermutation& pi);

/// Relabels vertices: the result colors (rho[i], rho[j]) like c colors (i, j).
/// Throws InvalidArgument unless rho is a permutation of [0, n).
EdgeColoring permute_vertices(const EdgeColoring& c, std::span<const Vertex> rho);

/// Drops vertex v and its incident edges; higher indices shift down by one.
EdgeColoring delete_vertex(const EdgeColoring& c, Vertex v);

/// Number of edges of each color incident to v.
std::array<int, kNumColors> color_degree_profile(const EdgeColoring& c, Vertex v);

/// Hex token of a relabeling-invariant summary (sorted color-degree profiles
/// and the triangle census). Different tokens imply non-isomorphic colorings;
/// equal tokens imply nothing.
std::string fingerprint(const EdgeColoring& c);

/// Per-color adjacency rows: bit w of rows(x)[v] is set when edge (v, w) has
/// color x. Requires n <= kWordCeiling.
class ColorRows {
 public:
  explicit ColorRows(const EdgeColoring& c);

  std::uint64_t row(Color x, Vertex v) const { return rows_[to_index(x)][v]; }
  // Number of w with both (u, w) and (v, w) colored x.
  int common(Color x, Vertex u, Vertex v) const;
  void recolor(Vertex u, Vertex v, Color from, Color to);

 private:
  std::array<std::vector<std::uint64_t>, kNumColors> rows_;
};

}  // namespace ramsey
