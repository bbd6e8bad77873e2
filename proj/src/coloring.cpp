#include "ramsey/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>
#include <string>

#include "ramsey/census.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

EdgeOrdinal edge_index(Vertex i, Vertex j, int n) {
  if (i < 0 || i >= j || j >= n)
    throw InvalidArgument("invalid edge (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") for n = " + std::to_string(n));
  return edge_ordinal(i, j, n);
}

Edge edge_endpoints(EdgeOrdinal e, int n) {
  if (e >= num_edges(n)) throw InvalidArgument("edge ordinal out of range");
  Vertex i = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (e >= row) {
    e -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + static_cast<Vertex>(e)};
}

EdgeColoring::EdgeColoring(int n, Color fill) : n_(n) {
  if (n < 1) throw InvalidArgument("vertex count must be at least 1");
  colors_.assign(num_edges(n), fill);
}

EdgeColoring::EdgeColoring(int n, std::vector<Color> colors) : n_(n), colors_(std::move(colors)) {
  if (n < 1) throw InvalidArgument("vertex count must be at least 1");
  if (colors_.size() != num_edges(n))
    throw InvalidArgument("expected " + std::to_string(num_edges(n)) + " edge colors for n = " +
                          std::to_string(n) + ", got " + std::to_string(colors_.size()));
}

EdgeColoring permute_colors(const EdgeColoring& c, const ColorPermutation& pi) {
  std::vector<Color> out(c.colors().begin(), c.colors().end());
  for (Color& x : out) x = pi(x);
  return EdgeColoring(c.vertex_count(), std::move(out));
}

EdgeColoring permute_vertices(const EdgeColoring& c, std::span<const Vertex> rho) {
  const int n = c.vertex_count();
  if (rho.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("vertex permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (Vertex v : rho) {
    if (v < 0 || v >= n || hit[v]) throw InvalidArgument("not a vertex permutation");
    hit[v] = true;
  }
  EdgeColoring out(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) out.set(rho[i], rho[j], c.at(i, j));
  return out;
}

EdgeColoring delete_vertex(const EdgeColoring& c, Vertex v) {
  const int n = c.vertex_count();
  if (n < 2) throw InvalidArgument("cannot delete a vertex from K_1");
  if (v < 0 || v >= n) throw InvalidArgument("vertex out of range");
  std::vector<Color> out;
  out.reserve(num_edges(n - 1));
  for (Vertex i = 0; i < n; ++i) {
    if (i == v) continue;
    for (Vertex j = i + 1; j < n; ++j)
      if (j != v) out.push_back(c.at(i, j));
  }
  return EdgeColoring(n - 1, std::move(out));
}

std::array<int, kNumColors> color_degree_profile(const EdgeColoring& c, Vertex v) {
  const int n = c.vertex_count();
  if (v < 0 || v >= n) throw InvalidArgument("vertex out of range");
  std::array<int, kNumColors> profile{};
  for (Vertex w = 0; w < n; ++w)
    if (w != v) ++profile[to_index(c.at(v, w))];
  return profile;
}

std::string fingerprint(const EdgeColoring& c) {
  std::vector<std::array<int, kNumColors>> profiles;
  for (Vertex v = 0; v < c.vertex_count(); ++v) profiles.push_back(color_degree_profile(c, v));
  std::sort(profiles.begin(), profiles.end());
  const TriangleCensus t = census(c);

  std::ostringstream summary;
  summary << c.vertex_count() << '|';
  for (const auto& p : profiles) summary << p[0] << ',' << p[1] << ',' << p[2] << ';';
  summary << '|' << t.mono[0] << ',' << t.mono[1] << ',' << t.mono[2] << ',' << t.bichromatic
          << ',' << t.rainbow;

  // FNV-1a, 64-bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : summary.str()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ColorRows::ColorRows(const EdgeColoring& c) {
  const int n = c.vertex_count();
  if (n > kWordCeiling)
    throw CapacityError("n = " + std::to_string(n) + " exceeds the bit-row ceiling of " +
                        std::to_string(kWordCeiling));
  for (auto& r : rows_) r.assign(n, 0);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      auto& r = rows_[to_index(c.at(i, j))];
      r[i] |= std::uint64_t{1} << j;
      r[j] |= std::uint64_t{1} << i;
    }
}

int ColorRows::common(Color x, Vertex u, Vertex v) const {
  const auto& r = rows_[to_index(x)];
  return std::popcount(r[u] & r[v]);
}

void ColorRows::recolor(Vertex u, Vertex v, Color from, Color to) {
  auto& f = rows_[to_index(from)];
  auto& t = rows_[to_index(to)];
  f[u] &= ~(std::uint64_t{1} << v);
  f[v] &= ~(std::uint64_t{1} << u);
  t[u] |= std::uint64_t{1} << v;
  t[v] |= std::uint64_t{1} << u;
}

}  // namespace ramsey
