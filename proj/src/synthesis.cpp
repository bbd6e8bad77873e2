#include "ramsey/synthesis.hpp"

#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

bool triangle_free(const EdgeColoring& c) {
  if (c.vertex_count() <= kWordCeiling) return mono_total(fast_mono_counts(c)) == 0;
  return census(c).mono_total() == 0;
}

void require_triangle_free(const EdgeColoring& c) {
  if (!triangle_free(c)) throw PreconditionError("host coloring contains a monochromatic triangle");
}

}  // namespace

std::string VertexExtension::to_string() const {
  std::string s;
  s.reserve(spoke_colors.size());
  for (Color c : spoke_colors) s.push_back(to_char(c));
  return s;
}

VertexExtension VertexExtension::from_string(std::string_view s) {
  VertexExtension e;
  for (char ch : s) {
    const auto c = color_from_char(ch);
    if (!c) throw FormatError(std::string("invalid spoke color '") + ch + "'");
    e.spoke_colors.push_back(*c);
  }
  return e;
}

VertexExtension spokes_of(const EdgeColoring& c, Vertex v) {
  if (v < 0 || v >= c.vertex_count()) throw InvalidArgument("vertex out of range");
  VertexExtension e;
  for (Vertex w = 0; w < c.vertex_count(); ++w)
    if (w != v) e.spoke_colors.push_back(c.at(v, w));
  return e;
}

std::vector<VertexExtension> find_extensions(const EdgeColoring& host) {
  require_triangle_free(host);
  const int m = host.vertex_count();
  const ColorRows rows(host);
  std::vector<VertexExtension> out;
  std::vector<Color> spokes(m);
  // Vertices already given spoke color x, as a bit mask.
  std::array<std::uint64_t, kNumColors> chosen{};

  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (v == m) {
      out.push_back({spokes});
      return;
    }
    for (Color x : kAllColors) {
      // Spoke x to v closes a triangle with any earlier u that has spoke x
      // and host edge (u, v) colored x.
      if (rows.row(x, v) & chosen[to_index(x)]) continue;
      spokes[v] = x;
      chosen[to_index(x)] |= std::uint64_t{1} << v;
      self(self, v + 1);
      chosen[to_index(x)] &= ~(std::uint64_t{1} << v);
    }
  };
  dfs(dfs, 0);
  return out;
}

bool is_valid_extension(const EdgeColoring& host, const VertexExtension& e) {
  const int m = host.vertex_count();
  if (e.spoke_colors.size() != static_cast<std::size_t>(m)) return false;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v)
      if (e.spoke_colors[u] == e.spoke_colors[v] && host.at(u, v) == e.spoke_colors[u])
        return false;
  return true;
}

EdgeColoring extend_with(const EdgeColoring& c, const VertexExtension& e) {
  const int n = c.vertex_count();
  if (e.spoke_colors.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("extension length " + std::to_string(e.spoke_colors.size()) +
                          " does not match host size " + std::to_string(n));
  EdgeColoring out(n + 1);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) out.set(i, j, c.at(i, j));
    out.set(i, n, e.spoke_colors[i]);
  }
  return out;
}

ColoringTemplate assemble(const EdgeColoring& host, const VertexExtension& ea,
                          const VertexExtension& eb) {
  require_triangle_free(host);
  if (!is_valid_extension(host, ea) || !is_valid_extension(host, eb))
    throw PreconditionError("extension is not a triangle-free extension of the host");
  const int m = host.vertex_count();
  ColoringTemplate t(m + 2);
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) t.set_domain(i, j, ColorSet::of(host.at(i, j)));
    t.set_domain(i, m, ColorSet::of(ea.spoke_colors[i]));
    t.set_domain(i, m + 1, ColorSet::of(eb.spoke_colors[i]));
  }
  return t;  // (m, m+1) keeps the full domain
}

AssemblyReport complete_edge(const ColoringTemplate& t, Color x) {
  const auto open = t.open_edges();
  if (open.size() != 1 || t.domain(open.front()) != ColorSet::all())
    throw PreconditionError("template must have exactly one open edge with domain {B,R,Y}");
  ColoringTemplate closed = t;
  closed.set_domain(open.front(), ColorSet::of(x));

  AssemblyReport r;
  r.added_edge_color = x;
  r.added_edge = edge_endpoints(open.front(), t.vertex_count());
  r.coloring = *closed.as_coloring();
  r.census = census(r.coloring);
  for (const MonoTriangle& tri : r.census.mono_list) {
    const std::array<Vertex, 3> vs = {tri.a, tri.b, tri.c};
    int hits = 0;
    for (Vertex v : vs) hits += (v == r.added_edge.u || v == r.added_edge.v);
    if (hits == 2) ++r.triangles_through_new_edge;
  }
  return r;
}

std::uint64_t overlap_count(const VertexExtension& ea, const VertexExtension& eb, Color x) {
  if (ea.spoke_colors.size() != eb.spoke_colors.size())
    throw InvalidArgument("extensions differ in length");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < ea.spoke_colors.size(); ++i)
    k += (ea.spoke_colors[i] == x && eb.spoke_colors[i] == x);
  return k;
}

AssemblyReport twin_k17(Color x, Vertex deleted_vertex) {
  const EdgeColoring k16 = construct_gf16();
  const VertexExtension spokes = spokes_of(k16, deleted_vertex);
  const EdgeColoring k15 = delete_vertex(k16, deleted_vertex);
  return complete_edge(assemble(k15, spokes, spokes), x);
}

}  // namespace ramsey
