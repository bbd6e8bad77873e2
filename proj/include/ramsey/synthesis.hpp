#pragma once

#include <string>
#include <vector>

#include "ramsey/census.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/template.hpp"

namespace ramsey {

/// Colors of the spokes from a new vertex to each existing vertex of a host.
struct VertexExtension {
  std::vector<Color> spoke_colors;

  std::string to_string() const;
  // Throws FormatError on characters outside B/R/Y.
  static VertexExtension from_string(std::string_view s);

  friend bool operator==(const VertexExtension&, const VertexExtension&) = default;
};

/// Spokes of vertex v in c, in vertex order with v itself skipped.
VertexExtension spokes_of(const EdgeColoring& c, Vertex v);

/// Every spoke assignment that keeps host + one new vertex triangle-free,
/// in depth-first order over vertices with colors tried B, R, Y.
/// Throws PreconditionError if the host has a monochromatic triangle.
std::vector<VertexExtension> find_extensions(const EdgeColoring& host);

/// True when adding a vertex with these spokes creates no monochromatic triangle
/// through the new vertex.
bool is_valid_extension(const EdgeColoring& host, const VertexExtension& e);

/// Appends a vertex with index n. Throws InvalidArgument on length mismatch.
EdgeColoring extend_with(const EdgeColoring& c, const VertexExtension& e);

/// K_{m+2} minus one edge: the host on vertices 0..m-1, vertex m colored by
/// ea, vertex m+1 by eb, and the edge (m, m+1) left open with domain {B,R,Y}.
/// Throws PreconditionError unless the host is triangle-free and both
/// extensions are valid for it.
ColoringTemplate assemble(const EdgeColoring& host, const VertexExtension& ea,
                          const VertexExtension& eb);

struct AssemblyReport {
  Color added_edge_color = Color::Blue;
  Edge added_edge{0, 0};
  TriangleCensus census;
  std::uint64_t triangles_through_new_edge = 0;
  EdgeColoring coloring;
};

/// Colors the single open edge of t with x and takes the census.
/// Throws PreconditionError unless t has exactly one open edge with full domain.
AssemblyReport complete_edge(const ColoringTemplate& t, Color x);

/// |{v : ea(v) = eb(v) = x}|, the predicted monochromatic count in color x
/// after completing assemble(host, ea, eb) with x.
std::uint64_t overlap_count(const VertexExtension& ea, const VertexExtension& eb, Color x);

/// GF(16) coloring, minus `deleted_vertex`, assembled with two copies of that
/// vertex's spokes, open edge completed with x.
AssemblyReport twin_k17(Color x, Vertex deleted_vertex = 0);

}  // namespace ramsey
