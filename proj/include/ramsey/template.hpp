#pragma once

#include <optional>
#include <vector>

#include "ramsey/color.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

/// color(target) == sigma^shift(color(source)).
struct Coupling {
  EdgeOrdinal target;
  EdgeOrdinal source;
  int shift;  // 0, 1 or 2
  friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// Partial coloring of K_n: a non-empty domain of allowed colors per edge,
/// plus optional functional constraints tying one edge's color to another's.
class ColoringTemplate {
 public:
  ColoringTemplate() = default;
  // Every domain starts as {B, R, Y}.
  explicit ColoringTemplate(int n);
  static ColoringTemplate from_coloring(const EdgeColoring& c);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return domains_.size(); }

  ColorSet domain(EdgeOrdinal e) const { return domains_[e]; }
  ColorSet domain(Vertex u, Vertex v) const { return domains_[edge_ordinal(u, v, n_)]; }
  // Throws InvalidArgument for an empty domain.
  void set_domain(EdgeOrdinal e, ColorSet d);
  void set_domain(Vertex u, Vertex v, ColorSet d) { set_domain(edge_ordinal(u, v, n_), d); }

  const std::vector<Coupling>& couplings() const { return couplings_; }
  void add_coupling(Coupling c);

  /// Ordinals of edges whose domain has more than one color.
  std::vector<EdgeOrdinal> open_edges() const;

  /// The coloring if every domain is a singleton.
  std::optional<EdgeColoring> as_coloring() const;

 private:
  int n_ = 0;
  std::vector<ColorSet> domains_;
  std::vector<Coupling> couplings_;
};

/// Independent post-hoc check that c lies in every domain of t and satisfies
/// every coupling. Does not look at triangles.
bool respects_template(const ColoringTemplate& t, const EdgeColoring& c);

}  // namespace ramsey
