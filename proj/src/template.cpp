#include "ramsey/template.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {
Color shift_color(Color c, int shift) {
  for (int s = 0; s < shift; ++s) c = sigma(c);
  return c;
}
}  // namespace

ColoringTemplate::ColoringTemplate(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("vertex count must be at least 1");
  domains_.assign(num_edges(n), ColorSet::all());
}

ColoringTemplate ColoringTemplate::from_coloring(const EdgeColoring& c) {
  ColoringTemplate t(c.vertex_count());
  for (EdgeOrdinal e = 0; e < c.edge_count(); ++e) t.domains_[e] = ColorSet::of(c.at(e));
  return t;
}

void ColoringTemplate::set_domain(EdgeOrdinal e, ColorSet d) {
  if (e >= domains_.size()) throw InvalidArgument("edge ordinal out of range");
  if (d.empty()) throw InvalidArgument("edge domain must be non-empty");
  domains_[e] = d;
}

void ColoringTemplate::add_coupling(Coupling c) {
  if (c.target >= domains_.size() || c.source >= domains_.size() || c.target == c.source)
    throw InvalidArgument("coupling refers to an invalid edge");
  if (c.shift < 0 || c.shift > 2) throw InvalidArgument("coupling shift must be 0, 1 or 2");
  couplings_.push_back(c);
}

std::vector<EdgeOrdinal> ColoringTemplate::open_edges() const {
  std::vector<EdgeOrdinal> out;
  for (EdgeOrdinal e = 0; e < domains_.size(); ++e)
    if (!domains_[e].singleton()) out.push_back(e);
  return out;
}

std::optional<EdgeColoring> ColoringTemplate::as_coloring() const {
  std::vector<Color> colors;
  colors.reserve(domains_.size());
  for (ColorSet d : domains_) {
    if (!d.singleton()) return std::nullopt;
    colors.push_back(d.first());
  }
  return EdgeColoring(n_, std::move(colors));
}

bool respects_template(const ColoringTemplate& t, const EdgeColoring& c) {
  if (c.vertex_count() != t.vertex_count()) return false;
  for (EdgeOrdinal e = 0; e < c.edge_count(); ++e)
    if (!t.domain(e).contains(c.at(e))) return false;
  for (const Coupling& k : t.couplings())
    if (c.at(k.target) != shift_color(c.at(k.source), k.shift)) return false;
  return true;
}

}  // namespace ramsey
