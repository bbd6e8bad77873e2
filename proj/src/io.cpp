#include "ramsey/io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "ramsey/census.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

using nlohmann::json;

namespace {

constexpr std::string_view kColoringFormat = "ramsey-coloring";
constexpr std::string_view kTemplateFormat = "ramsey-template";

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field '") + key + "' has the wrong type");
  }
}

void check_header(const json& j, std::string_view format) {
  if (!j.is_object()) throw FormatError("document must be a JSON object");
  if (field<std::string>(j, "format") != format)
    throw FormatError("expected a " + std::string(format) + " document");
  if (field<int>(j, "version") != kDocumentVersion)
    throw FormatError("unsupported document version");
}

int checked_vertex_count(const json& j) {
  const int n = field<int>(j, "n");
  if (n < 1 || n > 4096) throw FormatError("vertex count out of range");
  return n;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string serialize(const EdgeColoring& c, const json& meta, int k) {
  if (k != 2 && k != 3) throw InvalidArgument("number of colors must be 2 or 3");
  std::string colors;
  colors.reserve(c.edge_count());
  for (Color x : c.colors()) {
    if (to_index(x) >= k) throw InvalidArgument("coloring uses a color beyond the first k");
    colors.push_back(to_char(x));
  }
  json j;
  j["format"] = kColoringFormat;
  j["version"] = kDocumentVersion;
  j["n"] = c.vertex_count();
  j["k"] = k;
  j["colors"] = colors;
  j["meta"] = meta.is_null() ? json::object() : meta;
  return j.dump(2) + "\n";
}

std::string serialize(const ColoringDocument& doc) { return serialize(doc.coloring, doc.meta, doc.k); }

ColoringDocument parse(std::string_view text) {
  const json j = parse_json(text);
  check_header(j, kColoringFormat);
  const int n = checked_vertex_count(j);
  const int k = field<int>(j, "k");
  if (k != 2 && k != 3) throw FormatError("k must be 2 or 3");
  const auto colors = field<std::string>(j, "colors");
  if (colors.size() != num_edges(n))
    throw FormatError("colors string has length " + std::to_string(colors.size()) + ", expected " +
                      std::to_string(num_edges(n)) + " for n = " + std::to_string(n));
  std::vector<Color> out;
  out.reserve(colors.size());
  for (char ch : colors) {
    const auto x = color_from_char(ch);
    if (!x) throw FormatError(std::string("invalid color character '") + ch + "'");
    if (to_index(*x) >= k) throw FormatError(std::string("color '") + ch + "' exceeds k");
    out.push_back(*x);
  }
  ColoringDocument doc{EdgeColoring(n, std::move(out)), k, json::object()};
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw FormatError("meta must be an object");
    doc.meta = j["meta"];
  }
  return doc;
}

std::string serialize_template(const ColoringTemplate& t, const json& meta) {
  const int n = t.vertex_count();
  std::string colors;
  json open = json::array();
  for (EdgeOrdinal e = 0; e < t.edge_count(); ++e) {
    const ColorSet d = t.domain(e);
    if (d.singleton()) {
      colors.push_back(to_char(d.first()));
      continue;
    }
    colors.push_back('?');
    std::string dom;
    for (Color x : kAllColors)
      if (d.contains(x)) dom.push_back(to_char(x));
    const Edge uv = edge_endpoints(e, n);
    open.push_back({{"edge", {uv.u, uv.v}}, {"domain", dom}});
  }
  json couplings = json::array();
  for (const Coupling& c : t.couplings())
    couplings.push_back({{"target", c.target}, {"source", c.source}, {"shift", c.shift}});

  json j;
  j["format"] = kTemplateFormat;
  j["version"] = kDocumentVersion;
  j["n"] = n;
  j["colors"] = colors;
  j["open"] = open;
  j["couplings"] = couplings;
  j["meta"] = meta.is_null() ? json::object() : meta;
  return j.dump(2) + "\n";
}

ColoringTemplate parse_template(std::string_view text) {
  const json j = parse_json(text);
  check_header(j, kTemplateFormat);
  const int n = checked_vertex_count(j);
  const auto colors = field<std::string>(j, "colors");
  if (colors.size() != num_edges(n)) throw FormatError("colors string has the wrong length");

  ColoringTemplate t(n);
  std::vector<bool> pending(colors.size(), false);
  for (EdgeOrdinal e = 0; e < colors.size(); ++e) {
    if (colors[e] == '?') {
      pending[e] = true;
      continue;
    }
    const auto x = color_from_char(colors[e]);
    if (!x) throw FormatError(std::string("invalid color character '") + colors[e] + "'");
    t.set_domain(e, ColorSet::of(*x));
  }
  if (j.contains("open")) {
    for (const json& o : j["open"]) {
      const auto uv = field<std::vector<int>>(o, "edge");
      if (uv.size() != 2 || uv[0] < 0 || uv[0] >= uv[1] || uv[1] >= n)
        throw FormatError("open edge out of range");
      const EdgeOrdinal e = edge_ordinal(uv[0], uv[1], n);
      if (!pending[e]) throw FormatError("open edge is not marked '?' in colors");
      std::uint8_t bits = 0;
      for (char ch : field<std::string>(o, "domain")) {
        const auto x = color_from_char(ch);
        if (!x) throw FormatError("invalid domain character");
        bits |= ColorSet::of(*x).bits();
      }
      if (bits == 0 || ColorSet(bits).singleton())
        throw FormatError("open edge domain must have at least two colors");
      t.set_domain(e, ColorSet(bits));
      pending[e] = false;
    }
  }
  for (bool p : pending)
    if (p) throw FormatError("edge marked '?' has no domain under \"open\"");
  if (j.contains("couplings")) {
    for (const json& c : j["couplings"]) {
      try {
        t.add_coupling({field<EdgeOrdinal>(c, "target"), field<EdgeOrdinal>(c, "source"),
                        field<int>(c, "shift")});
      } catch (const InvalidArgument& e) {
        throw FormatError(e.what());
      }
    }
  }
  return t;
}

VertexExtension parse_extension(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw FormatError("empty extension document");
  if (text[first] == '{') {
    const json j = parse_json(text);
    return VertexExtension::from_string(field<std::string>(j, "spokes"));
  }
  std::string_view line = text.substr(first);
  line = line.substr(0, line.find_first_of("\r\n"));
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
  return VertexExtension::from_string(line);
}

std::string export_figure(const EdgeColoring& c, FigureFormat format, bool highlight) {
  const int n = c.vertex_count();
  std::set<std::pair<Vertex, Vertex>> thick;
  std::vector<MonoTriangle> mono;
  if (highlight) {
    mono = census(c).mono_list;
    for (const auto& t : mono) {
      thick.insert({t.a, t.b});
      thick.insert({t.a, t.c});
      thick.insert({t.b, t.c});
    }
  }

  std::ostringstream out;
  if (format == FigureFormat::Dot) {
    out << "graph K" << n << " {\n";
    out << "  node [shape=circle];\n";
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        out << "  " << u << " -- " << v << " [color=" << color_name(c.at(u, v));
        if (thick.count({u, v})) out << ", penwidth=3";
        out << "];\n";
      }
    out << "}\n";
    return out.str();
  }

  constexpr double kSize = 600.0;
  constexpr double kCenter = kSize / 2;
  constexpr double kRadius = 260.0;
  std::vector<std::pair<double, double>> pos(n);
  for (Vertex v = 0; v < n; ++v) {
    const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * v / n;
    pos[v] = {kCenter + kRadius * std::cos(theta), kCenter + kRadius * std::sin(theta)};
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool bold = thick.count({u, v}) > 0;
      out << "  <line class=\"chord\" x1=\"" << fmt(pos[u].first) << "\" y1=\"" << fmt(pos[u].second)
          << "\" x2=\"" << fmt(pos[v].first) << "\" y2=\"" << fmt(pos[v].second) << "\" stroke=\""
          << color_name(c.at(u, v)) << "\" stroke-width=\"" << (bold ? 4 : 1) << "\"/>\n";
    }
  for (const auto& t : mono) {
    out << "  <polygon class=\"mono-triangle\" points=\"";
    const std::array<Vertex, 3> vs = {t.a, t.b, t.c};
    for (std::size_t i = 0; i < vs.size(); ++i)
      out << (i ? " " : "") << fmt(pos[vs[i]].first) << ',' << fmt(pos[vs[i]].second);
    out << "\" fill=\"none\" stroke=\"" << color_name(t.color) << "\" stroke-width=\"4\"/>\n";
  }
  for (Vertex v = 0; v < n; ++v) {
    out << "  <circle cx=\"" << fmt(pos[v].first) << "\" cy=\"" << fmt(pos[v].second)
        << "\" r=\"9\" fill=\"black\"/>\n";
    out << "  <text x=\"" << fmt(pos[v].first) << "\" y=\"" << fmt(pos[v].second + 4)
        << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"white\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ramsey
