#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ramsey/coloring.hpp"
#include "ramsey/synthesis.hpp"
#include "ramsey/template.hpp"

namespace ramsey {

inline constexpr int kDocumentVersion = 1;

/// A coloring as stored on disk: vertex count, number of colors, the edge
/// colors as one B/R/Y character per edge in ordinal order, and free-form
/// provenance metadata.
struct ColoringDocument {
  EdgeColoring coloring;
  int k = 3;
  nlohmann::json meta = nlohmann::json::object();
};

/// Canonical JSON text (sorted keys, two-space indent, trailing newline).
/// Throws InvalidArgument if the coloring uses a color beyond the first k.
std::string serialize(const EdgeColoring& c, const nlohmann::json& meta = nlohmann::json::object(),
                      int k = 3);
std::string serialize(const ColoringDocument& doc);

/// Throws FormatError on malformed JSON, a wrong format tag or version, a
/// colors string of the wrong length, or characters outside the first k colors.
ColoringDocument parse(std::string_view text);

/// Template documents use '?' in the colors string for every edge with more
/// than one allowed color and list those domains under "open". Couplings are
/// stored as (target, source, shift) ordinals.
std::string serialize_template(const ColoringTemplate& t,
                               const nlohmann::json& meta = nlohmann::json::object());
ColoringTemplate parse_template(std::string_view text);

/// Accepts either a bare spoke string (first non-empty line) or a JSON
/// object with a "spokes" field.
VertexExtension parse_extension(std::string_view text);

enum class FigureFormat { Dot, Svg };

/// DOT: one "u -- v" line per edge with its color. SVG: vertices on a regular
/// n-gon (vertex 0 at the top, clockwise), one chord per edge. With
/// `highlight`, edges of monochromatic triangles are drawn thicker and each
/// such triangle is outlined once.
std::string export_figure(const EdgeColoring& c, FigureFormat format, bool highlight = false);

}  // namespace ramsey
