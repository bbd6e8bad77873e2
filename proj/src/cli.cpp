#include "ramsey/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ramsey/census.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/io.hpp"
#include "ramsey/search.hpp"
#include "ramsey/synthesis.hpp"

namespace ramsey::cli {

namespace {

using nlohmann::json;

// Best total known from the twin K17 assembly; a search result below it at
// n = 17, k = 3 would contradict the construction record.
constexpr std::uint64_t kK17Record = 5;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_sink(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot write '" + path + "'");
  f << text;
}

Color parse_color_flag(const std::string& s) {
  if (s.size() == 1)
    if (auto c = color_from_char(s[0])) return *c;
  throw InvalidArgument("color must be one of B, R, Y");
}

MonoCounts parse_expectation(const std::string& s) {
  MonoCounts m{};
  std::stringstream ss(s);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= 3) throw InvalidArgument("--expect-mono takes three counts B,R,Y");
    try {
      std::size_t used = 0;
      m[i++] = std::stoull(part, &used);
      if (used != part.size()) throw InvalidArgument("bad count");
    } catch (const std::logic_error&) {
      throw InvalidArgument("--expect-mono takes three non-negative counts B,R,Y");
    }
  }
  if (i != 3) throw InvalidArgument("--expect-mono takes three counts B,R,Y");
  return m;
}

std::string triple(const MonoCounts& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
}

json census_json(const TriangleCensus& t, bool with_list) {
  json j;
  j["mono"] = {{"B", t.mono[0]}, {"R", t.mono[1]}, {"Y", t.mono[2]}};
  j["mono_total"] = t.mono_total();
  j["bichromatic"] = t.bichromatic;
  j["rainbow"] = t.rainbow;
  j["triangles"] = t.total();
  if (with_list) {
    json list = json::array();
    for (const auto& m : t.mono_list)
      list.push_back({{"vertices", {m.a, m.b, m.c}}, {"color", std::string(1, to_char(m.color))}});
    j["mono_list"] = list;
  }
  return j;
}

json report_json(const AssemblyReport& r) {
  return {{"added_edge", {r.added_edge.u, r.added_edge.v}},
          {"added_edge_color", std::string(1, to_char(r.added_edge_color))},
          {"mono", {r.census.mono[0], r.census.mono[1], r.census.mono[2]}},
          {"triangles_through_new_edge", r.triangles_through_new_edge}};
}

void print_report(const AssemblyReport& r, std::ostream& os) {
  os << "added edge (" << r.added_edge.u << ", " << r.added_edge.v << ") colored "
     << color_name(r.added_edge_color) << ": mono (B,R,Y) = " << triple(r.census.mono) << ", "
     << r.triangles_through_new_edge << " through the new edge\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct, verify and search 3-edge-colorings of complete graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file;
  std::string out_file;

  auto* construct = app.add_subcommand("construct", "Build a triangle-free K16 coloring");
  std::string method = "gf16";
  construct->add_option("--method", method, "gf16 or cylinder")
      ->check(CLI::IsMember({"gf16", "cylinder"}));
  construct->add_option("--out", out_file, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check per-color monochromatic counts");
  std::string expect = "0,0,0";
  verify->add_option("file", file, "Coloring document (default stdin)");
  verify->add_option("--expect-mono", expect, "Expected counts B,R,Y (default 0,0,0)");

  auto* count = app.add_subcommand("count", "Triangle census of a coloring");
  bool per_color = false;
  bool list = false;
  count->add_option("file", file, "Coloring document (default stdin)");
  count->add_flag("--per-color", per_color, "Print monochromatic counts per color");
  count->add_flag("--list", list, "List monochromatic triangles");

  auto* del = app.add_subcommand("delete-vertex", "Remove one vertex and its edges");
  int vertex = 0;
  del->add_option("file", file, "Coloring document (default stdin)");
  del->add_option("--vertex", vertex, "Vertex to delete")->required();
  del->add_option("--out", out_file, "Output file (default stdout)");

  auto* extend = app.add_subcommand("extend", "List triangle-free single-vertex extensions");
  std::size_t limit = 0;
  extend->add_option("file", file, "Coloring document (default stdin)");
  extend->add_option("--limit", limit, "Print at most N extensions (0 = all)");

  auto* assemble_cmd = app.add_subcommand("assemble", "Build K_{m+2} minus an edge from two extensions");
  std::string base_file;
  std::string ext_a_file;
  std::string ext_b_file;
  assemble_cmd->add_option("--base", base_file, "Host coloring document")->required();
  assemble_cmd->add_option("--ext-a", ext_a_file, "First extension")->required();
  assemble_cmd->add_option("--ext-b", ext_b_file, "Second extension")->required();
  assemble_cmd->add_option("--out", out_file, "Output template (default stdout)");

  auto* complete = app.add_subcommand("complete", "Color the open edge of an assembled template");
  std::string color_flag;
  complete->add_option("file", file, "Template document (default stdin)");
  complete->add_option("--color", color_flag, "B, R or Y")->required();
  complete->add_option("--out", out_file, "Output file (default stdout)");

  auto* twin = app.add_subcommand("twin-k17", "Twin-vertex K17 built from the GF(16) coloring");
  int twin_vertex = 0;
  twin->add_option("--color", color_flag, "Color of the added edge: B, R or Y")->required();
  twin->add_option("--delete-vertex", twin_vertex, "GF(16) vertex to duplicate (default 0)")
      ->check(CLI::Range(0, 15));
  twin->add_option("--out", out_file, "Output file (default stdout)");

  auto* search = app.add_subcommand("search", "Hill-climb towards few monochromatic triangles");
  SearchParams params;
  search->add_option("--n", params.n, "Vertex count")->required();
  search->add_option("--k", params.k, "Number of colors (2 or 3)");
  search->add_option("--seed", params.seed, "Seed");
  search->add_option("--restarts", params.restarts, "Restarts");
  search->add_option("--steps", params.steps_per_restart, "Moves per restart");
  search->add_option("--sideways", params.sideways_limit, "Consecutive zero-delta moves allowed");
  search->add_option("--threads", params.threads, "Worker threads (0 = all cores)");
  search->add_option("--out", out_file, "Write the best coloring to this file");

  auto* exhaustive = app.add_subcommand("exhaustive", "Exact minimum by full enumeration");
  int ex_n = 0;
  int ex_k = 2;
  exhaustive->add_option("--n", ex_n, "Vertex count")->required();
  exhaustive->add_option("--k", ex_k, "Number of colors (2 or 3)")->required();

  auto* export_cmd = app.add_subcommand("export", "Draw a coloring as DOT or SVG");
  std::string format = "svg";
  bool highlight = false;
  export_cmd->add_option("file", file, "Coloring document (default stdin)");
  export_cmd->add_option("--format", format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}));
  export_cmd->add_flag("--highlight", highlight, "Thicken monochromatic triangles");
  export_cmd->add_option("--out", out_file, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*construct) {
      const bool gf = method == "gf16";
      const EdgeColoring c = gf ? construct_gf16() : construct_cylinder();
      json meta = {{"method", method}};
      if (!gf) meta["labels"] = "0=O 1-5=A1..A5 6-10=B1..B5 11-15=C1..C5";
      write_sink(out_file, serialize(c, meta), out);
      return kOk;
    }

    if (*verify) {
      const MonoCounts want = parse_expectation(expect);
      const auto doc = parse(read_source(file, in));
      const TriangleCensus t = census(doc.coloring);
      const bool ok = t.mono == want;
      if (as_json) {
        json j = census_json(t, false);
        j["expected"] = {want[0], want[1], want[2]};
        j["verified"] = ok;
        out << j.dump(2) << "\n";
      } else {
        out << (ok ? "OK" : "FAILED") << ": n = " << doc.coloring.vertex_count()
            << ", mono (B,R,Y) = " << triple(t.mono) << ", expected " << triple(want) << "\n";
      }
      return ok ? kOk : kVerificationFailed;
    }

    if (*count) {
      const auto doc = parse(read_source(file, in));
      const TriangleCensus t = census(doc.coloring);
      if (as_json) {
        out << census_json(t, list).dump(2) << "\n";
        return kOk;
      }
      out << "monochromatic: " << t.mono_total() << "\n";
      if (per_color) out << "per-color (B,R,Y): " << triple(t.mono) << "\n";
      out << "bichromatic: " << t.bichromatic << "\nrainbow: " << t.rainbow
          << "\ntriangles: " << t.total() << "\n";
      if (list)
        for (const auto& m : t.mono_list)
          out << m.a << ' ' << m.b << ' ' << m.c << ' ' << to_char(m.color) << "\n";
      return kOk;
    }

    if (*del) {
      auto doc = parse(read_source(file, in));
      doc.meta["deleted_vertex"] = vertex;
      write_sink(out_file, serialize(delete_vertex(doc.coloring, vertex), doc.meta, doc.k), out);
      return kOk;
    }

    if (*extend) {
      const auto doc = parse(read_source(file, in));
      const auto exts = find_extensions(doc.coloring);
      const std::size_t shown = limit == 0 ? exts.size() : std::min(limit, exts.size());
      if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < shown; ++i) arr.push_back(exts[i].to_string());
        out << json{{"total", exts.size()}, {"extensions", arr}}.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < shown; ++i) out << exts[i].to_string() << "\n";
        err << exts.size() << " extension(s)\n";
      }
      return kOk;
    }

    if (*assemble_cmd) {
      const auto base = parse(read_source(base_file, in));
      const auto ea = parse_extension(read_source(ext_a_file, in));
      const auto eb = parse_extension(read_source(ext_b_file, in));
      const ColoringTemplate t = assemble(base.coloring, ea, eb);
      write_sink(out_file, serialize_template(t, {{"method", "assemble"}}), out);
      return kOk;
    }

    if (*complete || *twin) {
      const Color x = parse_color_flag(color_flag);
      const AssemblyReport r = *twin ? twin_k17(x, twin_vertex)
                                     : complete_edge(parse_template(read_source(file, in)), x);
      json meta = report_json(r);
      meta["method"] = *twin ? "twin-k17" : "complete";
      if (*twin) meta["duplicated_vertex"] = twin_vertex;
      write_sink(out_file, serialize(r.coloring, meta), out);
      if (!as_json) print_report(r, err);
      return kOk;
    }

    if (*search) {
      const auto t0 = std::chrono::steady_clock::now();
      const SearchResult r = minimize(params);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const bool below_record = params.n == 17 && params.k == 3 && r.best_count < kK17Record;
      json meta = {{"method", "search"},      {"seed", params.seed},
                   {"restarts", params.restarts}, {"steps", params.steps_per_restart},
                   {"sideways", params.sideways_limit}, {"best_count", r.best_count}};
      if (!out_file.empty()) write_sink(out_file, serialize(r.best, meta, params.k), out);
      if (below_record)
        err << "RED ALERT: found a K17 3-coloring with " << r.best_count
            << " monochromatic triangles, below the known construction with 5\n";
      if (as_json) {
        json j = meta;
        j["n"] = params.n;
        j["k"] = params.k;
        j["best_mono"] = {r.best_mono[0], r.best_mono[1], r.best_mono[2]};
        j["best_restart"] = r.best_restart;
        j["trace"] = r.trace;
        j["evaluations"] = r.evaluations;
        j["seconds"] = secs;
        j["below_record"] = below_record;
        out << j.dump(2) << "\n";
      } else {
        out << "n = " << params.n << ", k = " << params.k << ", seed = " << params.seed << "\n"
            << "best monochromatic count: " << r.best_count << " (B,R,Y) = " << triple(r.best_mono)
            << " at restart " << r.best_restart << "\n"
            << "restarts run: " << r.trace.size() << ", moves evaluated: " << r.evaluations
            << ", " << secs << " s\n";
      }
      return kOk;
    }

    if (*exhaustive) {
      const ExhaustiveResult r = exhaustive_min(ex_n, ex_k);
      if (as_json) {
        out << json{{"n", ex_n},
                    {"k", ex_k},
                    {"minimum", r.minimum},
                    {"states", r.states},
                    {"witness", json::parse(serialize(r.witness, {{"method", "exhaustive"}}, ex_k))}}
                   .dump(2)
            << "\n";
      } else {
        std::string colors;
        for (Color c : r.witness.colors()) colors.push_back(to_char(c));
        out << "minimum monochromatic count for K" << ex_n << " with " << ex_k
            << " colors: " << r.minimum << "\nwitness: " << colors << "\nstates: " << r.states << "\n";
      }
      return kOk;
    }

    if (*export_cmd) {
      const auto doc = parse(read_source(file, in));
      const FigureFormat f = format == "dot" ? FigureFormat::Dot : FigureFormat::Svg;
      write_sink(out_file, export_figure(doc.coloring, f, highlight), out);
      return kOk;
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacityExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace ramsey::cli
