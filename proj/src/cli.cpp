#include "boardforge/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boardforge/analysis.hpp"
#include "boardforge/bgdl.hpp"
#include "boardforge/export.hpp"

namespace boardforge {

namespace {

struct Source {
  std::string name;
  std::string text;
};

bool use_colour() { return std::getenv("BOARDFORGE_NO_COLOR") == nullptr; }

std::string paint(const std::string& s, const char* code) {
  return use_colour() ? std::string("\x1b[") + code + "m" + s + "\x1b[0m" : s;
}

void report(const BoardError& e, const Source* src, std::ostream& err) {
  err << paint("error[" + std::string(to_string(e.code())) + "]", "1;31");
  if (e.has_span()) {
    err << " " << (src ? src->name + ":" : "") << e.span().line << ":" << e.span().column;
  }
  err << ": " << e.what() << "\n";
  if (!src || !e.has_span()) return;
  std::istringstream lines(src->text);
  std::string line;
  for (int i = 1; std::getline(lines, line); ++i) {
    if (i != e.span().line) continue;
    err << "  " << line << "\n  " << std::string(e.span().column - 1, ' ');
    const int len = std::max(1, std::min(e.span().length, static_cast<int>(line.size()) - e.span().column + 1));
    err << paint(std::string(len, '^'), "1;31") << "\n";
    break;
  }
}

Source load(const std::string& input, const std::string& expr) {
  if (!expr.empty()) return {"<expr>", expr};
  if (input.empty()) fail(ErrorCode::IoError, "no description given (pass a file or -e EXPR)");
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    std::stringstream ss;
    ss << in.rdbuf();
    if (!in) fail(ErrorCode::IoError, "cannot read " + input);
    return {input, ss.str()};
  }
  if (input.find('(') != std::string::npos) return {"<expr>", input};
  fail(ErrorCode::IoError, "no such file: " + input);
}

ElementId parse_element(const std::string& text) {
  auto site = parse_site(text);
  if (!site) fail(ErrorCode::InvalidElement, "element must look like Cell:12, got '" + text + "'");
  return site->element();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << data;
  if (!f) fail(ErrorCode::IoError, "cannot write " + path);
}

nlohmann::ordered_json ids(const std::vector<int>& v) { return nlohmann::ordered_json(v); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, query and export game boards described in the board language."};
  app.name("boardforge");
  app.require_subcommand(1);

  std::string input, expr, out_path, format = "json", show, focus, element, relation, radials, walk_text,
                                                  headings = "all";
  bool branching = false, furthest = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Description file (or an inline expression)");
    sub->add_option("-e,--expr", expr, "Inline description");
    sub->add_flag("--branching", branching, "Fork radials at ties");
  };
  auto* build = app.add_subcommand("build", "Build a board and report element counts");
  add_input(build);
  auto* exp = app.add_subcommand("export", "Write the board as JSON or SVG");
  add_input(exp);
  exp->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  exp->add_option("-o,--out", out_path, "Output path (default stdout)");
  exp->add_option("--show", show, "Overlays: relations,radials,directions");
  exp->add_option("--focus", focus, "Overlay origin, e.g. Cell:0");
  auto* query = app.add_subcommand("query", "Query relations, radials or walks of one element");
  add_input(query);
  query->add_option("--element", element, "Element, e.g. Cell:12")->required();
  auto* q_rel = query->add_option("--relation", relation, "Adjacent, Orthogonal, Diagonal, OffDiagonal or All");
  auto* q_rad = query->add_option("--radials", radials, "Direction, e.g. N, CW or Orthogonal");
  auto* q_walk = query->add_option("--walk", walk_text, "Walk tokens, e.g. F,F,R");
  query->add_option("--headings", headings, "Initial walk heading: all or a compass direction");
  query->add_flag("--furthest", furthest, "Keep only the farthest destination per heading");
  q_rel->excludes(q_rad)->excludes(q_walk);
  q_rad->excludes(q_walk);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::optional<Source> src;
  try {
    src = load(input, expr);
    EvalOptions options;
    options.branching = branching;
    BoardGraph g = evaluate_text(src->text, options);
    const Analysis& a = ensure_analysis(g, branching);

    if (build->parsed()) {
      auto violations = validate(g);
      for (const auto& w : g.warnings) err << paint("warning", "1;33") << ": " << w << "\n";
      out << "cells=" << g.cells.size() << " vertices=" << g.vertices.size() << " edges=" << g.edges.size() << " "
          << (violations.empty() ? "ok" : "invalid") << "\n";
      for (const auto& v : violations) {
        err << paint("violation", "1;31") << " " << to_string(v.kind) << " at " << to_string(v.element) << ": " << v.detail
            << "\n";
      }
      return violations.empty() ? 0 : 2;
    }

    if (exp->parsed()) {
      if (format == "json") {
        write_output(out_path, to_json(g), out);
      } else {
        SvgOptions so;
        std::stringstream parts(show);
        std::string item;
        while (std::getline(parts, item, ',')) {
          if (item == "relations") so.relations = true;
          else if (item == "radials") so.radials = true;
          else if (item == "directions") so.directions = true;
          else if (!item.empty()) fail(ErrorCode::TypeError, "unknown overlay '" + item + "'");
        }
        if (!focus.empty()) {
          so.focus = parse_element(focus);
          if (!g.valid(*so.focus)) fail(ErrorCode::InvalidElement, "no such element " + focus);
        }
        write_output(out_path, to_svg(g, so), out);
      }
      return 0;
    }

    // query
    const ElementId id = parse_element(element);
    if (!g.valid(id)) fail(ErrorCode::InvalidElement, "no such element " + element);
    nlohmann::ordered_json line;
    line["element"] = to_string(id);
    if (!relation.empty()) {
      auto r = parse_relation_type(relation);
      if (!r) fail(ErrorCode::UnknownRelation, "unknown relation '" + relation + "'");
      line["relation"] = relation;
      line["neighbors"] = ids(a.relations.neighbors(id.type, *r, id.index));
      out << line.dump() << "\n";
    } else if (!radials.empty()) {
      auto d = parse_direction(radials);
      if (!d) fail(ErrorCode::UnknownRelation, "unknown direction '" + radials + "'");
      if (id.type != a.radials.site) {
        fail(ErrorCode::InvalidElement, "radials are generated for " + std::string(to_string(a.radials.site)) + " sites");
      }
      for (const Radial* r : a.radials.query(id.index, *d, a.relations)) {
        nlohmann::ordered_json rl = line;
        rl["direction"] = radials;
        rl["relation"] = to_string(r->relation);
        rl["path"] = ids(r->path);
        rl["branch"] = r->branch;
        out << rl.dump() << "\n";
      }
    } else if (!walk_text.empty()) {
      std::optional<double> heading;
      if (headings != "all") {
        auto d = parse_direction(headings);
        if (!d || !is_wind(*d)) fail(ErrorCode::UnknownFacing, "heading must be 'all' or a compass direction");
        heading = wind_angle(*d);
      }
      auto result = walk(g, a.relations, id, parse_walk(walk_text), heading,
                         furthest ? Ambiguity::Furthest : Ambiguity::KeepAll);
      std::vector<int> dest;
      for (auto e : result.destinations) dest.push_back(e.index);
      line["walk"] = walk_text;
      line["destinations"] = ids(dest);
      out << line.dump() << "\n";
    } else {
      fail(ErrorCode::TypeError, "query needs --relation, --radials or --walk");
    }
    return 0;
  } catch (const BoardError& e) {
    report(e, src ? &*src : nullptr, err);
    return 1;
  }
}

}  // namespace boardforge
