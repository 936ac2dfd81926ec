#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "foliage/error.hpp"
#include "foliage/intersection.hpp"
#include "foliage/verify.hpp"

using namespace foliage;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::Parse, "cannot write " + path);
    file << text;
  }
  void emit(const Json& j) const { emit(j.dump(2) + "\n"); }
};

// Curves on the command line: a name ("a12", "word:x1x2"), "w:1,0,2,..." or a
// JSON weight array.
NormalVector parse_curve(SurfaceType s, const std::string& text) {
  if (text.rfind("w:", 0) == 0) {
    std::vector<long long> w;
    std::stringstream in(text.substr(2));
    for (std::string item; std::getline(in, item, ',');) {
      try {
        w.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad weight '" + item + "'");
      }
    }
    return validate_normal(cached_standard_model(s).triangulation, std::move(w));
  }
  if (!text.empty() && text.front() == '[') return curve_from_json(s, Json::parse(text));
  return named_curve(s, text);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

int parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, "expected an integer, got '" + text + "'");
}

// A class given as JSON (file, "-" for stdin, or inline) or through
// --system/--annular/--minimal/--filling.
struct ClassArgs {
  std::string json;
  std::string system;
  std::string annular;
  std::vector<std::string> minimal;
  bool filling = false;

  void add_to(CLI::App* app) {
    app->add_option("--class", json, "class as JSON: a file, '-' for stdin, or inline text");
    app->add_option("--system", system, "comma-separated system curves, e.g. a12,a34");
    app->add_option("--annular", annular, "comma-separated indices into --system; all of them when neither --annular nor --minimal is given");
    app->add_option("--minimal", minimal, "PIECE:FILL, PIECE indexing the complement pieces of --system");
    app->add_flag("--filling", filling, "the minimal class filling the whole surface");
  }

  FoliationClass build(SurfaceType s) const {
    if (!json.empty()) {
      std::string text = json;
      if (json == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
      } else if (json.front() != '{') {
        std::ifstream file(json);
        if (!file) throw Error(ErrorKind::Parse, "cannot read " + json);
        std::stringstream buf;
        buf << file.rdbuf();
        text = buf.str();
      }
      return class_from_json(s, Json::parse(text));
    }
    if (filling) return filling_class(cached_standard_model(s).triangulation, "m");
    Json j{{"system", Json::array()}, {"annular", Json::array()}, {"minimal", Json::array()}};
    for (const auto& name : split(system, ',')) j["system"].push_back(to_json(parse_curve(s, name)));
    for (const auto& i : split(annular, ',')) j["annular"].push_back(parse_int(i));
    if (annular.empty() && minimal.empty())
      for (std::size_t i = 0; i < j["system"].size(); ++i) j["annular"].push_back(i);
    for (const auto& m : minimal) {
      const auto colon = m.find(':');
      const std::string piece = m.substr(0, colon);
      const std::string fill = colon == std::string::npos ? "m" : m.substr(colon + 1);
      j["minimal"].push_back({{"piece", parse_int(piece)}, {"fillId", fill}});
    }
    return class_from_json(s, j);
  }
};

Json admissibility_json(SurfaceType s) {
  const Admissibility a = admissibility(s);
  Json j{{"surface", to_json(s)},
         {"euler_characteristic", euler_characteristic(s)},
         {"theorem_part1", a.theorem_part1},
         {"theorem_part2", a.theorem_part2},
         {"enumerable", a.enumerable}};
  try {
    j["complexity"] = complexity(s);
  } catch (const Error& e) {
    j["complexity"] = nullptr;
    j["complexity_error"] = e.what();
  }
  if (a.enumerable) {
    const auto& t = *cached_standard_model(s).triangulation;
    j["edges"] = t.num_edges();
    j["triangles"] = t.num_triangles();
  }
  return j;
}

const char* kDepthHelp =
    "word-length bound of the curve universe. Suite defaults: transport 5/3/6/5/4 on "
    "(0,5)/(0,6)/(1,2)/(1,3)/(2,1); braid 5/3/6/5/4 on the same; lemma31 4/2 on (0,5)/(0,6); "
    "prop32 3/1; prop33 4 on (0,5); prop34 5/3; prop37 4/3/5 on (0,5)/(0,6)/(1,3); "
    "faithfulness 3 on (0,5)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curves, foliation classes and adherence on punctured surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--out", out.path, "write the result to this file instead of stdout");

  std::string surface_text;
  int depth = 3;
  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--surface", surface_text, "surface as g,p")->required();
  };

  // surface
  auto* surface_cmd = app.add_subcommand("surface", "surface data");
  surface_cmd->require_subcommand(1);
  std::string info_arg;
  auto* info_cmd = surface_cmd->add_subcommand("info", "complexity and admissibility");
  info_cmd->add_option("surface", info_arg, "g,p")->required();
  auto* tri_cmd = surface_cmd->add_subcommand("triangulation", "standard ideal triangulation as JSON");
  tri_cmd->add_option("surface", info_arg, "g,p")->required();

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "orbit ball of the standard seeds");
  add_surface(enumerate_cmd);
  enumerate_cmd->add_option("--depth", depth, "word-length bound")->check(CLI::NonNegativeNumber);
  std::vector<std::string> seed_names;
  enumerate_cmd->add_option("--seed", seed_names, "seed curves replacing the standard ones");

  // intersect
  auto* intersect_cmd = app.add_subcommand("intersect", "geometric intersection numbers");
  add_surface(intersect_cmd);
  std::vector<std::string> curve_args;
  std::string algorithm = "both";
  bool matrix = false;
  intersect_cmd->add_option("curves", curve_args, "two curves");
  intersect_cmd->add_option("--algorithm", algorithm, "geometric, oracle or both")
      ->check(CLI::IsMember({"geometric", "oracle", "both"}));
  intersect_cmd->add_flag("--matrix", matrix, "matrix over the universe of --depth");
  intersect_cmd->add_option("--depth", depth, "word-length bound for --matrix")->check(CLI::NonNegativeNumber);

  // act
  auto* act_cmd = app.add_subcommand("act", "image of curves under a mapping class");
  add_surface(act_cmd);
  std::string word_text;
  act_cmd->add_option("--word", word_text, "word such as \"s1 s2^-1 r\"; the rightmost letter acts first")->required();
  act_cmd->add_option("curves", curve_args, "curves")->required();

  // adherence
  auto* adherence_cmd = app.add_subcommand("adherence", "adherence numbers, sets and matrices");
  adherence_cmd->require_subcommand(1);
  std::string convention_text = "forbidden";
  ClassArgs class_args;
  std::string format = "json";
  auto add_convention = [&](CLI::App* sub) {
    sub->add_option("--boundary-parallel", convention_text, "allowed or forbidden (default forbidden)")
        ->check(CLI::IsMember({"allowed", "forbidden"}));
  };
  auto* number_cmd = adherence_cmd->add_subcommand("number", "2^q - 1 by completion search");
  add_surface(number_cmd);
  class_args.add_to(number_cmd);
  add_convention(number_cmd);
  number_cmd->add_option("--depth", depth, "word-length bound of the completion universe");
  auto* set_cmd = adherence_cmd->add_subcommand("set", "adherence set inside the saturated universe");
  add_surface(set_cmd);
  class_args.add_to(set_cmd);
  add_convention(set_cmd);
  set_cmd->add_option("--depth", depth, "word-length bound of the curve universe");
  auto* matrix_cmd = adherence_cmd->add_subcommand("matrix", "adherence matrix of the saturated universe");
  add_surface(matrix_cmd);
  add_convention(matrix_cmd);
  matrix_cmd->add_option("--depth", depth, "word-length bound of the curve universe");
  matrix_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* pieces_cmd = adherence_cmd->add_subcommand("pieces", "complement pieces of a system, with their indices");
  add_surface(pieces_cmd);
  std::string pieces_system;
  pieces_cmd->add_option("--system", pieces_system, "comma-separated curves; empty for the whole surface");

  // complex
  auto* complex_cmd = app.add_subcommand("complex", "finite curve graph");
  add_surface(complex_cmd);
  complex_cmd->add_option("--depth", depth, "word-length bound")->check(CLI::NonNegativeNumber);
  std::string export_kind = "summary";
  complex_cmd->add_option("--export", export_kind, "summary, json or dot")
      ->check(CLI::IsMember({"summary", "json", "dot"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites; exit 1 on any failed check");
  std::string suite;
  bool all = false, json_stdout = false;
  std::optional<int> verify_depth;
  int word_length = 4;
  std::string verify_convention;
  verify_cmd->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_flag("--all", all, "every suite in dependency order");
  verify_cmd->add_option("--surface", surface_text, "g,p (default: the suite's surfaces)");
  verify_cmd->add_option("--depth", verify_depth, kDepthHelp);
  verify_cmd->add_option("--boundary-parallel", verify_convention, "run only this convention (default: both)")
      ->check(CLI::IsMember({"allowed", "forbidden"}));
  verify_cmd->add_option("--word-length", word_length, "faithfulness word length")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", json_stdout, "print the full JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (info_cmd->parsed()) {
      out.emit(admissibility_json(parse_surface(info_arg)));
      return 0;
    }
    if (tri_cmd->parsed()) {
      const SurfaceType s = parse_surface(info_arg);
      out.emit(to_json(*cached_standard_model(s).triangulation));
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (all == !suite.empty()) throw Error(ErrorKind::Parse, "give exactly one of --suite and --all");
      SuiteOptions options;
      if (!surface_text.empty()) options.surface = parse_surface(surface_text);
      options.depth = verify_depth;
      if (!verify_convention.empty()) options.convention = parse_boundary_parallel(verify_convention);
      options.word_length = word_length;
      const std::vector<std::string> names = all ? suite_names() : std::vector<std::string>{suite};
      Json reports = Json::array();
      bool ok = true;
      for (const auto& name : names) {
        for (const auto& r : run_suites(name, options)) {
          ok = ok && r.ok();
          reports.push_back(r.to_json());
          if (!json_stdout) {
            std::cout << r.suite << " " << to_string(r.surface) << " depth=" << r.parameters["depth"] << ": "
                      << (r.ok() ? "pass" : "FAIL") << " passed=" << r.passed << " failed=" << r.failed
                      << " reported=" << r.reported << " (" << r.wall_seconds << " s)" << std::endl;
          }
        }
      }
      if (json_stdout) std::cout << reports.dump(2) << "\n";
      if (!out.path.empty()) out.emit(reports);
      return ok ? 0 : kCheckFailed;
    }

    const SurfaceType s = parse_surface(surface_text);
    if (enumerate_cmd->parsed()) {
      if (seed_names.empty()) {
        out.emit(to_json(standard_universe(s, depth)));
      } else {
        std::vector<NormalVector> seeds;
        for (const auto& n : seed_names) seeds.push_back(parse_curve(s, n));
        out.emit(to_json(enumerate_curves(s, std::move(seeds), depth)));
      }
      return 0;
    }
    if (intersect_cmd->parsed()) {
      if (matrix) {
        const CurveUniverse& u = standard_universe(s, depth);
        Json j{{"surface", to_json(s)}, {"depth", depth}, {"curves", Json::array()}};
        for (const auto& c : u.curves) j["curves"].push_back(to_json(c));
        bool agree = true;
        std::vector<long long> geo, orc;
        if (algorithm != "oracle") geo = intersection_matrix(u.curves, IntersectionAlgorithm::geometric);
        if (algorithm != "geometric") orc = intersection_matrix(u.curves, IntersectionAlgorithm::oracle);
        if (!geo.empty() && !orc.empty()) agree = geo == orc;
        const auto& m = geo.empty() ? orc : geo;
        const std::size_t n = u.curves.size();
        Json rows = Json::array();
        for (std::size_t i = 0; i < n; ++i) rows.push_back(std::vector<long long>(m.begin() + i * n, m.begin() + (i + 1) * n));
        j["matrix"] = rows;
        if (algorithm == "both") j["algorithms_agree"] = agree;
        out.emit(j);
        return agree ? 0 : kCheckFailed;
      }
      if (curve_args.size() != 2) throw Error(ErrorKind::Parse, "intersect needs two curves");
      const NormalVector a = parse_curve(s, curve_args[0]), b = parse_curve(s, curve_args[1]);
      if (algorithm == "geometric") {
        out.emit(std::to_string(geometric_intersection(a, b)) + "\n");
        return 0;
      }
      const long long o = oracle_intersection(a, b);
      if (algorithm == "oracle") {
        out.emit(std::to_string(o) + "\n");
        return 0;
      }
      const long long g = geometric_intersection(a, b);
      if (g != o) {
        out.emit("geometric " + std::to_string(g) + " oracle " + std::to_string(o) + "\n");
        return kCheckFailed;
      }
      out.emit(std::to_string(g) + "\n");
      return 0;
    }
    if (act_cmd->parsed()) {
      const MappingClass mc = parse_word(s, word_text);
      Json images = Json::array();
      for (const auto& name : curve_args) {
        const NormalVector c = parse_curve(s, name);
        images.push_back({{"curve", to_json(c)}, {"image", to_json(apply(mc, c))}});
      }
      out.emit(Json{{"word", mc.to_string()}, {"images", images}});
      return 0;
    }
    const BoundaryParallel convention = parse_boundary_parallel(convention_text);
    if (number_cmd->parsed()) {
      const FoliationClass F = class_args.build(s);
      const CurveUniverse& u = standard_universe(s, depth);
      const CompletionContext ctx(u);
      const Completion c = max_completion(F, ctx, convention);
      out.emit(Json{{"class", to_json(F)},
                    {"boundary_parallel", to_string(convention)},
                    {"number", (1LL << c.q) - 1},
                    {"q", c.q},
                    {"closed_form_q", c.closed_form_q},
                    {"completion", to_json(c.completion)}});
      return 0;
    }
    if (set_cmd->parsed() || matrix_cmd->parsed()) {
      const CurveUniverse& u = standard_universe(s, depth);
      const CurveGraph g = build_graph(u);
      std::vector<int> all_curves(u.size());
      for (int i = 0; i < u.size(); ++i) all_curves[i] = i;
      const FoliationUniverse U = saturated_universe(g, all_curves, complexity(s), convention);
      if (set_cmd->parsed()) {
        const FoliationClass F = class_args.build(s);
        if (U.index_of(F) < 0) throw Error(ErrorKind::UniverseTooSmall, "class is not in the universe of this depth");
        Json members = Json::array();
        for (const auto& G : adherence_set(F, U)) members.push_back(to_json(G));
        out.emit(Json{{"class", to_json(F)}, {"universe_size", U.size()}, {"size", members.size()}, {"adherence_set", members}});
        return 0;
      }
      const auto m = adherence_matrix(U);
      const std::size_t n = U.elements.size();
      if (format == "csv") {
        std::string text;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) text += std::string(j ? "," : "") + (m[i * n + j] ? "1" : "0");
          text += "\n";
        }
        out.emit(text);
        return 0;
      }
      Json classes = Json::array(), rows = Json::array();
      for (const auto& F : U.elements) classes.push_back(to_json(F));
      for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(m[i * n + j] ? 1 : 0);
        rows.push_back(row);
      }
      out.emit(Json{{"classes", classes}, {"matrix", rows}});
      return 0;
    }
    if (pieces_cmd->parsed()) {
      const auto& t = cached_standard_model(s).triangulation;
      std::vector<NormalVector> curves;
      for (const auto& name : split(pieces_system, ',')) curves.push_back(parse_curve(s, name));
      const CurveSystem cs = curves.empty() ? CurveSystem::empty(t) : CurveSystem::from_curves(t, curves);
      Json pieces = Json::array();
      for (const auto& p : complement_pieces(cs)) pieces.push_back(to_json(p));
      out.emit(Json{{"system", to_json(cs)}, {"pieces", pieces}});
      return 0;
    }
    if (complex_cmd->parsed()) {
      const CurveUniverse& u = standard_universe(s, depth);
      const CurveGraph g = build_graph(u);
      if (export_kind == "dot") {
        out.emit(to_dot(g));
      } else if (export_kind == "json") {
        out.emit(to_json(g));
      } else {
        out.emit(Json{{"surface", to_json(s)},
                      {"depth", depth},
                      {"vertices", g.n},
                      {"interior_vertices", u.interior_count()},
                      {"edges", g.edge_count()},
                      {"triangles", k_simplex_count(g, 2)},
                      {"clique_number", clique_number(g)}});
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << Json{{"error", "Parse"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
  return kUsage;
}
