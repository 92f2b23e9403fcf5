#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vapp/io.hpp"
#include "vapp/suites.hpp"

using namespace vapp;

namespace {

struct Output {
  std::string format = "text";  // text | json-like-structured
  std::string path;             // empty = stdout

  void emit(const Json& structured, const std::string& text) const {
    std::string payload =
        format == "text" ? text : structured.dump(2) + "\n";
    if (path.empty()) {
      std::cout << payload;
    } else {
      save_json_file(path, structured);  // writes dump(2)
      if (format == "text") std::cout << text;
    }
  }
};

Json violations_json(const LawReport& rep) {
  Json arr = Json::array();
  for (const auto& v : rep.violations) {
    Json e;
    e["law"] = v.law;
    e["witness"] = v.witness;
    arr.push_back(e);
  }
  return arr;
}

std::string violations_text(const LawReport& rep) {
  std::string s;
  for (const auto& v : rep.violations)
    s += "  violation: " + v.law + "  witness: " + v.witness + "\n";
  return s;
}

/// Builds the report pair and returns the process exit code.
int finish(const Output& out, const std::string& command,
           const LawReport& rep,
           const std::vector<std::pair<std::string, std::string>>& facts,
           double seconds) {
  Json j;
  j["command"] = command;
  j["verdict"] = rep.ok() ? "pass" : "fail";
  Json jf;
  for (const auto& [k, v] : facts) jf[k] = v;
  j["facts"] = jf;
  j["violations"] = violations_json(rep);
  std::string text = command + ": " + (rep.ok() ? "pass" : "fail") + "\n";
  for (const auto& [k, v] : facts) text += "  " + k + " = " + v + "\n";
  text += violations_text(rep);
  text += "  elapsed: " + std::to_string(seconds) + "s\n";
  out.emit(j, text);
  return rep.ok() ? 0 : 1;
}

ParsedQuantale quantale_from_flags(const std::string& file,
                                   const std::string& builtin) {
  if (!builtin.empty()) return parse_builtin(builtin);
  return quantale_from_json(load_json_file(file));
}

int cmd_check(const Output& out, const std::string& file,
              const std::string& builtin, const std::string& mode) {
  const auto start = std::chrono::steady_clock::now();
  LawReport rep;
  std::vector<std::pair<std::string, std::string>> facts;
  Json doc;
  std::string type;
  if (!builtin.empty()) {
    type = "quantale";
  } else {
    doc = load_json_file(file);
    if (!doc.is_object() || !doc.contains("type"))
      throw StructuralError("document has no 'type' field");
    type = doc.at("type").get<std::string>();
  }
  if (type == "quantale") {
    ParsedQuantale pq = builtin.empty() ? quantale_from_json(doc)
                                        : parse_builtin(builtin);
    rep = check_quantale(*pq.q);
    facts.emplace_back("elements", std::to_string(pq.q->size()));
    if (rep.ok()) {
      facts.emplace_back("ccd", is_ccd(*pq.q) ? "true" : "false");
      facts.emplace_back("integral", is_integral(*pq.q) ? "true" : "false");
    }
  } else if (type == "space") {
    SpaceDoc d = space_from_json(doc);
    if (mode == "closure") {
      rep = check_closure(d.c);
    } else if (mode == "approach") {
      rep = check_approach(d.c);
    } else if (mode == "probapp") {
      rep = check_probapp(d.c);
    } else {
      throw StructuralError("unknown mode '" + mode + "'");
    }
    facts.emplace_back("points", std::to_string(d.c.n));
    facts.emplace_back("mode", mode);
  } else if (type == "convergence") {
    ConvergenceDoc d = convergence_from_json(doc);
    rep = check_convergence_algebra(d.l);
    facts.emplace_back("points", std::to_string(d.l.n));
  } else if (type == "map") {
    MapDoc d = map_from_json(doc);
    if (!is_monotone(d.f)) rep.add("map/monotone", d.f.name);
    HomClassification h = classify_hom(d.f);
    facts.emplace_back("monotone", h.monotone ? "true" : "false");
    facts.emplace_back("lax-homomorphism", h.lax ? "true" : "false");
    facts.emplace_back("strict-homomorphism", h.strict ? "true" : "false");
    facts.emplace_back("left-adjoint",
                       h.has_left_adjoint ? "true" : "false");
    facts.emplace_back("right-adjoint",
                       h.has_right_adjoint ? "true" : "false");
  } else {
    throw StructuralError("unknown document type '" + type + "'");
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return finish(out, "check " + type, rep, facts, secs);
}

int cmd_convert(const Output& out, const std::string& file,
                const std::string& to, const std::string& output) {
  const auto start = std::chrono::steady_clock::now();
  Json doc = load_json_file(file);
  std::string type = doc.contains("type")
                         ? doc.at("type").get<std::string>()
                         : std::string();
  LawReport rep;
  std::vector<std::pair<std::string, std::string>> facts;
  Json converted;
  if (type == "space") {
    SpaceDoc d = space_from_json(doc);
    rep = check_closure(d.c);
    if (rep.ok()) {
      if (to == "distance" || to == "tower") {
        converted = space_to_json(d.c, d.pq, d.points, to);
      } else if (to == "convergence") {
        converted = convergence_to_json(induced_convergence(d.c), d.pq,
                                        d.points);
        if (!is_approach(d.c))
          facts.emplace_back(
              "lossy",
              "input is not an approach structure; the round trip through "
              "convergence is strictly below the input");
      } else {
        throw StructuralError("unknown conversion target '" + to + "'");
      }
    }
  } else if (type == "convergence") {
    ConvergenceDoc d = convergence_from_json(doc);
    if (to == "distance" || to == "tower") {
      converted = space_to_json(induced_distance(d.l), d.pq, d.points, to);
    } else if (to == "convergence") {
      converted = convergence_to_json(d.l, d.pq, d.points);
    } else {
      throw StructuralError("unknown conversion target '" + to + "'");
    }
  } else {
    throw StructuralError("convert expects a space or convergence document");
  }
  if (rep.ok() && !output.empty()) save_json_file(output, converted);
  if (rep.ok() && output.empty()) std::cout << converted.dump(2) << "\n";
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  Output report_out = out;
  report_out.path.clear();  // --output holds the converted document
  if (!rep.ok()) return finish(report_out, "convert", rep, facts, secs);
  facts.emplace_back("to", to);
  return finish(report_out, "convert", rep, facts, secs);
}

int cmd_basechange(const Output& out, const std::string& file,
                   const std::string& map_name, const std::string& map_file,
                   const std::string& target, bool do_reflect,
                   const std::string& output) {
  const auto start = std::chrono::steady_clock::now();
  Json doc = load_json_file(file);
  std::string type = doc.contains("type")
                         ? doc.at("type").get<std::string>()
                         : std::string();
  LawReport rep;
  std::vector<std::pair<std::string, std::string>> facts;
  Json converted;

  auto resolve_map = [&](const ParsedQuantale& src) {
    if (!map_file.empty()) {
      MapDoc md = map_from_json(load_json_file(map_file));
      if (md.f.source->labels != src.q->labels)
        throw StructuralError("map source quantale does not match the "
                              "structure's quantale");
      return md;
    }
    if (target.empty())
      throw StructuralError("builtin maps need --target for the codomain");
    MapDoc md;
    md.source = src;
    md.target = parse_builtin(target);
    md.f = builtin_map(map_name, md.source, md.target);
    return md;
  };

  if (type == "space") {
    SpaceDoc d = space_from_json(doc);
    MapDoc md = resolve_map(d.pq);
    BaseGraph g = BaseGraph::from_distance(d.c);
    BaseGraph h = do_reflect ? change_base_reflected(md.f, g)
                             : change_base(md.f, g);
    rep = check_graph_algebra(h);
    converted = space_to_json(h.to_distance(), md.target, d.points,
                              "distance");
  } else if (type == "convergence") {
    ConvergenceDoc d = convergence_from_json(doc);
    MapDoc md = resolve_map(d.pq);
    BaseGraph g = BaseGraph::from_convergence(d.l);
    BaseGraph h = do_reflect ? change_base_reflected(md.f, g)
                             : change_base(md.f, g);
    rep = check_graph_algebra(h);
    converted = convergence_to_json(h.to_convergence(), md.target, d.points);
  } else {
    throw StructuralError(
        "basechange expects a space or convergence document");
  }
  if (!output.empty())
    save_json_file(output, converted);
  else
    std::cout << converted.dump(2) << "\n";
  facts.emplace_back("reflected", do_reflect ? "true" : "false");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  Output report_out = out;
  report_out.path.clear();
  return finish(report_out, "basechange", rep, facts, secs);
}

int cmd_verify(const Output& out, const std::string& suite,
               const WorkbenchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all_suites(cfg);
  } else {
    results.push_back(run_suite(suite, cfg));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  Json j;
  j["command"] = "verify " + suite;
  bool all_ok = true;
  Json suites = Json::array();
  std::string text;
  for (const auto& r : results) {
    all_ok = all_ok && r.ok();
    Json s;
    s["suite"] = r.name;
    s["verdict"] = r.ok() ? "pass" : "fail";
    Json jf;
    for (const auto& [k, v] : r.facts) jf[k] = v;
    s["facts"] = jf;
    s["violations"] = violations_json(r.report);
    suites.push_back(s);
    text += r.name + ": " + (r.ok() ? "pass" : "fail") + "\n";
    for (const auto& [k, v] : r.facts) text += "  " + k + " = " + v + "\n";
    text += violations_text(r.report);
  }
  j["verdict"] = all_ok ? "pass" : "fail";
  j["suites"] = suites;
  text += "overall: " + std::string(all_ok ? "pass" : "fail") + "\n";
  text += "elapsed: " + std::to_string(secs) + "s\n";
  out.emit(j, text);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-quantale approach-space workbench"};
  app.require_subcommand(1);

  Output out;
  WorkbenchConfig cfg;
  std::string file, builtin, mode = "approach", to = "distance";
  std::string map_name, map_file, target, output, suite;
  bool do_reflect = false;

  app.add_option("--format", out.format, "text | json-like-structured")
      ->check(CLI::IsMember({"text", "json-like-structured"}));
  app.add_option("--output", output, "write the result to this file");
  app.add_option("--seed", cfg.seed, "sampling seed");
  app.add_option("--samples", cfg.sample_count, "sample count")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-exhaustive-size", cfg.max_exhaustive_size,
                 "largest carrier scanned exhaustively")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--workers", cfg.workers, "suite worker threads")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "check a definition file");
  check->add_option("file", file, "quantale/space/convergence/map document");
  check->add_option("--quantale", file, "quantale document to check");
  check->add_option("--builtin", builtin, "builtin quantale descriptor");
  check->add_option("--mode", mode,
                    "space checks: closure | approach | probapp");

  auto* convert = app.add_subcommand("convert", "convert presentations");
  convert->add_option("file", file, "space or convergence document")
      ->required();
  convert->add_option("--to", to, "distance | tower | convergence")
      ->required();

  auto* basechange =
      app.add_subcommand("basechange", "apply a change-of-base functor");
  basechange->add_option("file", file, "space or convergence document")
      ->required();
  basechange->add_option("--map", map_name, "builtin map name");
  basechange->add_option("--map-file", map_file, "map document");
  basechange->add_option("--target", target,
                         "builtin descriptor of the target quantale");
  basechange->add_flag("--reflect", do_reflect,
                       "reflect into the algebras after the change");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'")->required();

  for (auto* sub : {check, convert, basechange, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  out.path = output;

  try {
    if (check->parsed()) {
      if (file.empty() && builtin.empty())
        throw StructuralError("check needs a file or --builtin");
      return cmd_check(out, file, builtin, mode);
    }
    if (convert->parsed()) return cmd_convert(out, file, to, output);
    if (basechange->parsed()) {
      if (map_name.empty() == map_file.empty())
        throw StructuralError(
            "basechange needs exactly one of --map or --map-file");
      return cmd_basechange(out, file, map_name, map_file, target,
                            do_reflect, output);
    }
    if (verify->parsed()) {
      if (suite != "all") {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
          throw StructuralError("unknown suite '" + suite + "'");
      }
      return cmd_verify(out, suite, cfg);
    }
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "document error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
