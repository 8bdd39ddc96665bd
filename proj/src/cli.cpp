#include "rx3/cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <algorithm>
#include <array>
#include <iostream>
#include <regex>
#include <sstream>

#include "rx3/bounds.hpp"
#include "rx3/detect.hpp"
#include "rx3/errors.hpp"
#include "rx3/graph_io.hpp"
#include "rx3/metrics.hpp"
#include "rx3/painter.hpp"
#include "rx3/rainbow.hpp"
#include "rx3/solver.hpp"

namespace rx3::cli {

namespace {

constexpr std::array<std::string_view, 6> kBattery{"P3", "P4", "K1,3", "K1,4", "K3h", "P5"};

std::string join_vertices(std::span<const int> vertices) {
  std::string text = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) text += ",";
    text += std::to_string(vertices[i]);
  }
  return text + "}";
}

std::chrono::milliseconds seconds_to_ms(double seconds) {
  if (!(seconds >= 0)) throw InputError("budget must be a non-negative number of seconds");
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
}

FamilyKind parse_family(const std::string& name) {
  if (name == "complete") return FamilyKind::complete;
  if (name == "cycle") return FamilyKind::cycle;
  if (name == "path") return FamilyKind::path;
  if (name == "star") return FamilyKind::star;
  if (name == "hairy" || name == "hairy_clique") return FamilyKind::hairy_clique;
  throw InputError("unknown family '" + name + "'");
}

int cmd_gen(const std::string& family, int param, const std::string& out_path, std::ostream& out) {
  const Graph g = build_named({parse_family(family), param});
  if (out_path.empty()) {
    out << graph_to_json(g).dump() << "\n";
  } else {
    save_graph(out_path, g);
    out << "wrote " << out_path << " (n=" << g.order() << ", m=" << g.size() << ")\n";
  }
  return kOk;
}

int cmd_analyze(const std::string& in, bool exact, double budget, bool json, std::ostream& out) {
  const Graph g = load_graph(in);
  const AnalysisReport report = analyze(g, exact, seconds_to_ms(budget));
  out << (json ? report.to_json().dump(2) + "\n" : report.to_text());
  return report.exhausted ? kOk : kBudgetExceeded;
}

int cmd_color(const std::string& in, const std::string& method, const BoundParams& params,
              bool save, const std::string& out_path, bool json, std::ostream& out) {
  const Graph g = load_graph(in);
  EdgeColoring coloring;
  nlohmann::json summary;
  if (method == "thm7") {
    const auto result = color_p4_star_free(g, params.r, {.save_color = save});
    coloring = result.coloring;
    summary["clique"] = result.partition.clique;
    summary["independent"] = result.partition.independent;
    summary["rest"] = result.partition.rest;
    summary["hub"] = result.partition.hub;
  } else {
    const auto result = color_layered(g, params, {.save_color = save});
    coloring = result.coloring;
    summary["center"] = result.decomposition.center;
    summary["layer_alphas"] = result.layer_alphas;
  }
  summary["method"] = method;
  summary["colors_used"] = coloring.num_colors();
  summary["sdiam3"] = sdiam3(g);
  if (!out_path.empty()) save_coloring(out_path, g, coloring);
  if (json) {
    if (out_path.empty()) summary["coloring"] = coloring_to_json(g, coloring);
    out << summary.dump(2) << "\n";
    return kOk;
  }
  out << "method: " << method << "\n";
  out << "colors_used: " << coloring.num_colors() << "\n";
  out << "sdiam3: " << summary["sdiam3"].get<int>() << "\n";
  if (out_path.empty()) out << "coloring: " << coloring_to_json(g, coloring).dump() << "\n";
  else out << "wrote " << out_path << "\n";
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, bool json,
               std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const EdgeColoring coloring = load_coloring(coloring_path, g);
  const RainbowCheck check = is_3rainbow(g, coloring);
  if (json) {
    nlohmann::json doc{{"valid", check.valid}, {"colors", coloring.num_colors()}};
    if (check.failing_triple) {
      const auto v = check.failing_triple->vertices();
      doc["failing_triple"] = std::vector<int>(v.begin(), v.end());
    }
    out << doc.dump(2) << "\n";
  } else if (check.valid) {
    out << "valid (" << coloring.num_colors() << " colors)\n";
  } else {
    const auto v = check.failing_triple->vertices();
    out << "invalid: no rainbow tree for " << join_vertices(v) << "\n";
  }
  return check.valid ? kOk : kVerificationFailed;
}

int cmd_classify(const std::vector<std::string>& tokens, bool json, std::ostream& out) {
  std::vector<Graph> family;
  for (const auto& token : tokens) family.push_back(parse_pattern(token));
  const FamilyClassification result = classify_family(family);
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < family.size(); ++i)
    members.push_back({{"pattern", tokens[i]}, {"shape", recognize_pattern(family[i]).describe()}});
  if (json) {
    out << nlohmann::json{{"members", members},
                          {"bounded", result.bounded},
                          {"subfamily", result.subfamily},
                          {"match", result.members}}
               .dump(2)
        << "\n";
    return kOk;
  }
  for (const auto& m : members)
    out << m["pattern"].get<std::string>() << ": " << m["shape"].get<std::string>() << "\n";
  if (result.bounded) {
    out << "bounded (subfamily " << result.subfamily << ", members";
    for (int i : result.members) out << " " << tokens[i];
    out << ")\n";
  } else {
    out << "unbounded\n";
  }
  return kOk;
}

int cmd_bound(const BoundParams& p, bool json, std::ostream& out) {
  p.validate();
  nlohmann::json alphas = nlohmann::json::array();
  for (int i = 1; i <= p.l - 2; ++i) alphas.push_back(alpha0_bound(p.r, p.s, i).str());
  const std::string sum = ramsey_layer_sum(p).str();
  const std::string constant = steiner_rainbow_constant(p).str();
  const std::string intermediate = steiner_rainbow_intermediate(p).str();
  if (json) {
    out << nlohmann::json{{"r", p.r},
                          {"s", p.s},
                          {"l", p.l},
                          {"alpha0", alphas},
                          {"ramsey_layer_sum", sum},
                          {"constant", constant},
                          {"intermediate", intermediate}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "r=" << p.r << " s=" << p.s << " l=" << p.l << "\n";
  for (std::size_t i = 0; i < alphas.size(); ++i)
    out << "alpha0(" << i + 1 << "): " << alphas[i].get<std::string>() << "\n";
  out << "ramsey_layer_sum: " << sum << "\n";
  out << "constant: " << constant << "\n";
  out << "intermediate: " << intermediate << "\n";
  return kOk;
}

int cmd_reproduce(double budget, bool json, std::ostream& out) {
  const auto rows = reproduce(seconds_to_ms(budget));
  if (json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& row : rows)
      doc.push_back({{"claim", row.claim},
                     {"params", row.params},
                     {"published", row.published},
                     {"computed", row.computed},
                     {"verdict", row.verdict},
                     {"note", row.note}});
    out << doc.dump(2) << "\n";
  } else {
    out << reproduce_csv(rows);
  }
  return kOk;
}

}  // namespace

std::span<const std::string_view> battery_names() { return kBattery; }

Graph parse_pattern(std::string_view token) {
  const std::string text(token);
  if (!text.empty() && text[0] == '@') return load_graph(text.substr(1));
  static const std::regex path_re(R"(P(\d+))");
  static const std::regex cycle_re(R"(C(\d+))");
  static const std::regex star_re(R"(K1,(\d+))");
  static const std::regex hairy_re(R"(K(\d+)h)");
  static const std::regex complete_re(R"(K(\d+))");
  std::smatch match;
  auto number = [&] {
    if (match[1].length() > 6) throw InputError("pattern size too large in '" + text + "'");
    return std::stoi(match[1]);
  };
  if (std::regex_match(text, match, path_re)) return build_named({FamilyKind::path, number()});
  if (std::regex_match(text, match, cycle_re)) return build_named({FamilyKind::cycle, number()});
  if (std::regex_match(text, match, star_re)) return build_named({FamilyKind::star, number()});
  if (std::regex_match(text, match, hairy_re))
    return build_named({FamilyKind::hairy_clique, number()});
  if (std::regex_match(text, match, complete_re)) {
    const int n = number();
    if (n == 1) return Graph(1);
    if (n == 2) return build_named({FamilyKind::path, 2});
    return build_named({FamilyKind::complete, n});
  }
  throw InputError("unknown pattern '" + text + "'");
}

nlohmann::json AnalysisReport::to_json() const {
  nlohmann::json doc{{"n", n},           {"m", m},
                     {"sdiam3", sdiam3}, {"rx3_lower", rx3_lower},
                     {"rx3_upper", rx3_upper}, {"radius", radius},
                     {"diameter", diameter}};
  if (rx3_exact) doc["rx3_exact"] = *rx3_exact;
  if (!exhausted) doc["rx3_bracket"] = {rx3_lower, rx3_upper};
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& [name, free] : free_of) flags[name] = free;
  doc["free_of"] = flags;
  return doc;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream text;
  text << "n: " << n << "\n";
  text << "m: " << m << "\n";
  text << "sdiam3: " << sdiam3 << "\n";
  text << "radius: " << radius << "\n";
  text << "diameter: " << diameter << "\n";
  text << "rx3_bounds: [" << rx3_lower << ", " << rx3_upper << "]\n";
  if (rx3_exact) text << "rx3_exact: " << *rx3_exact << "\n";
  if (!exhausted) text << "rx3_exact: budget exceeded, in [" << rx3_lower << ", " << rx3_upper << "]\n";
  text << "free_of:";
  for (const auto& [name, free] : free_of) text << " " << name << "=" << (free ? "yes" : "no");
  text << "\n";
  return text.str();
}

AnalysisReport analyze(const Graph& g, bool exact, std::chrono::milliseconds budget) {
  AnalysisReport report;
  report.n = g.order();
  report.m = g.size();
  report.sdiam3 = rx3::sdiam3(g);
  const Rx3Bounds bounds = rx3_bounds(g);
  report.rx3_lower = bounds.lower;
  report.rx3_upper = bounds.upper;
  const EccentricityReport ecc = ecc_rad_diam(g);
  report.radius = ecc.radius;
  report.diameter = ecc.diameter;
  std::vector<Graph> battery;
  for (std::string_view name : kBattery) battery.push_back(parse_pattern(name));
  const FreenessReport freeness = is_free(g, battery);
  for (std::size_t i = 0; i < battery.size(); ++i)
    report.free_of.emplace_back(std::string(kBattery[i]), freeness.entries[i].free);
  if (exact) {
    try {
      const Rx3Result result = rx3_exact(g, {.budget = budget});
      report.rx3_exact = result.value;
      report.rx3_lower = report.rx3_upper = result.value;
    } catch (const BudgetExceededError& e) {
      report.exhausted = false;
      report.rx3_lower = e.lower();
      report.rx3_upper = e.best().value;
    }
  }
  return report;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"3-rainbow index toolkit", "rx3"};
  app.require_subcommand(1);

  std::string family, in, out_path, method = "thm7", graph_path, coloring_path;
  int param = 0;
  bool exact = false, json = false, save = false;
  double budget = 60.0;
  BoundParams params;
  std::vector<std::string> patterns;

  auto* gen = app.add_subcommand("gen", "generate a named graph");
  gen->add_option("--family", family, "complete, cycle, path, star or hairy")->required();
  gen->add_option("--param", param, "size parameter t")->required();
  gen->add_option("--out", out_path, "output file (.json for JSON, text otherwise)");

  auto* an = app.add_subcommand("analyze", "report invariants of a graph");
  an->add_option("--in", in, "graph file")->required();
  an->add_flag("--exact-rx3", exact, "compute rx3 exactly");
  an->add_option("--budget", budget, "seconds for the exact search (default 60)");
  an->add_flag("--json", json);

  auto* color = app.add_subcommand("color", "color a graph by a constructive method");
  color->add_option("--in", in, "graph file")->required();
  color->add_option("--method", method, "thm7 or layered")
      ->check(CLI::IsMember({"thm7", "layered"}));
  color->add_option("--r", params.r, "forbidden star K1,r (default 3)");
  color->add_option("--s", params.s, "forbidden hairy clique Ksh (default 3)");
  color->add_option("--l", params.l, "forbidden path Pl (default 5)");
  color->add_flag("--save-color", save, "reuse a color when the independent part has >= 4 vertices");
  color->add_option("--out", out_path, "coloring output file");
  color->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "check a 3-rainbow coloring");
  verify->add_option("--graph", graph_path, "graph file")->required();
  verify->add_option("--coloring", coloring_path, "coloring file")->required();
  verify->add_flag("--json", json);

  auto* classify = app.add_subcommand("classify", "decide whether a forbidden family bounds rx3");
  classify->add_option("patterns", patterns, "P<l>, K1,<r>, K<s>h, C<n>, K<n> or @file")
      ->required();
  classify->add_flag("--json", json);

  auto* bound = app.add_subcommand("bound", "Ramsey-based constants");
  bound->add_option("--r", params.r);
  bound->add_option("--s", params.s);
  bound->add_option("--l", params.l);
  bound->add_flag("--json", json);

  auto* repro = app.add_subcommand("reproduce", "recompute the published small-case values");
  repro->add_option("--budget", budget, "seconds per exact search (default 60)");
  repro->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }

  try {
    if (*gen) return cmd_gen(family, param, out_path, out);
    if (*an) return cmd_analyze(in, exact, budget, json, out);
    if (*color) return cmd_color(in, method, params, save, out_path, json, out);
    if (*verify) return cmd_verify(graph_path, coloring_path, json, out);
    if (*classify) return cmd_classify(patterns, json, out);
    if (*bound) return cmd_bound(params, json, out);
    if (*repro) return cmd_reproduce(budget, json, out);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPreconditionViolated;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ContractError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace rx3::cli
