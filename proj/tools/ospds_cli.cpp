// Command-line front end for the ospds kernel.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ospds/ospds.hpp"

using namespace ospds;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<int> t;
  bool json = false;
  bool trace = false;
};

int need_t(const Globals& g) {
  if (!g.t) throw UsageError("--t {0,1,2} is required for this command");
  return *g.t;
}

WeightDiagram read(const std::string& s, const Globals& g) { return parse_valid(s, need_t(g)); }

std::string arc_str(const Arc& a) {
  std::string s = "(" + std::to_string(a.support) + ";";
  for (std::size_t i = 0; i < a.ends.size(); ++i) s += (i ? "," : "") + std::to_string(a.ends[i]);
  return s + ")";
}

json arc_json(const Arc& a) { return {{"support", a.support}, {"stack_index", a.stack_index}, {"ends", a.ends}}; }

Series read_series(const std::string& s) {
  if (s == "B") return Series::B;
  if (s == "D") return Series::D;
  throw UsageError("--series must be B or D");
}

void print_decomposition(const Decomposition& D, const std::string& input, int rank, bool as_json) {
  if (as_json) {
    json comps = json::array();
    for (const auto& [nu, g] : D.components) comps.push_back({{"diagram", format(nu)}, {"d0", g.d0}, {"d1", g.d1}});
    std::cout << json{{"t", D.t}, {"rank", rank}, {"input", input}, {"components", comps}}.dump() << "\n";
    return;
  }
  if (D.components.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& [nu, g] : D.components) std::cout << format(nu) << " " << g.str() << "\n";
}

int run_parse(const Globals& g, const std::string& text, const std::string& weight) {
  WeightDiagram d;
  if (!weight.empty()) {
    d = weight_to_diagram(parse_weight(weight));
  } else {
    if (text.empty()) throw UsageError("parse needs a diagram or --weight");
    d = read(text, g);
  }
  int k = atypicality(d);
  int m = d.count(Symbol::Gt) + k;
  int n = d.count(Symbol::Lt) + k;
  auto alg = superalgebra_of(d);
  std::string w = format_weight(diagram_to_weight(d, m, n));
  if (g.json) {
    std::cout << json{{"t", d.t},
                      {"diagram", format(d)},
                      {"unicode", format_unicode(d)},
                      {"atypicality", k},
                      {"tail", tail_length(d)},
                      {"core", format(core_of(d))},
                      {"algebra", {alg.M, alg.N}},
                      {"weight", w}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "diagram     " << format(d) << "\n"
            << "unicode     " << format_unicode(d) << "\n"
            << "t           " << d.t << "\n"
            << "algebra     osp(" << alg.M << "|" << alg.N << ")\n"
            << "atypicality " << k << "\n"
            << "tail        " << tail_length(d) << "\n"
            << "core        " << format(core_of(d)) << "\n"
            << "weight      " << w << "\n";
  return 0;
}

int run_validate(const Globals& g, const std::string& text) {
  WeightDiagram d = parse(text, need_t(g));
  auto v = validate(d);
  if (g.json) {
    std::cout << json{{"diagram", text}, {"t", d.t}, {"valid", v.empty()}, {"errors", v}}.dump() << "\n";
  } else if (v.empty()) {
    std::cout << "valid\n";
  } else {
    for (const auto& s : v) std::cout << "invalid: " << s << "\n";
  }
  return v.empty() ? 0 : 1;
}

void print_diagram(const Globals& g, const std::string& key, const WeightDiagram& d) {
  if (g.json) {
    std::cout << json{{key, format(d)}, {"t", d.t}}.dump() << "\n";
  } else {
    std::cout << format(d) << "\n";
  }
}

int run_unhowl(const Globals& g, const std::string& core, const std::string& h) {
  int t = need_t(g);
  auto lifts = unhowl(parse_valid(core, t), parse_valid(h, t));
  if (g.json) {
    json arr = json::array();
    for (const auto& d : lifts) arr.push_back(format(d));
    std::cout << json{{"t", t}, {"lifts", arr}}.dump() << "\n";
  } else {
    for (const auto& d : lifts) std::cout << format(d) << "\n";
  }
  return 0;
}

int run_tau(const Globals& g, const std::string& text) {
  WeightDiagram d = read(text, g);
  WeightDiagram r = d.t == 2 ? tau(d) : d.t == 1 ? tau_inv(d) : throw DomainError("tau relates t=2 and t=1 diagrams");
  print_diagram(g, "diagram", r);
  return 0;
}

int run_stabilize(const Globals& g, const std::string& text) {
  auto s = stabilize(read(text, g));
  if (g.json) {
    std::cout << json{{"t", s.diagram.t}, {"diagram", format(s.diagram)}, {"moves", s.moves}}.dump() << "\n";
    return 0;
  }
  std::cout << format(s.diagram) << "\n";
  if (!s.moves.empty()) {
    std::cout << "moves";
    for (int a : s.moves) std::cout << " " << a;
    std::cout << "\n";
  }
  return 0;
}

int run_arcs(const Globals& g, const std::string& text, bool render) {
  WeightDiagram d = read(text, g);
  auto A = build_arcs(howl(d));
  if (g.json) {
    json arcs = json::array();
    for (const Arc& a : A.arcs) {
      json j = arc_json(a);
      j["maximal"] = is_maximal(A, a);
      j["free_left"] = free_left(A, a);
      arcs.push_back(j);
    }
    std::cout << json{{"t", d.t}, {"diagram", format(A.base)}, {"arcs", arcs}}.dump() << "\n";
    return 0;
  }
  if (render) {
    std::cout << render_ascii(A);
    return 0;
  }
  for (const Arc& a : A.arcs)
    std::cout << arc_str(a) << (is_maximal(A, a) ? " maximal e=" + std::to_string(free_left(A, a)) : "") << "\n";
  return 0;
}

int run_es(const Globals& g, const std::string& text, const std::string& series, bool render) {
  auto D = es_dotted(read(text, g), read_series(series));
  if (g.json) {
    json arcs = json::array();
    for (std::size_t i = 0; i < D.arcs.size(); ++i) {
      json j = arc_json(D.arcs[i]);
      j["dotted"] = static_cast<bool>(D.dotted[i]);
      arcs.push_back(j);
    }
    std::cout << json{{"diagram", format(D.diagram)}, {"l", D.l}, {"arcs", arcs}}.dump() << "\n";
    return 0;
  }
  if (render) {
    std::cout << render_dotted(D);
    return 0;
  }
  std::cout << format(D.diagram) << " l=" << D.l << "\n";
  for (std::size_t i = 0; i < D.arcs.size(); ++i) std::cout << arc_str(D.arcs[i]) << (D.dotted[i] ? " dotted" : "") << "\n";
  return 0;
}

int run_ds(const Globals& g, const std::string& text, int rank, bool osp, const std::string& label) {
  WeightDiagram d = read(text, g);
  if (!osp) {
    print_decomposition(dsr(d, rank), format(d), rank, g.json);
    return 0;
  }
  if (rank != 1) throw UsageError("--osp works with --rank 1 only");
  std::optional<OspLabel> lab;
  if (label == "+") lab = OspLabel::Plus;
  else if (label == "-") lab = OspLabel::Minus;
  else if (!label.empty()) throw UsageError("--label must be + or -");
  auto comps = ds_osp(d, lab);
  if (g.json) {
    json arr = json::array();
    for (const auto& c : comps) {
      json j{{"diagram", format(c.diagram)}, {"d0", c.mult.d0}, {"d1", c.mult.d1}};
      if (c.label) j["label"] = *c.label == OspLabel::Plus ? "+" : "-";
      arr.push_back(j);
    }
    std::cout << json{{"t", d.t}, {"rank", 1}, {"input", format(d)}, {"components", arr}}.dump() << "\n";
    return 0;
  }
  if (comps.empty()) std::cout << "0\n";
  for (const auto& c : comps) {
    std::cout << format(c.diagram);
    if (c.label) std::cout << " [" << (*c.label == OspLabel::Plus ? "+" : "-") << "]";
    std::cout << " " << c.mult.str() << "\n";
  }
  return 0;
}

int run_oracle(const Globals& g, const std::string& lam, const std::string& nu) {
  std::vector<std::string> trace;
  auto m = oracle_mult1(read(lam, g), read(nu, g), g.trace ? &trace : nullptr);
  if (g.json) {
    json j{{"t", *g.t}, {"lambda", lam}, {"nu", nu}, {"d0", m.d0}, {"d1", m.d1}};
    if (g.trace) j["trace"] = trace;
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (const auto& line : trace) std::cout << line << "\n";
  if (!g.trace) std::cout << m.str() << "\n";
  return 0;
}

int run_sdim(const Globals& g, const std::string& text, std::optional<int> m, std::optional<int> n) {
  WeightDiagram d = read(text, g);
  int k = atypicality(d);
  int mm = m.value_or(d.count(Symbol::Gt) + k);
  int nn = n.value_or(d.count(Symbol::Lt) + k);
  long long s = superdimension(d, mm, nn);
  if (g.json) {
    std::cout << json{{"t", d.t}, {"diagram", format(d)}, {"m", mm}, {"n", nn}, {"sdim", s}}.dump() << "\n";
  } else {
    std::cout << s << "\n";
  }
  return 0;
}

int run_enumerate(const Globals& g, int k, int cores, int width) {
  int t = need_t(g);
  auto all = cores == 0 ? enumerate_corefree(t, k, width) : enumerate_diagrams(t, k, cores, width);
  if (g.json) {
    json arr = json::array();
    for (const auto& d : all) arr.push_back(format(d));
    std::cout << json{{"t", t}, {"k", k}, {"diagrams", arr}}.dump() << "\n";
  } else {
    for (const auto& d : all) std::cout << format(d) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Duflo-Serre functor on simple osp(m|2n) modules, computed on weight diagrams"};
  app.require_subcommand(1);
  app.footer(std::string("\nDiagram grammar:\n") + std::string(kGrammar));

  Globals g;
  int tval = -1;
  app.add_option("--t", tval, "Block type: 0 for osp(2m|2n), 1 for osp(2m+1|2n), 2 for the t=2 blocks")
      ->check(CLI::Range(0, 2));
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--trace", g.trace, "Print the reduction steps (oracle)");

  std::string a1, a2, weight, series = "B", label;
  bool render = false, osp = false;
  int rank = 1, k = 1, cores = 0, width = 8;
  std::optional<int> m_opt, n_opt;

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* parse_cmd = sub("parse", "Canonical form, algebra, core and weight of a diagram");
  parse_cmd->add_option("diagram", a1, "Weight diagram");
  parse_cmd->add_option("--weight", weight, "Convert \"B|D m n / a1,...,am / b1,...,bn\" (lambda+rho) instead");

  auto* validate_cmd = sub("validate", "Check the sign and zero-position rules");
  validate_cmd->add_option("diagram", a1)->required();

  auto* core_cmd = sub("core", "Replace every cross by an empty position");
  core_cmd->add_option("diagram", a1)->required();

  auto* howl_cmd = sub("howl", "Delete core symbols and close up");
  howl_cmd->add_option("diagram", a1)->required();

  auto* unhowl_cmd = sub("unhowl", "Lift a core-free diagram back onto a core");
  unhowl_cmd->add_option("core", a1)->required();
  unhowl_cmd->add_option("howl", a2)->required();

  auto* tau_cmd = sub("tau", "Map t=2 core-free diagrams to t=1 (and back with --t 1)");
  tau_cmd->add_option("diagram", a1)->required();

  auto* stab_cmd = sub("stabilize", "Move core symbols right of every cross");
  stab_cmd->add_option("diagram", a1)->required();

  auto* arcs_cmd = sub("arcs", "Arc diagram of the howl");
  arcs_cmd->add_option("diagram", a1)->required();
  arcs_cmd->add_flag("--render", render, "ASCII drawing");

  auto* es_cmd = sub("es", "Dotted cup diagram");
  es_cmd->add_option("diagram", a1)->required();
  es_cmd->add_option("--series", series, "B or D")->capture_default_str();
  es_cmd->add_flag("--render", render, "ASCII drawing");

  auto* ds_cmd = sub("ds", "Graded multiplicities of DS_r(L(lambda))");
  ds_cmd->add_option("diagram", a1)->required();
  ds_cmd->add_option("--rank", rank, "r")->capture_default_str()->check(CLI::NonNegativeNumber);
  ds_cmd->add_flag("--osp", osp, "Group OSp instead of the Lie superalgebra");
  ds_cmd->add_option("--label", label, "+ or - label for odd OSp");

  auto* oracle_cmd = sub("oracle", "Multiplicity of L(nu) in DS_1(L(lambda)) by the reduction rules");
  oracle_cmd->add_option("lambda", a1)->required();
  oracle_cmd->add_option("nu", a2)->required();

  auto* sdim_cmd = sub("sdim", "Superdimension");
  sdim_cmd->add_option("diagram", a1)->required();
  sdim_cmd->add_option("--m", m_opt, "Number of epsilon coefficients");
  sdim_cmd->add_option("--n", n_opt, "Number of delta coefficients");

  auto* enum_cmd = sub("enumerate", "List valid diagrams");
  enum_cmd->add_option("--k", k, "Atypicality")->capture_default_str()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--cores", cores, "Maximal number of core symbols")->capture_default_str()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--width", width, "Coordinates stay below this")->capture_default_str()->check(CLI::PositiveNumber);

  auto usage = [&](const std::string& msg) {
    std::cerr << "error: " << msg << "\n\nDiagram grammar:\n" << kGrammar << "\nRun with --help for the command list.\n";
    return 2;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }
  if (tval >= 0) g.t = tval;

  try {
    if (*parse_cmd) return run_parse(g, a1, weight);
    if (*validate_cmd) return run_validate(g, a1);
    if (*core_cmd) {
      print_diagram(g, "core", core_of(read(a1, g)));
      return 0;
    }
    if (*howl_cmd) {
      print_diagram(g, "howl", howl(read(a1, g)));
      return 0;
    }
    if (*unhowl_cmd) return run_unhowl(g, a1, a2);
    if (*tau_cmd) return run_tau(g, a1);
    if (*stab_cmd) return run_stabilize(g, a1);
    if (*arcs_cmd) return run_arcs(g, a1, render);
    if (*es_cmd) return run_es(g, a1, series, render);
    if (*ds_cmd) return run_ds(g, a1, rank, osp, label);
    if (*oracle_cmd) return run_oracle(g, a1, a2);
    if (*sdim_cmd) return run_sdim(g, a1, m_opt, n_opt);
    if (*enum_cmd) return run_enumerate(g, k, cores, width);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const ParseError& e) {
    return usage(e.what());
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return usage("unknown command");
}
