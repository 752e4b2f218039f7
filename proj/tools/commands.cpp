#include "commands.hpp"

#include "vtangle/errors.hpp"
#include "vtangle/gauss_io.hpp"
#include "vtangle/invariants.hpp"
#include "vtangle/moves.hpp"
#include "vtangle/singular.hpp"
#include "vtangle/tangle_ops.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace vtangle::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

struct Loaded {
  std::optional<TangleDiagram> diagram;
  int status = kOk;
};

Loaded load(const std::string& path, Streams io) {
  try {
    return {parse_tangle(read_input(path, io.in)), kOk};
  } catch (const ParseError& e) {
    io.err << path << ": " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    io.err << e.what() << '\n';
  }
  return {std::nullopt, kParse};
}

std::string input_at(const RunConfig& cfg, std::size_t i) { return i < cfg.inputs.size() ? cfg.inputs[i] : "-"; }

int reject_singular(const TangleDiagram& d, const std::string& path, Streams io) {
  if (!d.has_singular_chords()) return kOk;
  io.err << path << ": diagram has singular chords; use the 'derivative' subcommand\n";
  return kSingularInput;
}

void indent(std::ostream& os, const std::string& text, const char* prefix) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) os << prefix << line << '\n';
}

/// Everything a walk must keep fixed.
struct Fingerprint {
  InvariantReport report;

  bool operator==(const Fingerprint& o) const {
    return report.psc == o.report.psc && report.plk == o.report.plk && report.plkL == o.report.plkL &&
           report.vlk == o.report.vlk && report.wriggle == o.report.wriggle;
  }
};

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 of (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

int cmd_compute(const RunConfig& cfg, Streams io) {
  const auto path = input_at(cfg, 0);
  auto loaded = load(path, io);
  if (!loaded.diagram) return loaded.status;
  if (int rc = reject_singular(*loaded.diagram, path, io)) return rc;
  auto report = compute_report(*loaded.diagram, cfg.a, cfg.b);
  if (cfg.format == Format::Json) {
    io.out << report_to_json(report).dump(2) << '\n';
  } else {
    io.out << report_to_text(report);
  }
  return kOk;
}

int cmd_fuzz(const RunConfig& cfg, Streams io) {
  const auto path = input_at(cfg, 0);
  auto loaded = load(path, io);
  if (!loaded.diagram) return loaded.status;
  if (int rc = reject_singular(*loaded.diagram, path, io)) return rc;
  const TangleDiagram& seed_diagram = *loaded.diagram;
  const Fingerprint expected{compute_report(seed_diagram, cfg.a, cfg.b)};

  std::size_t moves = 0;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    auto walk = random_walk(seed_diagram, cfg.steps, trial_seed(cfg.seed, trial), WalkOptions{cfg.cap});
    for (std::size_t k = 1; k < walk.size(); ++k) {
      ++moves;
      Fingerprint got{compute_report(walk[k], cfg.a, cfg.b)};
      if (got == expected) continue;
      if (cfg.format == Format::Json) {
        nlohmann::json j{{"result", "FAIL"},    {"trial", trial},
                         {"step", k},           {"before", serialize_tangle(walk[k - 1])},
                         {"after", serialize_tangle(walk[k])}, {"expected", report_to_json(expected.report)},
                         {"got", report_to_json(got.report)}};
        io.out << j.dump(2) << '\n';
      } else {
        io.out << "fuzz: FAIL at trial " << trial << ", step " << k << '\n';
        io.out << "expected:\n";
        indent(io.out, report_to_text(expected.report), "  ");
        io.out << "got:\n";
        indent(io.out, report_to_text(got.report), "  ");
        io.out << "before:\n";
        indent(io.out, serialize_tangle(walk[k - 1]), "  ");
        io.out << "after:\n";
        indent(io.out, serialize_tangle(walk[k]), "  ");
      }
      return kFuzzCounterexample;
    }
  }
  if (cfg.format == Format::Json) {
    nlohmann::json j{{"result", "PASS"}, {"trials", cfg.trials}, {"steps", cfg.steps},
                     {"moves", moves},   {"seed", cfg.seed},     {"cap", cfg.cap}};
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "fuzz: PASS trials=" << cfg.trials << " steps=" << cfg.steps << " moves=" << moves
           << " seed=" << cfg.seed << " cap=" << cfg.cap << '\n';
  }
  return kOk;
}

int cmd_sum(const RunConfig& cfg, Streams io) {
  if (cfg.inputs.size() != 2) {
    io.err << "sum needs exactly two inputs (-i upper -i lower)\n";
    return kUsage;
  }
  auto upper = load(cfg.inputs[0], io);
  if (!upper.diagram) return upper.status;
  auto lower = load(cfg.inputs[1], io);
  if (!lower.diagram) return lower.status;
  if (int rc = reject_singular(*upper.diagram, cfg.inputs[0], io)) return rc;
  if (int rc = reject_singular(*lower.diagram, cfg.inputs[1], io)) return rc;

  GlueResult glued;
  try {
    glued = connect(*upper.diagram, *lower.diagram);
  } catch (const GluingError& e) {
    io.err << "sum: " << e.what() << '\n';
    return kGluing;
  }

  auto rt = compute_report(*upper.diagram, cfg.a, cfg.b);
  auto ru = compute_report(*lower.diagram, cfg.a, cfg.b);
  auto rs = compute_report(glued.diagram, cfg.a, cfg.b);

  std::optional<bool> additive[3];
  const bool string_links = is_string_link(*upper.diagram) && is_string_link(*lower.diagram);
  if (string_links) {
    auto tmap = glued.upper_var_map();
    auto umap = glued.lower_var_map();
    const auto n = glued.diagram.components.size();
    auto sum_of = [&](const LaurentPoly& p, const LaurentPoly& q) {
      return substitute(p, tmap, n) + substitute(q, umap, n);
    };
    additive[0] = rs.psc == sum_of(rt.psc, ru.psc);
    additive[1] = rs.plk == sum_of(rt.plk, ru.plk);
    additive[2] = rs.plkL == sum_of(rt.plkL, ru.plkL);
  }
  auto verdict = [&](const std::optional<bool>& v) { return !v ? "n/a" : *v ? "PASS" : "FAIL"; };
  const bool all_pass = string_links && *additive[0] && *additive[1] && *additive[2];

  if (cfg.format == Format::Json) {
    nlohmann::json rel = nlohmann::json::array();
    for (auto [t, u] : glued.relations.pairs) rel.push_back({{"t", t + 1}, {"u", u + 1}});
    nlohmann::json j{{"T", report_to_json(rt)},
                     {"U", report_to_json(ru)},
                     {"sum", report_to_json(rs)},
                     {"diagram", serialize_tangle(glued.diagram)},
                     {"relations", rel}};
    if (string_links) {
      j["additivity"] = {{"psc", verdict(additive[0])},
                         {"plk", verdict(additive[1])},
                         {"plkL", verdict(additive[2])},
                         {"verdict", all_pass ? "PASS" : "FAIL"}};
    } else {
      j["additivity"] = nullptr;
    }
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "T:\n";
    indent(io.out, report_to_text(rt), "  ");
    io.out << "U:\n";
    indent(io.out, report_to_text(ru), "  ");
    io.out << "T#U:\n";
    indent(io.out, report_to_text(rs), "  ");
    io.out << "relations:";
    if (glued.relations.pairs.empty()) io.out << " none";
    for (auto [t, u] : glued.relations.pairs) io.out << " t" << t + 1 << "=u" << u + 1;
    io.out << '\n';
    if (string_links) {
      io.out << "additivity: " << (all_pass ? "PASS" : "FAIL") << " (psc " << verdict(additive[0]) << ", plk "
             << verdict(additive[1]) << ", plkL " << verdict(additive[2]) << ")\n";
    } else {
      io.out << "additivity: n/a (inputs are not both string links)\n";
    }
  }
  return kOk;
}

int cmd_derivative(const RunConfig& cfg, Streams io) {
  const auto path = input_at(cfg, 0);
  auto loaded = load(path, io);
  if (!loaded.diagram) return loaded.status;
  const auto& d = *loaded.diagram;
  std::size_t k = 0;
  for (const auto& c : d.chords) k += c.is_singular() ? 1 : 0;
  auto psc = derivative(d, {InvariantKind::Psc, cfg.a, cfg.b});
  auto plk = derivative(d, {InvariantKind::Plk, cfg.a, cfg.b});
  auto plkL = derivative(d, {InvariantKind::PlkL, cfg.a, cfg.b});
  if (cfg.format == Format::Json) {
    nlohmann::json j{{"singular_chords", k},
                     {"psc", to_json(psc)},
                     {"plk", {{"a", cfg.a.str()}, {"b", cfg.b.str()}, {"value", to_json(plk)}}},
                     {"plkL", {{"a", cfg.a.str()}, {"b", cfg.b.str()}, {"value", to_json(plkL)}}}};
    io.out << j.dump(2) << '\n';
  } else {
    const std::string ab = "(a=" + cfg.a.str() + ", b=" + cfg.b.str() + ")";
    io.out << "singular chords: " << k << '\n';
    io.out << "psc: " << render_canonical(psc) << '\n';
    io.out << "plk " << ab << ": " << render_canonical(plk) << '\n';
    io.out << "plkL " << ab << ": " << render_canonical(plkL) << '\n';
  }
  return kOk;
}

int cmd_gen(const RunConfig& cfg, Streams io) {
  if (cfg.gen_a < 0 || cfg.gen_b < 0 || cfg.gen_a > 100000 || cfg.gen_b > 100000) {
    io.err << "gen: a and b must be integers in [0, 100000]\n";
    return kParse;
  }
  io.out << serialize_tangle(gen_vlk_link(static_cast<int>(cfg.gen_a), static_cast<int>(cfg.gen_b)));
  return kOk;
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Index polynomial invariants of virtual tangles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string a_text = "1";
  std::string b_text = "1";
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.inputs, "Tangle file ('-' for standard input)");
    sub->add_option("--a", a_text, "Rational coefficient a (p/q or integer)");
    sub->add_option("--b", b_text, "Rational coefficient b (p/q or integer)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* compute = app.add_subcommand("compute", "Print p_sc, p_lk, p_lk,L, vlk and wriggle numbers");
  add_common(compute);
  auto* fuzz = app.add_subcommand("fuzz", "Check invariance along random Reidemeister walks");
  add_common(fuzz);
  fuzz->add_option("--seed", cfg.seed, "Random seed");
  fuzz->add_option("--steps", cfg.steps, "Moves per walk");
  fuzz->add_option("--trials", cfg.trials, "Number of walks");
  fuzz->add_option("--cap", cfg.cap, "Chord-count cap during walks");
  auto* sum = app.add_subcommand("sum", "Stack two tangles and compare invariants");
  add_common(sum);
  auto* deriv = app.add_subcommand("derivative", "Vassiliev derivative of each invariant");
  add_common(deriv);
  auto* gen = app.add_subcommand("gen", "Emit a two-component link with vlk = (a, -b)");
  gen->add_option("a", cfg.gen_a, "Positive crossings with L1 over")->required();
  gen->add_option("b", cfg.gen_b, "Negative crossings with L2 over")->required();
  gen->add_option("--format", format, "Ignored; output is always a tangle file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << e.what() << '\n';
    return kUsage;
  }

  try {
    cfg.a = Rational::parse(a_text);
    cfg.b = Rational::parse(b_text);
  } catch (const std::invalid_argument& e) {
    io.err << e.what() << '\n';
    return kUsage;
  }
  cfg.format = format == "json" ? Format::Json : Format::Text;

  if (compute->parsed()) return cmd_compute(cfg, io);
  if (fuzz->parsed()) return cmd_fuzz(cfg, io);
  if (sum->parsed()) return cmd_sum(cfg, io);
  if (deriv->parsed()) return cmd_derivative(cfg, io);
  return cmd_gen(cfg, io);
}

}  // namespace vtangle::cli
