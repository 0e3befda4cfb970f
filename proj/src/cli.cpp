#include "flagweyl/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flagweyl/character.hpp"
#include "flagweyl/json_io.hpp"
#include "flagweyl/verify.hpp"

namespace flagweyl::cli {

namespace {

struct CliConfig {
  std::string format = "text";
  std::string diagram;
  std::string second;
  std::string sequence;
  bool check = false;
  int n = 0;
  bool exhaustive = false;
  bool random = false;
  std::uint64_t trials = 100;
  double density = 0.5;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool timing = false;
  int max_exhaustive_n = 4;
  std::string max_generators = "2000000";
};

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" reads stdin, an existing path reads the file, anything else is an inline
// diagram with rows joined by '/'.
Diagram load_diagram(const std::string& arg, std::istream& in) {
  if (arg == "-") return parse_diagram(read_stream(in));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    if (!file) throw ParseError("cannot read " + arg);
    return parse_diagram(read_stream(file));
  }
  return parse_diagram(arg);
}

// "2,1,3", "2 1 3" or, when every value is a single digit, "213".
std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  const bool separated = text.find_first_of(", ") != std::string::npos;
  if (!separated) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad sequence '" + text + "'");
      out.push_back(ch - '0');
    }
    return out;
  }
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    std::istringstream words(token);
    std::string w;
    while (words >> w) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(w, &used);
      } catch (const std::exception&) {
        throw ParseError("bad sequence entry '" + w + "'");
      }
      if (used != w.size()) throw ParseError("bad sequence entry '" + w + "'");
      out.push_back(v);
    }
  }
  return out;
}

std::string pattern_text(const std::optional<PatternWitness>& p) {
  if (!p) return "none";
  return "i1=" + std::to_string(p->i1) + " i2=" + std::to_string(p->i2) + " j1=" + std::to_string(p->j1) + " j2=" +
         std::to_string(p->j2);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Integer generator_cap(const CliConfig& cfg) {
  Integer cap;
  if (cap.set_str(cfg.max_generators, 10) != 0 || cap <= 0) throw ParseError("--max-generators must be a positive integer");
  return cap;
}

void require_within_cap(const Diagram& d, const CliConfig& cfg) {
  const Integer count = upper_bound_count(d);
  if (count > generator_cap(cfg)) {
    throw std::invalid_argument("diagram has " + count.get_str() + " generators, above the cap of " + cfg.max_generators +
                                " (raise with --max-generators or FLAGWEYL_MAX_GENERATORS)");
  }
}

int cmd_character(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Diagram d = load_diagram(cfg.diagram, in);
  require_within_cap(d, cfg);
  const CharacterReport r = character_report(d);
  if (cfg.format == "json") {
    print_json(out, r);
    return kOk;
  }
  out << "diagram: " << to_ascii(d, '/') << '\n'
      << "chi: " << r.chi << '\n'
      << "lower: " << r.lower << '\n'
      << "chi(1,...,1): " << r.chi_at_ones.get_str() << '\n'
      << "upper_count: " << r.upper_count.get_str() << '\n'
      << "attains_upper: " << yes_no(r.attains_upper) << '\n'
      << "attains_lower: " << yes_no(r.attains_lower) << '\n'
      << "pattern: " << pattern_text(r.pattern) << '\n';
  return kOk;
}

int cmd_avoids(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Diagram d = load_diagram(cfg.diagram, in);
  const auto p = find_pattern(d);
  if (cfg.format == "json") {
    print_json(out, json{{"avoids", !p}, {"pattern", p ? json(*p) : json(nullptr)}});
  } else if (p) {
    out << "contains pattern: " << pattern_text(p) << '\n';
  } else {
    out << "avoids pattern\n";
  }
  return p ? kVerdictFalse : kOk;
}

int cmd_witness(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const Diagram d = load_diagram(cfg.diagram, in);
  if (avoids_pattern(d)) {
    err << "error: diagram avoids the pattern; no dependence witness exists\n";
    return kVerdictFalse;
  }
  const DependenceWitness w = dependence_witness(d);
  const bool ok = verify_witness(w);
  if (cfg.format == "json") {
    json j = w;
    j["verified"] = ok;
    print_json(out, j);
  } else {
    const auto& l = w.location;
    out << "diagram: " << to_ascii(d, '/') << '\n'
        << "configuration: i1=" << l.i1 << " i2=" << l.i2 << " j1=" << l.j1 << " j2=" << l.j2 << '\n'
        << "terms: " << w.terms.size() << '\n';
    for (const auto& t : w.terms) out << "  " << (t.coeff > 0 ? "+" : "") << t.coeff.get_str() << " " << to_ascii(t.c, '/') << '\n';
    out << "verified: " << yes_no(ok) << '\n';
  }
  return ok ? kOk : kVerdictFalse;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  if (cfg.exhaustive == cfg.random) throw std::invalid_argument("verify needs exactly one of --exhaustive or --random");
  VerifyLimits limits;
  limits.max_exhaustive_n = cfg.max_exhaustive_n;
  limits.max_generators = generator_cap(cfg);
  limits.threads = cfg.threads;
  VerifyMode mode = ExhaustiveMode{};
  if (cfg.random) {
    if (!(cfg.density >= 0.0 && cfg.density <= 1.0)) throw std::invalid_argument("--density must lie in [0, 1]");
    mode = RandomMode{cfg.seed, cfg.trials, cfg.density};
  }
  const VerificationReport r = verify_theorem(cfg.n, mode, limits);
  if (cfg.format == "json") {
    print_json(out, report_to_json(r, cfg.timing));
  } else {
    if (const auto* rnd = std::get_if<RandomMode>(&r.mode)) {
      out << "mode: random seed=" << rnd->seed << " trials=" << rnd->trials << " density=" << json(rnd->density).dump() << '\n';
    } else {
      out << "mode: exhaustive\n";
    }
    out << "n: " << r.n << '\n'
        << "checked: " << r.diagrams_checked << '\n'
        << "skipped: " << r.skipped << '\n'
        << "counterexamples: " << r.counterexamples.size() << '\n';
    for (const auto& d : r.counterexamples) out << '\n' << to_ascii(d) << '\n';
    if (cfg.timing) out << "elapsed_ms: " << r.elapsed.count() << '\n';
  }
  return r.counterexamples.empty() ? kOk : kVerdictFalse;
}

int report_oracle(const CliConfig& cfg, std::ostream& out, const XPolynomial& oracle, const Diagram& d, const char* route) {
  std::optional<bool> agree;
  XPolynomial chi;
  if (cfg.check) {
    require_within_cap(d, cfg);
    chi = dual_character(d);
    agree = chi == oracle;
  }
  if (cfg.format == "json") {
    json j{{"polynomial", oracle}};
    if (agree) {
      j["diagram"] = d;
      j["chi"] = chi;
      j["agree"] = *agree;
    }
    print_json(out, j);
  } else {
    out << oracle << '\n';
    if (agree) {
      out << route << " diagram: " << to_ascii(d, '/') << '\n'
          << "chi: " << chi << '\n'
          << "agree: " << yes_no(*agree) << '\n';
    }
  }
  return agree.value_or(true) ? kOk : kVerdictFalse;
}

int cmd_schubert(const CliConfig& cfg, std::ostream& out) {
  const Permutation w(parse_sequence(cfg.sequence));
  return report_oracle(cfg, out, schubert(w), rothe_diagram(w), "rothe");
}

int cmd_key(const CliConfig& cfg, std::ostream& out) {
  auto parts = parse_sequence(cfg.sequence);
  const Composition raw(parts);
  // Pad with zeros so the grid holds every part; keys are stable under this.
  const int n = std::max({raw.length(), raw.max_part(), 1});
  parts.resize(n, 0);
  const Composition alpha(parts);
  return report_oracle(cfg, out, key(alpha), skyline_diagram(alpha, n), "skyline");
}

int cmd_expand(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Diagram d = load_diagram(cfg.diagram, in);
  const Diagram c = load_diagram(cfg.second, in);
  if (!same_shape(c, d)) throw CardinalityError("C must have the grid and column sizes of D");
  const YPolynomial by_fillings = det_via_fillings(d, c);
  const YPolynomial by_leibniz = det_leibniz(d, c);
  const bool match = by_fillings == by_leibniz;
  if (cfg.format == "json") {
    print_json(out, json{{"diagram", d}, {"c", c}, {"fillings", by_fillings}, {"leibniz", by_leibniz}, {"match", match}});
  } else {
    out << "fillings: " << by_fillings << '\n' << "leibniz: " << by_leibniz << '\n' << "match: " << yes_no(match) << '\n';
  }
  return match ? kOk : kVerdictFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Dual characters of flagged Weyl modules and the upper-bound pattern criterion", "flagweyl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-exhaustive-n", cfg.max_exhaustive_n, "Largest n accepted by verify --exhaustive")
      ->envname("FLAGWEYL_MAX_EXHAUSTIVE_N")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-generators", cfg.max_generators, "Largest #{C <= D} a single diagram may have")
      ->envname("FLAGWEYL_MAX_GENERATORS");

  auto* character = app.add_subcommand("character", "Dual character, bounds and attainment of a diagram");
  character->add_option("diagram", cfg.diagram, "Inline rows joined by '/', a file path, or - for stdin")->required();

  auto* avoids = app.add_subcommand("avoids", "Whether the diagram avoids the forbidden configuration");
  avoids->add_option("diagram", cfg.diagram)->required();

  auto* witness = app.add_subcommand("witness", "Explicit linear dependence among the generators");
  witness->add_option("diagram", cfg.diagram)->required();

  auto* verify = app.add_subcommand("verify", "Check the upper-bound criterion over many diagrams");
  verify->add_option("--n", cfg.n, "Grid size")->required()->check(CLI::Range(1, kMaxGrid));
  verify->add_flag("--exhaustive", cfg.exhaustive, "Every diagram of the n x n grid");
  verify->add_flag("--random", cfg.random, "Seeded random diagrams");
  verify->add_option("--trials", cfg.trials, "Random diagrams to draw");
  verify->add_option("--density", cfg.density, "Probability of each box");
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--timing", cfg.timing, "Include elapsed time in the report");

  auto* schub = app.add_subcommand("schubert", "Schubert polynomial of a permutation in one-line notation");
  schub->add_option("permutation", cfg.sequence)->required();
  schub->add_flag("--check", cfg.check, "Compare with the dual character of the Rothe diagram");

  auto* keyc = app.add_subcommand("key", "Key polynomial of a composition");
  keyc->add_option("composition", cfg.sequence)->required();
  keyc->add_flag("--check", cfg.check, "Compare with the dual character of the skyline diagram");

  auto* expand = app.add_subcommand("expand", "Both expansions of det(Y_D^C)");
  expand->add_option("diagram", cfg.diagram)->required();
  expand->add_option("c", cfg.second)->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*character) return cmd_character(cfg, in, out);
    if (*avoids) return cmd_avoids(cfg, in, out);
    if (*witness) return cmd_witness(cfg, in, out, err);
    if (*verify) return cmd_verify(cfg, out);
    if (*schub) return cmd_schubert(cfg, out);
    if (*keyc) return cmd_key(cfg, out);
    if (*expand) return cmd_expand(cfg, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace flagweyl::cli
