#include "flagweyl/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace flagweyl {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.get<std::string>());
    return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

void to_json(json& j, const Diagram& d) {
  json boxes = json::array();
  for (auto [r, c] : d.boxes()) boxes.push_back({r, c});
  j = json{{"n", d.n()}, {"boxes", std::move(boxes)}};
}

void from_json(const json& j, Diagram& d) {
  if (!j.is_object() || !j.contains("n") || !j.contains("boxes")) throw ParseError("diagram JSON needs \"n\" and \"boxes\"");
  const int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxGrid) throw ParseError("diagram size out of range");
  std::vector<std::pair<int, int>> boxes;
  for (const auto& b : j.at("boxes")) {
    if (!b.is_array() || b.size() != 2) throw ParseError("each box is a [row, col] pair");
    boxes.emplace_back(b[0].get<int>(), b[1].get<int>());
  }
  try {
    d = Diagram::from_boxes(n, boxes);
  } catch (const std::logic_error& e) {
    throw ParseError(e.what());
  }
}

void to_json(json& j, const PatternWitness& p) { j = json{{"i1", p.i1}, {"i2", p.i2}, {"j1", p.j1}, {"j2", p.j2}}; }

void from_json(const json& j, PatternWitness& p) {
  p = PatternWitness{j.at("i1").get<int>(), j.at("i2").get<int>(), j.at("j1").get<int>(), j.at("j2").get<int>()};
}

void to_json(json& j, const YPolynomial& p) {
  j = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& f : m.factors()) mono.push_back({f.i, f.j, f.exponent});
    j.push_back(json{{"monomial", std::move(mono)}, {"coeff", c.get_str()}});
  }
}

void from_json(const json& j, YPolynomial& p) {
  if (!j.is_array()) throw ParseError("y-polynomial JSON is an array of terms");
  std::vector<YPolynomial::Term> terms;
  for (const auto& t : j) {
    std::vector<YMonomial::Factor> factors;
    for (const auto& f : t.at("monomial")) {
      if (!f.is_array() || f.size() != 3) throw ParseError("y-monomial factor is [i, j, exp]");
      factors.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    terms.emplace_back(YMonomial::from_factors(factors), integer_from_json(t.at("coeff")));
  }
  p = YPolynomial(std::move(terms));
}

void to_json(json& j, const XPolynomial& p) {
  j = json::array();
  for (const auto& [m, c] : display_order(p)) j.push_back(json{{"exps", m.exponents()}, {"coeff", c.get_str()}});
}

void from_json(const json& j, XPolynomial& p) {
  if (!j.is_array()) throw ParseError("x-polynomial JSON is an array of terms");
  p = XPolynomial{};
  for (const auto& t : j) p.add_term(XMonomial(t.at("exps").get<std::vector<int>>()), integer_from_json(t.at("coeff")));
}

void to_json(json& j, const FlaggedFilling& f) {
  json entries = json::object();
  for (int c = 1; c <= f.diagram.n(); ++c) {
    if (!f.entries[c - 1].empty()) entries[std::to_string(c)] = f.entries[c - 1];
  }
  j = json{{"diagram", f.diagram}, {"entries", std::move(entries)}};
}

void from_json(const json& j, FlaggedFilling& f) {
  f.diagram = j.at("diagram").get<Diagram>();
  f.entries.assign(f.diagram.n(), {});
  for (const auto& [key, value] : j.at("entries").items()) {
    const int c = std::stoi(key);
    if (c < 1 || c > f.diagram.n()) throw ParseError("filling column out of range");
    f.entries[c - 1] = value.get<std::vector<int>>();
  }
}

void to_json(json& j, const CharacterReport& r) {
  j = json{{"diagram", r.diagram},
           {"chi", r.chi},
           {"lower", r.lower},
           {"upper_count", integer_to_json(r.upper_count)},
           {"chi_at_ones", integer_to_json(r.chi_at_ones)},
           {"attains_upper", r.attains_upper},
           {"attains_lower", r.attains_lower},
           {"pattern", r.pattern ? json(*r.pattern) : json(nullptr)}};
}

void from_json(const json& j, CharacterReport& r) {
  r.diagram = j.at("diagram").get<Diagram>();
  r.chi = j.at("chi").get<XPolynomial>();
  r.lower = j.at("lower").get<XPolynomial>();
  r.upper_count = integer_from_json(j.at("upper_count"));
  r.chi_at_ones = integer_from_json(j.at("chi_at_ones"));
  r.attains_upper = j.at("attains_upper").get<bool>();
  r.attains_lower = j.at("attains_lower").get<bool>();
  if (j.at("pattern").is_null()) {
    r.pattern.reset();
  } else {
    r.pattern = j.at("pattern").get<PatternWitness>();
  }
}

void to_json(json& j, const MinimalConfiguration& c) { j = json{{"i1", c.i1}, {"i2", c.i2}, {"j1", c.j1}, {"j2", c.j2}}; }

void from_json(const json& j, MinimalConfiguration& c) {
  c = MinimalConfiguration{j.at("i1").get<int>(), j.at("i2").get<int>(), j.at("j1").get<int>(), j.at("j2").get<int>()};
}

void to_json(json& j, const DependenceWitness& w) {
  json terms = json::array();
  for (const auto& t : w.terms) terms.push_back(json{{"c", t.c}, {"coeff", t.coeff.get_str()}});
  j = json{{"diagram", w.d}, {"location", w.location}, {"terms", std::move(terms)}};
}

void from_json(const json& j, DependenceWitness& w) {
  w.d = j.at("diagram").get<Diagram>();
  w.location = j.at("location").get<MinimalConfiguration>();
  w.terms.clear();
  for (const auto& t : j.at("terms")) w.terms.push_back({t.at("c").get<Diagram>(), integer_from_json(t.at("coeff"))});
}

json report_to_json(const VerificationReport& r, bool include_timing) {
  json mode;
  if (const auto* rnd = std::get_if<RandomMode>(&r.mode)) {
    mode = json{{"kind", "random"}, {"seed", rnd->seed}, {"trials", rnd->trials}, {"density", rnd->density}};
  } else {
    mode = json{{"kind", "exhaustive"}};
  }
  json counter = json::array();
  for (const auto& d : r.counterexamples) counter.push_back(to_ascii(d, '/'));
  json j{{"n", r.n},
         {"mode", std::move(mode)},
         {"diagrams_checked", r.diagrams_checked},
         {"skipped", r.skipped},
         {"counterexamples", std::move(counter)}};
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

void to_json(json& j, const VerificationReport& r) { j = report_to_json(r, true); }

void from_json(const json& j, VerificationReport& r) {
  r.n = j.at("n").get<int>();
  const auto& mode = j.at("mode");
  const auto kind = mode.at("kind").get<std::string>();
  if (kind == "exhaustive") {
    r.mode = ExhaustiveMode{};
  } else if (kind == "random") {
    r.mode = RandomMode{mode.at("seed").get<std::uint64_t>(), mode.at("trials").get<std::uint64_t>(), mode.at("density").get<double>()};
  } else {
    throw ParseError("unknown verification mode '" + kind + "'");
  }
  r.diagrams_checked = j.at("diagrams_checked").get<std::uint64_t>();
  r.skipped = j.value("skipped", std::uint64_t{0});
  r.counterexamples.clear();
  for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(parse_ascii(c.get<std::string>()));
  r.elapsed = std::chrono::milliseconds(j.value("elapsed_ms", std::int64_t{0}));
}

Diagram parse_diagram(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(), [](unsigned char ch) { return !std::isspace(ch); });
  if (first != text.end() && *first == '{') {
    try {
      return json::parse(text).get<Diagram>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad diagram JSON: ") + e.what());
    }
  }
  return parse_ascii(text);
}

}  // namespace flagweyl
