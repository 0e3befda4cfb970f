#pragma once

#include <json.hpp>

#include "flagweyl/character.hpp"
#include "flagweyl/diagram.hpp"
#include "flagweyl/fillings.hpp"
#include "flagweyl/verify.hpp"
#include "flagweyl/xpoly.hpp"
#include "flagweyl/ypoly.hpp"

namespace flagweyl {

using nlohmann::json;

// Integers that fit in 64 bits are written as JSON numbers, others as decimal
// strings. Both forms are accepted on input.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

// {"n": 4, "boxes": [[row, col], ...]}, row-major, 1-based.
void to_json(json& j, const Diagram& d);
void from_json(const json& j, Diagram& d);

void to_json(json& j, const PatternWitness& p);
void from_json(const json& j, PatternWitness& p);

// [{"monomial": [[i, j, exp], ...], "coeff": "-1"}, ...]
void to_json(json& j, const YPolynomial& p);
void from_json(const json& j, YPolynomial& p);

// [{"exps": [a1, ..., an], "coeff": "1"}, ...] in display order.
void to_json(json& j, const XPolynomial& p);
void from_json(const json& j, XPolynomial& p);

// {"diagram": ..., "entries": {"<column>": [top-to-bottom entries], ...}}
void to_json(json& j, const FlaggedFilling& f);
void from_json(const json& j, FlaggedFilling& f);

void to_json(json& j, const CharacterReport& r);
void from_json(const json& j, CharacterReport& r);

void to_json(json& j, const MinimalConfiguration& c);
void from_json(const json& j, MinimalConfiguration& c);

void to_json(json& j, const DependenceWitness& w);
void from_json(const json& j, DependenceWitness& w);

// Counterexamples are ASCII diagrams with rows joined by '/'. The elapsed
// time is written only when include_timing is set, so reports of identical
// runs serialize identically.
json report_to_json(const VerificationReport& r, bool include_timing);
void to_json(json& j, const VerificationReport& r);
void from_json(const json& j, VerificationReport& r);

// Parses either the ASCII or the JSON diagram format.
Diagram parse_diagram(std::string_view text);

}  // namespace flagweyl
