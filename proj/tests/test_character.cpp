#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "flagweyl/character.hpp"
#include "oracles.hpp"

using namespace flagweyl;

namespace {

XPolynomial x(std::vector<int> exps, long c = 1) { return XPolynomial(XMonomial(std::move(exps)), c); }

// The definition read literally: every C <= D, grouped by weight in a map,
// each group ranked over Q.
XPolynomial chi_by_definition(const Diagram& d) {
  std::map<XMonomial, std::vector<YPolynomial>> groups;
  for (const auto& c : oracle::diagrams_leq(d)) groups[x_weight(c)].push_back(det_leibniz(d, c));
  XPolynomial out;
  for (const auto& [w, dets] : groups) out.add_term(w, static_cast<unsigned long>(oracle::rational_rank(dets)));
  return out;
}

}  // namespace

TEST_CASE("x_weight examples") {
  CHECK(x_weight(Diagram(2, {Subset{1}, Subset{1}})) == XMonomial({2, 0}));
  CHECK(x_weight(Diagram(2, {Subset{1, 2}, Subset{}})) == XMonomial({1, 1}));
  CHECK(x_weight(Diagram(4, {Subset{2, 3, 4}, Subset{}, Subset{1, 2}, Subset{3}})) == XMonomial({1, 2, 2, 1}));
}

TEST_CASE("XPolynomial arithmetic and printing") {
  const XPolynomial p = x({2, 0}) + x({1, 1}) + x({0, 2});
  CHECK(to_string(p) == "x1^2 + x1*x2 + x2^2");
  CHECK(to_string(XPolynomial()) == "0");
  CHECK(to_string(XPolynomial::one(3)) == "1");
  CHECK(to_string(x({1, 0}) - x({0, 1}, 3)) == "x1 - 3*x2");
  CHECK(p.at_ones() == 3);
  CHECK(p.is_homogeneous_of_degree(2));
  CHECK((x({1, 0}) - x({1, 0})).is_zero());
  CHECK(divide_by_difference(x({2, 0}) - x({0, 2}), 1) == x({1, 0}) + x({0, 1}));
  CHECK_THROWS_AS(divide_by_difference(x({1, 0}), 1), std::domain_error);
  CHECK(demazure(x({1, 0}), 1) == x({1, 0}) + x({0, 1}));
}

TEST_CASE("dual_character examples") {
  CHECK(dual_character(Diagram(2, {Subset{2}, Subset{}})) == x({1, 0}) + x({0, 1}));
  CHECK(dual_character(Diagram(2, {Subset{2}, Subset{2}})) == x({2, 0}) + x({1, 1}) + x({0, 2}));
  CHECK(dual_character(Diagram(3)) == XPolynomial::one(3));
}

TEST_CASE("bounds examples") {
  const Diagram d22(2, {Subset{2}, Subset{2}});
  CHECK(lower_bound_poly(d22) == x({2, 0}) + x({1, 1}) + x({0, 2}));
  CHECK(upper_bound_count(d22) == 4);
  CHECK(lower_bound_poly(Diagram(2)) == XPolynomial::one(2));
  CHECK(upper_bound_count(Diagram(2)) == 1);
  const Diagram d21(2, {Subset{2}, Subset{1}});
  CHECK(lower_bound_poly(d21) == x({2, 0}) + x({1, 1}));
  CHECK(upper_bound_count(d21) == 2);

  CHECK(attains_upper(d21));
  CHECK_FALSE(attains_upper(d22));
  CHECK(attains_upper(Diagram(3)));
  CHECK(attains_lower(Diagram(3)));
  CHECK(attains_lower(d22));

  Diagram wide(8);
  for (int j = 1; j <= 8; ++j) wide.set_column(j, Subset{4, 8});
  CHECK(upper_bound_count(wide) == Integer(22) * 22 * 22 * 22 * 22 * 22 * 22 * 22);
}

TEST_CASE("character_report") {
  const auto r = character_report(Diagram(2, {Subset{2}, Subset{2}}));
  CHECK(r.chi_at_ones == 3);
  CHECK(r.upper_count == 4);
  CHECK_FALSE(r.attains_upper);
  CHECK(r.attains_lower);
  REQUIRE(r.pattern);
  CHECK(*r.pattern == PatternWitness{1, 2, 1, 2});
  const auto e = character_report(Diagram(1));
  CHECK(e.attains_upper);
  CHECK_FALSE(e.pattern);
}

TEST_CASE("weight groups partition the lower set") {
  for (const auto& d : oracle::all_diagrams(3)) {
    const WeightGroups groups(d);
    std::set<Diagram> seen;
    std::size_t total = 0;
    for (const auto& w : groups.weights()) {
      const auto members = groups.members(w);
      CHECK(std::is_sorted(members.begin(), members.end()));
      for (const auto& c : members) {
        CHECK(x_weight(c) == w);
        seen.insert(c);
      }
      total += members.size();
    }
    CHECK(total == seen.size());
    CHECK(seen.size() == oracle::diagrams_leq(d).size());
  }
}

TEST_CASE("character invariants for every diagram with n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : oracle::all_diagrams(n)) {
      const XPolynomial chi = dual_character(d);
      REQUIRE(chi == chi_by_definition(d));
      const XPolynomial lower = lower_bound_poly(d);
      CHECK(lower.coefficientwise_leq(chi));
      CHECK(chi.at_ones() <= upper_bound_count(d));
      CHECK(chi.is_homogeneous_of_degree(static_cast<int>(d.size())));
      std::set<XMonomial> support;
      for (const auto& [m, c] : chi.terms()) {
        CHECK(c > 0);
        support.insert(m);
      }
      std::set<XMonomial> weights;
      for (const auto& c : oracle::diagrams_leq(d)) weights.insert(x_weight(c));
      CHECK(support == weights);
      CHECK(attains_upper(d) == (chi.at_ones() == upper_bound_count(d)));
      CHECK(attains_upper(d) == !oracle::find_pattern(d).has_value());
      bool zero_one = true;
      for (const auto& [m, c] : chi.terms()) zero_one = zero_one && c <= 1;
      CHECK(attains_lower(d) == zero_one);
    }
  }
}

TEST_CASE("sandwich on random diagrams with n = 4") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Diagram d = oracle::random_diagram(rng, 4, 0.4);
    const XPolynomial chi = dual_character(d);
    CHECK(lower_bound_poly(d).coefficientwise_leq(chi));
    CHECK(chi.at_ones() <= upper_bound_count(d));
    CHECK(attains_upper(d) == !oracle::find_pattern(d).has_value());
  }
}

TEST_CASE("schubert examples") {
  CHECK(schubert(Permutation::identity(3)) == XPolynomial::one(3));
  CHECK(schubert(Permutation({2, 1})) == x({1, 0}));
  CHECK(schubert(Permutation({3, 2, 1})) == x({2, 1, 0}));
  CHECK(schubert(Permutation({1, 3, 2})) == x({1, 0, 0}) + x({0, 1, 0}));
}

TEST_CASE("Rothe diagrams have Schubert characters in S_4") {
  std::vector<int> w{1, 2, 3, 4};
  do {
    const Permutation p(w);
    CHECK(dual_character(rothe_diagram(p)) == schubert(p));
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("key examples") {
  CHECK(key(Composition({2, 1, 0})) == x({2, 1, 0}));
  CHECK(key(Composition({0, 2})) == x({2, 0}) + x({1, 1}) + x({0, 2}));
  CHECK(key(Composition({0, 1})) == x({1, 0}) + x({0, 1}));
  CHECK(key(Composition({0, 2})) == dual_character(Diagram(2, {Subset{2}, Subset{2}})));
}

TEST_CASE("skyline diagrams have key characters") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const Composition alpha({a, b, c});
        CHECK(dual_character(skyline_diagram(alpha, 3)) == key(alpha));
      }
}
