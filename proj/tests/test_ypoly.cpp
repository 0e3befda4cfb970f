#include <doctest.h>

#include <algorithm>
#include <random>

#include "flagweyl/ypoly.hpp"
#include "oracles.hpp"

using namespace flagweyl;

namespace {

YPolynomial y(int i, int j) { return YPolynomial(YMonomial::variable(i, j)); }

Diagram single_column(int n, Subset rows) {
  Diagram d(n);
  d.set_column(1, rows);
  return d;
}

}  // namespace

TEST_CASE("monomials and polynomials") {
  CHECK_THROWS(YMonomial::variable(2, 1));
  CHECK(YMonomial::variable(1, 2) * YMonomial::variable(2, 2) == YMonomial::variable(2, 2) * YMonomial::variable(1, 2));
  CHECK((y(1, 1) * y(1, 1)) == YPolynomial(YMonomial::variable(1, 1, 2)));
  CHECK((y(1, 2) - y(1, 2)).is_zero());
  CHECK(YPolynomial({{YMonomial::variable(1, 1), 2}, {YMonomial::variable(1, 1), -2}}).is_zero());
  CHECK(to_string(YPolynomial()) == "0");
  CHECK(to_string(y(1, 2) * y(2, 2) - y(1, 1) * y(1, 1) * Integer(2)) == "-2*y[1,1]^2 + y[1,2]*y[2,2]");
  CHECK(YMonomial::from_factors({{2, 3, 1}, {1, 3, 2}}).second_indices() == std::vector<int>{3, 3, 3});
  CHECK(YMonomial::from_factors({{2, 3, 1}, {1, 3, 2}}).degree() == 3);
}

TEST_CASE("determinant examples") {
  const Diagram d(2, {Subset{2}, Subset{2}});
  const Diagram c(2, {Subset{1}, Subset{2}});
  CHECK(det_via_fillings(d, c) == y(1, 2) * y(2, 2));
  CHECK(det_leibniz(d, c) == y(1, 2) * y(2, 2));

  const Diagram bad(2, {Subset{2}, Subset{1}});
  CHECK(det_via_fillings(Diagram(2, {Subset{1}, Subset{2}}), bad).is_zero());
  CHECK(det_leibniz(Diagram(2, {Subset{1}, Subset{2}}), bad).is_zero());

  const Diagram full(3, {Subset{1, 2, 3}, Subset{1, 2, 3}, Subset{}});
  const YPolynomial diag = y(1, 1) * y(2, 2) * y(3, 3);
  CHECK(det_via_fillings(full, full) == diag * diag);
  CHECK(det_leibniz(full, full) == diag * diag);

  const Diagram d23 = single_column(3, Subset{2, 3});
  const Diagram c12 = single_column(3, Subset{1, 2});
  const YPolynomial expected = y(1, 2) * y(2, 3) - y(2, 2) * y(1, 3);
  CHECK(det_leibniz(d23, c12) == expected);
  CHECK(det_via_fillings(d23, c12) == expected);
  CHECK(minor_leibniz(Subset{1, 2}, Subset{2, 3}) == expected);
  CHECK(minor_leibniz(Subset{}, Subset{}) == YPolynomial::one());
  CHECK(det_via_fillings(Diagram(3), Diagram(3)) == YPolynomial::one());

  CHECK_THROWS_AS(det_via_fillings(d23, single_column(3, Subset{1})), CardinalityError);
  CHECK_THROWS_AS(det_leibniz(d23, single_column(3, Subset{1})), CardinalityError);
}

TEST_CASE("the two expansions agree on every pair with n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : oracle::all_diagrams(n)) {
      for (const auto& c : oracle::diagrams_leq(d)) {
        const YPolynomial p = det_via_fillings(d, c);
        REQUIRE(p == det_leibniz(d, c));
        REQUIRE_FALSE(p.is_zero());
        std::vector<int> rows;
        for (const auto& [i, j] : d.boxes()) rows.push_back(i);
        std::sort(rows.begin(), rows.end());
        for (const auto& [m, coeff] : p.terms()) {
          CHECK(m.degree() == static_cast<int>(d.size()));
          auto second = m.second_indices();
          std::sort(second.begin(), second.end());
          CHECK(second == rows);
        }
      }
    }
  }
}

TEST_CASE("the two expansions agree on random pairs with n = 5") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 1000; ++trial) {
    const Diagram d = oracle::random_diagram(rng, 5, 0.45);
    const Diagram c = oracle::random_below(rng, d);
    REQUIRE(det_via_fillings(d, c) == det_leibniz(d, c));
  }
}

TEST_CASE("the determinant vanishes exactly when C is not below D") {
  const int n = 3;
  for (const auto& d : oracle::all_diagrams(n)) {
    for (const auto& c : oracle::all_diagrams(n)) {
      if (!same_shape(c, d)) continue;
      CHECK(det_leibniz(d, c).is_zero() == !diagram_leq(c, d));
    }
  }
}

TEST_CASE("rank_of_span examples") {
  const std::vector<YPolynomial> same{y(1, 2) * y(2, 2), y(2, 2) * y(1, 2)};
  CHECK(rank_of_span(same) == 1);
  const std::vector<YPolynomial> zero{YPolynomial()};
  CHECK(rank_of_span(zero) == 0);
  const std::vector<YPolynomial> dependent{y(1, 1), y(1, 2), y(1, 1) + y(1, 2)};
  CHECK(rank_of_span(dependent) == 2);
  CHECK(rank_of_span(std::vector<YPolynomial>{}) == 0);
}

TEST_CASE("bareiss_rank handles wide entries") {
  const Integer big("123456789012345678901234567890");
  CHECK(bareiss_rank({{big, 1}, {big * 2, 2}}) == 1);
  CHECK(bareiss_rank({{big, 1}, {big * 2, 3}}) == 2);
  CHECK(bareiss_rank({{Integer(INT64_MAX), Integer(INT64_MAX)}, {Integer(INT64_MAX), 1}}) == 2);
  CHECK(bareiss_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(bareiss_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(bareiss_rank({{1}, {0, 1}}) == 2);
}

TEST_CASE("rank_of_span matches rational elimination and is invariant under reordering and scaling") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, 5);
  const std::vector<YMonomial> basis{YMonomial::variable(1, 1), YMonomial::variable(1, 2), YMonomial::variable(2, 2),
                                     YMonomial::variable(1, 3), YMonomial::variable(2, 3), YMonomial::variable(3, 3)};
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<YPolynomial> polys(1 + trial % 6);
    for (auto& p : polys)
      for (int t = 0; t < 3; ++t) p += YPolynomial(basis[pick(rng)], coeff(rng));
    const std::size_t r = rank_of_span(polys);
    REQUIRE(r == oracle::rational_rank(polys));
    CHECK(r <= polys.size());

    auto shuffled = polys;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(rank_of_span(shuffled) == r);
    auto scaled = polys;
    for (auto& p : scaled) p *= Integer(1 + pick(rng)) * (pick(rng) % 2 ? 1 : -1);
    CHECK(rank_of_span(scaled) == r);
  }
}

TEST_CASE("rank_of_span on determinant families with n = 3") {
  for (const auto& d : oracle::all_diagrams(3)) {
    std::vector<YPolynomial> dets;
    for (const auto& c : oracle::diagrams_leq(d)) dets.push_back(det_via_fillings(d, c));
    CHECK(rank_of_span(dets) == oracle::rational_rank(dets));
  }
}
