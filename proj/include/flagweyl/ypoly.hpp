#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "flagweyl/common.hpp"
#include "flagweyl/diagram.hpp"

namespace flagweyl {

/// A monomial in the upper-triangular variables y[i,j] (i <= j), held as the
/// sorted multiset of its index pairs. Ordering compares those sorted pair
/// sequences lexicographically.
class YMonomial {
 public:
  struct Factor {
    int i;
    int j;
    int exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  YMonomial() = default;  // the constant monomial 1

  // y[i,j]^exponent; throws std::invalid_argument unless 1 <= i <= j.
  static YMonomial variable(int i, int j, int exponent = 1);
  static YMonomial from_factors(const std::vector<Factor>& factors);

  int degree() const { return static_cast<int>(codes_.size()); }
  bool is_one() const { return codes_.empty(); }
  // Distinct variables with their exponents, in canonical order.
  std::vector<Factor> factors() const;
  // Multiset of second indices (the box rows that produced each factor).
  std::vector<int> second_indices() const;

  friend YMonomial operator*(const YMonomial& a, const YMonomial& b);
  friend bool operator==(const YMonomial&, const YMonomial&) = default;
  friend std::strong_ordering operator<=>(const YMonomial& a, const YMonomial& b) {
    return std::lexicographical_compare_three_way(a.codes_.begin(), a.codes_.end(), b.codes_.begin(), b.codes_.end());
  }

 private:
  static std::uint16_t encode(int i, int j) { return static_cast<std::uint16_t>((i << 8) | j); }
  std::vector<std::uint16_t> codes_;  // sorted; code = (i << 8) | j
};

/// Sparse polynomial in the y variables with arbitrary-precision integer
/// coefficients. Terms are kept sorted by monomial with no zero coefficient.
class YPolynomial {
 public:
  using Term = std::pair<YMonomial, Integer>;

  YPolynomial() = default;
  YPolynomial(const YMonomial& m, Integer c = 1);
  // Accepts terms in any order; combines like monomials and drops zeros.
  explicit YPolynomial(std::vector<Term> terms);

  static YPolynomial one() { return YPolynomial(YMonomial{}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Integer coefficient(const YMonomial& m) const;

  YPolynomial& operator+=(const YPolynomial& other);
  YPolynomial& operator-=(const YPolynomial& other);
  YPolynomial& operator*=(const Integer& c);

  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
  friend YPolynomial operator*(YPolynomial a, const Integer& c) { return a *= c; }
  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

 private:
  std::vector<Term> terms_;
};

// Terms in canonical order, e.g. "y[1,2]*y[2,2] - 2*y[1,1]^2"; zero prints "0".
std::string to_string(const YMonomial& m);
std::string to_string(const YPolynomial& p);
std::ostream& operator<<(std::ostream& os, const YPolynomial& p);

// det(Y_D^C) as the signed sum over flagged fillings of D with column
// contents C. Zero when C is not below D. Throws CardinalityError when column
// sizes differ.
YPolynomial det_via_fillings(const Diagram& d, const Diagram& c);

// det(Y_D^C) as the product of column determinants, each expanded over all
// bijections C_j -> D_j (Leibniz formula on the submatrix of Y).
YPolynomial det_leibniz(const Diagram& d, const Diagram& c);

// det(Y^{rows}_{cols}) for one column, by the Leibniz formula.
YPolynomial minor_leibniz(const Subset& rows, const Subset& cols);

// Dimension over Q of the span of the given polynomials.
std::size_t rank_of_span(std::span<const YPolynomial> polys);

// Rank of an integer matrix by fraction-free (Bareiss) elimination. Rows may
// have any length; missing entries count as zero.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> rows);

}  // namespace flagweyl
