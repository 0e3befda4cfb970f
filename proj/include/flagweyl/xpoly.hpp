#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "flagweyl/common.hpp"

namespace flagweyl {

/// Exponent vector (a_1, ..., a_n) of x_1^a_1 ... x_n^a_n.
class XMonomial {
 public:
  XMonomial() = default;
  explicit XMonomial(std::vector<int> exponents);
  static XMonomial one(int nvars) { return XMonomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_.at(i - 1); }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const;

  friend XMonomial operator*(const XMonomial& a, const XMonomial& b);
  friend bool operator==(const XMonomial&, const XMonomial&) = default;
  // Plain lexicographic order on exponent vectors.
  friend std::strong_ordering operator<=>(const XMonomial&, const XMonomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Sparse polynomial in x_1..x_n with exact integer coefficients.
class XPolynomial {
 public:
  XPolynomial() = default;
  XPolynomial(const XMonomial& m, Integer c = 1);

  static XPolynomial one(int nvars) { return XPolynomial(XMonomial::one(nvars)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<XMonomial, Integer>& terms() const { return terms_; }
  Integer coefficient(const XMonomial& m) const;
  // Adds c * m in place.
  void add_term(const XMonomial& m, const Integer& c);

  // Sum of all coefficients, i.e. the value at (1, ..., 1).
  Integer at_ones() const;
  bool is_homogeneous_of_degree(int degree) const;
  // Every coefficient of *this is <= the matching coefficient of other.
  bool coefficientwise_leq(const XPolynomial& other) const;

  XPolynomial& operator+=(const XPolynomial& other);
  XPolynomial& operator-=(const XPolynomial& other);
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
  friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

 private:
  std::map<XMonomial, Integer> terms_;
};

// Exchange x_i and x_{i+1}.
XPolynomial swap_variables(const XPolynomial& f, int i);
// Multiply by x_i.
XPolynomial times_variable(const XPolynomial& f, int i);
// Exact quotient f / (x_i - x_{i+1}); throws std::domain_error if the
// division leaves a remainder.
XPolynomial divide_by_difference(const XPolynomial& f, int i);
// (f - s_i f) / (x_i - x_{i+1})
XPolynomial divided_difference(const XPolynomial& f, int i);
// Demazure operator: divided_difference(x_i * f).
XPolynomial demazure(const XPolynomial& f, int i);

// Terms by descending total degree, then descending lexicographic order of
// exponent vectors, e.g. "x1^2 + x1*x2 + x2^2".
std::vector<std::pair<XMonomial, Integer>> display_order(const XPolynomial& p);
std::string to_string(const XMonomial& m);
std::string to_string(const XPolynomial& p);
std::ostream& operator<<(std::ostream& os, const XPolynomial& p);

}  // namespace flagweyl
