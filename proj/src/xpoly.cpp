#include "flagweyl/xpoly.hpp"

#include <algorithm>
#include <numeric>

namespace flagweyl {

XMonomial::XMonomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in x-monomial");
  }
}

int XMonomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

XMonomial operator*(const XMonomial& a, const XMonomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("x-monomials over different variable counts");
  std::vector<int> e(a.exps_);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.exps_[k];
  return XMonomial(std::move(e));
}

XPolynomial::XPolynomial(const XMonomial& m, Integer c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

Integer XPolynomial::coefficient(const XMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void XPolynomial::add_term(const XMonomial& m, const Integer& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.nvars() != m.nvars()) {
    throw std::invalid_argument("x-monomials over different variable counts");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer XPolynomial::at_ones() const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) total += c;
  return total;
}

bool XPolynomial::is_homogeneous_of_degree(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& t) { return t.first.degree() == degree; });
}

bool XPolynomial::coefficientwise_leq(const XPolynomial& other) const {
  for (const auto& [m, c] : terms_) {
    if (c > other.coefficient(m)) return false;
  }
  for (const auto& [m, c] : other.terms_) {
    if (c < 0 && !terms_.contains(m)) return false;
  }
  return true;
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  XPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

namespace {

void check_adjacent(const XPolynomial& f, int i) {
  if (f.is_zero()) return;
  const int n = f.terms().begin()->first.nvars();
  if (i < 1 || i >= n) {
    throw std::out_of_range("adjacent variables x" + std::to_string(i) + ", x" + std::to_string(i + 1) + " not among x1..x" +
                            std::to_string(n));
  }
}

}  // namespace

XPolynomial swap_variables(const XPolynomial& f, int i) {
  check_adjacent(f, i);
  XPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    auto e = m.exponents();
    std::swap(e[i - 1], e[i]);
    out.add_term(XMonomial(std::move(e)), c);
  }
  return out;
}

XPolynomial times_variable(const XPolynomial& f, int i) {
  XPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    auto e = m.exponents();
    ++e.at(i - 1);
    out.add_term(XMonomial(std::move(e)), c);
  }
  return out;
}

XPolynomial divide_by_difference(const XPolynomial& f, int i) {
  check_adjacent(f, i);
  if (f.is_zero()) return {};
  // Write f = sum_k a_k x_i^k with a_k free of x_i, and run synthetic division
  // by (x_i - c) with c = x_{i+1}: q_{k-1} = a_k + c * q_k.
  int top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m[i]);
  std::vector<XPolynomial> a(top + 1);
  for (const auto& [m, c] : f.terms()) {
    auto e = m.exponents();
    const int k = e[i - 1];
    e[i - 1] = 0;
    a[k].add_term(XMonomial(std::move(e)), c);
  }
  std::vector<XPolynomial> q(top + 1);
  XPolynomial carry;  // c * q_k from the previous step
  for (int k = top; k >= 1; --k) {
    q[k - 1] = a[k] + carry;
    carry = times_variable(q[k - 1], i + 1);
  }
  if (!(a[0] + carry).is_zero()) {
    throw std::domain_error("polynomial is not divisible by x" + std::to_string(i) + " - x" + std::to_string(i + 1));
  }
  XPolynomial out;
  for (int k = 0; k < top; ++k) {
    for (const auto& [m, c] : q[k].terms()) {
      auto e = m.exponents();
      e[i - 1] = k;
      out.add_term(XMonomial(std::move(e)), c);
    }
  }
  return out;
}

XPolynomial divided_difference(const XPolynomial& f, int i) { return divide_by_difference(f - swap_variables(f, i), i); }

XPolynomial demazure(const XPolynomial& f, int i) { return divided_difference(times_variable(f, i), i); }

std::vector<std::pair<XMonomial, Integer>> display_order(const XPolynomial& p) {
  std::vector<std::pair<XMonomial, Integer>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = a.first.degree();
    const int db = b.first.degree();
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

std::string to_string(const XMonomial& m) {
  std::string out;
  for (int k = 1; k <= m.nvars(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(k);
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const XPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_order(p)) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const XPolynomial& p) { return os << to_string(p); }

}  // namespace flagweyl
