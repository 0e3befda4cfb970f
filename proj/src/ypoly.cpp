#include "flagweyl/ypoly.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "flagweyl/fillings.hpp"

namespace flagweyl {

YMonomial YMonomial::variable(int i, int j, int exponent) {
  if (i < 1 || i > j || j > kMaxGrid) {
    throw std::invalid_argument("y[" + std::to_string(i) + "," + std::to_string(j) + "] is not an upper-triangular variable");
  }
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  YMonomial m;
  m.codes_.assign(exponent, encode(i, j));
  return m;
}

YMonomial YMonomial::from_factors(const std::vector<Factor>& factors) {
  YMonomial m;
  for (const auto& f : factors) {
    if (f.i < 1 || f.i > f.j || f.j > kMaxGrid) {
      throw std::invalid_argument("y[" + std::to_string(f.i) + "," + std::to_string(f.j) + "] is not an upper-triangular variable");
    }
    if (f.exponent < 0) throw std::invalid_argument("negative exponent");
    m.codes_.insert(m.codes_.end(), f.exponent, encode(f.i, f.j));
  }
  std::sort(m.codes_.begin(), m.codes_.end());
  return m;
}

std::vector<YMonomial::Factor> YMonomial::factors() const {
  std::vector<Factor> out;
  for (std::uint16_t code : codes_) {
    const int i = code >> 8;
    const int j = code & 0xff;
    if (!out.empty() && out.back().i == i && out.back().j == j) {
      ++out.back().exponent;
    } else {
      out.push_back({i, j, 1});
    }
  }
  return out;
}

std::vector<int> YMonomial::second_indices() const {
  std::vector<int> out;
  out.reserve(codes_.size());
  for (std::uint16_t code : codes_) out.push_back(code & 0xff);
  std::sort(out.begin(), out.end());
  return out;
}

YMonomial operator*(const YMonomial& a, const YMonomial& b) {
  YMonomial m;
  m.codes_.resize(a.codes_.size() + b.codes_.size());
  std::merge(a.codes_.begin(), a.codes_.end(), b.codes_.begin(), b.codes_.end(), m.codes_.begin());
  return m;
}

YPolynomial::YPolynomial(const YMonomial& m, Integer c) {
  if (c != 0) terms_.emplace_back(m, std::move(c));
}

YPolynomial::YPolynomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
    } else {
      if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
}

Integer YPolynomial::coefficient(const YMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const YMonomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& other) { return *this += other * Integer(-1); }

YPolynomial& YPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].first.is_one() && a.terms_[0].second == 1) return b;
  std::vector<YPolynomial::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
  }
  return YPolynomial(std::move(out));
}

std::string to_string(const YMonomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += "y[" + std::to_string(f.i) + "," + std::to_string(f.j) + "]";
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::string to_string(const YPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const YPolynomial& p) { return os << to_string(p); }

YPolynomial det_via_fillings(const Diagram& d, const Diagram& c) {
  if (!same_shape(c, d)) throw CardinalityError("det(Y_D^C) needs |C_j| = |D_j| in every column");
  std::vector<YPolynomial::Term> terms;
  for (const auto& f : enumerate_fillings(d, c)) terms.emplace_back(y_monomial(f), sign(f));
  return YPolynomial(std::move(terms));
}

YPolynomial minor_leibniz(const Subset& rows, const Subset& cols) {
  if (rows.size() != cols.size()) throw CardinalityError("minor of a non-square submatrix");
  const auto r = rows.elements();
  const auto c = cols.elements();
  const std::size_t m = r.size();
  std::vector<std::size_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<YPolynomial::Term> terms;
  std::vector<YMonomial::Factor> factors(m);
  std::vector<bool> visited(m);
  do {
    bool nonzero = true;
    for (std::size_t b = 0; b < m && nonzero; ++b) {
      const int i = r[sigma[b]];
      const int j = c[b];
      if (i > j) nonzero = false;
      factors[b] = {i, j, 1};
    }
    if (!nonzero) continue;
    // Parity of sigma from its cycle count.
    std::fill(visited.begin(), visited.end(), false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < m; ++s) {
      if (visited[s]) continue;
      ++cycles;
      for (std::size_t t = s; !visited[t]; t = sigma[t]) visited[t] = true;
    }
    terms.emplace_back(YMonomial::from_factors(factors), (m - cycles) % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return YPolynomial(std::move(terms));
}

YPolynomial det_leibniz(const Diagram& d, const Diagram& c) {
  if (!same_shape(c, d)) throw CardinalityError("det(Y_D^C) needs |C_j| = |D_j| in every column");
  YPolynomial result = YPolynomial::one();
  for (int j = 1; j <= d.n(); ++j) {
    result = result * minor_leibniz(c.column(j), d.column(j));
    if (result.is_zero()) break;
  }
  return result;
}

namespace {

// Bareiss on machine integers; returns false if any intermediate value leaves
// the int64 range so the caller can redo the elimination exactly.
bool bareiss_rank_small(std::vector<std::vector<long>>& a, std::size_t cols, std::size_t& rank) {
  const std::size_t m = a.size();
  long prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const long pivot = a[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const long lead = a[i][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        const __int128 v = (static_cast<__int128>(pivot) * a[i][k] - static_cast<__int128>(lead) * a[r][k]) / prev;
        if (v > LONG_MAX || v < LONG_MIN) return false;
        a[i][k] = static_cast<long>(v);
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++r;
  }
  rank = r;
  return true;
}

}  // namespace

std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  std::size_t cols = 0;
  for (const auto& row : a) cols = std::max(cols, row.size());
  for (auto& row : a) row.resize(cols);

  bool small = true;
  for (const auto& row : a) {
    for (const auto& v : row) small = small && v.fits_slong_p();
  }
  if (small) {
    std::vector<std::vector<long>> b(m, std::vector<long>(cols));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < cols; ++k) b[i][k] = a[i][k].get_si();
    }
    std::size_t rank = 0;
    if (bareiss_rank_small(b, cols, rank)) return rank;
  }

  Integer prev = 1;
  std::size_t r = 0;
  Integer tmp;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        tmp = a[r][c] * a[i][k] - a[i][c] * a[r][k];
        mpz_divexact(a[i][k].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_of_span(std::span<const YPolynomial> polys) {
  std::vector<YMonomial> support;
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) support.push_back(t.first);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  std::vector<std::vector<Integer>> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    std::vector<Integer> row(support.size());
    for (const auto& [m, c] : p.terms()) {
      row[std::lower_bound(support.begin(), support.end(), m) - support.begin()] = c;
    }
    rows.push_back(std::move(row));
  }
  return bareiss_rank(std::move(rows));
}

}  // namespace flagweyl
