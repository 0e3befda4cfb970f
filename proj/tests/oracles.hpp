#pragma once

// Brute-force reference implementations used only by the tests. Each one
// takes the most literal route available and shares no code path with the
// library routine it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "flagweyl/diagram.hpp"
#include "flagweyl/fillings.hpp"
#include "flagweyl/ypoly.hpp"

namespace oracle {

using flagweyl::Diagram;
using flagweyl::Integer;
using flagweyl::Subset;

inline std::vector<int> sorted(const Subset& s) {
  std::vector<int> v;
  for (int i = 1; i <= flagweyl::kMaxGrid; ++i) {
    if (s.contains(i)) v.push_back(i);
  }
  return v;
}

// Componentwise comparison of the sorted element lists.
inline bool gale(const Subset& r, const Subset& s) {
  const auto a = sorted(r);
  const auto b = sorted(s);
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

// Every subset of [n] with |R| = |S| and R <= S, sorted lexicographically.
inline std::vector<Subset> subsets_leq(const Subset& s, int n) {
  std::vector<std::vector<int>> found;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const Subset r = Subset::from_mask(m);
    if (r.size() == s.size() && gale(r, s)) found.push_back(sorted(r));
  }
  std::sort(found.begin(), found.end());
  std::vector<Subset> out;
  for (const auto& v : found) out.emplace_back(v);
  return out;
}

inline std::vector<Diagram> diagrams_leq(const Diagram& d) {
  std::vector<Diagram> out{Diagram(d.n())};
  for (int j = 1; j <= d.n(); ++j) {
    std::vector<Diagram> next;
    for (const auto& partial : out) {
      for (const auto& s : oracle::subsets_leq(d.column(j), d.n())) {
        Diagram c = partial;
        c.set_column(j, s);
        next.push_back(c);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Every quadruple, in (i1, i2, j1, j2) order.
inline std::optional<flagweyl::PatternWitness> find_pattern(const Diagram& d) {
  const int n = d.n();
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2)
          if (!d.contains(i1, j1) && !d.contains(i1, j2) && d.contains(i2, j1) && d.contains(i2, j2))
            return flagweyl::PatternWitness{i1, i2, j1, j2};
  return std::nullopt;
}

inline Diagram diagram_from_bits(int n, std::uint64_t bits) {
  std::vector<std::pair<int, int>> boxes;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if ((bits >> ((i - 1) * n + (j - 1))) & 1U) boxes.emplace_back(i, j);
  return Diagram::from_boxes(n, boxes);
}

inline std::vector<Diagram> all_diagrams(int n) {
  std::vector<Diagram> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << (n * n)); ++b) out.push_back(diagram_from_bits(n, b));
  return out;
}

inline Diagram random_diagram(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution box(density);
  std::vector<std::pair<int, int>> boxes;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (box(rng)) boxes.emplace_back(i, j);
  return Diagram::from_boxes(n, boxes);
}

inline Diagram random_below(std::mt19937_64& rng, const Diagram& d) {
  Diagram c = d;
  for (int j = 1; j <= d.n(); ++j) {
    const auto options = oracle::subsets_leq(d.column(j), d.n());
    c.set_column(j, options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
  }
  return c;
}

// Every assignment of a permutation of C_j to the rows of D_j, filtered by
// the flag bound.
inline std::vector<flagweyl::FlaggedFilling> fillings(const Diagram& d, const Diagram& c) {
  std::vector<std::vector<std::vector<int>>> per_col;
  for (int j = 1; j <= d.n(); ++j) {
    const auto rows = sorted(d.column(j));
    auto word = sorted(c.column(j));
    std::vector<std::vector<int>> ok;
    do {
      bool flagged = true;
      for (std::size_t t = 0; t < rows.size(); ++t) flagged = flagged && word[t] <= rows[t];
      if (flagged) ok.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    per_col.push_back(ok);
  }
  std::vector<flagweyl::FlaggedFilling> out{flagweyl::FlaggedFilling{d, {}}};
  for (const auto& options : per_col) {
    std::vector<flagweyl::FlaggedFilling> next;
    for (const auto& f : out)
      for (const auto& w : options) {
        auto g = f;
        g.entries.push_back(w);
        next.push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

// Dimension of the rational span by Gaussian elimination over Q.
inline std::size_t rational_rank(const std::vector<flagweyl::YPolynomial>& polys) {
  std::map<flagweyl::YMonomial, std::size_t> column;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) column.try_emplace(t.first, column.size());
  std::vector<std::vector<mpq_class>> a;
  for (const auto& p : polys) {
    std::vector<mpq_class> row(column.size());
    for (const auto& [m, c] : p.terms()) row[column[m]] = mpq_class(c);
    a.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < a.size(); ++col) {
    std::size_t p = rank;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[rank][col];
      for (std::size_t k = col; k < column.size(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline flagweyl::Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(w[i], w[rng() % static_cast<std::uint64_t>(i + 1)]);
  return flagweyl::Permutation(w);
}

}  // namespace oracle
