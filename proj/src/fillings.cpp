#include "flagweyl/fillings.hpp"

#include <algorithm>

namespace flagweyl {

namespace {

void check_shapes(const Diagram& d, const Diagram& c) {
  if (!same_shape(c, d)) throw CardinalityError("filling content C must have the column sizes of D");
}

void extend_column(const std::vector<int>& rows, std::size_t pos, std::uint64_t remaining, std::vector<int>& word,
                   std::vector<std::vector<int>>& out) {
  if (pos == rows.size()) {
    out.push_back(word);
    return;
  }
  for (std::uint64_t m = remaining; m; m &= m - 1) {
    const int value = __builtin_ctzll(m) + 1;
    if (value > rows[pos]) break;
    word[pos] = value;
    extend_column(rows, pos + 1, remaining & ~(std::uint64_t{1} << (value - 1)), word, out);
  }
}

}  // namespace

int FlaggedFilling::entry(int i, int j) const {
  const auto rows = diagram.column(j).elements();
  const auto it = std::find(rows.begin(), rows.end(), i);
  if (it == rows.end()) throw std::out_of_range("no box at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return entries.at(j - 1).at(it - rows.begin());
}

Subset FlaggedFilling::content(int j) const {
  Subset s;
  for (int v : entries.at(j - 1)) s.insert(v);
  return s;
}

Diagram FlaggedFilling::content_diagram() const {
  std::vector<Subset> cols;
  for (int j = 1; j <= diagram.n(); ++j) cols.push_back(content(j));
  return Diagram(diagram.n(), std::move(cols));
}

bool is_flagged_filling(const FlaggedFilling& f) {
  const int n = f.diagram.n();
  if (static_cast<int>(f.entries.size()) != n) return false;
  for (int j = 1; j <= n; ++j) {
    const auto rows = f.diagram.column(j).elements();
    const auto& col = f.entries[j - 1];
    if (col.size() != rows.size()) return false;
    std::uint64_t seen = 0;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (col[t] < 1 || col[t] > rows[t]) return false;
      const std::uint64_t bit = std::uint64_t{1} << (col[t] - 1);
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

std::vector<std::vector<int>> column_fillings(const Subset& rows, const Subset& content) {
  if (rows.size() != content.size()) throw CardinalityError("column content and rows differ in size");
  std::vector<std::vector<int>> out;
  const auto r = rows.elements();
  std::vector<int> word(r.size());
  extend_column(r, 0, content.mask(), word, out);
  return out;
}

std::vector<FlaggedFilling> enumerate_fillings(const Diagram& d, const Diagram& c) {
  check_shapes(d, c);
  const int n = d.n();
  std::vector<std::vector<std::vector<int>>> per_column;
  per_column.reserve(n);
  for (int j = 1; j <= n; ++j) {
    per_column.push_back(column_fillings(d.column(j), c.column(j)));
    if (per_column.back().empty()) return {};
  }
  std::vector<FlaggedFilling> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    FlaggedFilling f{d, {}};
    f.entries.reserve(n);
    for (int j = 0; j < n; ++j) f.entries.push_back(per_column[j][idx[j]]);
    out.push_back(std::move(f));
    int k = n - 1;
    while (k >= 0 && ++idx[k] == per_column[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

int word_inversions(const std::vector<int>& word) {
  int count = 0;
  for (std::size_t a = 0; a < word.size(); ++a) {
    for (std::size_t b = a + 1; b < word.size(); ++b) count += word[a] > word[b];
  }
  return count;
}

int inv(const FlaggedFilling& f) {
  int total = 0;
  for (const auto& col : f.entries) total += word_inversions(col);
  return total;
}

WeightVector weight(const FlaggedFilling& f) {
  WeightVector w(f.diagram.n(), 0);
  for (int j = 1; j <= f.diagram.n(); ++j) {
    const auto rows = f.diagram.column(j).elements();
    for (std::size_t t = 0; t < rows.size(); ++t) w[rows[t] - 1] += f.entries[j - 1][t];
  }
  return w;
}

FlaggedFilling f_max(const Diagram& d, const Diagram& c) {
  check_shapes(d, c);
  FlaggedFilling f{d, std::vector<std::vector<int>>(d.n())};
  for (int j = 1; j <= d.n(); ++j) {
    std::uint64_t remaining = c.column(j).mask();
    for (int row : d.column(j).elements()) {
      const std::uint64_t allowed = row >= 64 ? remaining : remaining & ((std::uint64_t{1} << row) - 1);
      if (!allowed) {
        throw std::invalid_argument("C is not below D in column " + std::to_string(j) + ": nothing fits row " +
                                    std::to_string(row));
      }
      const int value = 64 - __builtin_clzll(allowed);
      f.entries[j - 1].push_back(value);
      remaining &= ~(std::uint64_t{1} << (value - 1));
    }
  }
  return f;
}

YMonomial y_monomial(const FlaggedFilling& f) {
  std::vector<YMonomial::Factor> factors;
  for (int j = 1; j <= f.diagram.n(); ++j) {
    const auto rows = f.diagram.column(j).elements();
    for (std::size_t t = 0; t < rows.size(); ++t) factors.push_back({f.entries[j - 1][t], rows[t], 1});
  }
  return YMonomial::from_factors(factors);
}

}  // namespace flagweyl
