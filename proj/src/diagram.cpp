#include "flagweyl/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flagweyl {

namespace {

void check_index(int i) {
  if (i < 1 || i > kMaxGrid) {
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(kMaxGrid));
  }
}

void check_grid(int n) {
  if (n < 0 || n > kMaxGrid) {
    throw std::invalid_argument("grid size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxGrid));
  }
}

std::uint64_t grid_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

void lower_sets(const std::vector<int>& s, std::size_t pos, int prev, std::uint64_t acc, std::vector<Subset>& out) {
  if (pos == s.size()) {
    out.push_back(Subset::from_mask(acc));
    return;
  }
  for (int r = prev + 1; r <= s[pos]; ++r) {
    lower_sets(s, pos + 1, r, acc | (std::uint64_t{1} << (r - 1)), out);
  }
}

}  // namespace

Subset::Subset(std::initializer_list<int> elements) : Subset(std::vector<int>(elements)) {}

Subset::Subset(const std::vector<int>& elements) {
  for (int e : elements) {
    check_index(e);
    if (contains(e)) throw std::invalid_argument("duplicate subset element " + std::to_string(e));
    mask_ |= std::uint64_t{1} << (e - 1);
  }
}

Subset Subset::interval(int lo, int hi) {
  Subset s;
  for (int i = std::max(lo, 1); i <= hi; ++i) s.insert(i);
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

void Subset::insert(int i) {
  check_index(i);
  mask_ |= std::uint64_t{1} << (i - 1);
}

void Subset::erase(int i) {
  check_index(i);
  mask_ &= ~(std::uint64_t{1} << (i - 1));
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Subset operator|(Subset a, Subset b) { return Subset::from_mask(a.mask() | b.mask()); }
Subset operator&(Subset a, Subset b) { return Subset::from_mask(a.mask() & b.mask()); }
Subset operator-(Subset a, Subset b) { return Subset::from_mask(a.mask() & ~b.mask()); }

Diagram::Diagram(int n) : n_(n) {
  check_grid(n);
  columns_.resize(n);
}

Diagram::Diagram(int n, std::vector<Subset> columns) : n_(n), columns_(std::move(columns)) {
  check_grid(n);
  if (static_cast<int>(columns_.size()) != n) {
    throw std::invalid_argument("diagram on a " + std::to_string(n) + "-grid needs " + std::to_string(n) + " columns, got " +
                                std::to_string(columns_.size()));
  }
  for (const auto& c : columns_) {
    if (c.mask() & ~grid_mask(n)) throw std::out_of_range("diagram column has a row outside 1.." + std::to_string(n));
  }
}

Diagram Diagram::from_boxes(int n, const std::vector<std::pair<int, int>>& boxes) {
  Diagram d(n);
  for (auto [i, j] : boxes) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw std::out_of_range("box (" + std::to_string(i) + "," + std::to_string(j) + ") outside the " + std::to_string(n) +
                              "x" + std::to_string(n) + " grid");
    }
    if (d.contains(i, j)) {
      throw std::invalid_argument("duplicate box (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    d.columns_[j - 1].insert(i);
  }
  return d;
}

void Diagram::set_column(int j, Subset s) {
  if (s.mask() & ~grid_mask(n_)) throw std::out_of_range("column row outside the grid");
  columns_.at(j - 1) = s;
}

Subset Diagram::row(int i) const {
  Subset r;
  for (int j = 1; j <= n_; ++j) {
    if (columns_[j - 1].contains(i)) r.insert(j);
  }
  return r;
}

int Diagram::size() const {
  int total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

std::vector<std::pair<int, int>> Diagram::boxes() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.columns_.begin(), a.columns_.end(), b.columns_.begin(), b.columns_.end());
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int i = 0; i < size(); ++i) inv[w_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

int Permutation::inversions() const {
  int count = 0;
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) count += w_[a] > w_[b];
  }
  return count;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  }
}

int Composition::max_part() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }

bool gale_leq(const Subset& r, const Subset& s) {
  if (r.size() != s.size()) {
    throw CardinalityError("Gale order compares subsets of equal size (got " + std::to_string(r.size()) + " and " +
                           std::to_string(s.size()) + ")");
  }
  // Walk both element sequences in step.
  std::uint64_t a = r.mask();
  std::uint64_t b = s.mask();
  while (a) {
    if (__builtin_ctzll(a) > __builtin_ctzll(b)) return false;
    a &= a - 1;
    b &= b - 1;
  }
  return true;
}

bool same_shape(const Diagram& c, const Diagram& d) {
  if (c.n() != d.n()) return false;
  for (int j = 1; j <= d.n(); ++j) {
    if (c.column(j).size() != d.column(j).size()) return false;
  }
  return true;
}

bool diagram_leq(const Diagram& c, const Diagram& d) {
  if (c.n() != d.n()) throw CardinalityError("diagrams live on different grids");
  for (int j = 1; j <= d.n(); ++j) {
    if (!gale_leq(c.column(j), d.column(j))) return false;
  }
  return true;
}

std::vector<Subset> subsets_leq(const Subset& s, int n) {
  check_grid(n);
  if (s.mask() & ~grid_mask(n)) throw std::out_of_range("subset is not contained in 1.." + std::to_string(n));
  std::vector<Subset> out;
  lower_sets(s.elements(), 0, 0, 0, out);
  return out;
}

DiagramsLeq::DiagramsLeq(const Diagram& d) : n_(d.n()) {
  choices_.reserve(d.n());
  for (const auto& c : d.columns()) choices_.push_back(subsets_leq(c, d.n()));
}

Integer DiagramsLeq::count() const {
  Integer total = 1;
  for (const auto& c : choices_) total *= static_cast<unsigned long>(c.size());
  return total;
}

DiagramsLeq::iterator DiagramsLeq::begin() const {
  iterator it;
  it.owner_ = this;
  it.index_.assign(choices_.size(), 0);
  std::vector<Subset> cols;
  cols.reserve(choices_.size());
  for (const auto& c : choices_) cols.push_back(c.front());
  it.current_ = Diagram(n_, std::move(cols));
  it.done_ = false;
  return it;
}

DiagramsLeq::iterator& DiagramsLeq::iterator::operator++() {
  const auto& choices = owner_->choices_;
  for (std::size_t k = choices.size(); k-- > 0;) {
    if (++index_[k] < choices[k].size()) {
      current_.set_column(static_cast<int>(k) + 1, choices[k][index_[k]]);
      return *this;
    }
    index_[k] = 0;
    current_.set_column(static_cast<int>(k) + 1, choices[k][0]);
  }
  done_ = true;
  return *this;
}

std::optional<PatternWitness> find_pattern(const Diagram& d) {
  const int n = d.n();
  std::vector<std::uint64_t> rows(n + 1);
  for (int i = 1; i <= n; ++i) rows[i] = d.row(i).mask();
  const std::uint64_t all = grid_mask(n);
  for (int i1 = 1; i1 <= n; ++i1) {
    const std::uint64_t absent = ~rows[i1] & all;
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      std::uint64_t both = absent & rows[i2];
      if (__builtin_popcountll(both) < 2) continue;
      const int j1 = __builtin_ctzll(both) + 1;
      both &= both - 1;
      const int j2 = __builtin_ctzll(both) + 1;
      return PatternWitness{i1, i2, j1, j2};
    }
  }
  return std::nullopt;
}

Diagram rothe_diagram(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = w.inverse();
  Diagram d(n);
  for (int j = 1; j <= n; ++j) {
    Subset col;
    for (int i = 1; i <= n; ++i) {
      if (w(i) > j && winv(j) > i) col.insert(i);
    }
    d.set_column(j, col);
  }
  return d;
}

Diagram skyline_diagram(const Composition& alpha, int n) {
  check_grid(n);
  if (alpha.length() > n) throw std::invalid_argument("composition has more parts than the grid has rows");
  if (alpha.max_part() > n) throw std::invalid_argument("composition part exceeds the grid size");
  std::vector<Subset> cols(n);
  for (int i = 1; i <= alpha.length(); ++i) {
    for (int j = 1; j <= alpha[i]; ++j) cols[j - 1].insert(i);
  }
  return Diagram(n, std::move(cols));
}

Diagram parse_ascii(std::string_view text) {
  std::vector<std::string> rows;
  std::string cur;
  auto flush = [&] {
    while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' ' || cur.back() == '\t')) cur.pop_back();
    if (!cur.empty()) rows.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '\n' || ch == '/') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ParseError("empty diagram");
  if (n > kMaxGrid) throw ParseError("diagram larger than " + std::to_string(kMaxGrid) + " rows");
  std::vector<Subset> cols(n);
  for (int i = 1; i <= n; ++i) {
    const auto& r = rows[i - 1];
    if (static_cast<int>(r.size()) != n) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(r.size()) + " characters, expected " +
                       std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) {
      const char ch = r[j - 1];
      if (ch == '#') {
        cols[j - 1].insert(i);
      } else if (ch != '.') {
        throw ParseError(std::string("unexpected character '") + ch + "' in row " + std::to_string(i));
      }
    }
  }
  return Diagram(n, std::move(cols));
}

std::string to_ascii(const Diagram& d, char row_separator) {
  std::string out;
  for (int i = 1; i <= d.n(); ++i) {
    if (i > 1) out.push_back(row_separator);
    for (int j = 1; j <= d.n(); ++j) out.push_back(d.contains(i, j) ? '#' : '.');
  }
  return out;
}

}  // namespace flagweyl
