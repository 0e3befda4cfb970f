#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagweyl/common.hpp"

namespace flagweyl {

// Rows and columns are 1-based throughout; a grid never exceeds this size.
inline constexpr int kMaxGrid = 64;

/// A subset of [n], stored as a bitmask (bit i-1 set iff i is a member).
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<int> elements);
  explicit Subset(const std::vector<int>& elements);

  static Subset from_mask(std::uint64_t mask) {
    Subset s;
    s.mask_ = mask;
    return s;
  }
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static Subset interval(int lo, int hi);

  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 1 && i <= kMaxGrid && ((mask_ >> (i - 1)) & 1U); }
  int size() const { return __builtin_popcountll(mask_); }
  bool empty() const { return mask_ == 0; }
  int max_element() const { return mask_ ? 64 - __builtin_clzll(mask_) : 0; }
  std::vector<int> elements() const;

  void insert(int i);
  void erase(int i);

  friend bool operator==(const Subset&, const Subset&) = default;
  // Lexicographic on the increasing element sequences.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  std::uint64_t mask_ = 0;
};

Subset operator|(Subset a, Subset b);
Subset operator&(Subset a, Subset b);
Subset operator-(Subset a, Subset b);

/// Boxes of the n x n grid recorded column by column: row i is in column(j)
/// iff the box (i, j) belongs to the diagram.
class Diagram {
 public:
  Diagram() = default;
  // Empty diagram on the n x n grid.
  explicit Diagram(int n);
  Diagram(int n, std::vector<Subset> columns);

  static Diagram from_boxes(int n, const std::vector<std::pair<int, int>>& boxes);

  int n() const { return n_; }
  const Subset& column(int j) const { return columns_.at(j - 1); }
  const std::vector<Subset>& columns() const { return columns_; }
  void set_column(int j, Subset s);

  bool contains(int i, int j) const { return column(j).contains(i); }
  // Columns j with (i, j) in the diagram, as a subset of [n].
  Subset row(int i) const;
  int size() const;
  // Row-major list of boxes.
  std::vector<std::pair<int, int>> boxes() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b);

 private:
  int n_ = 0;
  std::vector<Subset> columns_;
};

/// Rows i1 < i2 and columns j1 < j2 with (i1,j1), (i1,j2) absent and
/// (i2,j1), (i2,j2) present.
struct PatternWitness {
  int i1 = 0;
  int i2 = 0;
  int j1 = 0;
  int j2 = 0;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

class Permutation {
 public:
  Permutation() = default;
  // One-line notation w(1), ..., w(n); throws std::invalid_argument unless a
  // bijection of [n].
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_.at(i - 1); }
  const std::vector<int>& one_line() const { return w_; }
  Permutation inverse() const;
  int inversions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_.at(i - 1); }
  const std::vector<int>& parts() const { return parts_; }
  int max_part() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Gale order on subsets of equal size. Throws CardinalityError when the sizes
// differ, since the order is only defined for equal cardinality.
bool gale_leq(const Subset& r, const Subset& s);

// C <= D columnwise. Column sizes must agree (CardinalityError otherwise).
bool diagram_leq(const Diagram& c, const Diagram& d);

// Same column sizes and same grid.
bool same_shape(const Diagram& c, const Diagram& d);

// All R <= S among subsets of [n], in lexicographic order.
std::vector<Subset> subsets_leq(const Subset& s, int n);

/// Lazily enumerates every C <= D, in lexicographic order with column 1 the
/// most significant position. Never materializes the full product.
class DiagramsLeq {
 public:
  explicit DiagramsLeq(const Diagram& d);

  class iterator {
   public:
    using value_type = Diagram;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Diagram& operator*() const { return current_; }
    const Diagram* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.index_ == b.index_); }

   private:
    friend class DiagramsLeq;
    const DiagramsLeq* owner_ = nullptr;
    std::vector<std::size_t> index_;
    Diagram current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }

  // Per-column candidate lists, in enumeration order.
  const std::vector<std::vector<Subset>>& choices() const { return choices_; }
  // Product of the per-column list sizes.
  Integer count() const;

 private:
  int n_;
  std::vector<std::vector<Subset>> choices_;
};

inline DiagramsLeq diagrams_leq(const Diagram& d) { return DiagramsLeq(d); }

// The witness with the smallest (i1, i2, j1, j2), if any.
std::optional<PatternWitness> find_pattern(const Diagram& d);
inline bool avoids_pattern(const Diagram& d) { return !find_pattern(d).has_value(); }

// Boxes (i, j) with w(i) > j and w^{-1}(j) > i.
Diagram rothe_diagram(const Permutation& w);

// Left-justified rows: row i holds (i,1), ..., (i, alpha_i). Throws
// std::invalid_argument if a part exceeds n or there are more than n parts.
Diagram skyline_diagram(const Composition& alpha, int n);

// ASCII format: n rows of n characters, '#' present and '.' absent, row 1
// first. Rows may be separated by newlines or by '/'.
Diagram parse_ascii(std::string_view text);
std::string to_ascii(const Diagram& d, char row_separator = '\n');

}  // namespace flagweyl
