#pragma once

#include <compare>
#include <vector>

#include "flagweyl/diagram.hpp"
#include "flagweyl/ypoly.hpp"

namespace flagweyl {

/// A filling of the boxes of a diagram. entries[j-1] lists the entries of
/// column j from top to bottom, aligned with the increasing rows of column j.
/// A flagged filling has column-distinct entries with entry(i, j) <= i.
struct FlaggedFilling {
  Diagram diagram;
  std::vector<std::vector<int>> entries;

  int entry(int i, int j) const;
  // Set of entries in column j.
  Subset content(int j) const;
  // The diagram C whose columns are the column contents.
  Diagram content_diagram() const;

  friend bool operator==(const FlaggedFilling&, const FlaggedFilling&) = default;
};

// Row sums f_i of the entries in row i. Compared lexicographically.
using WeightVector = std::vector<int>;

bool is_flagged_filling(const FlaggedFilling& f);

// Words (top-to-bottom) filling the rows of one column with exactly the
// elements of content, subject to the flag bound. Lexicographic order.
std::vector<std::vector<int>> column_fillings(const Subset& rows, const Subset& content);

// Every flagged filling of D whose column j content is C_j. Empty if C is not
// below D. Throws CardinalityError on a column size mismatch.
std::vector<FlaggedFilling> enumerate_fillings(const Diagram& d, const Diagram& c);

int word_inversions(const std::vector<int>& word);
int inv(const FlaggedFilling& f);
inline int sign(const FlaggedFilling& f) { return inv(f) % 2 == 0 ? 1 : -1; }

WeightVector weight(const FlaggedFilling& f);

// Greedy maximal filling: each box, top to bottom, takes the largest unused
// element of C_j not exceeding its row. Throws std::invalid_argument if C is
// not below D, CardinalityError on a size mismatch.
FlaggedFilling f_max(const Diagram& d, const Diagram& c);

// Product over boxes (i, j) of y[entry, i].
YMonomial y_monomial(const FlaggedFilling& f);

}  // namespace flagweyl
