#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "flagweyl/diagram.hpp"
#include "flagweyl/xpoly.hpp"
#include "flagweyl/ypoly.hpp"

namespace flagweyl {

// a_i = number of columns j with i in C_j.
XMonomial x_weight(const Diagram& c);

/// The generators det(Y_D^C), C <= D, partitioned by the x-weight of C.
///
/// Groups are produced one weight at a time: the distinct weights come from a
/// dynamic program over columns, and members of a single group are found by a
/// depth-first search that prunes any partial choice whose remaining weight is
/// unreachable by the later columns. Only one group is held in memory at once.
/// Column determinants are computed once per (column, C_j) and reused.
class WeightGroups {
 public:
  explicit WeightGroups(const Diagram& d);

  const Diagram& diagram() const { return d_; }
  // Distinct weights in increasing lexicographic order.
  std::vector<XMonomial> weights() const;
  // All C <= D with the given weight, in lexicographic order.
  std::vector<Diagram> members(const XMonomial& weight) const;
  // det(Y_D^C) for each member, in the order of members().
  std::vector<YPolynomial> generators(const XMonomial& weight) const;
  // Visits (weight, members, generators) for every group in weight order;
  // stops early when visit returns false.
  void for_each_group(
      const std::function<bool(const XMonomial&, const std::vector<Diagram>&, const std::vector<YPolynomial>&)>& visit) const;

 private:
  using Key = std::vector<int>;
  void collect(const Key& target, std::vector<std::vector<std::size_t>>& picks) const;

  Diagram d_;
  std::vector<std::vector<Subset>> choices_;
  std::vector<std::vector<Key>> indicator_;        // indicator vector of each choice
  std::vector<std::vector<YPolynomial>> minors_;   // det(Y^{C_j}_{D_j}) of each choice
  std::vector<std::set<Key>> reachable_;           // sums achievable by columns j..n
};

// Coefficient of x^a is the rank of the generators with weight a.
XPolynomial dual_character(const Diagram& d);

// Sum of the distinct x^C, C <= D, each with coefficient 1.
XPolynomial lower_bound_poly(const Diagram& d);
// #{C : C <= D}, as the product of per-column lower-set sizes.
Integer upper_bound_count(const Diagram& d);

// chi_D(1,...,1) == #{C : C <= D}; stops at the first rank-deficient group.
bool attains_upper(const Diagram& d);
// Every coefficient of chi_D is at most 1.
bool attains_lower(const Diagram& d);

struct CharacterReport {
  Diagram diagram;
  XPolynomial chi;
  XPolynomial lower;
  Integer upper_count;
  Integer chi_at_ones;
  bool attains_upper = false;
  bool attains_lower = false;
  std::optional<PatternWitness> pattern;

  friend bool operator==(const CharacterReport&, const CharacterReport&) = default;
};

CharacterReport character_report(const Diagram& d);

// Schubert polynomial of w in x_1..x_n (n = size of w), by divided
// differences descending from x1^{n-1} x2^{n-2} ... x_{n-1}.
XPolynomial schubert(const Permutation& w);

// Key polynomial of alpha in x_1..x_len, by Demazure operators descending from
// the monomial of the decreasing rearrangement of alpha.
XPolynomial key(const Composition& alpha);

}  // namespace flagweyl
