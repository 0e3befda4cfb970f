#include "flagweyl/character.hpp"

#include <algorithm>

#include "flagweyl/fillings.hpp"

namespace flagweyl {

namespace {

// det(Y^{content}_{rows}) summed over the flagged column fillings.
YPolynomial column_minor(const Subset& rows, const Subset& content) {
  const auto r = rows.elements();
  std::vector<YPolynomial::Term> terms;
  std::vector<YMonomial::Factor> factors(r.size());
  for (const auto& word : column_fillings(rows, content)) {
    for (std::size_t t = 0; t < r.size(); ++t) factors[t] = {word[t], r[t], 1};
    terms.emplace_back(YMonomial::from_factors(factors), word_inversions(word) % 2 == 0 ? 1 : -1);
  }
  return YPolynomial(std::move(terms));
}

}  // namespace

XMonomial x_weight(const Diagram& c) {
  std::vector<int> a(c.n(), 0);
  for (const auto& col : c.columns()) {
    for (int i : col.elements()) ++a[i - 1];
  }
  return XMonomial(std::move(a));
}

WeightGroups::WeightGroups(const Diagram& d) : d_(d) {
  const int n = d.n();
  choices_.reserve(n);
  for (const auto& col : d.columns()) choices_.push_back(subsets_leq(col, n));
  indicator_.resize(n);
  minors_.resize(n);
  for (int j = 0; j < n; ++j) {
    for (const auto& s : choices_[j]) {
      Key k(n, 0);
      for (int i : s.elements()) k[i - 1] = 1;
      indicator_[j].push_back(std::move(k));
      minors_[j].push_back(column_minor(d.column(j + 1), s));
    }
  }
  reachable_.assign(n + 1, {});
  reachable_[n].insert(Key(n, 0));
  for (int j = n - 1; j >= 0; --j) {
    for (const auto& rest : reachable_[j + 1]) {
      for (const auto& ind : indicator_[j]) {
        Key k(rest);
        for (int i = 0; i < n; ++i) k[i] += ind[i];
        reachable_[j].insert(std::move(k));
      }
    }
  }
}

std::vector<XMonomial> WeightGroups::weights() const {
  std::vector<XMonomial> out;
  for (const auto& k : reachable_.front()) out.emplace_back(k);
  return out;
}

void WeightGroups::collect(const Key& target, std::vector<std::vector<std::size_t>>& picks) const {
  const int n = d_.n();
  std::vector<std::size_t> pick(n);
  // remaining[j] is the weight still to be produced by columns j..n.
  std::vector<Key> remaining(n + 1);
  remaining[0] = target;
  std::function<void(int)> dfs = [&](int j) {
    if (j == n) {
      picks.push_back(pick);
      return;
    }
    for (std::size_t c = 0; c < choices_[j].size(); ++c) {
      const auto& ind = indicator_[j][c];
      Key rest(remaining[j]);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = (rest[i] -= ind[i]) >= 0;
      if (!ok || !reachable_[j + 1].contains(rest)) continue;
      pick[j] = c;
      remaining[j + 1] = std::move(rest);
      dfs(j + 1);
    }
  };
  if (reachable_[0].contains(target)) dfs(0);
}

std::vector<Diagram> WeightGroups::members(const XMonomial& weight) const {
  std::vector<std::vector<std::size_t>> picks;
  collect(weight.exponents(), picks);
  std::vector<Diagram> out;
  out.reserve(picks.size());
  for (const auto& p : picks) {
    std::vector<Subset> cols;
    for (std::size_t j = 0; j < p.size(); ++j) cols.push_back(choices_[j][p[j]]);
    out.emplace_back(d_.n(), std::move(cols));
  }
  return out;
}

std::vector<YPolynomial> WeightGroups::generators(const XMonomial& weight) const {
  std::vector<std::vector<std::size_t>> picks;
  collect(weight.exponents(), picks);
  std::vector<YPolynomial> out;
  out.reserve(picks.size());
  for (const auto& p : picks) {
    YPolynomial g = YPolynomial::one();
    for (std::size_t j = 0; j < p.size(); ++j) g = g * minors_[j][p[j]];
    out.push_back(std::move(g));
  }
  return out;
}

void WeightGroups::for_each_group(
    const std::function<bool(const XMonomial&, const std::vector<Diagram>&, const std::vector<YPolynomial>&)>& visit) const {
  for (const auto& w : weights()) {
    if (!visit(w, members(w), generators(w))) return;
  }
}

XPolynomial dual_character(const Diagram& d) {
  const WeightGroups groups(d);
  XPolynomial chi;
  for (const auto& w : groups.weights()) {
    const auto gens = groups.generators(w);
    chi.add_term(w, static_cast<unsigned long>(rank_of_span(gens)));
  }
  return chi;
}

XPolynomial lower_bound_poly(const Diagram& d) {
  const WeightGroups groups(d);
  XPolynomial lower;
  for (const auto& w : groups.weights()) lower.add_term(w, 1);
  return lower;
}

Integer upper_bound_count(const Diagram& d) {
  Integer total = 1;
  for (const auto& col : d.columns()) total *= static_cast<unsigned long>(subsets_leq(col, d.n()).size());
  return total;
}

bool attains_upper(const Diagram& d) {
  const WeightGroups groups(d);
  for (const auto& w : groups.weights()) {
    const auto gens = groups.generators(w);
    if (gens.size() > 1 && rank_of_span(gens) < gens.size()) return false;
  }
  return true;
}

bool attains_lower(const Diagram& d) {
  const WeightGroups groups(d);
  for (const auto& w : groups.weights()) {
    if (rank_of_span(groups.generators(w)) > 1) return false;
  }
  return true;
}

CharacterReport character_report(const Diagram& d) {
  CharacterReport r;
  r.diagram = d;
  r.chi = dual_character(d);
  r.lower = lower_bound_poly(d);
  r.upper_count = upper_bound_count(d);
  r.chi_at_ones = r.chi.at_ones();
  r.attains_upper = r.chi_at_ones == r.upper_count;
  r.attains_lower = std::all_of(r.chi.terms().begin(), r.chi.terms().end(), [](const auto& t) { return t.second <= 1; });
  r.pattern = find_pattern(d);
  return r;
}

XPolynomial schubert(const Permutation& w) {
  const int n = w.size();
  // Climb to the longest element by sorting ascents away, remembering the
  // positions; then descend with divided differences in reverse order.
  std::vector<int> word = w.one_line();
  std::vector<int> path;
  for (;;) {
    int i = 0;
    while (i + 1 < n && word[i] > word[i + 1]) ++i;
    if (i + 1 >= n) break;
    std::swap(word[i], word[i + 1]);
    path.push_back(i + 1);
  }
  std::vector<int> staircase(n);
  for (int k = 0; k < n; ++k) staircase[k] = n - 1 - k;
  XPolynomial f(XMonomial(std::move(staircase)));
  for (auto it = path.rbegin(); it != path.rend(); ++it) f = divided_difference(f, *it);
  return f;
}

XPolynomial key(const Composition& alpha) {
  const int len = alpha.length();
  std::vector<int> a = alpha.parts();
  std::vector<int> path;
  for (;;) {
    int i = 0;
    while (i + 1 < len && a[i] >= a[i + 1]) ++i;
    if (i + 1 >= len) break;
    std::swap(a[i], a[i + 1]);
    path.push_back(i + 1);
  }
  XPolynomial f(XMonomial(std::move(a)));
  for (auto it = path.rbegin(); it != path.rend(); ++it) f = demazure(f, *it);
  return f;
}

}  // namespace flagweyl
