#include "flagweyl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "flagweyl/character.hpp"

namespace flagweyl {

namespace {

// Lexicographic k-subsets of the given increasing elements.
void combinations(const std::vector<int>& pool, std::size_t k, std::size_t start, std::vector<int>& cur,
                  std::vector<Subset>& out) {
  if (cur.size() == k) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t p = start; p + (k - cur.size()) <= pool.size(); ++p) {
    cur.push_back(pool[p]);
    combinations(pool, k, p + 1, cur, out);
    cur.pop_back();
  }
}

int position_sum(const Subset& s, int origin) {
  int total = 0;
  for (int e : s.elements()) total += e - origin + 1;
  return total;
}

}  // namespace

std::optional<MinimalConfiguration> locate_minimal_configuration(const Diagram& d) {
  const int n = d.n();
  for (int j1 = 1; j1 <= n; ++j1) {
    for (int j2 = j1 + 1; j2 <= n; ++j2) {
      const Subset& a = d.column(j1);
      const Subset& b = d.column(j2);
      for (int i1 = 1; i1 <= n; ++i1) {
        if (a.contains(i1) || b.contains(i1)) continue;
        // The first later row that is not split between the two columns
        // decides whether i1 opens a minimal configuration.
        for (int i = i1 + 1; i <= n; ++i) {
          const bool in_a = a.contains(i);
          const bool in_b = b.contains(i);
          if (in_a != in_b) continue;
          if (in_a) return MinimalConfiguration{i1, i, j1, j2};
          break;
        }
      }
    }
  }
  return std::nullopt;
}

ColumnBlocks split_column(const Subset& column, int i1, int i2) {
  return ColumnBlocks{column & Subset::interval(1, i1 - 1), column & Subset::interval(i1 + 1, i2),
                      column & Subset::interval(i2 + 1, kMaxGrid)};
}

DependenceWitness dependence_witness(const Diagram& d) {
  const auto loc = locate_minimal_configuration(d);
  if (!loc) throw std::invalid_argument("diagram avoids the pattern; no dependence witness exists");
  const auto [i1, i2, j1, j2] = *loc;
  const ColumnBlocks first = split_column(d.column(j1), i1, i2);
  const ColumnBlocks second = split_column(d.column(j2), i1, i2);

  // The square matrix has rows i1..i2 and columns [y_{., i2}, y_{., i1+1}, ...,
  // y_{., i2}]; column label k sits at position k - i1 + 1. Expanding along
  // the columns labelled by first.middle leaves the duplicate column followed
  // by second.middle minus i2, which is (-1)^t away from increasing order.
  const int t = second.middle.size() - 1;
  const int column_positions = position_sum(first.middle, i1);
  const Subset window = Subset::interval(i1, i2);

  std::vector<Subset> choices;
  std::vector<int> cur;
  combinations(window.elements(), first.middle.size(), 0, cur, choices);

  DependenceWitness w{d, {}, *loc};
  for (const Subset& r : choices) {
    const Subset rest = window - r;
    if (!gale_leq(r, first.middle) || !gale_leq(rest, second.middle)) continue;
    const int parity = t + column_positions + position_sum(r, i1);
    Diagram c = d;
    c.set_column(j1, first.low | r | first.high);
    c.set_column(j2, second.low | rest | second.high);
    w.terms.push_back({std::move(c), Integer(parity % 2 == 0 ? 1 : -1)});
  }
  // The relation is only defined up to a global sign; fix it so the first
  // term is positive.
  if (!w.terms.empty() && w.terms.front().coeff < 0) {
    for (auto& term : w.terms) term.coeff = -term.coeff;
  }
  return w;
}

bool verify_witness(const DependenceWitness& w) {
  if (w.terms.empty()) return false;
  std::set<Diagram> seen;
  YPolynomial total;
  for (const auto& term : w.terms) {
    if (term.coeff == 0) return false;
    if (!same_shape(term.c, w.d) || !diagram_leq(term.c, w.d)) return false;
    if (!seen.insert(term.c).second) return false;
    total += det_via_fillings(w.d, term.c) * term.coeff;
  }
  return total.is_zero();
}

std::optional<std::pair<FlaggedFilling, FlaggedFilling>> find_cancellation(const Diagram& d, const Diagram& c) {
  const auto fillings = enumerate_fillings(d, c);
  // First index seen for each (monomial, sign).
  std::map<std::pair<YMonomial, int>, std::size_t> first;
  for (std::size_t k = 0; k < fillings.size(); ++k) {
    const YMonomial m = y_monomial(fillings[k]);
    const int s = sign(fillings[k]);
    if (auto it = first.find({m, -s}); it != first.end()) return std::make_pair(fillings[it->second], fillings[k]);
    first.try_emplace({m, s}, k);
  }
  return std::nullopt;
}

bool check_claim2(const Diagram& d) {
  if (!avoids_pattern(d)) throw std::invalid_argument("check_claim2 requires a pattern-avoiding diagram");
  const WeightGroups groups(d);
  for (const auto& w : groups.weights()) {
    std::set<YMonomial> seen;
    for (const auto& c : groups.members(w)) {
      if (!seen.insert(y_monomial(f_max(d, c))).second) return false;
    }
  }
  return true;
}

Diagram diagram_from_index(int n, std::uint64_t k) {
  std::vector<Subset> cols(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if ((k >> ((i - 1) * n + (j - 1))) & 1U) cols[j - 1].insert(i);
    }
  }
  return Diagram(n, std::move(cols));
}

std::vector<Diagram> random_diagrams(int n, const RandomMode& mode) {
  std::mt19937_64 rng(mode.seed);
  std::vector<Diagram> out;
  out.reserve(mode.trials);
  for (std::uint64_t t = 0; t < mode.trials; ++t) {
    std::vector<Subset> cols(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < mode.density) cols[j - 1].insert(i);
      }
    }
    out.emplace_back(n, std::move(cols));
  }
  return out;
}

namespace {

struct SweepTally {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<std::uint64_t> failures;
};

// Runs check(k) for k in [0, count) on a pool of workers pulling chunks from
// a shared counter. check returns nullopt to skip, or whether k is a failure.
template <typename Check>
SweepTally parallel_sweep(std::uint64_t count, unsigned threads, const Check& check) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::mutex merge;
  SweepTally total;
  std::exception_ptr error;

  auto worker = [&] {
    SweepTally local;
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count) break;
        const std::uint64_t end = std::min(count, begin + kChunk);
        for (std::uint64_t k = begin; k < end; ++k) {
          const std::optional<bool> failed = check(k);
          if (!failed) {
            ++local.skipped;
            continue;
          }
          ++local.checked;
          if (*failed) local.failures.push_back(k);
        }
      }
    } catch (...) {
      std::lock_guard lock(merge);
      if (!error) error = std::current_exception();
      next.store(count);
    }
    std::lock_guard lock(merge);
    total.checked += local.checked;
    total.skipped += local.skipped;
    total.failures.insert(total.failures.end(), local.failures.begin(), local.failures.end());
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  std::sort(total.failures.begin(), total.failures.end());
  return total;
}

bool theorem_fails(const Diagram& d) { return attains_upper(d) != avoids_pattern(d); }

}  // namespace

VerificationReport verify_theorem(int n, const VerifyMode& mode, const VerifyLimits& limits) {
  if (n < 1 || n > kMaxGrid) throw std::invalid_argument("grid size must be between 1 and " + std::to_string(kMaxGrid));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.n = n;
  report.mode = mode;

  if (std::holds_alternative<ExhaustiveMode>(mode)) {
    if (n > limits.max_exhaustive_n || n * n >= 64) {
      throw std::invalid_argument("exhaustive verification is capped at n = " + std::to_string(limits.max_exhaustive_n) +
                                  " (2^(n^2) diagrams)");
    }
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    const auto tally = parallel_sweep(count, limits.threads,
                                      [n](std::uint64_t k) -> std::optional<bool> { return theorem_fails(diagram_from_index(n, k)); });
    report.diagrams_checked = tally.checked;
    for (auto k : tally.failures) report.counterexamples.push_back(diagram_from_index(n, k));
  } else {
    const auto diagrams = random_diagrams(n, std::get<RandomMode>(mode));
    const auto tally = parallel_sweep(diagrams.size(), limits.threads, [&](std::uint64_t k) -> std::optional<bool> {
      if (upper_bound_count(diagrams[k]) > limits.max_generators) return std::nullopt;
      return theorem_fails(diagrams[k]);
    });
    report.diagrams_checked = tally.checked;
    report.skipped = tally.skipped;
    for (auto k : tally.failures) report.counterexamples.push_back(diagrams[k]);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace flagweyl
