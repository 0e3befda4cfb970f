#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "flagweyl/diagram.hpp"
#include "flagweyl/fillings.hpp"
#include "flagweyl/ypoly.hpp"

namespace flagweyl {

// Rows i1 < i2, columns j1 < j2 where (i1, j1), (i1, j2) are absent,
// (i2, j1), (i2, j2) present, and every row strictly between has a box in
// exactly one of the two columns.
struct MinimalConfiguration {
  int i1 = 0;
  int i2 = 0;
  int j1 = 0;
  int j2 = 0;
  friend bool operator==(const MinimalConfiguration&, const MinimalConfiguration&) = default;
};

// Column pairs are scanned lexicographically, then i1 upward.
std::optional<MinimalConfiguration> locate_minimal_configuration(const Diagram& d);

// A column split at the window [i1, i2]: rows below i1, rows in (i1, i2],
// rows above i2.
struct ColumnBlocks {
  Subset low;
  Subset middle;
  Subset high;
};
ColumnBlocks split_column(const Subset& column, int i1, int i2);

struct DependenceWitness {
  struct Term {
    Diagram c;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Diagram d;
  std::vector<Term> terms;
  MinimalConfiguration location;

  friend bool operator==(const DependenceWitness&, const DependenceWitness&) = default;
};

// Laplace expansion of a square matrix with two equal columns, turned into an
// integer relation among the generators det(Y_D^C). Throws
// std::invalid_argument if D avoids the pattern.
DependenceWitness dependence_witness(const Diagram& d);

// True iff the terms are distinct diagrams C <= D with nonzero coefficients,
// at least one term is present, and sum coeff * det(Y_D^C) vanishes.
bool verify_witness(const DependenceWitness& w);

// Two distinct fillings in F_D(C) with equal y-monomials and opposite signs.
std::optional<std::pair<FlaggedFilling, FlaggedFilling>> find_cancellation(const Diagram& d, const Diagram& c);

// For each weight group, the y-monomials of the maximal fillings are pairwise
// distinct. Throws std::invalid_argument if D contains the pattern.
bool check_claim2(const Diagram& d);

struct ExhaustiveMode {
  friend bool operator==(const ExhaustiveMode&, const ExhaustiveMode&) = default;
};
struct RandomMode {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  double density = 0.5;
  friend bool operator==(const RandomMode&, const RandomMode&) = default;
};
using VerifyMode = std::variant<ExhaustiveMode, RandomMode>;

struct VerifyLimits {
  int max_exhaustive_n = 4;
  // Random-mode diagrams with more generators than this are skipped.
  Integer max_generators = 2'000'000;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct VerificationReport {
  int n = 0;
  VerifyMode mode;
  std::uint64_t diagrams_checked = 0;
  std::uint64_t skipped = 0;
  std::vector<Diagram> counterexamples;
  std::chrono::milliseconds elapsed{0};

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// The k-th diagram of the exhaustive sweep: bit (i-1)*n + (j-1) of k set iff
// box (i, j) is present.
Diagram diagram_from_index(int n, std::uint64_t k);

// Random diagrams: one mt19937_64 stream seeded with seed, one draw per box in
// row-major order; a box is present iff (draw >> 11) * 2^-53 < density.
std::vector<Diagram> random_diagrams(int n, const RandomMode& mode);

// Checks attains_upper(D) <=> avoids_pattern(D) on every diagram of the mode.
// Throws std::invalid_argument for n < 1, or exhaustive n above the cap.
VerificationReport verify_theorem(int n, const VerifyMode& mode, const VerifyLimits& limits = {});

}  // namespace flagweyl
