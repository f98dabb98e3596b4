#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rees/core/errors.hpp"
#include "rees/core/power_cache.hpp"
#include "rees/core/rational.hpp"

namespace rees::dependence {

class NotSubmoduleError : public InputError {
 public:
  using InputError::InputError;
};

class RankMismatchError : public InputError {
 public:
  using InputError::InputError;
};

struct CheckedPair {
  core::TermModule sub;  // N
  core::TermModule sup;  // M
  long d_nm = 0;         // max(d_N, d_M)
};

// Same ambient and level 1, N inside M generator by generator, and
// rank N = rank M = rank F.
CheckedPair validate_pair(const core::TermModule& n, const core::TermModule& m);

// Least n0 <= n_max with M^(n0+1) = N * M^n0.
std::optional<int> direct_reduction_search(const CheckedPair& pair, int n_max,
                                           core::PowerCache& cache);

// M^(n+1) = N * M^n for every n0 <= n <= n_max.
bool certificate_stable(const CheckedPair& pair, int n0, int n_max, core::PowerCache& cache);

enum class Verdict { Reduction, NotReduction, Undetermined };
std::string to_string(Verdict verdict);

struct CriterionEvidence {
  std::string id;           // "3-epsilon", "3-diagonal-A", "5-diagonal-S", "6-mixed", "4-truncation"
  std::string description;
  std::vector<Rational> sub_values;
  std::vector<Rational> sup_values;
  bool usable = false;      // both sides determined
  std::optional<bool> match;
  bool decisive = false;    // an exact mismatch proves non-reduction
  bool stand_in = false;
  std::string note;
};

struct DependenceOptions {
  std::optional<long> c;  // defaults to d_{N,M} + 1
  int n_max = 12;
  int min_run = 4;
};

struct DependenceVerdict {
  Verdict verdict = Verdict::Undetermined;
  std::optional<int> certificate;
  std::optional<bool> certificate_stable;
  long c = 0;
  long d_nm = 0;
  int n_max = 0;
  std::vector<CriterionEvidence> criteria;
  bool consistent = true;  // every usable criterion has the same match value
  // Labeled heuristic: t_n(M) - t_n(N) grows like n^(d+e-1) over the ladder.
  std::optional<bool> epsilon_gap_growth;
  std::vector<std::string> diagnostics;
};

DependenceVerdict check_dependence(const core::TermModule& n, const core::TermModule& m,
                                   core::PowerCache& cache, const DependenceOptions& options = {});

}  // namespace rees::dependence
