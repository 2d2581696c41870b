#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ebi/graph_core.hpp"

namespace ebi {

/// Largest exhaustive enumeration accepted by default; K(9,3) with its
/// C(27,14) = 20,058,300 labelings is the biggest stock case below it.
inline constexpr std::uint64_t kDefaultOracleBudget = 22'000'000;

inline constexpr std::uint64_t kFullRange = UINT64_MAX;

/// C(n, k), exact up to 2^64-1 and saturating at UINT64_MAX beyond.
std::uint64_t binomial(int n, int k);

/// Colexicographic rank/unrank over the k-subsets of {0..cells-1}.
/// rank(c_1 < ... < c_k) = sum_i C(c_i, i); both directions are exact while
/// C(cells, ones) fits in 64 bits, which the oracle budget guarantees.
class CombinationIndexer {
 public:
  CombinationIndexer(int cells, int ones);

  int cells() const { return cells_; }
  int ones() const { return ones_; }
  std::uint64_t total() const { return choose(cells_, ones_); }
  std::uint64_t choose(int n, int k) const;

  /// Writes the combination of `rank` into `out` (ascending, size = ones).
  void unrank(std::uint64_t rank, std::span<int> out) const;
  std::uint64_t rank(std::span<const int> combination) const;

 private:
  int cells_;
  int ones_;
  std::vector<std::uint64_t> table_;  // (cells+1) x (ones+1), saturating
};

/// Labeling of combination rank `rank`: the 1-cells are the combination,
/// row-major (cell = (row-1)*m + col-1).
Labeling unrank_labeling(const Instance& instance, std::uint64_t rank);

/// Colexicographic rank of a labeling's 1-cell set; inverse of unrank_labeling.
std::uint64_t rank_labeling(const Labeling& labeling);

struct SampleSpec {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

/// One enumeration task. Without `sample` the job is exhaustive over the
/// colex rank range [lo, hi) clamped to the total, and requires
/// C(mn, (mn+1)/2) <= budget. With `sample` it draws `count` uniform
/// labelings from the seeded generator and the range fields are ignored.
struct EnumerationJob {
  Instance instance;
  std::optional<SampleSpec> sample;
  std::uint64_t lo = 0;
  std::uint64_t hi = kFullRange;
  std::uint64_t budget = kDefaultOracleBudget;
};

/// What an enumeration saw. Only labelings with e(1) = (mn+1)/2 are visited;
/// complementing all bits swaps the label classes and preserves |v(1)-v(0)|,
/// so no index value is missed by fixing the orientation.
struct OracleReport {
  Instance instance;
  std::string mode;  ///< "exhaustive" or "sampled"
  std::uint64_t enumerated = 0;
  std::map<int, std::uint64_t> per_index_count;
  /// index -> first rank (exhaustive) or first sample ordinal that hit it.
  std::map<int, std::uint64_t> first_seen;
  /// index -> 1-cells of that first labeling (ascending, 0-based).
  std::map<int, std::vector<int>> witness_cells;

  std::set<int> observed() const;
  Labeling witness(int index) const;
};

/// Fast enumerator: walks the colex successor chain with O(1) amortized
/// degree updates per step.
OracleReport run_oracle(const EnumerationJob& job);

/// Reference enumerator: unranks every rank and runs it through counts().
/// Kept separate from run_oracle so the two can be compared bit-for-bit.
OracleReport run_oracle_naive(const EnumerationJob& job);

/// Merges reports of disjoint rank ranges of the same exhaustive job.
/// Associative and commutative; merging a partition of [0, total) reproduces
/// the single full-range report exactly.
OracleReport merge(const OracleReport& a, const OracleReport& b);

/// Report text: header "m n mode enumerated", then "index=<t> count=<c>"
/// lines in ascending t, one per observed index.
std::string to_text(const OracleReport& report);

struct VerifyResult {
  bool ok = false;
  OracleReport report;
  std::vector<int> missing;  ///< in the closed form but never observed
  std::vector<int> extra;    ///< observed but not in the closed form
  std::map<int, Labeling> extra_witnesses;
};

/// Exhaustively enumerates and compares the observed index set with the
/// closed form; ok iff they are equal as sets.
VerifyResult verify_instance(const Instance& instance,
                             std::uint64_t budget = kDefaultOracleBudget);

/// Sampled variant: ok iff the observed set is a subset of the closed form.
VerifyResult verify_sampled(const Instance& instance, SampleSpec sample);

}  // namespace ebi
