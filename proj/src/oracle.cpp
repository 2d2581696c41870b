#include "ebi/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "ebi/formula.hpp"

namespace ebi {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? kSat : s;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(acc);
}

CombinationIndexer::CombinationIndexer(int cells, int ones) : cells_(cells), ones_(ones) {
  if (cells < 0 || ones < 0 || ones > cells) {
    throw Error("indexer: need 0 <= ones <= cells");
  }
  const std::size_t rows = static_cast<std::size_t>(cells) + 1;
  const std::size_t cols = static_cast<std::size_t>(ones) + 1;
  if (rows * cols > 8'000'000) {
    throw Error("indexer: combination table too large for exact ranking");
  }
  table_.assign(rows * cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    table_[r * cols] = 1;
    for (std::size_t c = 1; c <= std::min<std::size_t>(r, cols - 1); ++c) {
      table_[r * cols + c] =
          sat_add(table_[(r - 1) * cols + c - 1], table_[(r - 1) * cols + c]);
    }
  }
}

std::uint64_t CombinationIndexer::choose(int n, int k) const {
  if (k < 0 || k > n || n < 0) return 0;
  if (n > cells_ || k > ones_) throw Error("indexer: choose out of table range");
  return table_[static_cast<std::size_t>(n) * (ones_ + 1) + k];
}

void CombinationIndexer::unrank(std::uint64_t rank, std::span<int> out) const {
  if (rank >= total()) {
    throw Error("unrank: rank " + std::to_string(rank) + " out of range [0, " +
                std::to_string(total()) + ")");
  }
  if (static_cast<int>(out.size()) != ones_) throw Error("unrank: bad output size");
  int hi = cells_ - 1;
  for (int i = ones_; i >= 1; --i) {
    // Largest c with C(c, i) <= rank; combinations below position i use the
    // remaining rank.
    int lo = i - 1;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (choose(mid, i) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[i - 1] = lo;
    rank -= choose(lo, i);
    hi = lo - 1;
  }
}

std::uint64_t CombinationIndexer::rank(std::span<const int> combination) const {
  if (static_cast<int>(combination.size()) != ones_) throw Error("rank: bad input size");
  std::uint64_t r = 0;
  for (int i = 1; i <= ones_; ++i) {
    const int c = combination[i - 1];
    if (c < i - 1 || c >= cells_ || (i > 1 && combination[i - 2] >= c)) {
      throw Error("rank: combination must be ascending within 0..cells-1");
    }
    r += choose(c, i);
  }
  return r;
}

Labeling unrank_labeling(const Instance& instance, std::uint64_t rank) {
  const int cells = static_cast<int>(instance.edges());
  const int ones = static_cast<int>(instance.ones());
  CombinationIndexer ix(cells, ones);
  std::vector<int> comb(ones);
  ix.unrank(rank, comb);
  std::vector<std::uint8_t> bits(cells, 0);
  for (int c : comb) bits[c] = 1;
  return labeling_from_bits(instance, std::move(bits));
}

std::uint64_t rank_labeling(const Labeling& labeling) {
  const Instance& inst = labeling.instance();
  CombinationIndexer ix(static_cast<int>(inst.edges()), static_cast<int>(inst.ones()));
  std::vector<int> comb;
  comb.reserve(static_cast<std::size_t>(inst.ones()));
  const auto& bits = labeling.bits();
  for (int c = 0; c < static_cast<int>(bits.size()); ++c) {
    if (bits[c]) comb.push_back(c);
  }
  return ix.rank(comb);
}

std::set<int> OracleReport::observed() const {
  std::set<int> s;
  for (const auto& [index, count] : per_index_count) s.insert(index);
  return s;
}

Labeling OracleReport::witness(int index) const {
  const auto it = witness_cells.find(index);
  if (it == witness_cells.end()) {
    throw Error("report: no witness recorded for index " + std::to_string(index));
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(instance.edges()), 0);
  for (int c : it->second) bits[c] = 1;
  return labeling_from_bits(instance, std::move(bits));
}

namespace {

// Incremental vertex-label bookkeeping for the fast enumerator. A row is a
// 1-vertex iff deg1 >= (m+1)/2, a column iff deg1 >= (n+1)/2; v1 tracks the
// number of 1-vertices and index = |2*v1 - (m+n)|.
struct DegreeState {
  int m, n;
  int thr_row, thr_col;
  std::vector<int> deg_row, deg_col;
  int v1 = 0;

  explicit DegreeState(const Instance& inst)
      : m(inst.m),
        n(inst.n),
        thr_row((inst.m + 1) / 2),
        thr_col((inst.n + 1) / 2),
        deg_row(inst.n, 0),
        deg_col(inst.m, 0) {}

  void reset(std::span<const int> comb) {
    std::fill(deg_row.begin(), deg_row.end(), 0);
    std::fill(deg_col.begin(), deg_col.end(), 0);
    for (int cell : comb) {
      ++deg_row[cell / m];
      ++deg_col[cell % m];
    }
    v1 = 0;
    for (int d : deg_row) v1 += d >= thr_row;
    for (int d : deg_col) v1 += d >= thr_col;
  }

  void move_bit(int from, int to) {
    if (deg_row[from / m]-- == thr_row) --v1;
    if (deg_col[from % m]-- == thr_col) --v1;
    if (++deg_row[to / m] == thr_row) ++v1;
    if (++deg_col[to % m] == thr_col) ++v1;
  }

  int index() const {
    const int d = 2 * v1 - (m + n);
    return d >= 0 ? d : -d;
  }
};

struct RangeBounds {
  std::uint64_t lo, hi, total;
};

RangeBounds exhaustive_bounds(const EnumerationJob& job) {
  const std::uint64_t total =
      binomial(static_cast<int>(job.instance.edges()), static_cast<int>(job.instance.ones()));
  if (total > job.budget) {
    throw BudgetExceeded("oracle: C(" + std::to_string(job.instance.edges()) + "," +
                         std::to_string(job.instance.ones()) + ") = " +
                         (total == kSat ? std::string(">= 2^64") : std::to_string(total)) +
                         " exceeds budget " + std::to_string(job.budget) +
                         "; use sampled mode");
  }
  const std::uint64_t hi = std::min(job.hi, total);
  if (job.lo > hi) {
    throw Error("oracle: rank range [" + std::to_string(job.lo) + ", " +
                std::to_string(job.hi) + ") invalid for total " + std::to_string(total));
  }
  return {job.lo, hi, total};
}

void tally(OracleReport& report, std::uint64_t ordinal, int index,
           std::vector<std::uint64_t>& counts_by_index, std::span<const int> comb) {
  if (counts_by_index[index]++ == 0) {
    report.first_seen[index] = ordinal;
    std::vector<int> cells(comb.begin(), comb.end());
    std::sort(cells.begin(), cells.end());
    report.witness_cells[index] = std::move(cells);
  }
}

void finalize(OracleReport& report, const std::vector<std::uint64_t>& counts_by_index) {
  for (int i = 0; i < static_cast<int>(counts_by_index.size()); ++i) {
    if (counts_by_index[i]) report.per_index_count[i] = counts_by_index[i];
  }
}

OracleReport run_sampled(const EnumerationJob& job) {
  const Instance& inst = job.instance;
  const SampleSpec spec = *job.sample;
  OracleReport report{inst, "sampled", spec.count, {}, {}, {}};
  const int cells = static_cast<int>(inst.edges());
  const int ones = static_cast<int>(inst.ones());
  std::vector<std::uint64_t> counts_by_index(inst.m + inst.n + 1, 0);
  DegreeState state(inst);
  // Partial Fisher-Yates with a plain modulo draw: deterministic for a given
  // seed, which the reproducibility contract requires.
  std::mt19937_64 rng(spec.seed);
  std::vector<int> pool(cells);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> comb(ones);
  for (std::uint64_t ordinal = 0; ordinal < spec.count; ++ordinal) {
    for (int j = 0; j < ones; ++j) {
      const int swap_with = j + static_cast<int>(rng() % static_cast<std::uint64_t>(cells - j));
      std::swap(pool[j], pool[swap_with]);
      comb[j] = pool[j];
    }
    state.reset(comb);
    tally(report, ordinal, state.index(), counts_by_index, comb);
  }
  finalize(report, counts_by_index);
  return report;
}

}  // namespace

OracleReport run_oracle(const EnumerationJob& job) {
  if (job.sample) return run_sampled(job);
  const Instance& inst = job.instance;
  const auto [lo, hi, total] = exhaustive_bounds(job);
  OracleReport report{inst, "exhaustive", hi - lo, {}, {}, {}};
  if (lo == hi) return report;

  const int cells = static_cast<int>(inst.edges());
  const int ones = static_cast<int>(inst.ones());
  CombinationIndexer ix(cells, ones);
  std::vector<int> comb(ones);
  ix.unrank(lo, comb);
  DegreeState state(inst);
  state.reset(comb);
  std::vector<std::uint64_t> counts_by_index(inst.m + inst.n + 1, 0);

  for (std::uint64_t r = lo; r < hi; ++r) {
    tally(report, r, state.index(), counts_by_index, comb);
    if (r + 1 == hi) break;
    // Colexicographic successor. The elements before position t form the run
    // comb[t]-t .. comb[t]-1, so the reset moves at most t+1 bits; amortized
    // over the whole range that is O(1) per step.
    int t = 0;
    while (t + 1 < ones && comb[t] + 1 == comb[t + 1]) ++t;
    for (int p = 0; p < t; ++p) {
      if (comb[p] != p) {
        state.move_bit(comb[p], p);
        comb[p] = p;
      }
    }
    state.move_bit(comb[t], comb[t] + 1);
    ++comb[t];
  }
  finalize(report, counts_by_index);
  return report;
}

OracleReport run_oracle_naive(const EnumerationJob& job) {
  if (job.sample) return run_sampled(job);
  const Instance& inst = job.instance;
  const auto [lo, hi, total] = exhaustive_bounds(job);
  OracleReport report{inst, "exhaustive", hi - lo, {}, {}, {}};
  if (lo == hi) return report;

  std::vector<std::uint64_t> counts_by_index(inst.m + inst.n + 1, 0);
  std::vector<int> comb(static_cast<std::size_t>(inst.ones()));
  for (std::uint64_t r = lo; r < hi; ++r) {
    const Labeling labeling = unrank_labeling(inst, r);
    const Counts c = counts(labeling);
    int w = 0;
    const auto& bits = labeling.bits();
    for (int cell = 0; cell < static_cast<int>(bits.size()); ++cell) {
      if (bits[cell]) comb[w++] = cell;
    }
    tally(report, r, c.index, counts_by_index, comb);
  }
  finalize(report, counts_by_index);
  return report;
}

OracleReport merge(const OracleReport& a, const OracleReport& b) {
  if (!(a.instance == b.instance) || a.mode != b.mode) {
    throw Error("merge: reports come from different jobs");
  }
  if (a.mode != "exhaustive") throw Error("merge: only exhaustive reports merge");
  OracleReport out = a;
  out.enumerated += b.enumerated;
  for (const auto& [index, count] : b.per_index_count) out.per_index_count[index] += count;
  for (const auto& [index, rank] : b.first_seen) {
    const auto it = out.first_seen.find(index);
    if (it == out.first_seen.end() || rank < it->second) {
      out.first_seen[index] = rank;
      out.witness_cells[index] = b.witness_cells.at(index);
    }
  }
  return out;
}

std::string to_text(const OracleReport& report) {
  std::string out = std::to_string(report.instance.m) + " " +
                    std::to_string(report.instance.n) + " " + report.mode + " " +
                    std::to_string(report.enumerated) + "\n";
  for (const auto& [index, count] : report.per_index_count) {
    out += "index=" + std::to_string(index) + " count=" + std::to_string(count) + "\n";
  }
  return out;
}

namespace {

VerifyResult compare_with_formula(const Instance& instance, OracleReport report,
                                  bool subset_suffices) {
  const std::set<int> observed = report.observed();
  std::set<int> expected;
  for (int v : ebi_set(instance).values) expected.insert(v);
  std::vector<int> missing;
  std::vector<int> extra;
  for (int v : expected) {
    if (!observed.count(v)) missing.push_back(v);
  }
  for (int v : observed) {
    if (!expected.count(v)) extra.push_back(v);
  }
  std::map<int, Labeling> extra_witnesses;
  for (int v : extra) extra_witnesses.emplace(v, report.witness(v));
  const bool ok = extra.empty() && (subset_suffices || missing.empty());
  return VerifyResult{ok, std::move(report), std::move(missing), std::move(extra),
                      std::move(extra_witnesses)};
}

}  // namespace

VerifyResult verify_instance(const Instance& instance, std::uint64_t budget) {
  EnumerationJob job{instance, std::nullopt, 0, kFullRange, budget};
  return compare_with_formula(instance, run_oracle(job), /*subset_suffices=*/false);
}

VerifyResult verify_sampled(const Instance& instance, SampleSpec sample) {
  EnumerationJob job{instance, sample, 0, kFullRange, kDefaultOracleBudget};
  return compare_with_formula(instance, run_oracle(job), /*subset_suffices=*/true);
}

}  // namespace ebi
