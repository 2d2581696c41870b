#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ebi/errors.hpp"

namespace ebi {

/// Complete bipartite graph K(m,n) with part A = {v_1..v_m} and
/// part B = {u_1..u_n}, where m >= n >= 1 are odd. Every u_i v_j is an edge,
/// so there are m*n edges and every vertex has odd degree.
struct Instance {
  int m = 0;  ///< size of part A (columns)
  int n = 0;  ///< size of part B (rows)

  Instance(int m_, int n_);

  long long edges() const { return 1LL * m * n; }
  /// Number of 1-edges in the canonical orientation: (m*n+1)/2.
  long long ones() const { return (edges() + 1) / 2; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Edge u_row v_col, 1-based in both coordinates.
struct Edge {
  int row = 0;  ///< u subscript, 1..n
  int col = 0;  ///< v subscript, 1..m

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge-friendly 0/1 edge labeling of K(m,n), stored as one bit per edge
/// in row-major order. The canonical orientation fixes e(1) = (m*n+1)/2,
/// so e(1) - e(0) = 1 for every value of this type. Immutable.
class Labeling {
 public:
  /// Builds a labeling whose 1-edges are exactly `one_edges`.
  /// Throws LabelingError on out-of-range or duplicate edges, or when the
  /// set does not have exactly (m*n+1)/2 elements.
  Labeling(const Instance& inst, std::span<const Edge> one_edges);
  Labeling(const Instance& inst, std::initializer_list<Edge> one_edges);

  const Instance& instance() const { return inst_; }
  int rows() const { return inst_.n; }
  int cols() const { return inst_.m; }

  /// Label of edge u_row v_col (1-based); true means 1-edge.
  bool bit(int row, int col) const;

  /// Row-major bit matrix, bits()[(row-1)*m + (col-1)].
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  Labeling(const Instance& inst, std::vector<std::uint8_t> bits);
  friend Labeling swap_pair(const Labeling&, Edge, Edge);
  friend Labeling labeling_from_bits(const Instance&, std::vector<std::uint8_t>);

  Instance inst_;
  std::vector<std::uint8_t> bits_;
};

/// Builds a labeling from a row-major 0/1 vector; validates cardinality.
Labeling labeling_from_bits(const Instance& inst, std::vector<std::uint8_t> bits);

/// Induced state of one vertex: incident 1-edges, incident 0-edges, and the
/// induced label (1 iff deg1 > deg0; ties cannot occur since degrees are odd).
struct VertexSummary {
  int deg1 = 0;
  int deg0 = 0;
  int label = 0;
};

/// Summaries of all m+n vertices; part_a[i] is v_{i+1}, part_b[i] is u_{i+1}.
struct VertexSummaries {
  std::vector<VertexSummary> part_a;
  std::vector<VertexSummary> part_b;
};

VertexSummaries vertex_summaries(const Labeling& labeling);

/// Edge and vertex tallies of a labeling. index = |v1 - v0| and is always
/// even because m+n is even and every vertex is labeled.
struct Counts {
  long long e0 = 0;
  long long e1 = 0;
  int v0 = 0;
  int v1 = 0;
  int index = 0;
};

Counts counts(const Labeling& labeling);

/// Returns a copy of `labeling` with the labels of `zero_edge` (currently 0)
/// and `one_edge` (currently 1) exchanged. e(0) and e(1) are preserved.
Labeling swap_pair(const Labeling& labeling, Edge zero_edge, Edge one_edge);

/// Serializes to the labeling text format:
///   line 1: "m n"; lines 2..n+1: m characters from {0,1} for row u_i;
///   trailing newline, no other whitespace.
std::string to_text(const Labeling& labeling);

/// Strict parser for the labeling text format. Throws ParseError on any
/// structural deviation and LabelingError when the bit count is off.
Labeling labeling_from_text(std::string_view text);

}  // namespace ebi
