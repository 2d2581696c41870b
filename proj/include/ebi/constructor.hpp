#pragma once

#include "ebi/graph_core.hpp"

namespace ebi {

/// Column receiving the pos-th 1-edge of row u_i (i >= 2, n >= 3):
///   s(i, pos) = (((i-2)(m+1)/2 + pos - 1) mod (m-k)) + k + 1.
/// Walks the columns k+1..m consecutively with wraparound, so the 1-edges
/// spread as evenly as possible over those columns.
int s_index(const Instance& instance, int k, int row, int pos);

/// Column receiving the pos-th 1-edge of row u_1 (n >= 3); continues the
/// wraparound immediately after the last row-n assignment:
///   s(1, pos) = ((s(n,(m+1)/2) - k + pos - 1) mod (m-k)) + k + 1.
int s1_index(const Instance& instance, int k, int pos);

/// Builds the canonical labeling attaining the maximum index.
/// n = 1: edges u_1 v_i are 0 for i <= (m-1)/2 and 1 for i >= (m+1)/2.
/// n >= 3: rows 2..n get (m+1)/2 one-edges via s_index, then row 1 gets the
/// remaining (m-n+2)/2 via s1_index; everything else is 0.
/// Deterministic: repeated calls yield bit-identical labelings.
Labeling construct_max(const Instance& instance);

}  // namespace ebi
