#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ebi/graph_core.hpp"

namespace ebi {

enum class Part { A, B };

char part_letter(Part part);

/// One swap: x is a 0-vertex and y a 1-vertex in the same part, z a common
/// neighbor in the opposite part with xz a 0-edge and yz a 1-edge.
/// Swapping the two labels keeps z's vertex label and never raises the index.
struct SwapChoice {
  Part part = Part::A;  ///< part containing x and y
  int x = 0;            ///< subscript of the 0-vertex in `part`
  int y = 0;            ///< subscript of the 1-vertex in `part`
  int z = 0;            ///< subscript of the common neighbor, opposite part
  Edge zero_edge;       ///< x-z, currently labeled 0
  Edge one_edge;        ///< y-z, currently labeled 1
};

/// Full record of a descent: the start labeling, every swap in order, and one
/// snapshot per index value visited (start index down to the target).
struct DescentTrace {
  Labeling start;
  std::vector<SwapChoice> steps;
  std::map<int, Labeling, std::greater<int>> checkpoints;
};

/// Picks the swap pair deterministically: part A is scanned before part B;
/// within a part, x is the 0-vertex of maximum deg0 and y the 1-vertex of
/// minimum deg1 (smallest subscript on ties), and z is the smallest-subscript
/// common neighbor with xz a 0-edge and yz a 1-edge.
///
/// Only pairs with deg0(x) > deg1(y) are returned; such a swap can never flip
/// x before y, so the index never increases. When no part offers such a pair,
/// throws AssertionBreach (NoMixedPart when no part is mixed at all).
/// Requires v(1) > v(0) and n >= 3.
SwapChoice find_swap(const Labeling& labeling);

/// Runs one phase: swaps on a persistent (x, y) pair, re-selecting z each
/// time, until the index has dropped by exactly 2 (the moment y flips).
/// Requires v(1) > v(0) and n >= 3.
std::pair<Labeling, std::vector<SwapChoice>> descend_once(const Labeling& labeling);

/// Iterates descend_once until the index reaches `target`, recording a
/// checkpoint at every even value on the way. Throws TargetUnreachable when
/// target is odd, negative, or above the start index; throws AssertionBreach
/// if some phase has no pair with deg0(x) > deg1(y) left.
DescentTrace descend_to(const Labeling& labeling, int target);

/// Serializes a trace as labeling blocks introduced by "=== index <t> ==="
/// lines, start block first, indices descending.
std::string to_text(const DescentTrace& trace);

}  // namespace ebi
