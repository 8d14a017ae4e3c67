#pragma once

#include "recolor/instance.hpp"

namespace recolor {

struct ColorPenalty {
  std::vector<int> best_block;  // connected, possibly empty; sorted
  Weight p_star;
};

struct PenaltyReport {
  std::vector<ColorPenalty> per_color;  // indexed by color id
  Weight sum_p_star;
  Weight lower_bound;  // sum_p_star / 2
};

/// penalty_d(U) = w(U \ C^-1(d)) + w(C^-1(d) \ U): the weight that must be
/// overwritten to make U the unique d-block. U must induce a connected
/// subgraph or be empty.
Weight penalty_of_set(const Instance& inst, int color,
                      const std::vector<int>& block);

/// Sum of penalty_of_set over the color classes of a total convex
/// recoloring. Equals exactly twice the recoloring cost whenever
/// domain(color) == support(w). Errors when `recolored` is not convex
/// or not total.
Weight penalty_of_recoloring(const Instance& inst, const Coloring& recolored);

/// Minimum-penalty interval for a color on a string, by a single
/// maximum-gain scan (gain +w on d-vertices, -w otherwise). The empty
/// interval is an admitted candidate, so p_star <= w(C^-1(d)) always.
/// Deterministic: smallest start, then smallest end. O(n).
ColorPenalty best_block_string(const Instance& inst, int color);

/// Minimum-penalty connected set on a tree, by one rooted max-gain sweep.
/// Same empty-set convention and first-maximizer determinism. O(n).
ColorPenalty best_block_tree(const Instance& inst, int color);

/// Per-color optimal penalties and the aggregate bound
/// sum_d p*_d <= 2 * OPT. Computed on the support-normalized instance
/// (which has the same OPT), so the bound holds for arbitrary inputs.
PenaltyReport lower_bound(const Instance& inst);

}  // namespace recolor
