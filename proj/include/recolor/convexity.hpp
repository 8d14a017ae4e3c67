#pragma once

#include "recolor/instance.hpp"

namespace recolor {

/// Number of d-blocks: maximal monochromatic connected components of color d.
int count_blocks(const Instance& inst, const Coloring& col, int color);

/// Sum over used colors of (block count - 1). Zero iff convex (total case).
int violations(const Instance& inst, const Coloring& col);

/// Vertex set of the minimal subtree containing `verts`. Errors on empty
/// input. Result is sorted.
std::vector<int> carrier(const Instance& inst, const std::vector<int>& verts);

/// Block criterion: every used color induces exactly one block. Meaningful
/// for total colorings.
bool convex_by_blocks(const Instance& inst, const Coloring& col);

/// Disjointness criterion: all per-color carriers are pairwise disjoint.
/// Valid for partial and total colorings alike.
bool convex_by_disjointness(const Instance& inst, const Coloring& col);

/// Total colorings use the block criterion, partial ones disjointness.
/// The two agree on total colorings.
bool is_convex(const Instance& inst, const Coloring& col);

/// True iff restricting the instance coloring to V \ X is convex. O(n*c).
bool is_cover(const Instance& inst, const Cover& x);

/// Extends a convex partial coloring to a total convex one that agrees with
/// it. Each uncolored vertex takes the color of the nearest carrier, ties
/// broken by smallest color id. An empty coloring yields the constant
/// coloring of the smallest palette color. Errors when `col` is not convex.
Coloring complete_to_convex(const Instance& inst, const Coloring& col);

/// Total weight of domain vertices that `recolored` uncolors or recolors.
Weight recoloring_cost(const Instance& inst, const Coloring& recolored);

}  // namespace recolor
