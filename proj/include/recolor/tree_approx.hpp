#pragma once

#include <array>

#include "recolor/string_approx.hpp"

namespace recolor {

/// Which reduction applies to the current instance, checked in this order.
enum class ReduceCase {
  AlreadyCover,      // V \ support(w) is a cover; recursion bottoms out
  ViolationTriple,   // x,y,z in support, C(x)=C(z)!=C(y), y on path(x,z)
  CarrierHub,        // some vertex lies in >= 3 color carriers
  DetachedSubtree,   // deepest-rooted carrier subtree is monochromatic
  BicoloredSubtree,  // deepest-rooted carrier subtree holds two colors
};

const char* to_string(ReduceCase c);

struct CaseWitness {
  ReduceCase tag = ReduceCase::AlreadyCover;

  // ViolationTriple
  int x = -1, y = -1, z = -1;

  // CarrierHub: hub vertex plus one monochromatic pair per color, the hub
  // on each connecting path. w(hub) = 0.
  int hub = -1;
  std::array<std::pair<int, int>, 3> pairs{};
  std::array<int, 3> pair_colors{-1, -1, -1};

  // DetachedSubtree / BicoloredSubtree
  int subtree_root = -1;   // root of the hanging subtree, w = 0 for bicolored
  int subtree_color = -1;  // the color whose carrier root is deepest
  int second_color = -1;   // the other color present (bicolored only)
  int parent = -1;         // attachment point above subtree_root, -1 if none
  std::vector<int> subtree;  // vertices of the hanging subtree, sorted
};

/// The three canonical recolorings of the hanging bicolored subtree and the
/// two-vertex replacement encoding their cost differences.
struct GadgetRecord {
  int subtree_color = -1;  // colors the whole subtree in the high recoloring
  int second_color = -1;
  Weight cost_high;       // overwrite every second_color vertex
  Weight cost_medium;     // cheapest that is all-subtree_color or roots second_color
  Weight cost_min;        // unconstrained bicolored optimum
  std::vector<int> overwrite_high;    // overwritten vertex sets, in the ids
  std::vector<int> overwrite_medium;  // of the instance the witness refers to
  std::vector<int> overwrite_min;
  int gadget_root = -1;  // ids in the reduced instance
  int gadget_leaf = -1;  // weights cost_medium - cost_min / cost_high - cost_min
};

/// One round of the recursion, with everything needed to map a cover of the
/// reduced instance back and to check both sides.
struct ReductionStep {
  CaseWitness witness;
  Weight epsilon;               // local-ratio cases
  std::vector<int> designated;  // vertices whose weight was reduced
  std::vector<int> new_to_prev;  // reduced id -> previous id; -1 for the gadget leaf
  GadgetRecord gadget;          // bicolored-subtree case
  Instance before;
  Instance reduced;
};

using ReductionTrace = std::vector<ReductionStep>;

/// Classifies the instance into the first applicable case and returns a
/// witness. Requires domain(color) == support(w). Detection is O(c*n):
/// per-color support carriers, a membership/overlap scan, then the
/// deepest-carrier-root subtree.
CaseWitness classify_case(const Instance& inst);

/// Local-ratio baseline for trees: per round, two monochromatic support
/// pairs of distinct colors with intersecting carriers lose
/// eps = min of the four weights. Cover weight <= 4 * OPT.
CoverResult four_tree_approx(const Instance& inst);

struct BicoloredOpt {
  Coloring coloring;  // total over the instance
  Weight cost;
};

/// Minimum-cost convex recoloring of a (at most) two-colored tree with the
/// root color fixed to root_color. Evaluates every split edge in one
/// post-order pass plus the explicit no-split candidate; first minimizer
/// wins (no-split, then edges by child id). O(n).
BicoloredOpt bicolored_constrained_opt(const Instance& inst, int root,
                                       int root_color, int other_color);

/// The three canonical recolorings of the witness subtree and the implied
/// gadget weights. cost_min <= cost_medium <= cost_high always.
GadgetRecord compute_gadget(const Instance& inst, const CaseWitness& witness);

/// Applies the witness reduction: weight subtraction (triple/hub), subtree
/// deletion (detached), or replacement of the subtree by the two-vertex
/// gadget (bicolored). The support strictly shrinks in every case.
ReductionStep reduce_instance(const Instance& inst, const CaseWitness& witness);

/// Maps a cover of step.reduced to a cover of step.before. Local-ratio and
/// deletion rounds map ids through; the gadget round replaces the gadget
/// members with the matching canonical overwrite set: {leaf} -> high,
/// {root} -> medium, {} -> min (when both gadget vertices were in the cover
/// the root is dropped first, which is safe since subtree_color occurs
/// nowhere else). Errors when the input is not a cover of step.reduced.
Cover update_cover(const Cover& reduced_cover, const ReductionStep& step);

struct TreeApproxResult {
  Cover cover;
  Coloring coloring;  // total convex completion off the cover
  Weight cost;        // = w(cover)
  ReductionTrace trace;
};

/// The full recursion: classify, reduce, recurse, update. The returned
/// cover satisfies w(X) <= 3 * OPT; at most n reduction rounds run, each
/// reclassifying from scratch, for O(c*n^2) total.
TreeApproxResult three_tree_approx(const Instance& inst);

}  // namespace recolor
