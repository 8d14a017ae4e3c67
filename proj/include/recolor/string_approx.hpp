#pragma once

#include <optional>

#include "recolor/instance.hpp"

namespace recolor {

struct StringApproxResult {
  Coloring coloring;  // total, convex
  Cover overwritten;  // the overwritten domain vertices
  Weight cost;        // = w(overwritten)
};

/// One left-to-right scan over the per-color best blocks. The output is a
/// total convex coloring with cost <= sum_d p*_d <= 2 * OPT. Ties (several
/// colors covering a vertex) go to the smallest color id. If no vertex is
/// covered at all, returns the constant coloring that retains the most
/// weight. O(c*n).
StringApproxResult two_approx_string(const Instance& inst);

struct ViolationTriple {
  int x, y, z;  // C(x) = C(z) != C(y), y between x and z
};

/// A violation witness among colored vertices of `support`, or nullopt iff
/// V \ support is a cover. Scans left to right; the witness z is the
/// leftmost possible. O(n + c).
std::optional<ViolationTriple> find_string_violation(
    const Instance& inst, const std::vector<int>& support);

struct CoverResult {
  Cover cover;
  Weight cost;  // w(cover) under the instance weights
};

/// Local-ratio baseline for strings: repeatedly subtract
/// eps = min{w(x), w(y), w(z)} from a violation triple until the remaining
/// support is a cover. Returns a cover of weight <= 3 * OPT.
CoverResult three_string_approx(const Instance& inst);

}  // namespace recolor
