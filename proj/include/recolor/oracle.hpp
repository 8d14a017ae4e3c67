#pragma once

#include <cstdint>

#include "recolor/tree_approx.hpp"

namespace recolor {

/// SplitMix64. Chosen because it is tiny and has bit-identical
/// implementations in every mainstream language, so a seed reproduces the
/// same instances everywhere. Bounded draws use plain modulo.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  uint64_t next_below(uint64_t bound);  // uniform-ish in [0, bound)
};

enum class Shape {
  RandomTree,  // uniform labeled tree via Pruefer-sequence decoding
  Path,
  Star,
  Caterpillar,
  HubSpider,       // paired-color leaves around a weight-0 hub
  GadgetFamily,    // guaranteed bicolored hanging subtree behind a
                   // zero-weight junction
};

const char* to_string(Shape s);
Shape shape_from_string(const std::string& name);  // "random-tree", "path", ...

struct GenParams {
  int n = 8;
  int c = 3;
  int weight_max = 8;
  Shape shape = Shape::RandomTree;
  Weight zero_weight_fraction = Weight(0);
  uint64_t seed = 0;
};

/// Reproducible instance of the requested shape. Positive-weight vertices
/// are colored, zero-weight ones are not, so domain(color) == support(w).
Instance gen_instance(const GenParams& params);

/// Exact optimum by enumeration of all 2^n vertex subsets, testing each for
/// coverness. Ties go to the lexicographically smallest member set.
/// Errors when n exceeds the cap.
CoverResult exact_opt(const Instance& inst, int cap = 16);

/// All minimum-weight covers, lexicographically sorted.
std::vector<Cover> enumerate_optima(const Instance& inst, int cap = 16);

enum class Algo { String2, String3, Tree3, Tree4 };

const char* to_string(Algo a);
Weight proven_bound(Algo a);

struct RatioSample {
  int n = 0;
  Weight cost;
  Weight opt;
  Weight ratio;  // cost/opt; 0/0 counts as 1
};

struct RatioReport {
  Algo algo = Algo::Tree3;
  GenParams params;
  int count = 0;
  std::vector<RatioSample> samples;
  Weight max_ratio;
  Weight mean_ratio;
  int violations = 0;  // must be 0; a violation throws before reporting
};

/// Runs the named algorithm and the exact oracle on `count` generated
/// instances (instance i uses seed + i; n varies up to params.n where the
/// shape allows). Throws InvariantViolation with the offending instance
/// serialized if any proven bound is exceeded.
RatioReport measure_ratio(Algo algo, const GenParams& params, int count);

}  // namespace recolor
