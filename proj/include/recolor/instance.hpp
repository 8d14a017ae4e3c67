#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "recolor/rational.hpp"

namespace recolor {

/// Bad input: malformed files, broken structural invariants, violated
/// preconditions. Mapped to exit code 1 by the CLI.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant (e.g. a proven approximation bound exceeded).
/// Always a bug. Mapped to exit code 2 by the CLI.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

constexpr int kNoColor = -1;

/// Instance description before validation: external ids, an edge list, a
/// weight per vertex and a partial color map.
struct RawInstance {
  std::vector<std::string> vertex_ids;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, Weight> weights;
  std::map<std::string, std::string> colors;
  std::optional<std::string> kind;  // "string" | "tree"; unset = detect
};

/// How validation treats the relation between the coloring domain and
/// support(w) = { v : w(v) > 0 }.
///  - Keep:    accept the instance as given.
///  - Enforce: require domain(color) == support(w).
///  - Derive:  make them equal; see normalize_support_domain().
enum class DomainPolicy { Keep, Enforce, Derive };

/// A validated weighted colored tree. Vertex ids are dense 0..n-1; external
/// ids live in vertex_names. Colors are dense 0..palette_size-1 (kNoColor =
/// uncolored) with names in color_names, sorted lexicographically.
/// Immutable after construction; every operation on it is pure.
struct Instance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;
  std::vector<Weight> weight;
  std::vector<int> color;  // kNoColor = uncolored
  int palette_size = 0;
  bool is_string = false;
  std::vector<int> path_order;  // filled iff is_string
  std::vector<std::string> vertex_names;
  std::vector<std::string> color_names;

  Weight total_weight() const;
  std::vector<int> support() const;  // vertices with w > 0, ascending
  bool in_domain(int v) const { return color[v] != kNoColor; }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// A partial or total coloring, one slot per vertex.
struct Coloring {
  std::vector<int> assignment;  // kNoColor = unassigned

  bool is_total() const;
  bool operator==(const Coloring&) const = default;
};

/// A vertex set X; valid relative to an instance when restricting the
/// instance coloring to V \ X leaves a convex partial coloring.
struct Cover {
  std::vector<int> members;  // sorted, unique

  bool contains(int v) const;
  bool operator==(const Cover&) const = default;
};

Cover make_cover(std::vector<int> members);  // sorts and dedups

/// Checks a raw description and produces a normalized Instance.
/// Errors: cycles/disconnection, duplicate or self edges, negative weights,
/// unknown vertices in the weight/color maps, a "string" kind tag on a
/// non-path tree.
Instance validate_instance(const RawInstance& raw,
                           DomainPolicy policy = DomainPolicy::Keep);

/// Dense-id constructor used internally; runs the same structural checks.
/// declared_string: require path shape when true; detect when unset.
Instance build_instance(int n, std::vector<std::pair<int, int>> edges,
                        std::vector<Weight> weight, std::vector<int> color,
                        std::vector<std::string> vertex_names,
                        std::vector<std::string> color_names,
                        std::optional<bool> declared_string = std::nullopt);

/// Returns the instance with domain(color) == support(w): zero-weight
/// vertices are uncolored and uncolored vertices get weight 0. Neither
/// change affects any recoloring cost, so the optimization problem is
/// unchanged.
Instance normalize_support_domain(const Instance& inst);

/// Same structure with the weight vector replaced.
Instance with_weights(const Instance& inst, std::vector<Weight> weight);

/// The instance's own partial coloring.
Coloring instance_coloring(const Instance& inst);

/// The instance coloring restricted to V \ X.
Coloring coloring_without(const Instance& inst, const Cover& x);

/// Sum of weights over a vertex set.
Weight weight_of(const Instance& inst, const std::vector<int>& verts);

}  // namespace recolor
