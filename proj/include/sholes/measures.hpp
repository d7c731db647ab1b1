#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sholes/graph.hpp"
#include "sholes/sparse.hpp"

namespace sholes {

enum class Measure {
  redundancy,
  effective_size,
  local_constraint,
  constraint,
};

/// Which intermediary set the inner sum of a dyadic constraint ranges over:
/// `paper` masks on the ego's neighbors (the (A o P) P form), `neighbors_of_j`
/// masks on the alter's neighbors (the P (P o A) form). The two coincide on
/// undirected graphs and can differ on directed ones.
enum class Variant {
  paper,
  neighbors_of_j,
};

const char* to_token(Measure m);
const char* to_token(Variant v);
std::optional<Measure> measure_from_token(std::string_view token);
std::optional<Variant> variant_from_token(std::string_view token);
bool is_per_edge(Measure m);

/// Per-node results in internal node order; nullopt marks a node for which
/// the measure is undefined (isolated nodes).
struct MeasureReport {
  Measure measure;
  std::optional<Variant> variant;
  std::vector<std::optional<double>> values;
  // Set when the input carried negative weights: the row-normalization has
  // no established semantics there, so values are reported but flagged.
  bool negative_weights = false;
};

/// Row-normalized symmetrized weights: row i of p holds
/// (a_ij + a_ji) / x_i with x_i the total symmetrized weight at i. Rows of
/// isolated nodes are empty and flagged.
struct MutualWeightMatrix {
  SparseMatrix p;
  std::vector<char> isolated;
  bool negative_weights = false;
};

/// Dyadic constraints. `l` holds every pair with a direct tie or a shared
/// intermediary (the support the matrix recurrence produces); the diagonal
/// is dropped. Reports and the constraint sum only consume entries on
/// actual edges.
struct LocalConstraintMatrix {
  SparseMatrix l;
  Variant variant;
  bool negative_weights = false;
};

/// Effective size of each node of a binary undirected graph: degree minus
/// redundancy. Undefined for isolated nodes. Throws NotBinaryUndirected on
/// weighted or directed input (callers coerce explicitly).
MeasureReport effective_size(const Graph& g);

/// Mean number of ties from a neighbor to the other neighbors, computed as
/// the row sums of (A^2 o A) divided by the degree.
MeasureReport redundancy(const Graph& g);

/// Throws ZeroDenominator when a non-isolated node has zero total
/// symmetrized weight (possible only with negative weights).
MutualWeightMatrix mutual_weights(const Graph& g);

LocalConstraintMatrix local_constraint(const Graph& g,
                                       Variant variant = Variant::paper);

/// Per-node sum of dyadic constraints over actual (binarized) out-edges.
/// Undefined for isolated nodes; 0 for nodes with incident but no out-edges.
MeasureReport constraint(const Graph& g, Variant variant = Variant::paper);

}  // namespace sholes
