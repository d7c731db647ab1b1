#pragma once

#include <utility>
#include <vector>

#include "sholes/graph.hpp"
#include "sholes/measures.hpp"

namespace sholes {

/// Adjacency lists with weights, the oracle's only view of the graph.
struct NeighborLists {
  std::vector<std::vector<std::pair<Index, double>>> out;
  std::vector<std::vector<std::pair<Index, double>>> in;
};

NeighborLists neighbor_lists(const Graph& g);

// Loop-based implementations of the definitional formulas. They share no
// code with the matrix path beyond Graph itself, do no sorting or marking,
// and serve both as the ground-truth oracle and as the naive baseline that
// the benchmark times. Semantics (undefined markers, variants, binarized
// masks on weighted input) match the matrix path exactly.

MeasureReport oracle_redundancy(const Graph& g);
MeasureReport oracle_effective_size(const Graph& g);
LocalConstraintMatrix oracle_local_constraint(const Graph& g,
                                              Variant variant = Variant::paper);
MeasureReport oracle_constraint(const Graph& g,
                                Variant variant = Variant::paper);

}  // namespace sholes
