#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sholes/sparse.hpp"

namespace sholes {

struct Edge {
  std::string src;
  std::string dst;
  double weight = 1.0;
};

/// Immutable graph: node labels mapped to dense indices in first-appearance
/// order, adjacency stored as CSR (row i = out-edges of i). Invariants held
/// by construction: no self-loops, exact symmetry when undirected, all
/// weights exactly 1 when unweighted.
class Graph {
 public:
  Index n() const { return static_cast<Index>(labels_.size()); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const {
    return labels_[static_cast<std::size_t>(i)];
  }
  std::optional<Index> index_of(std::string_view label) const;

  const SparseMatrix& adjacency() const { return adj_; }

  /// Undirected edges are counted once.
  std::int64_t edge_count() const {
    return directed_ ? adj_.nnz() : adj_.nnz() / 2;
  }

 private:
  Graph(std::vector<std::string> labels, SparseMatrix adj, bool directed,
        bool weighted);

  friend Graph graph_from_adjacency(SparseMatrix adj,
                                    std::vector<std::string> labels,
                                    bool directed, bool weighted);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  SparseMatrix adj_;
  bool directed_;
  bool weighted_;
};

/// Builds a graph from labelled edges. Labels are interned in first
/// appearance order (src before dst within an edge). Undirected edges are
/// stored in both directions. Throws SelfLoop, DuplicateEdge (an undirected
/// edge listed in both directions counts), NonFiniteWeight, and
/// InvalidArgument when weighted == false but a weight differs from 1.
Graph build_graph(std::span<const Edge> edges, bool directed, bool weighted);

/// Same, with a pre-seeded label set so isolated nodes can exist. Edge
/// labels outside the seed set are appended in first-appearance order.
Graph build_graph(std::span<const Edge> edges, bool directed, bool weighted,
                  std::vector<std::string> labels);

/// Wraps an adjacency matrix directly (generators, binarize). Validates all
/// Graph invariants.
Graph graph_from_adjacency(SparseMatrix adj, std::vector<std::string> labels,
                           bool directed, bool weighted);

/// Weight w becomes 1 wherever w != 0. Directedness is kept; the result is
/// unweighted. Idempotent.
Graph binarize(const Graph& g);

struct DegreeVector {
  std::vector<double> d;
};

/// Degrees of a binary undirected graph (throws NotBinaryUndirected
/// otherwise); also the diagonal of the squared adjacency.
DegreeVector degree_vector(const Graph& g);

/// Binarize, then symmetrize by max(a_ij, a_ji): the explicit coercion the
/// CLI applies before the binary-undirected measures.
Graph coerce_binary_undirected(const Graph& g);

}  // namespace sholes
