#include "sholes/graph.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "sholes/error.hpp"

namespace sholes {
namespace {

void validate_adjacency(const SparseMatrix& adj,
                        const std::vector<std::string>& labels, bool directed,
                        bool weighted) {
  const Index n = static_cast<Index>(labels.size());
  if (adj.rows() != n || adj.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "adjacency shape does not match label count");
  }
  {
    std::unordered_set<std::string_view> seen;
    for (const std::string& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorCode::InvalidArgument, "duplicate node label: " + l);
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (const double v : adj.row_vals(i)) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::NonFiniteWeight,
                    "non-finite weight in row of node " +
                        labels[static_cast<std::size_t>(i)]);
      }
      if (!weighted && v != 1.0) {
        throw Error(ErrorCode::InvalidArgument,
                    "unweighted graph requires unit weights");
      }
    }
    if (adj.at(i, i) != 0.0) {
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at node " + labels[static_cast<std::size_t>(i)]);
    }
  }
  if (!directed && !(adj == transpose(adj))) {
    throw Error(ErrorCode::InvalidArgument,
                "undirected graph requires a symmetric adjacency");
  }
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, SparseMatrix adj, bool directed,
             bool weighted)
    : labels_(std::move(labels)),
      adj_(std::move(adj)),
      directed_(directed),
      weighted_(weighted) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    index_.emplace(labels_[i], static_cast<Index>(i));
  }
}

std::optional<Index> Graph::index_of(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph graph_from_adjacency(SparseMatrix adj, std::vector<std::string> labels,
                           bool directed, bool weighted) {
  validate_adjacency(adj, labels, directed, weighted);
  return Graph(std::move(labels), std::move(adj), directed, weighted);
}

Graph build_graph(std::span<const Edge> edges, bool directed, bool weighted) {
  return build_graph(edges, directed, weighted, {});
}

Graph build_graph(std::span<const Edge> edges, bool directed, bool weighted,
                  std::vector<std::string> labels) {
  std::unordered_map<std::string, Index> index;
  index.reserve(labels.size() + 2 * edges.size());
  for (const std::string& l : labels) {
    if (!index.emplace(l, static_cast<Index>(index.size())).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate node label: " + l);
    }
  }
  const auto intern = [&](const std::string& l) -> Index {
    const auto [it, inserted] =
        index.emplace(l, static_cast<Index>(index.size()));
    if (inserted) labels.push_back(l);
    return it->second;
  };

  std::vector<Triplet> triplets;
  triplets.reserve(directed ? edges.size() : 2 * edges.size());
  std::unordered_set<std::uint64_t> seen_pairs;
  seen_pairs.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!std::isfinite(e.weight)) {
      throw Error(ErrorCode::NonFiniteWeight,
                  "non-finite weight on edge " + e.src + " " + e.dst);
    }
    if (e.src == e.dst) {
      throw Error(ErrorCode::SelfLoop, "self-loop at node " + e.src);
    }
    if (!weighted && e.weight != 1.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "unweighted graph requires unit weights (edge " + e.src +
                      " " + e.dst + ")");
    }
    const Index i = intern(e.src);
    const Index j = intern(e.dst);
    Index lo = i, hi = j;
    if (!directed && lo > hi) std::swap(lo, hi);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lo)) << 32) |
        static_cast<std::uint32_t>(hi);
    if (!seen_pairs.insert(key).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge " + e.src + " " + e.dst);
    }
    triplets.push_back({i, j, e.weight});
    if (!directed) triplets.push_back({j, i, e.weight});
  }

  const Index n = static_cast<Index>(labels.size());
  SparseMatrix adj = SparseMatrix::from_triplets(n, n, std::move(triplets));
  return graph_from_adjacency(std::move(adj), std::move(labels), directed,
                              weighted);
}

Graph binarize(const Graph& g) {
  const SparseMatrix& a = g.adjacency();
  std::vector<double> ones(a.values().size(), 1.0);
  SparseMatrix adj = SparseMatrix::from_parts(a.rows(), a.cols(), a.row_ptr(),
                                              a.col_idx(), std::move(ones));
  return graph_from_adjacency(std::move(adj), g.labels(), g.directed(), false);
}

DegreeVector degree_vector(const Graph& g) {
  if (g.weighted() || g.directed()) {
    throw Error(ErrorCode::NotBinaryUndirected,
                "degree vector requires a binary undirected graph");
  }
  return DegreeVector{row_sums(g.adjacency())};
}

Graph coerce_binary_undirected(const Graph& g) {
  const Graph b = binarize(g);
  if (!b.directed()) return b;
  SparseMatrix sym = add(b.adjacency(), transpose(b.adjacency()));
  std::vector<double> ones(sym.values().size(), 1.0);
  SparseMatrix adj = SparseMatrix::from_parts(
      sym.rows(), sym.cols(), sym.row_ptr(), sym.col_idx(), std::move(ones));
  return graph_from_adjacency(std::move(adj), g.labels(), false, false);
}

}  // namespace sholes
