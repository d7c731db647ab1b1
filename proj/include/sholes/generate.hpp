#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sholes/graph.hpp"

namespace sholes {

enum class GraphModel {
  barabasi_albert,
  erdos_renyi,
};

const char* to_token(GraphModel m);
std::optional<GraphModel> model_from_token(std::string_view token);

/// `param` is m (positive integer) for Barabasi-Albert and p (probability)
/// for Erdos-Renyi.
struct GeneratorSpec {
  GraphModel model = GraphModel::erdos_renyi;
  Index n = 0;
  double param = 0.0;
  std::uint64_t seed = 0;
};

/// Seeded random graph, deterministic for a fixed spec. BA grows from a star
/// on m+1 nodes, each later node attaching m edges by degree-weighted draws
/// without replacement (edge count is exactly m*(n-m)). ER samples each
/// unordered pair independently with probability p. Nodes are labelled
/// "1".."n". Throws InvalidSpec on out-of-range fields.
Graph generate(const GeneratorSpec& spec);

}  // namespace sholes
