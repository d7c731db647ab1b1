#include "sholes/generate.hpp"

#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "sholes/error.hpp"

namespace sholes {

namespace {

// Unbiased draw from [0, size) by rejection on the top of the 64-bit range.
std::size_t draw_index(std::mt19937_64& rng, std::size_t size) {
  std::uint64_t span = size;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % span);
}

// Uniform double in [0, 1) with 53 random bits.
double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::string> numeric_labels(Index n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return labels;
}

Graph finish(std::vector<Triplet>& triplets, Index n) {
  SparseMatrix adj =
      SparseMatrix::from_triplets(n, n, std::move(triplets));
  return graph_from_adjacency(std::move(adj), numeric_labels(n), false,
                              false);
}

void push_edge(std::vector<Triplet>& triplets, Index i, Index j) {
  triplets.push_back({i, j, 1.0});
  triplets.push_back({j, i, 1.0});
}

Graph generate_er(Index n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Triplet> triplets;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (draw_unit(rng) < p) push_edge(triplets, i, j);
  return finish(triplets, n);
}

Graph generate_ba(Index n, Index m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Triplet> triplets;

  // Star seed: node 0 tied to 1..m. `slots` holds one entry per unit of
  // degree, so a uniform draw from it is a degree-weighted node draw.
  std::vector<Index> slots;
  slots.reserve(2 * static_cast<std::size_t>(m) *
                static_cast<std::size_t>(n - m));
  for (Index j = 1; j <= m; ++j) {
    push_edge(triplets, 0, j);
    slots.push_back(0);
    slots.push_back(j);
  }

  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  std::vector<Index> chosen;
  chosen.reserve(static_cast<std::size_t>(m));
  for (Index v = m + 1; v < n; ++v) {
    chosen.clear();
    while (static_cast<Index>(chosen.size()) < m) {
      Index u = slots[draw_index(rng, slots.size())];
      if (taken[static_cast<std::size_t>(u)]) continue;
      taken[static_cast<std::size_t>(u)] = 1;
      chosen.push_back(u);
    }
    for (Index u : chosen) {
      taken[static_cast<std::size_t>(u)] = 0;
      push_edge(triplets, v, u);
      slots.push_back(v);
      slots.push_back(u);
    }
  }
  return finish(triplets, n);
}

}  // namespace

const char* to_token(GraphModel m) {
  switch (m) {
    case GraphModel::barabasi_albert:
      return "barabasi-albert";
    case GraphModel::erdos_renyi:
      return "erdos-renyi";
  }
  return "";
}

std::optional<GraphModel> model_from_token(std::string_view token) {
  if (token == "barabasi-albert" || token == "ba")
    return GraphModel::barabasi_albert;
  if (token == "erdos-renyi" || token == "er") return GraphModel::erdos_renyi;
  return std::nullopt;
}

Graph generate(const GeneratorSpec& spec) {
  if (spec.n < 1)
    throw Error(ErrorCode::InvalidSpec, "node count must be at least 1");
  switch (spec.model) {
    case GraphModel::barabasi_albert: {
      double mf = spec.param;
      if (!(mf >= 1.0) || mf != std::floor(mf) || mf > 1e9)
        throw Error(ErrorCode::InvalidSpec,
                    "barabasi-albert needs integer m >= 1");
      Index m = static_cast<Index>(mf);
      if (spec.n <= m)
        throw Error(ErrorCode::InvalidSpec,
                    "barabasi-albert needs n > m");
      return generate_ba(spec.n, m, spec.seed);
    }
    case GraphModel::erdos_renyi: {
      if (!(spec.param >= 0.0 && spec.param <= 1.0))
        throw Error(ErrorCode::InvalidSpec,
                    "erdos-renyi needs p in [0, 1]");
      return generate_er(spec.n, spec.param, spec.seed);
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown model");
}

}  // namespace sholes
