#include "sholes/oracle.hpp"

#include <string>

#include "sholes/error.hpp"

namespace sholes {
namespace {

void require_binary_undirected(const Graph& g) {
  if (g.weighted() || g.directed()) {
    throw Error(ErrorCode::NotBinaryUndirected,
                std::string(g.weighted() ? "weighted" : "directed") +
                    " input; this measure is defined for binary undirected "
                    "graphs (coerce explicitly if intended)");
  }
}

// Everything below is deliberately a plain list scan.

double weight_to(const NeighborLists& nl, Index i, Index j) {
  for (const auto& [k, w] : nl.out[static_cast<std::size_t>(i)]) {
    if (k == j) return w;
  }
  return 0.0;
}

bool linked(const NeighborLists& nl, Index i, Index j) {
  return weight_to(nl, i, j) != 0.0;
}

// Total symmetrized weight per node, the denominators of the normalized
// mutual weights.
std::vector<double> total_mutual_weight(const Graph& g,
                                        const NeighborLists& nl) {
  std::vector<double> x(static_cast<std::size_t>(g.n()), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (const auto& [k, w] : nl.out[i]) x[i] += w;
    for (const auto& [k, w] : nl.in[i]) x[i] += w;
    if (x[i] == 0.0 && !(nl.out[i].empty() && nl.in[i].empty())) {
      throw Error(ErrorCode::ZeroDenominator,
                  "node " + g.label(static_cast<Index>(i)) +
                      " has edges but zero total symmetrized weight");
    }
  }
  return x;
}

double mutual_p(const NeighborLists& nl, const std::vector<double>& x, Index i,
                Index j) {
  const double xi = x[static_cast<std::size_t>(i)];
  if (xi == 0.0) return 0.0;
  return (weight_to(nl, i, j) + weight_to(nl, j, i)) / xi;
}

double dyadic_constraint(const NeighborLists& nl, const std::vector<double>& x,
                         Index i, Index j, Variant variant) {
  double indirect = 0.0;
  if (variant == Variant::paper) {
    for (const auto& [k, w] : nl.out[static_cast<std::size_t>(i)]) {
      if (k == j) continue;
      indirect += mutual_p(nl, x, i, k) * mutual_p(nl, x, k, j);
    }
  } else {
    for (const auto& [k, w] : nl.in[static_cast<std::size_t>(j)]) {
      indirect += mutual_p(nl, x, i, k) * mutual_p(nl, x, k, j);
    }
  }
  const double total = mutual_p(nl, x, i, j) + indirect;
  return total * total;
}

bool has_negative(const NeighborLists& nl) {
  for (const auto& list : nl.out) {
    for (const auto& [k, w] : list) {
      if (w < 0.0) return true;
    }
  }
  return false;
}

}  // namespace

NeighborLists neighbor_lists(const Graph& g) {
  const SparseMatrix& a = g.adjacency();
  NeighborLists nl;
  nl.out.resize(static_cast<std::size_t>(g.n()));
  nl.in.resize(static_cast<std::size_t>(g.n()));
  for (Index i = 0; i < g.n(); ++i) {
    const auto cols = a.row_cols(i);
    const auto vals = a.row_vals(i);
    for (std::size_t t = 0; t < cols.size(); ++t) {
      nl.out[static_cast<std::size_t>(i)].emplace_back(cols[t], vals[t]);
      nl.in[static_cast<std::size_t>(cols[t])].emplace_back(i, vals[t]);
    }
  }
  return nl;
}

MeasureReport oracle_redundancy(const Graph& g) {
  require_binary_undirected(g);
  const NeighborLists nl = neighbor_lists(g);
  MeasureReport report{Measure::redundancy, std::nullopt, {}, false};
  report.values.reserve(static_cast<std::size_t>(g.n()));
  for (Index i = 0; i < g.n(); ++i) {
    const auto& neigh = nl.out[static_cast<std::size_t>(i)];
    if (neigh.empty()) {
      report.values.emplace_back(std::nullopt);
      continue;
    }
    // t_i: ties among the ego's neighbors, each unordered pair once.
    double ties = 0.0;
    for (std::size_t u = 0; u < neigh.size(); ++u) {
      for (std::size_t v = u + 1; v < neigh.size(); ++v) {
        if (linked(nl, neigh[u].first, neigh[v].first)) ties += 1.0;
      }
    }
    report.values.emplace_back(2.0 * ties /
                               static_cast<double>(neigh.size()));
  }
  return report;
}

MeasureReport oracle_effective_size(const Graph& g) {
  MeasureReport report = oracle_redundancy(g);
  report.measure = Measure::effective_size;
  const NeighborLists nl = neighbor_lists(g);
  for (Index i = 0; i < g.n(); ++i) {
    auto& v = report.values[static_cast<std::size_t>(i)];
    if (v.has_value()) {
      v = static_cast<double>(nl.out[static_cast<std::size_t>(i)].size()) - *v;
    }
  }
  return report;
}

LocalConstraintMatrix oracle_local_constraint(const Graph& g,
                                              Variant variant) {
  const NeighborLists nl = neighbor_lists(g);
  const std::vector<double> x = total_mutual_weight(g, nl);
  std::vector<Triplet> entries;
  for (Index i = 0; i < g.n(); ++i) {
    for (const auto& [j, w] : nl.out[static_cast<std::size_t>(i)]) {
      entries.push_back({i, j, dyadic_constraint(nl, x, i, j, variant)});
    }
  }
  return {SparseMatrix::from_triplets(g.n(), g.n(), std::move(entries)),
          variant, has_negative(nl)};
}

MeasureReport oracle_constraint(const Graph& g, Variant variant) {
  const NeighborLists nl = neighbor_lists(g);
  const std::vector<double> x = total_mutual_weight(g, nl);
  MeasureReport report{Measure::constraint, variant, {}, has_negative(nl)};
  report.values.reserve(static_cast<std::size_t>(g.n()));
  for (Index i = 0; i < g.n(); ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (nl.out[ui].empty() && nl.in[ui].empty()) {
      report.values.emplace_back(std::nullopt);
      continue;
    }
    double c = 0.0;
    for (const auto& [j, w] : nl.out[ui]) {
      c += dyadic_constraint(nl, x, i, j, variant);
    }
    report.values.emplace_back(c);
  }
  return report;
}

}  // namespace sholes
