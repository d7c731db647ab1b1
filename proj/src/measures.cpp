#include "sholes/measures.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "sholes/error.hpp"
#include "sholes/kernels.hpp"

namespace sholes {
namespace {

struct EgoCore {
  std::vector<double> degree;
  std::vector<double> redundancy_num;  // row sums of A^2 o A, i.e. 2*t_i
};

EgoCore ego_core(const Graph& g) {
  if (g.weighted() || g.directed()) {
    throw Error(ErrorCode::NotBinaryUndirected,
                std::string(g.weighted() ? "weighted" : "directed") +
                    " input; this measure is defined for binary undirected "
                    "graphs (coerce explicitly if intended)");
  }
  const SparseMatrix& a = g.adjacency();
  const SparseMatrix common = spmm(a, a);
  const SparseMatrix masked = hadamard(common, a);
  return {row_sums(a), row_sums(masked)};
}

// Nodes with at least one incident edge in either direction.
std::vector<char> incident_flags(const Graph& g) {
  const SparseMatrix& a = g.adjacency();
  std::vector<char> incident(static_cast<std::size_t>(g.n()), 0);
  for (Index i = 0; i < g.n(); ++i) {
    if (a.row_nnz(i) > 0) incident[static_cast<std::size_t>(i)] = 1;
  }
  for (const Index j : a.col_idx()) incident[static_cast<std::size_t>(j)] = 1;
  return incident;
}

bool has_negative_weight(const Graph& g) {
  for (const double v : g.adjacency().values()) {
    if (v < 0.0) return true;
  }
  return false;
}

SparseMatrix binarized_mask(const Graph& g) {
  if (!g.weighted()) return g.adjacency();
  const SparseMatrix& a = g.adjacency();
  std::vector<double> ones(a.values().size(), 1.0);
  return SparseMatrix::from_parts(a.rows(), a.cols(), a.row_ptr(), a.col_idx(),
                                  std::move(ones));
}

// Per-node constraint without materializing lhs*rhs: the product's support is
// roughly every two-step neighbourhood, yet only entries on the edge mask
// survive the final sum. Runs the same Gustavson row accumulation as spmm and
// reads it back at the masked columns alone.
std::vector<double> masked_constraint_sums(const SparseMatrix& lhs,
                                           const SparseMatrix& rhs,
                                           const SparseMatrix& p,
                                           const SparseMatrix& mask) {
  const kernels::Ops& ops = kernels::active();
  const Index rows = mask.rows();
  std::vector<double> sums(static_cast<std::size_t>(rows), 0.0);

  auto run_rows = [&](Index lo, Index hi) {
    std::vector<char> seen(static_cast<std::size_t>(rhs.cols()), 0);
    std::vector<double> acc(static_cast<std::size_t>(rhs.cols()), 0.0);
    std::vector<Index> touched;
    for (Index i = lo; i < hi; ++i) {
      touched.clear();
      const auto l_cols = lhs.row_cols(i);
      const auto l_vals = lhs.row_vals(i);
      for (std::size_t t = 0; t < l_cols.size(); ++t) {
        const Index k = l_cols[t];
        const auto r_cols = rhs.row_cols(k);
        for (const Index j : r_cols) {
          if (!seen[j]) {
            seen[j] = 1;
            touched.push_back(j);
          }
        }
        ops.scatter_axpy(acc.data(), r_cols.data(), rhs.row_vals(k).data(),
                         r_cols.size(), l_vals[t]);
      }

      const auto m_cols = mask.row_cols(i);
      const auto p_cols = p.row_cols(i);
      const auto p_vals = p.row_vals(i);
      double sum = 0.0;
      std::size_t s = 0;
      for (const Index j : m_cols) {
        if (j == i) continue;
        while (s < p_cols.size() && p_cols[s] < j) ++s;
        const double direct =
            (s < p_cols.size() && p_cols[s] == j) ? p_vals[s] : 0.0;
        const double l = direct + acc[j];
        sum += l * l;
      }
      sums[static_cast<std::size_t>(i)] = sum;

      for (const Index j : touched) {
        seen[j] = 0;
        acc[j] = 0.0;
      }
    }
  };

  const int threads = std::min<int>(num_threads(), std::max<Index>(rows, 1));
  if (threads <= 1 || rows < 64) {
    run_rows(0, rows);
    return sums;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  const Index chunk = (rows + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const Index lo = std::min<Index>(rows, w * chunk);
    const Index hi = std::min<Index>(rows, lo + chunk);
    workers.emplace_back([&run_rows, lo, hi] { run_rows(lo, hi); });
  }
  for (std::thread& t : workers) t.join();
  return sums;
}

}  // namespace

const char* to_token(Measure m) {
  switch (m) {
    case Measure::redundancy: return "redundancy";
    case Measure::effective_size: return "effective-size";
    case Measure::local_constraint: return "local-constraint";
    case Measure::constraint: return "constraint";
  }
  return "unknown";
}

const char* to_token(Variant v) {
  switch (v) {
    case Variant::paper: return "paper";
    case Variant::neighbors_of_j: return "neighbors-of-j";
  }
  return "unknown";
}

std::optional<Measure> measure_from_token(std::string_view token) {
  if (token == "redundancy") return Measure::redundancy;
  if (token == "effective-size") return Measure::effective_size;
  if (token == "local-constraint") return Measure::local_constraint;
  if (token == "constraint") return Measure::constraint;
  return std::nullopt;
}

std::optional<Variant> variant_from_token(std::string_view token) {
  if (token == "paper") return Variant::paper;
  if (token == "neighbors-of-j") return Variant::neighbors_of_j;
  return std::nullopt;
}

bool is_per_edge(Measure m) { return m == Measure::local_constraint; }

MeasureReport redundancy(const Graph& g) {
  const EgoCore core = ego_core(g);
  MeasureReport report{Measure::redundancy, std::nullopt, {}, false};
  report.values.reserve(core.degree.size());
  for (std::size_t i = 0; i < core.degree.size(); ++i) {
    if (core.degree[i] == 0.0) {
      report.values.emplace_back(std::nullopt);
    } else {
      report.values.emplace_back(core.redundancy_num[i] / core.degree[i]);
    }
  }
  return report;
}

MeasureReport effective_size(const Graph& g) {
  const EgoCore core = ego_core(g);
  MeasureReport report{Measure::effective_size, std::nullopt, {}, false};
  report.values.reserve(core.degree.size());
  for (std::size_t i = 0; i < core.degree.size(); ++i) {
    if (core.degree[i] == 0.0) {
      report.values.emplace_back(std::nullopt);
    } else {
      report.values.emplace_back(core.degree[i] -
                                 core.redundancy_num[i] / core.degree[i]);
    }
  }
  return report;
}

MutualWeightMatrix mutual_weights(const Graph& g) {
  const SparseMatrix& a = g.adjacency();
  const SparseMatrix sym = add(a, transpose(a));
  const std::vector<double> x = row_sums(sym);
  const std::vector<char> incident = incident_flags(g);

  std::vector<double> y(x.size(), 0.0);
  std::vector<char> isolated(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!incident[i]) {
      isolated[i] = 1;
    } else if (x[i] == 0.0) {
      throw Error(ErrorCode::ZeroDenominator,
                  "node " + g.label(static_cast<Index>(i)) +
                      " has edges but zero total symmetrized weight");
    } else {
      y[i] = 1.0 / x[i];
    }
  }
  return {diag_scale(y, sym), std::move(isolated), has_negative_weight(g)};
}

LocalConstraintMatrix local_constraint(const Graph& g, Variant variant) {
  MutualWeightMatrix mw = mutual_weights(g);
  const SparseMatrix mask = binarized_mask(g);
  const SparseMatrix inner =
      variant == Variant::paper
          ? spmm(hadamard(mask, mw.p), mw.p)
          : spmm(mw.p, hadamard(mw.p, mask));
  const SparseMatrix direct_plus_indirect = drop_diagonal(add(mw.p, inner));
  return {hadamard(direct_plus_indirect, direct_plus_indirect), variant,
          mw.negative_weights};
}

MeasureReport constraint(const Graph& g, Variant variant) {
  MutualWeightMatrix mw = mutual_weights(g);
  const SparseMatrix mask = binarized_mask(g);
  const std::vector<double> sums =
      variant == Variant::paper
          ? masked_constraint_sums(hadamard(mask, mw.p), mw.p, mw.p, mask)
          : masked_constraint_sums(mw.p, hadamard(mw.p, mask), mw.p, mask);
  const std::vector<char> incident = incident_flags(g);

  MeasureReport report{Measure::constraint, variant, {}, mw.negative_weights};
  report.values.reserve(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (!incident[i]) {
      report.values.emplace_back(std::nullopt);
    } else {
      report.values.emplace_back(sums[i]);
    }
  }
  return report;
}

}  // namespace sholes
