#include "sholes/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "sholes/error.hpp"
#include "sholes/oracle.hpp"
#include "sholes/sparse.hpp"

namespace sholes {

namespace {

constexpr double kVerifyTol = 1e-12;

std::string format_g(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

MeasureReport run_node_measure(const Graph& g, Measure m, Impl impl) {
  switch (m) {
    case Measure::redundancy:
      return impl == Impl::matrix ? redundancy(g) : oracle_redundancy(g);
    case Measure::effective_size:
      return impl == Impl::matrix ? effective_size(g)
                                  : oracle_effective_size(g);
    case Measure::constraint:
      return impl == Impl::matrix ? constraint(g) : oracle_constraint(g);
    default:
      throw Error(ErrorCode::Internal, "not a per-node measure");
  }
}

void run_cell(const Graph& g, Measure m, Impl impl) {
  if (m == Measure::local_constraint) {
    if (impl == Impl::matrix)
      (void)local_constraint(g);
    else
      (void)oracle_local_constraint(g);
    return;
  }
  (void)run_node_measure(g, m, impl);
}

void verify_cell(const Graph& g, Measure m, const GeneratorSpec& spec) {
  std::string where = std::string(to_token(spec.model)) +
                      " n=" + std::to_string(spec.n) +
                      " seed=" + std::to_string(spec.seed) + ", " +
                      to_token(m);
  if (m == Measure::local_constraint) {
    LocalConstraintMatrix lc = local_constraint(g);
    LocalConstraintMatrix ref = oracle_local_constraint(g);
    const SparseMatrix& a = g.adjacency();
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j : a.row_cols(i)) {
        double diff = std::fabs(lc.l.at(i, j) - ref.l.at(i, j));
        if (!(diff <= kVerifyTol))
          throw Error(ErrorCode::Internal,
                      "matrix/naive mismatch (" + where + ") on edge " +
                          g.label(i) + "->" + g.label(j) + ": " +
                          format_g("%.17g", diff));
      }
    return;
  }
  MeasureReport got = run_node_measure(g, m, Impl::matrix);
  MeasureReport ref = run_node_measure(g, m, Impl::naive);
  for (std::size_t i = 0; i < got.values.size(); ++i) {
    const auto& a = got.values[i];
    const auto& b = ref.values[i];
    if (a.has_value() != b.has_value())
      throw Error(ErrorCode::Internal,
                  "matrix/naive mismatch (" + where + ") at node " +
                      g.label(static_cast<Index>(i)) +
                      ": undefined marker disagrees");
    if (a && !(std::fabs(*a - *b) <= kVerifyTol))
      throw Error(ErrorCode::Internal,
                  "matrix/naive mismatch (" + where + ") at node " +
                      g.label(static_cast<Index>(i)) + ": " +
                      format_g("%.17g", std::fabs(*a - *b)));
  }
}

}  // namespace

const char* to_token(Impl impl) {
  return impl == Impl::matrix ? "matrix" : "naive";
}

double TimingRecord::median_seconds() const {
  std::vector<double> s = seconds;
  std::sort(s.begin(), s.end());
  std::size_t n = s.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return s[n / 2];
  return 0.5 * (s[n / 2 - 1] + s[n / 2]);
}

std::vector<TimingRecord> run_benchmark(
    const std::vector<GeneratorSpec>& specs,
    const std::vector<Measure>& measures, const BenchOptions& options) {
  if (options.reps < 3)
    throw Error(ErrorCode::InvalidSpec, "benchmark needs reps >= 3");
  if (options.threads < 1)
    throw Error(ErrorCode::InvalidSpec, "benchmark needs threads >= 1");

  int saved_threads = num_threads();
  set_num_threads(options.threads);
  std::vector<TimingRecord> records;
  try {
    for (const GeneratorSpec& spec : specs) {
      Graph g = generate(spec);
      for (Measure m : measures) {
        for (Impl impl : {Impl::matrix, Impl::naive}) {
          if (options.verify && impl == Impl::matrix)
            verify_cell(g, m, spec);
          else
            run_cell(g, m, impl);  // plain warm-up

          TimingRecord rec;
          rec.spec = spec;
          rec.measure = m;
          rec.impl = impl;
          rec.threads = impl == Impl::matrix ? options.threads : 1;
          rec.seconds.reserve(static_cast<std::size_t>(options.reps));
          for (int rep = 0; rep < options.reps; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            run_cell(g, m, impl);
            auto t1 = std::chrono::steady_clock::now();
            double s = std::chrono::duration<double>(t1 - t0).count();
            // Floor at one tick so degenerate (empty) cells stay positive.
            rec.seconds.push_back(std::max(s, 1e-9));
          }
          records.push_back(std::move(rec));
        }
      }
    }
  } catch (...) {
    set_num_threads(saved_threads);
    throw;
  }
  set_num_threads(saved_threads);
  return records;
}

void write_timing_csv(const std::vector<TimingRecord>& records,
                      std::ostream& out) {
  out << "model,n,param,seed,measure,impl,rep,seconds\n";
  for (const TimingRecord& rec : records) {
    for (std::size_t rep = 0; rep < rec.seconds.size(); ++rep) {
      out << to_token(rec.spec.model) << ',' << rec.spec.n << ','
          << format_g("%.12g", rec.spec.param) << ',' << rec.spec.seed << ','
          << to_token(rec.measure) << ',' << to_token(rec.impl) << ','
          << rep + 1 << ',' << format_g("%.9g", rec.seconds[rep]) << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::IoError, "failed writing timing CSV");
}

}  // namespace sholes
