#pragma once

#include <iosfwd>
#include <vector>

#include "sholes/generate.hpp"
#include "sholes/measures.hpp"

namespace sholes {

enum class Impl { matrix, naive };

const char* to_token(Impl impl);

struct TimingRecord {
  GeneratorSpec spec;
  Measure measure = Measure::effective_size;
  Impl impl = Impl::matrix;
  int threads = 1;
  std::vector<double> seconds;  // one entry per repetition, all > 0

  double median_seconds() const;
};

struct BenchOptions {
  int reps = 5;          // at least 3
  int threads = 1;       // forwarded to the parallel matrix path
  bool verify = true;    // cross-check matrix vs naive before timing
};

/// Times every spec x measure x implementation cell: the graph is generated
/// once per spec, each cell gets one untimed warm-up run, then `reps` timed
/// runs covering the measure computation only. With `verify` the warm-up
/// doubles as a matrix-vs-naive cross-check (1e-12 absolute, undefined
/// markers must agree) and a mismatch aborts the whole run. Throws
/// InvalidSpec when reps < 3.
std::vector<TimingRecord> run_benchmark(
    const std::vector<GeneratorSpec>& specs,
    const std::vector<Measure>& measures, const BenchOptions& options = {});

/// One row per repetition: `model,n,param,seed,measure,impl,rep,seconds`.
void write_timing_csv(const std::vector<TimingRecord>& records,
                      std::ostream& out);

}  // namespace sholes
