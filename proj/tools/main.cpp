#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sholes/bench.hpp"
#include "sholes/error.hpp"
#include "sholes/generate.hpp"
#include "sholes/io.hpp"
#include "sholes/measures.hpp"
#include "sholes/oracle.hpp"
#include "sholes/sparse.hpp"
#include "sholes/version.hpp"

namespace {

using namespace sholes;

void warn(const std::string& message) {
  std::cerr << "sholes: warning: " << message << "\n";
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct InputOptions {
  std::string input;
  std::string format;  // "", "edgelist" or "mtx"
  bool directed = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.input, "Input graph file")->required();
  cmd->add_option("--format", in.format,
                  "Input format: edgelist or mtx (default: by extension)")
      ->check(CLI::IsMember({"edgelist", "mtx"}));
  cmd->add_flag("--directed", in.directed,
                "Treat edge-list input as directed");
}

Graph load_graph(const InputOptions& in) {
  std::string fmt = in.format;
  if (fmt.empty()) fmt = ends_with(in.input, ".mtx") ? "mtx" : "edgelist";
  if (fmt == "mtx") {
    if (in.directed)
      warn("--directed is ignored for Matrix Market input; the symmetry "
           "field decides");
    return read_matrix_market(in.input);
  }
  return read_edge_list(in.input, in.directed);
}

void emit_report(const ResultDocument& doc, const std::string& output,
                 OutputFormat format) {
  if (output.empty())
    write_report(doc, format, std::cout);
  else
    write_report(doc, format, output);
}

struct ComputeConfig {
  InputOptions in;
  std::string measure;
  std::string variant = "paper";
  bool coerce_binary = false;
  bool full_local_constraint = false;
  std::string output;
  std::string output_format = "csv";
  int threads = 1;
};

int cmd_compute(const ComputeConfig& cfg) {
  std::optional<Measure> measure = measure_from_token(cfg.measure);
  if (!measure)
    throw Error(ErrorCode::InvalidArgument,
                "unknown measure '" + cfg.measure + "'");
  std::optional<Variant> variant = variant_from_token(cfg.variant);
  if (!variant)
    throw Error(ErrorCode::InvalidArgument,
                "unknown variant '" + cfg.variant + "'");
  OutputFormat ofmt = *output_format_from_token(cfg.output_format);

  set_num_threads(cfg.threads);
  Graph g = load_graph(cfg.in);

  bool ego_measure = *measure == Measure::redundancy ||
                     *measure == Measure::effective_size;
  if (cfg.coerce_binary) {
    if (ego_measure) {
      warn("coercing input to a binary undirected graph "
           "(binarize, then symmetrize by max)");
      g = coerce_binary_undirected(g);
    } else {
      warn("--coerce-binary only affects redundancy and effective-size; "
           "ignored");
    }
  }
  if (cfg.full_local_constraint && *measure != Measure::local_constraint)
    warn("--full-local-constraint only affects local-constraint; ignored");

  ResultDocument doc;
  if (*measure == Measure::local_constraint) {
    LocalConstraintMatrix lc = local_constraint(g, *variant);
    doc = make_result(g, lc, cfg.full_local_constraint);
  } else if (*measure == Measure::constraint) {
    doc = make_result(g, constraint(g, *variant));
  } else {
    doc = make_result(g, *measure == Measure::redundancy ? redundancy(g)
                                                         : effective_size(g));
  }
  if (doc.negative_weights)
    warn("input has negative weights; normalized mutual weights have no "
         "established interpretation there");
  emit_report(doc, cfg.output, ofmt);
  return 0;
}

struct ValidateConfig {
  InputOptions in;
  int threads = 1;
};

std::string format_disc(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", d);
  return buf;
}

double report_discrepancy(const MeasureReport& a, const MeasureReport& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i].has_value() != b.values[i].has_value())
      return std::numeric_limits<double>::infinity();
    if (a.values[i])
      worst = std::max(worst, std::fabs(*a.values[i] - *b.values[i]));
  }
  return worst;
}

int cmd_validate(const ValidateConfig& cfg) {
  set_num_threads(cfg.threads);
  Graph g = load_graph(cfg.in);
  constexpr double kTol = 1e-12;
  bool ok = true;

  auto line = [&](const std::string& name, double disc) {
    std::cout << name << ": max discrepancy " << format_disc(disc) << "\n";
    if (!(disc <= kTol)) ok = false;
  };

  if (!g.weighted() && !g.directed()) {
    line("redundancy", report_discrepancy(redundancy(g),
                                          oracle_redundancy(g)));
    line("effective-size", report_discrepancy(effective_size(g),
                                              oracle_effective_size(g)));
  } else {
    std::cout << "redundancy: skipped (needs a binary undirected graph)\n";
    std::cout << "effective-size: skipped (needs a binary undirected "
                 "graph)\n";
  }

  for (Variant v : {Variant::paper, Variant::neighbors_of_j}) {
    std::string tag = std::string("[") + to_token(v) + "]";
    LocalConstraintMatrix lc = local_constraint(g, v);
    LocalConstraintMatrix ref = oracle_local_constraint(g, v);
    double worst = 0.0;
    const SparseMatrix& a = g.adjacency();
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j : a.row_cols(i))
        worst = std::max(worst, std::fabs(lc.l.at(i, j) - ref.l.at(i, j)));
    line("local-constraint" + tag, worst);
    line("constraint" + tag,
         report_discrepancy(constraint(g, v), oracle_constraint(g, v)));
  }

  std::cout << (ok ? "ok" : "FAIL") << " (tolerance " << format_disc(kTol)
            << ")\n";
  return ok ? 0 : 1;
}

struct GenerateConfig {
  std::string model;
  Index n = 0;
  double param = 0.0;
  std::uint64_t seed = 42;
  std::string output;
};

int cmd_generate(const GenerateConfig& cfg) {
  std::optional<GraphModel> model = model_from_token(cfg.model);
  if (!model)
    throw Error(ErrorCode::InvalidArgument,
                "unknown model '" + cfg.model + "'");
  Graph g = generate({*model, cfg.n, cfg.param, cfg.seed});

  Index isolated = 0;
  for (Index i = 0; i < g.n(); ++i)
    if (g.adjacency().row_nnz(i) == 0) ++isolated;
  if (isolated > 0)
    warn(std::to_string(isolated) +
         " isolated node(s) cannot be represented in edge-list output");

  if (cfg.output.empty()) {
    write_edge_list(g, std::cout);
  } else {
    write_edge_list(g, cfg.output);
  }
  return 0;
}

struct BenchConfig {
  std::string model = "both";
  std::vector<Index> sizes = {1000, 2000, 4000, 8000};
  double ba_m = 5;
  double er_p = 0.01;
  std::uint64_t seed = 42;
  std::vector<std::string> measures = {"effective-size", "constraint"};
  int reps = 5;
  int threads = 1;
  std::string output;
};

int cmd_bench(const BenchConfig& cfg) {
  std::vector<GraphModel> models;
  if (cfg.model == "both") {
    models = {GraphModel::barabasi_albert, GraphModel::erdos_renyi};
  } else {
    std::optional<GraphModel> model = model_from_token(cfg.model);
    if (!model)
      throw Error(ErrorCode::InvalidArgument,
                  "unknown model '" + cfg.model + "'");
    models = {*model};
  }

  std::vector<Measure> measures;
  for (const std::string& token : cfg.measures) {
    std::optional<Measure> m = measure_from_token(token);
    if (!m)
      throw Error(ErrorCode::InvalidArgument,
                  "unknown measure '" + token + "'");
    measures.push_back(*m);
  }

  std::vector<GeneratorSpec> specs;
  for (GraphModel model : models)
    for (Index n : cfg.sizes)
      specs.push_back({model, n,
                       model == GraphModel::barabasi_albert ? cfg.ba_m
                                                            : cfg.er_p,
                       cfg.seed});

  BenchOptions options;
  options.reps = cfg.reps;
  options.threads = cfg.threads;
  std::vector<TimingRecord> records = run_benchmark(specs, measures, options);

  if (cfg.output.empty()) {
    write_timing_csv(records, std::cout);
  } else {
    std::ofstream out(cfg.output);
    if (!out)
      throw Error(ErrorCode::IoError,
                  "cannot open '" + cfg.output + "' for writing");
    write_timing_csv(records, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural-hole measures on sparse graphs"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ComputeConfig compute_cfg;
  CLI::App* compute =
      app.add_subcommand("compute", "Compute a measure and write a report");
  add_input_options(compute, compute_cfg.in);
  compute
      ->add_option("--measure", compute_cfg.measure,
                   "redundancy, effective-size, local-constraint or "
                   "constraint")
      ->required();
  compute->add_option("--variant", compute_cfg.variant,
                      "Intermediary set for constraints: paper or "
                      "neighbors-of-j");
  compute->add_flag("--coerce-binary", compute_cfg.coerce_binary,
                    "Binarize and symmetrize before redundancy or "
                    "effective-size");
  compute->add_flag("--full-local-constraint",
                    compute_cfg.full_local_constraint,
                    "Report local constraint for every ordered node pair");
  compute->add_option("--output", compute_cfg.output,
                      "Output path (default: stdout)");
  compute
      ->add_option("--output-format", compute_cfg.output_format,
                   "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  compute->add_option("--threads", compute_cfg.threads,
                      "Worker threads for the matrix path");

  ValidateConfig validate_cfg;
  CLI::App* validate = app.add_subcommand(
      "validate", "Cross-check matrix results against the naive "
                  "definition-based implementation");
  add_input_options(validate, validate_cfg.in);
  validate->add_option("--threads", validate_cfg.threads,
                       "Worker threads for the matrix path");

  GenerateConfig generate_cfg;
  CLI::App* generate =
      app.add_subcommand("generate", "Write a seeded random graph");
  generate
      ->add_option("--model", generate_cfg.model,
                   "barabasi-albert or erdos-renyi")
      ->required();
  generate->add_option("--n", generate_cfg.n, "Node count")->required();
  generate
      ->add_option("--param", generate_cfg.param,
                   "m (barabasi-albert) or p (erdos-renyi)")
      ->required();
  generate->add_option("--seed", generate_cfg.seed, "RNG seed");
  generate->add_option("--output", generate_cfg.output,
                       "Output path (default: stdout)");

  BenchConfig bench_cfg;
  CLI::App* bench = app.add_subcommand(
      "bench", "Time matrix vs naive implementations on random graphs");
  bench->add_option("--model", bench_cfg.model,
                    "barabasi-albert, erdos-renyi or both");
  bench->add_option("--sizes", bench_cfg.sizes, "Node counts to sweep")
      ->delimiter(',');
  bench->add_option("--ba-m", bench_cfg.ba_m, "Attachment count m");
  bench->add_option("--er-p", bench_cfg.er_p, "Edge probability p");
  bench->add_option("--seed", bench_cfg.seed, "RNG seed");
  bench->add_option("--measures", bench_cfg.measures, "Measures to time")
      ->delimiter(',');
  bench->add_option("--reps", bench_cfg.reps, "Timed repetitions (>= 3)");
  bench->add_option("--threads", bench_cfg.threads,
                    "Worker threads for the matrix path");
  bench->add_option("--output", bench_cfg.output,
                    "Timing CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "sholes: error[invalid-argument]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_cfg);
    if (validate->parsed()) return cmd_validate(validate_cfg);
    if (generate->parsed()) return cmd_generate(generate_cfg);
    if (bench->parsed()) return cmd_bench(bench_cfg);
  } catch (const Error& e) {
    std::cerr << "sholes: error[" << e.code_name() << "]: " << e.what()
              << "\n";
    return is_domain_error(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "sholes: error[internal]: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
