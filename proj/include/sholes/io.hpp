#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sholes/graph.hpp"
#include "sholes/measures.hpp"

namespace sholes {

/// Text edge list: one `src dst [weight]` per line. A '\0' delimiter means
/// any run of whitespace. Lines whose first non-blank character is the
/// comment prefix are skipped. A weight column anywhere makes the whole
/// graph weighted; lines without one default to weight 1.
struct EdgeListFormat {
  char delimiter = '\0';
  char comment = '#';
};

Graph read_edge_list(const std::string& path, bool directed,
                     const EdgeListFormat& format = {});

/// Matrix Market coordinate reader. `symmetric` becomes an undirected graph,
/// `general` a directed one; `pattern` entries are binary. Array format and
/// complex fields are rejected. Node labels default to "1".."n".
Graph read_matrix_market(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::string& path);

enum class OutputFormat { csv, json };
std::optional<OutputFormat> output_format_from_token(std::string_view token);

struct ReportRow {
  std::string label;                  // node label, or "src->dst" per edge
  std::optional<double> value;        // nullopt renders as "undefined"/null
};

/// Serializable result: measure identity, graph metadata and label-sorted
/// rows. Renders to CSV (`node,measure,value`) and JSON with identical rows
/// in identical order.
struct ResultDocument {
  std::string measure;
  std::optional<std::string> variant;
  Index n = 0;
  std::int64_t edges = 0;
  bool directed = false;
  bool weighted = false;
  bool negative_weights = false;
  std::vector<ReportRow> rows;
  std::string tool_version;
};

ResultDocument make_result(const Graph& g, const MeasureReport& report);

/// Per-edge document for dyadic constraints: one row per binarized edge, or
/// per ordered node pair when `full` is set (absent entries read as 0).
ResultDocument make_result(const Graph& g, const LocalConstraintMatrix& lc,
                           bool full = false);

void write_report(const ResultDocument& doc, OutputFormat format,
                  std::ostream& out);
void write_report(const ResultDocument& doc, OutputFormat format,
                  const std::string& path);

/// Fixed 12-decimal rendering used for CSV values (locale-independent).
std::string format_value(double v);

}  // namespace sholes
