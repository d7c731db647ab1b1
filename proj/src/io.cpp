#include "sholes/io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "sholes/error.hpp"
#include "sholes/version.hpp"

namespace sholes {

namespace {

std::string location(const std::string& path, std::size_t line) {
  return path + ":" + std::to_string(line);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string> out;
  if (delimiter == '\0') {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i > start) out.emplace_back(line.substr(start, i - start));
    }
  } else {
    std::size_t start = 0;
    while (true) {
      std::size_t pos = line.find(delimiter, start);
      std::string_view field = line.substr(
          start, pos == std::string_view::npos ? pos : pos - start);
      out.emplace_back(trim(field));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  }
  return out;
}

double parse_weight(const std::string& token, const std::string& path,
                    std::size_t line) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0')
    throw Error(ErrorCode::ParseError, location(path, line) +
                                           ": malformed weight '" + token +
                                           "'");
  if (!std::isfinite(v))
    throw Error(ErrorCode::NonFiniteWeight,
                location(path, line) + ": non-finite weight '" + token + "'");
  return v;
}

long parse_int(const std::string& token, const std::string& path,
               std::size_t line, const char* what) {
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(token.c_str(), &end, 10);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE)
    throw Error(ErrorCode::ParseError, location(path, line) + ": malformed " +
                                           what + " '" + token + "'");
  return v;
}

std::string pair_key(const std::string& a, const std::string& b) {
  return a + '\x1f' + b;
}

void check_new_edge(std::unordered_set<std::string>& seen,
                    const std::string& src, const std::string& dst,
                    bool directed, const std::string& path,
                    std::size_t line) {
  if (src == dst)
    throw Error(ErrorCode::SelfLoop,
                location(path, line) + ": self-loop on '" + src + "'");
  bool fresh;
  if (directed) {
    fresh = seen.insert(pair_key(src, dst)).second;
  } else {
    fresh = seen.insert(pair_key(std::min(src, dst), std::max(src, dst)))
                .second;
  }
  if (!fresh)
    throw Error(ErrorCode::DuplicateEdge, location(path, line) +
                                              ": duplicate edge '" + src +
                                              "' -> '" + dst + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  return in;
}

std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

}  // namespace

Graph read_edge_list(const std::string& path, bool directed,
                     const EdgeListFormat& format) {
  std::ifstream in = open_input(path);

  struct Row {
    std::vector<std::string> fields;
    std::size_t line;
  };
  std::vector<Row> rows;
  bool weighted = false;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view body = trim(raw);
    if (body.empty() || body.front() == format.comment) continue;
    std::vector<std::string> fields = split_fields(body, format.delimiter);
    if (fields.size() < 2 || fields.size() > 3)
      throw Error(ErrorCode::ParseError,
                  location(path, line) + ": expected 2 or 3 fields, got " +
                      std::to_string(fields.size()));
    for (const std::string& f : fields)
      if (f.empty())
        throw Error(ErrorCode::ParseError,
                    location(path, line) + ": empty field");
    if (fields.size() == 3) weighted = true;
    rows.push_back({std::move(fields), line});
  }

  std::vector<Edge> edges;
  edges.reserve(rows.size());
  std::unordered_set<std::string> seen;
  for (const Row& r : rows) {
    Edge e;
    e.src = r.fields[0];
    e.dst = r.fields[1];
    e.weight = r.fields.size() == 3 ? parse_weight(r.fields[2], path, r.line)
                                    : 1.0;
    check_new_edge(seen, e.src, e.dst, directed, path, r.line);
    edges.push_back(std::move(e));
  }
  return build_graph(edges, directed, weighted);
}

Graph read_matrix_market(const std::string& path) {
  std::ifstream in = open_input(path);

  std::string raw;
  std::size_t line = 0;
  if (!std::getline(in, raw))
    throw Error(ErrorCode::ParseError, path + ": empty file");
  ++line;
  if (!raw.empty() && raw.back() == '\r') raw.pop_back();

  std::vector<std::string> banner = split_fields(raw, '\0');
  if (banner.size() != 5 ||
      ascii_lower(banner[0]) != "%%matrixmarket")
    throw Error(ErrorCode::ParseError,
                location(path, line) + ": malformed MatrixMarket banner");
  std::string object = ascii_lower(banner[1]);
  std::string layout = ascii_lower(banner[2]);
  std::string field = ascii_lower(banner[3]);
  std::string symmetry = ascii_lower(banner[4]);

  if (object != "matrix")
    throw Error(ErrorCode::UnsupportedFormat,
                path + ": unsupported object '" + object + "'");
  if (layout != "coordinate")
    throw Error(ErrorCode::UnsupportedFormat,
                path + ": unsupported format '" + layout + "'");
  if (field != "real" && field != "integer" && field != "pattern")
    throw Error(ErrorCode::UnsupportedFormat,
                path + ": unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw Error(ErrorCode::UnsupportedFormat,
                path + ": unsupported symmetry '" + symmetry + "'");

  bool directed = symmetry == "general";
  bool weighted = field != "pattern";
  std::size_t expect_fields = weighted ? 3u : 2u;

  long n = 0;
  long declared_nnz = 0;
  bool have_sizes = false;
  std::vector<Edge> edges;
  std::unordered_set<std::string> seen;

  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view body = trim(raw);
    if (body.empty() || body.front() == '%') continue;
    std::vector<std::string> fields = split_fields(body, '\0');
    if (!have_sizes) {
      if (fields.size() != 3)
        throw Error(ErrorCode::ParseError,
                    location(path, line) + ": malformed size line");
      long rows_decl = parse_int(fields[0], path, line, "row count");
      long cols_decl = parse_int(fields[1], path, line, "column count");
      declared_nnz = parse_int(fields[2], path, line, "entry count");
      if (rows_decl != cols_decl)
        throw Error(ErrorCode::DimensionMismatch,
                    path + ": adjacency must be square, got " +
                        std::to_string(rows_decl) + "x" +
                        std::to_string(cols_decl));
      if (rows_decl < 0 || declared_nnz < 0)
        throw Error(ErrorCode::ParseError,
                    location(path, line) + ": negative size");
      n = rows_decl;
      have_sizes = true;
      continue;
    }
    if (fields.size() != expect_fields)
      throw Error(ErrorCode::ParseError,
                  location(path, line) + ": expected " +
                      std::to_string(expect_fields) + " fields, got " +
                      std::to_string(fields.size()));
    long i = parse_int(fields[0], path, line, "row index");
    long j = parse_int(fields[1], path, line, "column index");
    if (i < 1 || i > n || j < 1 || j > n)
      throw Error(ErrorCode::ParseError,
                  location(path, line) + ": index out of range");
    Edge e;
    e.src = std::to_string(i);
    e.dst = std::to_string(j);
    e.weight = weighted ? parse_weight(fields[2], path, line) : 1.0;
    check_new_edge(seen, e.src, e.dst, directed, path, line);
    edges.push_back(std::move(e));
  }

  if (!have_sizes)
    throw Error(ErrorCode::ParseError, path + ": missing size line");
  if (static_cast<long>(edges.size()) != declared_nnz)
    throw Error(ErrorCode::ParseError,
                path + ": declared " + std::to_string(declared_nnz) +
                    " entries, found " + std::to_string(edges.size()));

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return build_graph(edges, directed, weighted, std::move(labels));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  const SparseMatrix& a = g.adjacency();
  for (Index i = 0; i < a.rows(); ++i) {
    std::span<const Index> cols = a.row_cols(i);
    std::span<const double> vals = a.row_vals(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      Index j = cols[k];
      if (!g.directed() && j < i) continue;
      out << g.label(i) << ' ' << g.label(j);
      if (g.weighted()) out << ' ' << format_double("%.17g", vals[k]);
      out << '\n';
    }
  }
  if (!out)
    throw Error(ErrorCode::IoError, "failed writing edge list");
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  write_edge_list(g, out);
}

std::optional<OutputFormat> output_format_from_token(std::string_view token) {
  if (token == "csv") return OutputFormat::csv;
  if (token == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_value(double v) { return format_double("%.12f", v); }

namespace {

ResultDocument base_document(const Graph& g) {
  ResultDocument doc;
  doc.n = g.n();
  doc.edges = g.edge_count();
  doc.directed = g.directed();
  doc.weighted = g.weighted();
  doc.tool_version = kToolVersion;
  return doc;
}

void sort_rows(std::vector<ReportRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              return a.label < b.label;
            });
}

}  // namespace

ResultDocument make_result(const Graph& g, const MeasureReport& report) {
  ResultDocument doc = base_document(g);
  doc.measure = to_token(report.measure);
  if (report.variant) doc.variant = to_token(*report.variant);
  doc.negative_weights = report.negative_weights;
  doc.rows.reserve(report.values.size());
  for (std::size_t i = 0; i < report.values.size(); ++i)
    doc.rows.push_back({g.label(static_cast<Index>(i)), report.values[i]});
  sort_rows(doc.rows);
  return doc;
}

ResultDocument make_result(const Graph& g, const LocalConstraintMatrix& lc,
                           bool full) {
  ResultDocument doc = base_document(g);
  doc.measure = to_token(Measure::local_constraint);
  doc.variant = to_token(lc.variant);
  doc.negative_weights = lc.negative_weights;
  if (full) {
    for (Index i = 0; i < g.n(); ++i)
      for (Index j = 0; j < g.n(); ++j) {
        if (i == j) continue;
        doc.rows.push_back(
            {g.label(i) + "->" + g.label(j), lc.l.at(i, j)});
      }
  } else {
    const SparseMatrix& a = g.adjacency();
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j : a.row_cols(i))
        doc.rows.push_back({g.label(i) + "->" + g.label(j), lc.l.at(i, j)});
  }
  sort_rows(doc.rows);
  return doc;
}

void write_report(const ResultDocument& doc, OutputFormat format,
                  std::ostream& out) {
  if (format == OutputFormat::csv) {
    out << "node,measure,value\n";
    for (const ReportRow& row : doc.rows) {
      out << csv_field(row.label) << ',' << doc.measure << ',';
      if (row.value)
        out << format_value(*row.value);
      else
        out << "undefined";
      out << '\n';
    }
  } else {
    nlohmann::ordered_json j;
    j["tool_version"] = doc.tool_version;
    j["measure"] = doc.measure;
    if (doc.variant)
      j["variant"] = *doc.variant;
    else
      j["variant"] = nullptr;
    j["graph"] = {{"nodes", doc.n},
                  {"edges", doc.edges},
                  {"directed", doc.directed},
                  {"weighted", doc.weighted}};
    j["negative_weights"] = doc.negative_weights;
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const ReportRow& row : doc.rows) {
      nlohmann::ordered_json entry;
      entry["node"] = row.label;
      if (row.value)
        entry["value"] = *row.value;
      else
        entry["value"] = nullptr;
      values.push_back(std::move(entry));
    }
    j["values"] = std::move(values);
    out << j.dump(2) << '\n';
  }
  if (!out)
    throw Error(ErrorCode::IoError, "failed writing report");
}

void write_report(const ResultDocument& doc, OutputFormat format,
                  const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  write_report(doc, format, out);
}

}  // namespace sholes
