#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sholes/error.hpp"
#include "sholes/io.hpp"
#include "sholes/measures.hpp"
#include "test_util.hpp"

using namespace sholes;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("io_tmp_" + name) {
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::string csv_of(const Graph& g, const MeasureReport& r) {
  std::ostringstream out;
  write_report(make_result(g, r), OutputFormat::csv, out);
  return out.str();
}

}  // namespace

TEST_CASE("edge list reader handles comments, blanks and weights") {
  TempFile f("basic.edges",
             "# leading comment\n"
             "\n"
             "A B\r\n"
             "  B C 2.5\n"
             "   # indented comment\n"
             "C D\n");
  Graph g = read_edge_list(f.path, false);
  CHECK(g.n() == 4);
  CHECK(g.weighted());  // any 3-field line makes the file weighted
  CHECK(g.adjacency().at(*g.index_of("A"), *g.index_of("B")) == 1.0);
  CHECK(g.adjacency().at(*g.index_of("B"), *g.index_of("C")) == 2.5);
  CHECK(g.adjacency().at(*g.index_of("C"), *g.index_of("B")) == 2.5);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("edge list reader respects a custom delimiter") {
  TempFile f("comma.edges", "A,B,0.5\nB,C\n");
  EdgeListFormat fmt;
  fmt.delimiter = ',';
  Graph g = read_edge_list(f.path, false, fmt);
  CHECK(g.n() == 3);
  CHECK(g.adjacency().at(*g.index_of("A"), *g.index_of("B")) == 0.5);
  CHECK(g.adjacency().at(*g.index_of("B"), *g.index_of("C")) == 1.0);
}

TEST_CASE("edge list reader reports the offending line") {
  TempFile self("self.edges", "A B\nC C\n");
  try {
    read_edge_list(self.path, false);
    FAIL("self-loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoop);
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }

  TempFile dup("dup.edges", "A B\nB A\n");
  try {
    read_edge_list(dup.path, false);
    FAIL("reversed duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEdge);
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  // The same two lines are a legal directed graph.
  CHECK(read_edge_list(dup.path, true).edge_count() == 2);

  TempFile wide("wide.edges", "A B 1 extra\n");
  CHECK(code_of([&] { read_edge_list(wide.path, false); }) ==
        ErrorCode::ParseError);
  TempFile short_("short.edges", "A\n");
  CHECK(code_of([&] { read_edge_list(short_.path, false); }) ==
        ErrorCode::ParseError);
  TempFile badw("badw.edges", "A B 1.x\n");
  CHECK(code_of([&] { read_edge_list(badw.path, false); }) ==
        ErrorCode::ParseError);
  TempFile infw("infw.edges", "A B inf\n");
  CHECK(code_of([&] { read_edge_list(infw.path, false); }) ==
        ErrorCode::NonFiniteWeight);
  CHECK(code_of([&] { read_edge_list("does_not_exist.edges", false); }) ==
        ErrorCode::IoError);
}

TEST_CASE("matrix market reader") {
  TempFile f("ok.mtx",
             "%%MatrixMarket matrix coordinate pattern symmetric\n"
             "% a comment\n"
             "3 3 2\n"
             "2 1\n"
             "3 2\n");
  Graph g = read_matrix_market(f.path);
  CHECK_FALSE(g.directed());
  CHECK_FALSE(g.weighted());
  CHECK(g.n() == 3);
  CHECK(g.labels() == std::vector<std::string>{"1", "2", "3"});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacency().at(0, 1) == 1.0);
  CHECK(g.adjacency().at(1, 2) == 1.0);

  TempFile gen("gen.mtx",
               "%%MatrixMarket matrix coordinate real general\n"
               "2 2 1\n"
               "1 2 0.25\n");
  Graph dg = read_matrix_market(gen.path);
  CHECK(dg.directed());
  CHECK(dg.weighted());
  CHECK(dg.adjacency().at(0, 1) == 0.25);
  CHECK(dg.adjacency().at(1, 0) == 0.0);

  TempFile empty1("empty1.mtx",
                  "%%MatrixMarket matrix coordinate pattern symmetric\n"
                  "1 1 0\n");
  Graph iso = read_matrix_market(empty1.path);
  CHECK(iso.n() == 1);
  CHECK(iso.edge_count() == 0);
}

TEST_CASE("matrix market reader rejects what it cannot represent") {
  TempFile cplx("c.mtx",
                "%%MatrixMarket matrix coordinate complex symmetric\n"
                "2 2 1\n"
                "2 1 1.0 0.0\n");
  CHECK(code_of([&] { read_matrix_market(cplx.path); }) ==
        ErrorCode::UnsupportedFormat);

  TempFile arr("a.mtx",
               "%%MatrixMarket matrix array real general\n"
               "2 2\n1\n2\n3\n4\n");
  CHECK(code_of([&] { read_matrix_market(arr.path); }) ==
        ErrorCode::UnsupportedFormat);

  TempFile skew("s.mtx",
                "%%MatrixMarket matrix coordinate real skew-symmetric\n"
                "2 2 1\n2 1 1.0\n");
  CHECK(code_of([&] { read_matrix_market(skew.path); }) ==
        ErrorCode::UnsupportedFormat);

  TempFile banner("b.mtx", "%%NotMatrixMarket nope\n1 1 0\n");
  CHECK(code_of([&] { read_matrix_market(banner.path); }) ==
        ErrorCode::ParseError);

  TempFile rect("r.mtx",
                "%%MatrixMarket matrix coordinate pattern general\n"
                "2 3 0\n");
  CHECK(code_of([&] { read_matrix_market(rect.path); }) ==
        ErrorCode::DimensionMismatch);

  TempFile range("rg.mtx",
                 "%%MatrixMarket matrix coordinate pattern general\n"
                 "2 2 1\n"
                 "3 1\n");
  CHECK(code_of([&] { read_matrix_market(range.path); }) ==
        ErrorCode::ParseError);

  TempFile count("ct.mtx",
                 "%%MatrixMarket matrix coordinate pattern general\n"
                 "2 2 2\n"
                 "1 2\n");
  CHECK(code_of([&] { read_matrix_market(count.path); }) ==
        ErrorCode::ParseError);

  TempFile loop("lp.mtx",
                "%%MatrixMarket matrix coordinate pattern symmetric\n"
                "2 2 1\n"
                "1 1\n");
  CHECK(code_of([&] { read_matrix_market(loop.path); }) ==
        ErrorCode::SelfLoop);
}

TEST_CASE("the bundled fixtures load identically from both formats") {
  Graph from_edges = read_edge_list(tst::data_path("ego7_numeric.edges"),
                                    false);
  Graph from_mtx = read_matrix_market(tst::data_path("ego7.mtx"));
  CHECK(from_edges.n() == from_mtx.n());
  CHECK(from_edges.edge_count() == from_mtx.edge_count());

  // Same adjacency under the label bijection (internal orders differ).
  for (const std::string& a : from_edges.labels())
    for (const std::string& b : from_edges.labels()) {
      double we = from_edges.adjacency().at(*from_edges.index_of(a),
                                            *from_edges.index_of(b));
      double wm = from_mtx.adjacency().at(*from_mtx.index_of(a),
                                          *from_mtx.index_of(b));
      CHECK(we == wm);
    }

  // And the serialized reports agree byte for byte.
  for (Measure m : {Measure::redundancy, Measure::effective_size,
                    Measure::constraint}) {
    std::string ce, cm;
    if (m == Measure::constraint) {
      ce = csv_of(from_edges, constraint(from_edges));
      cm = csv_of(from_mtx, constraint(from_mtx));
    } else if (m == Measure::redundancy) {
      ce = csv_of(from_edges, redundancy(from_edges));
      cm = csv_of(from_mtx, redundancy(from_mtx));
    } else {
      ce = csv_of(from_edges, effective_size(from_edges));
      cm = csv_of(from_mtx, effective_size(from_mtx));
    }
    CHECK(ce == cm);
  }
}

TEST_CASE("edge list writer round-trips labels and weights") {
  Graph g = tst::weighted_undirected(
      {{"n1", "n2", 0.1}, {"n2", "n3", 2.0}, {"n3", "n1", 1.0 / 3.0}});
  TempFile f("round.edges", "");
  write_edge_list(g, f.path);
  Graph back = read_edge_list(f.path, false);
  CHECK(back.n() == g.n());
  CHECK(back.weighted());
  for (const std::string& a : g.labels())
    for (const std::string& b : g.labels())
      CHECK(back.adjacency().at(*back.index_of(a), *back.index_of(b)) ==
            g.adjacency().at(*g.index_of(a), *g.index_of(b)));

  Graph d = tst::directed({{"u", "v"}, {"v", "u"}, {"v", "w"}});
  TempFile fd("roundd.edges", "");
  write_edge_list(d, fd.path);
  Graph backd = read_edge_list(fd.path, true);
  CHECK(backd.edge_count() == 3);
  CHECK(backd.adjacency().at(*backd.index_of("v"), *backd.index_of("u")) ==
        1.0);
}

TEST_CASE("csv reports") {
  Graph g = tst::fig_ego7();
  std::string csv = csv_of(g, effective_size(g));
  CHECK(csv ==
        "node,measure,value\n"
        "A,effective-size,2.500000000000\n"
        "B,effective-size,1.666666666667\n"
        "C,effective-size,1.000000000000\n"
        "D,effective-size,1.000000000000\n"
        "E,effective-size,1.000000000000\n"
        "F,effective-size,1.000000000000\n"
        "G,effective-size,4.666666666667\n");

  // Rows are sorted by node label even though internal order differs.
  CHECK(g.label(2) == "E");

  std::vector<Edge> edges = {{"a", "b", 1.0}};
  Graph iso = build_graph(edges, false, false, {"a", "b", "zed"});
  std::string icsv = csv_of(iso, constraint(iso));
  CHECK(icsv.find("zed,constraint,undefined\n") != std::string::npos);

  Graph empty = build_graph(std::vector<Edge>{}, false, false);
  CHECK(csv_of(empty, effective_size(empty)) == "node,measure,value\n");
}

TEST_CASE("csv quoting follows RFC 4180") {
  std::vector<Edge> edges = {{"x,y", "z\"q", 1.0}};
  Graph g = build_graph(edges, false, false);
  std::string csv = csv_of(g, constraint(g));
  CHECK(csv.find("\"x,y\",constraint,") != std::string::npos);
  CHECK(csv.find("\"z\"\"q\",constraint,") != std::string::npos);
}

TEST_CASE("per-edge reports") {
  Graph c4 = tst::undirected({{"a", "b"}, {"b", "c"}, {"c", "d"},
                              {"d", "a"}});
  LocalConstraintMatrix lc = local_constraint(c4);

  ResultDocument on_edges = make_result(c4, lc, false);
  CHECK(on_edges.rows.size() == 8);  // both orientations of 4 edges
  CHECK(on_edges.rows.front().label == "a->b");
  CHECK(tst::req(on_edges.rows.front().value) == 0.25);

  ResultDocument full = make_result(c4, lc, true);
  CHECK(full.rows.size() == 12);  // every ordered pair
  // Non-adjacent opposite corners: direct tie 0, two two-step paths.
  bool found = false;
  for (const ReportRow& row : full.rows)
    if (row.label == "a->c") {
      found = true;
      CHECK(tst::req(row.value) == 0.25);  // (1/2*1/2 + 1/2*1/2)^2
    }
  CHECK(found);

  std::ostringstream out;
  write_report(on_edges, OutputFormat::csv, out);
  CHECK(out.str().find("a->b,local-constraint,0.250000000000\n") !=
        std::string::npos);
}

TEST_CASE("json reports mirror the document") {
  std::vector<Edge> edges = {{"a", "b", 1.0}};
  Graph g = build_graph(edges, false, false, {"a", "b", "iso"});
  ResultDocument doc = make_result(g, constraint(g));
  std::ostringstream out;
  write_report(doc, OutputFormat::json, out);

  nlohmann::json j = nlohmann::json::parse(out.str());
  CHECK(j["measure"] == "constraint");
  CHECK(j["variant"] == "paper");
  CHECK(j["graph"]["nodes"] == 3);
  CHECK(j["graph"]["edges"] == 1);
  CHECK(j["graph"]["directed"] == false);
  CHECK(j["graph"]["weighted"] == false);
  CHECK(j["negative_weights"] == false);
  REQUIRE(j["values"].size() == 3);
  CHECK(j["values"][0]["node"] == "a");
  CHECK(j["values"][0]["value"] == 1.0);
  CHECK(j["values"][2]["node"] == "iso");
  CHECK(j["values"][2]["value"].is_null());
  CHECK(j["tool_version"].is_string());

  MeasureReport es = effective_size(tst::fig_ego7());
  ResultDocument doc2 = make_result(tst::fig_ego7(), es);
  CHECK_FALSE(doc2.variant.has_value());
  std::ostringstream out2;
  write_report(doc2, OutputFormat::json, out2);
  nlohmann::json j2 = nlohmann::json::parse(out2.str());
  CHECK(j2["variant"].is_null());
}

TEST_CASE("output format tokens") {
  CHECK(output_format_from_token("csv") == OutputFormat::csv);
  CHECK(output_format_from_token("json") == OutputFormat::json);
  CHECK_FALSE(output_format_from_token("xml").has_value());
  CHECK(format_value(2.5) == "2.500000000000");
  CHECK(format_value(1.0 / 3.0) == "0.333333333333");
}
