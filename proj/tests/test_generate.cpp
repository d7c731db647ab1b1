#include <vector>

#include "doctest.h"
#include "sholes/error.hpp"
#include "sholes/generate.hpp"
#include "sholes/graph.hpp"

using namespace sholes;

TEST_CASE("model tokens") {
  CHECK(model_from_token("barabasi-albert") == GraphModel::barabasi_albert);
  CHECK(model_from_token("ba") == GraphModel::barabasi_albert);
  CHECK(model_from_token("erdos-renyi") == GraphModel::erdos_renyi);
  CHECK(model_from_token("er") == GraphModel::erdos_renyi);
  CHECK_FALSE(model_from_token("small-world").has_value());
  CHECK(std::string(to_token(GraphModel::barabasi_albert)) ==
        "barabasi-albert");
}

TEST_CASE("edge probability extremes") {
  Graph none = generate({GraphModel::erdos_renyi, 10, 0.0, 1});
  CHECK(none.n() == 10);
  CHECK(none.edge_count() == 0);
  CHECK(none.labels().front() == "1");
  CHECK(none.labels().back() == "10");

  Graph full = generate({GraphModel::erdos_renyi, 10, 1.0, 1});
  CHECK(full.edge_count() == 45);
  for (Index i = 0; i < 10; ++i) CHECK(full.adjacency().row_nnz(i) == 9);
}

TEST_CASE("edge counts follow the attachment rule") {
  Graph g = generate({GraphModel::barabasi_albert, 100, 5, 9});
  CHECK(g.n() == 100);
  CHECK(g.edge_count() == 475);  // m + (n - m - 1) * m = m * (n - m)
  for (Index i = 0; i < g.n(); ++i) CHECK(g.adjacency().row_nnz(i) >= 1);

  Graph tiny = generate({GraphModel::barabasi_albert, 4, 3, 9});
  CHECK(tiny.edge_count() == 3);  // bare star: n = m + 1

  Graph chain = generate({GraphModel::barabasi_albert, 50, 1, 9});
  CHECK(chain.edge_count() == 49);
}

TEST_CASE("generation is deterministic in the seed") {
  GeneratorSpec spec{GraphModel::barabasi_albert, 60, 3, 12345};
  Graph a = generate(spec);
  Graph b = generate(spec);
  CHECK(a.adjacency() == b.adjacency());
  CHECK(a.labels() == b.labels());

  Graph c = generate({GraphModel::barabasi_albert, 60, 3, 12346});
  CHECK_FALSE(a.adjacency() == c.adjacency());

  GeneratorSpec er{GraphModel::erdos_renyi, 40, 0.2, 7};
  CHECK(generate(er).adjacency() == generate(er).adjacency());
  Graph d = generate({GraphModel::erdos_renyi, 40, 0.2, 8});
  CHECK_FALSE(generate(er).adjacency() == d.adjacency());
}

TEST_CASE("sampled density is plausible") {
  Graph g = generate({GraphModel::erdos_renyi, 50, 0.5, 3});
  CHECK(g.edge_count() > 400);  // mean 612.5 of 1225 possible
  CHECK(g.edge_count() < 825);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(generate({GraphModel::erdos_renyi, 0, 0.5, 1}), Error);
  CHECK_THROWS_AS(generate({GraphModel::erdos_renyi, 10, -0.1, 1}), Error);
  CHECK_THROWS_AS(generate({GraphModel::erdos_renyi, 10, 1.5, 1}), Error);
  CHECK_THROWS_AS(generate({GraphModel::barabasi_albert, 10, 0, 1}), Error);
  CHECK_THROWS_AS(generate({GraphModel::barabasi_albert, 10, 2.5, 1}),
                  Error);
  CHECK_THROWS_AS(generate({GraphModel::barabasi_albert, 5, 5, 1}), Error);
  CHECK_THROWS_AS(generate({GraphModel::barabasi_albert, 4, 5, 1}), Error);
  try {
    generate({GraphModel::barabasi_albert, 10, 0, 1});
    FAIL("m = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSpec);
    CHECK_FALSE(is_domain_error(e.code()));
  }
  CHECK_NOTHROW(generate({GraphModel::barabasi_albert, 6, 5, 1}));
}
