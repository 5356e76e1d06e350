#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtoda/json_io.hpp"
#include "qtoda/pipeline.hpp"
#include "qtoda/toda.hpp"

using namespace qtoda;

TEST_CASE("polynomial round trip is byte-identical") {
  RootSystem rs('A', 2);
  WeylGroup W = WeylGroup::generate(rs);
  InvariantSet inv = chevalley_generators(rs, W);
  for (const auto& u : inv.u) {
    Json j = poly_to_json(u);
    SparsePoly back = poly_from_json(j);
    CHECK(back == u);
    CHECK(poly_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("NOElement and DiffOp round trips") {
  RootSystem rs('B', 2);
  WeylGroup W = WeylGroup::generate(rs);
  InvariantSet inv = chevalley_generators(rs, W);
  for (const auto& u : inv.u) {
    NOElement om = solve_Omega_k(rs, u);
    CHECK(no_element_from_json(no_element_to_json(om)) == om);
    DiffOp d = rho_Dk(om, rs);
    CHECK(diffop_from_json(diffop_to_json(d)) == d);
  }
}

TEST_CASE("QMatrix round trip") {
  RootSystem rs('A', 2);
  WeylGroup W = WeylGroup::generate(rs);
  SchubertBasis basis = SchubertBasis::build(W);
  for (int i = 0; i < 2; ++i) {
    QMatrix B = quantum_chevalley(rs, W, basis, i);
    Json j = qmatrix_to_json(B);
    CHECK(qmatrix_from_json(j) == B);
    CHECK(qmatrix_to_json(qmatrix_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("schema violations report the offending path") {
  auto expect_error = [](const char* text, const char* needle) {
    try {
      poly_from_json(Json::parse(text));
      FAIL_CHECK("expected JsonError for ", text);
    } catch (const JsonError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                    e.what());
    }
  };
  expect_error(R"({"weights": [1], "terms": []})", "$: missing \"vars\"");
  expect_error(R"({"vars": ["x"], "weights": [1, 2], "terms": []})", "disagree");
  expect_error(R"({"vars": ["x"], "weights": [1], "terms": [{"coeff": "1"}]})",
               "$.terms[0]");
  expect_error(
      R"({"vars": ["x"], "weights": [1], "terms": [{"coeff": "1/0", "exps": [1]}]})",
      "$.terms[0].coeff");
  expect_error(
      R"({"vars": ["x"], "weights": [1], "terms": [{"coeff": "1", "exps": [1, 2]}]})",
      "$.terms[0].exps");
  expect_error(
      R"({"vars": ["x"], "weights": [1], "terms": [{"coeff": "2", "exps": [-1]}]})",
      "nonnegative");
  expect_error(
      R"({"vars": ["x"], "weights": [1],
          "terms": [{"coeff": "1", "exps": [1]}, {"coeff": "2", "exps": [1]}]})",
      "duplicate");
}

TEST_CASE("pipeline reports are deterministic") {
  PipelineOptions opts;
  opts.type = 'A';
  opts.rank = 1;
  opts.order = 3;
  std::string a = run_pipeline(opts).to_json().dump(2);
  std::string b = run_pipeline(opts).to_json().dump(2);
  CHECK(a == b);
  CHECK(a.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("unknown fault keys are rejected") {
  PipelineOptions opts;
  opts.type = 'A';
  opts.rank = 1;
  opts.fault_inject = "no-such-key";
  CHECK_THROWS_AS(run_pipeline(opts), std::invalid_argument);
}
