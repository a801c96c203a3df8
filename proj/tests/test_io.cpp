#include "doctest.h"

#include "gsgen/json_io.hpp"
#include "gsgen/monte_carlo.hpp"

using namespace gsgen;

TEST_CASE("graph json round trip with byte-stable output") {
  GraphState g = GraphState::with_qubits(4);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  g.set_frame(2, LocalFrame::hadamard());
  std::string text = io::graph_to_json(g);
  // edges come out sorted lexicographically
  CHECK(text.find("[0,2]") < text.find("[1,3]"));
  GraphState back = io::graph_from_json(text);
  CHECK(canonical_equal(g, back));
  CHECK(io::graph_to_json(back) == text);
}

TEST_CASE("redundant json round trip") {
  RedundantGraph rg;
  rg.add_vertex(0, {0, 1, 2});
  rg.add_vertex(1, {5});
  rg.add_logical_edge(0, 1);
  rg.set_frame(5, LocalFrame::s_gate());
  std::string text = io::redundant_to_json(rg);
  RedundantGraph back = io::redundant_from_json(text);
  CHECK(back == rg);
  CHECK(io::redundant_to_json(back) == text);
}

TEST_CASE("plan file round trip") {
  GenerationPlan p = compile_encoded_ring(3, 2, 2, 1);
  std::string text = io::plan_to_jsonl(p);
  GenerationPlan back = io::plan_from_jsonl(text);
  CHECK(back.family == p.family);
  CHECK(back.params == p.params);
  REQUIRE(back.instructions.size() == p.instructions.size());
  for (size_t i = 0; i < p.instructions.size(); ++i) {
    CHECK(back.instructions[i].op == p.instructions[i].op);
    CHECK(back.instructions[i].stream == p.instructions[i].stream);
    CHECK(back.instructions[i].a == p.instructions[i].a);
    CHECK(back.instructions[i].b == p.instructions[i].b);
    CHECK(back.instructions[i].m == p.instructions[i].m);
  }
  CHECK(io::plan_to_jsonl(back) == text);
  // executing the round-tripped plan gives the same graph
  CHECK(execute_plan_noiseless(back) == execute_plan_noiseless(p));
}

TEST_CASE("results json carries the run metadata") {
  GenerationPlan p = compile_ring(3, 1);
  LossModel loss{0.95, 7, 1};
  Estimate e;
  e.trials = 1000;
  e.successes = 400;
  e.p_hat = 0.4;
  e.ci_low = 0.37;
  e.ci_high = 0.43;
  std::string text = io::results_to_json(p, loss, e);
  CHECK(text.find("\"eta\": 0.95") != std::string::npos);
  CHECK(text.find("\"seed\": 7") != std::string::npos);
  CHECK(text.find("\"p_hat\": 0.4") != std::string::npos);
  CHECK(text.find("\"family\": \"ring\"") != std::string::npos);
}

TEST_CASE("csv round trip through the artifact reader") {
  analytics::Table t;
  t.header = {"eta", "p"};
  t.rows = {{0.9, 0.405}, {0.95, 0.45125}};
  std::string csv = io::table_to_csv(t);
  CHECK(csv.find("eta,p\r\n") == 0);
  analytics::Table back = io::table_from_csv(csv);
  CHECK(back.header == t.header);
  REQUIRE(back.rows.size() == t.rows.size());
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows[i].size(); ++j)
      CHECK(back.rows[i][j] == doctest::Approx(t.rows[i][j]).epsilon(1e-12));
  CHECK(io::table_to_csv(back) == csv);
  CHECK_THROWS_AS(io::table_from_csv(""), std::invalid_argument);
}

TEST_CASE("numbers print with 12 significant digits") {
  CHECK(io::format_double(0.643205404296875) == "0.643205404297");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(1.46880087738e-4).substr(0, 6) == "0.0001");
}

TEST_CASE("fusion trace record serialization") {
  FusionTraceRecord r;
  r.type = "boosted";
  r.qa = 3;
  r.qb = 11;
  r.outcome_bits[0] = 1;
  r.kind = "success";
  r.attempts_used = 2;
  std::string text = io::trace_record_to_json(r);
  CHECK(text.find("\"type\":\"boosted\"") != std::string::npos);
  CHECK(text.find("\"attempts_used\":2") != std::string::npos);
}
