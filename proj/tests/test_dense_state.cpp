#include "doctest.h"

#include <cmath>
#include <complex>

#include "gsgen/dense_state.hpp"
#include "gsgen/graph_state.hpp"
#include "gsgen/redundant_graph.hpp"

using namespace gsgen;
using cd = std::complex<double>;

TEST_CASE("empty graph builds the scalar state") {
  GraphState g;
  DenseState s = build_graph_state(g);
  CHECK(s.num_qubits() == 0);
  CHECK(s.amplitudes().size() == 1);
  CHECK(std::abs(s.amplitudes()[0] - cd(1)) < 1e-12);
}

TEST_CASE("single vertex is |+>") {
  GraphState g = GraphState::with_qubits(1);
  DenseState s = build_graph_state(g);
  CHECK(std::abs(s.amplitudes()[0] - cd(M_SQRT1_2)) < 1e-12);
  CHECK(std::abs(s.amplitudes()[1] - cd(M_SQRT1_2)) < 1e-12);
}

TEST_CASE("two-qubit path matches the CZ|++> amplitudes") {
  GraphState g = GraphState::with_qubits(2);
  g.add_edge(0, 1);
  DenseState s = build_graph_state(g);
  // (|0+> + |1->)/sqrt(2): amplitudes (1,1,1,-1)/2
  CHECK(std::abs(s.amplitudes()[0] - cd(0.5)) < 1e-12);
  CHECK(std::abs(s.amplitudes()[1] - cd(0.5)) < 1e-12);
  CHECK(std::abs(s.amplitudes()[2] - cd(0.5)) < 1e-12);
  CHECK(std::abs(s.amplitudes()[3] - cd(-0.5)) < 1e-12);
}

TEST_CASE("emission from |+> gives a Bell pair and repeats to GHZ") {
  DenseState s;
  s.add_plus(0);
  s.apply_emission(0, 1);
  CHECK(std::abs(s.amplitudes()[0] - cd(M_SQRT1_2)) < 1e-12);
  CHECK(std::abs(s.amplitudes()[3] - cd(M_SQRT1_2)) < 1e-12);
  CHECK(std::abs(s.amplitudes()[1]) < 1e-12);
  s.apply_emission(0, 2);
  CHECK(s.num_qubits() == 3);
  CHECK(std::abs(s.amplitudes()[0] - cd(M_SQRT1_2)) < 1e-12);
  CHECK(std::abs(s.amplitudes()[7] - cd(M_SQRT1_2)) < 1e-12);
}

TEST_CASE("emission commutes with spectator operations") {
  DenseState a;
  a.add_plus(0);
  a.add_plus(5);
  a.apply_cz(0, 5);
  DenseState b = a;
  a.apply_h(5);
  a.apply_emission(0, 3);
  b.apply_emission(0, 3);
  b.apply_h(5);
  CHECK(a.equal_up_to_phase(b, 1e-10));
}

TEST_CASE("Z projector on |+> has probability one half") {
  DenseState s;
  s.add_plus(0);
  double p = s.project_pauli(0, Pauli::Z, 0);
  CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.num_qubits() == 0);
}

TEST_CASE("branch probabilities of complementary outcomes sum to one") {
  GraphState g = GraphState::with_qubits(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
    DenseState s0 = build_graph_state(g);
    DenseState s1 = build_graph_state(g);
    double total = s0.project_pauli(1, p, 0) + s1.project_pauli(1, p, 1);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("type I fusion of two Bell pairs leaves a GHZ3 branch at probability 1/2") {
  DenseState s;
  s.add_plus(0);
  s.apply_emission(0, 1);  // GHZ2 on (0,1)
  s.add_plus(2);
  s.apply_emission(2, 3);  // GHZ2 on (2,3)
  double p = s.fuse_type1(1, 2, 0);
  CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
  // survivor register (0,1,3) holds GHZ3
  CHECK(s.num_qubits() == 3);
  CHECK(std::abs(s.amplitudes()[0] - cd(M_SQRT1_2)) < 1e-10);
  CHECK(std::abs(s.amplitudes()[7] - cd(M_SQRT1_2)) < 1e-10);
}

TEST_CASE("Y projector reproduces the local complementation rule") {
  GraphState g = GraphState::with_qubits(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  DenseState dense = build_graph_state(g);
  dense.project_pauli(1, Pauli::Y, 0);
  GraphState h = g;
  h.measure_y(1, 0);
  CHECK(h.has_edge(0, 2));
  CHECK(dense.equal_up_to_phase(build_graph_state(h), 1e-8));
}

TEST_CASE("zero-probability branch is rejected") {
  DenseState s;
  s.add_zero(0);
  CHECK_THROWS_AS(s.project_pauli(0, Pauli::Z, 1), std::domain_error);
}

TEST_CASE("equal_up_to_phase accepts a global sign and rejects |-> vs |+>") {
  DenseState a, b;
  a.add_plus(0);
  b.add_plus(0);
  b.apply_unitary(0, {cd(-1), cd(0), cd(0), cd(-1)});
  CHECK(a.equal_up_to_phase(b));
  DenseState minus;
  minus.add_qubit(0, {cd(M_SQRT1_2), cd(-M_SQRT1_2)});
  CHECK_FALSE(a.equal_up_to_phase(minus));
}

TEST_CASE("factor_out splits product qubits and refuses entangled ones") {
  DenseState s;
  s.add_plus(0);
  s.add_zero(1);
  auto f = s.factor_out(1);
  REQUIRE(f.has_value());
  CHECK(std::abs((*f)[0] - cd(1)) < 1e-10);
  CHECK(s.num_qubits() == 1);

  DenseState bell;
  bell.add_plus(0);
  bell.apply_emission(0, 1);
  CHECK_FALSE(bell.factor_out(0).has_value());
}

TEST_CASE("redundant builder matches the GHZ-block definition") {
  RedundantGraph rg;
  rg.add_vertex(0, {0, 1, 2});
  DenseState s = build_redundant_state(rg);
  CHECK(std::abs(s.amplitudes()[0] - cd(M_SQRT1_2)) < 1e-12);
  CHECK(std::abs(s.amplitudes()[7] - cd(M_SQRT1_2)) < 1e-12);

  // one-qubit-per-vertex chain equals the plain linear cluster
  RedundantGraph chain;
  for (int q = 0; q < 3; ++q) chain.add_vertex(q, {q});
  chain.add_logical_edge(0, 1);
  chain.add_logical_edge(1, 2);
  GraphState lc = GraphState::with_qubits(3);
  lc.add_edge(0, 1);
  lc.add_edge(1, 2);
  CHECK(build_redundant_state(chain).equal_up_to_phase(build_graph_state(lc), 1e-10));
}

TEST_CASE("register size guard") {
  DenseState s(3);
  s.add_plus(0);
  s.add_plus(1);
  s.add_plus(2);
  CHECK_THROWS_AS(s.add_plus(3), std::length_error);
}
