#include "doctest.h"

#include "gsgen/dense_state.hpp"
#include "gsgen/graph_state.hpp"
#include "gsgen/rng.hpp"

using namespace gsgen;

namespace {
GraphState path3() {
  GraphState g = GraphState::with_qubits(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}
}  // namespace

TEST_CASE("new graph basics") {
  GraphState g0 = GraphState::with_qubits(0);
  CHECK(g0.num_qubits() == 0);
  GraphState g3 = GraphState::with_qubits(3);
  CHECK(g3.num_qubits() == 3);
  CHECK(g3.num_edges() == 0);
  for (int q : g3.qubit_ids()) CHECK(g3.frame(q).is_identity());
}

TEST_CASE("cz toggles edges and is self-inverse") {
  GraphState g = GraphState::with_qubits(2);
  g.cz(0, 1);
  CHECK(g.has_edge(0, 1));
  g.cz(0, 1);
  CHECK_FALSE(g.has_edge(0, 1));
  GraphState p = path3();
  p.cz(0, 2);
  CHECK(p.num_edges() == 3);  // triangle
  CHECK_THROWS_AS(p.cz(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(p.cz(0, 9), std::invalid_argument);
}

TEST_CASE("cz rejects frames that move the Z axis") {
  GraphState g = GraphState::with_qubits(2);
  g.set_frame(0, LocalFrame::hadamard());
  CHECK_THROWS_AS(g.cz(0, 1), unsupported_rewrite);
}

TEST_CASE("cz through Z-axis frames preserves the state") {
  for (auto fa : {LocalFrame::identity(), LocalFrame::s_gate(), LocalFrame::pauli_x(),
                  LocalFrame::pauli_y()})
    for (auto fb : {LocalFrame::identity(), LocalFrame::pauli_x()}) {
      GraphState g = GraphState::with_qubits(3);
      g.add_edge(1, 2);
      g.set_frame(0, fa);
      g.set_frame(1, fb);
      DenseState expected = build_graph_state(g);
      expected.apply_cz(0, 1);
      GraphState h = g;
      h.cz(0, 1);
      CHECK(expected.equal_up_to_phase(build_graph_state(h), 1e-8));
    }
}

TEST_CASE("local complementation: path becomes triangle and back") {
  GraphState g = path3();
  g.local_complement(1);
  CHECK(g.has_edge(0, 2));
  g.local_complement(1);
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(canonical_equal(g, path3(), /*up_to_frames=*/true));
}

TEST_CASE("local complementation of a star center connects the leaves") {
  GraphState g = GraphState::with_qubits(4);
  for (int leaf : {1, 2, 3}) g.add_edge(0, leaf);
  DenseState before = build_graph_state(g);
  g.local_complement(0);
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b) CHECK(g.has_edge(a, b));
  CHECK(before.equal_up_to_phase(build_graph_state(g), 1e-8));
}

TEST_CASE("tau involution holds on random graphs with frames recorded") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng.next() % 5);
    GraphState g = GraphState::with_qubits(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.bernoulli(0.4)) g.add_edge(a, b);
    int v = static_cast<int>(rng.next() % n);
    GraphState h = g;
    h.local_complement(v);
    h.local_complement(v);
    CHECK(canonical_equal(g, h, /*up_to_frames=*/true));
    CHECK(build_graph_state(g).equal_up_to_phase(build_graph_state(h), 1e-8));
  }
}

TEST_CASE("Z measurement disconnects the qubit") {
  GraphState g = path3();
  g.measure_z(1, 0);
  CHECK_FALSE(g.has_qubit(1));
  CHECK(g.num_edges() == 0);
  CHECK(g.frame(0).is_identity());

  GraphState h = path3();
  DenseState expected = build_graph_state(h);
  expected.project_pauli(1, Pauli::Z, 1);
  h.measure_z(1, 1);
  CHECK(h.frame(0) == LocalFrame::pauli_z());
  CHECK(h.frame(2) == LocalFrame::pauli_z());
  CHECK(expected.equal_up_to_phase(build_graph_state(h), 1e-8));

  GraphState single = GraphState::with_qubits(1);
  single.measure_z(0, 0);
  CHECK(single.num_qubits() == 0);
}

TEST_CASE("Z measurement never grows the edge count") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.next() % 6);
    GraphState g = GraphState::with_qubits(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.bernoulli(0.5)) g.add_edge(a, b);
    int before = g.num_edges();
    g.measure_z(static_cast<int>(rng.next() % n), rng.bit());
    CHECK(g.num_edges() <= before);
  }
}

TEST_CASE("Y measurement examples against the oracle") {
  for (int outcome : {0, 1}) {
    GraphState g = path3();
    DenseState expected = build_graph_state(g);
    expected.project_pauli(1, Pauli::Y, outcome);
    g.measure_y(1, outcome);
    CHECK(g.has_edge(0, 2));
    CHECK(expected.equal_up_to_phase(build_graph_state(g), 1e-8));
  }
  GraphState iso = GraphState::with_qubits(1);
  iso.measure_y(0, 0);
  CHECK(iso.num_qubits() == 0);

  // triangle: Y at a corner disconnects the opposite edge
  for (int outcome : {0, 1}) {
    GraphState tri = path3();
    tri.add_edge(0, 2);
    DenseState expected = build_graph_state(tri);
    expected.project_pauli(0, Pauli::Y, outcome);
    tri.measure_y(0, outcome);
    CHECK_FALSE(tri.has_edge(1, 2));
    CHECK(expected.equal_up_to_phase(build_graph_state(tri), 1e-8));
  }
}

TEST_CASE("X measurement examples against the oracle") {
  GraphState iso = GraphState::with_qubits(1);
  CHECK(iso.forced_outcome(0, Pauli::X) == 0);
  CHECK_THROWS_AS(iso.measure_x(0, 1), deterministic_mismatch);
  iso.measure_x(0, 0);
  CHECK(iso.num_qubits() == 0);

  // end of a 2-path: survivor ends in an H-type frame
  for (int outcome : {0, 1}) {
    GraphState g = GraphState::with_qubits(2);
    g.add_edge(0, 1);
    DenseState expected = build_graph_state(g);
    expected.project_pauli(1, Pauli::X, outcome);
    g.measure_x(1, outcome);
    CHECK(g.num_edges() == 0);
    CHECK_FALSE(g.frame(0).is_z_axis_preserving());  // H-like tag
    CHECK(expected.equal_up_to_phase(build_graph_state(g), 1e-8));
  }

  // middle of a 3-path with chosen special neighbor
  for (int outcome : {0, 1}) {
    GraphState g = path3();
    DenseState expected = build_graph_state(g);
    expected.project_pauli(1, Pauli::X, outcome);
    g.measure_x(1, outcome, 0);
    CHECK(g.has_edge(0, 2));
    CHECK(expected.equal_up_to_phase(build_graph_state(g), 1e-8));
  }
  GraphState g = path3();
  CHECK_THROWS_AS(g.measure_x(0, 0, 2), std::invalid_argument);  // not adjacent
}

TEST_CASE("measurement outcomes that are not deterministic have probability 1/2") {
  GraphState g = path3();
  g.set_frame(0, LocalFrame::hadamard());
  for (int q : {0, 1, 2})
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      DenseState d = build_graph_state(g);
      if (g.forced_outcome(q, p)) continue;
      double prob = d.project_pauli(q, p, 0);
      CHECK(prob == doctest::Approx(0.5).epsilon(1e-10));
    }
}

TEST_CASE("canonical equality") {
  GraphState g = path3();
  CHECK(canonical_equal(g, g));
  GraphState tri = path3();
  tri.add_edge(0, 2);
  CHECK_FALSE(canonical_equal(g, tri));
  GraphState framed = path3();
  framed.set_frame(0, LocalFrame::s_gate());
  CHECK_FALSE(canonical_equal(g, framed));
  CHECK(canonical_equal(g, framed, /*up_to_frames=*/true));
}

TEST_CASE("qubit ids are never reused") {
  GraphState g = GraphState::with_qubits(3);
  g.measure_z(2, 0);
  CHECK(g.add_qubit() == 3);
  g.measure_z(1, 0);
  CHECK(g.add_qubit() == 4);
}
