#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gsgen/local_frame.hpp"

namespace gsgen {

/// Requested rewrite would leave the graph-plus-local-frames class.
struct unsupported_rewrite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Forced measurement outcome contradicts a deterministic result.
struct deterministic_mismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Graph state over named qubits: undirected simple graph plus a per-qubit
/// single-qubit Clifford frame. The represented state is
///   (tensor of frames) * (CZ per edge) * |+...+>.
/// Qubit ids are stable: removal never renumbers survivors, and fresh ids
/// from add_qubit() are never reused within the lifetime of the object.
class GraphState {
 public:
  GraphState() = default;

  /// n isolated vertices 0..n-1 with identity frames.
  static GraphState with_qubits(int n);

  int add_qubit();        // lowest never-used id
  void add_qubit(int id); // explicit id, must be unused

  bool has_qubit(int id) const { return adj_.count(id) != 0; }
  int num_qubits() const { return static_cast<int>(adj_.size()); }
  std::vector<int> qubit_ids() const;

  bool has_edge(int a, int b) const;
  int num_edges() const;
  /// Sorted (a < b, lexicographic) edge list.
  std::vector<std::pair<int, int>> edges() const;
  const std::set<int>& neighbors(int a) const;

  LocalFrame frame(int q) const;
  void set_frame(int q, LocalFrame f);
  /// Right-compose a byproduct under the existing frame: F <- F * b.
  void compose_frame(int q, LocalFrame byproduct);

  void add_edge(int a, int b);
  void toggle_edge(int a, int b);

  /// CZ gate. Requires frames on both qubits to map Z to +/-Z under
  /// conjugation (identity, Z, S and X-type tags); otherwise the gate is
  /// not a graph rewrite and unsupported_rewrite is thrown.
  void cz(int a, int b);

  /// Local complementation about `a`: complements the edges among N(a) and
  /// records the inverse local-Clifford correction in the frames, so the
  /// represented state is unchanged.
  void local_complement(int a);

  /// Pauli measurement of qubit `a` with a forced outcome (0 or 1); the
  /// measured qubit is removed and byproducts are recorded on the frames
  /// of its former neighbors. Frames on `a` are handled by conjugating the
  /// measurement basis. Throws deterministic_mismatch when the requested
  /// outcome has probability zero.
  void measure(int a, Pauli basis, int outcome, std::optional<int> special_neighbor = {});

  void measure_z(int a, int outcome) { measure(a, Pauli::Z, outcome); }
  void measure_y(int a, int outcome) { measure(a, Pauli::Y, outcome); }
  void measure_x(int a, int outcome, std::optional<int> special_neighbor = {}) {
    measure(a, Pauli::X, outcome, special_neighbor);
  }

  /// Outcome forced by the state, if any (only X-type measurements of an
  /// effectively isolated qubit are deterministic).
  std::optional<int> forced_outcome(int a, Pauli basis) const;

  bool operator==(const GraphState& o) const {
    return adj_ == o.adj_ && frames_ == o.frames_;
  }

 private:
  void erase_qubit(int a);
  void require_qubit(int a) const;

  std::map<int, std::set<int>> adj_;
  std::map<int, LocalFrame> frames_;  // absent entry = identity
  int next_id_ = 0;
};

/// True iff identical vertex and edge sets (and frames, unless
/// up_to_frames is set).
bool canonical_equal(const GraphState& g1, const GraphState& g2, bool up_to_frames = false);

}  // namespace gsgen
