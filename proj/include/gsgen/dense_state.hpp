#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gsgen/local_frame.hpp"

namespace gsgen {

class GraphState;
class RedundantGraph;

/// Brute-force dense statevector over a small register of named qubits.
/// Ground truth for every graph rewrite rule. Qubit ordering is the sorted
/// id order; bit k of an amplitude index addresses the k-th smallest id.
/// Removing a qubit contracts the register.
class DenseState {
 public:
  using cd = std::complex<double>;
  using Qubit2 = std::array<cd, 2>;

  static constexpr int kDefaultMaxQubits = 12;

  /// Empty register holding the scalar amplitude 1.
  explicit DenseState(int max_qubits = kDefaultMaxQubits);

  int num_qubits() const { return static_cast<int>(ids_.size()); }
  const std::vector<int>& qubit_ids() const { return ids_; }
  bool has_qubit(int id) const;

  /// Tensor in a fresh qubit in the given single-qubit state.
  void add_qubit(int id, const Qubit2& state);
  void add_plus(int id) { add_qubit(id, {cd(M_SQRT1_2), cd(M_SQRT1_2)}); }
  void add_zero(int id) { add_qubit(id, {cd(1), cd(0)}); }

  void apply_unitary(int id, const LocalFrame::Matrix& u);
  void apply_frame(int id, const LocalFrame& f) { apply_unitary(id, f.matrix()); }
  void apply_h(int id);
  void apply_cz(int a, int b);

  /// Emission isometry |0><0| x |0>_new + |1><1| x |1>_new on the emitter.
  void apply_emission(int emitter_id, int new_id);

  /// Pauli projector (I + (-1)^outcome P)/2 on one qubit: applies the
  /// projection, returns the branch probability, renormalizes and removes
  /// the measured qubit (collapsed into the corresponding eigenstate).
  /// Throws std::domain_error on a zero-probability branch.
  double project_pauli(int id, Pauli p, int outcome);

  /// Contract qubit `id` with <phi| (phi need not be normalized to an
  /// eigenstate; probability |<phi|psi>|^2 with |phi| = 1). Removes the qubit.
  double project_onto(int id, const Qubit2& phi);

  /// Type I fusion Kraus G_{I,i}(a,b) = |0_a><0_a 0_b| + (-1)^i |1_a><1_a 1_b|.
  /// Removes qubit b, returns the branch probability.
  double fuse_type1(int a, int b, int i);

  /// If qubit `id` is in a product state with the rest of the register,
  /// return its (normalized) single-qubit state and factor it out.
  std::optional<Qubit2> factor_out(int id, double tol = 1e-8);

  double norm() const;
  void normalize();

  bool equal_up_to_phase(const DenseState& other, double tol = 1e-8) const;

  const std::vector<cd>& amplitudes() const { return amp_; }

 private:
  int pos_of(int id) const;  // position in ids_, throws if absent

  std::vector<int> ids_;
  std::vector<cd> amp_;
  int max_qubits_;
};

/// |+>^n then CZ per edge, then the per-qubit frame unitaries.
DenseState build_graph_state(const GraphState& g, int max_qubits = DenseState::kDefaultMaxQubits);

/// GHZ block per logical vertex, CZ between representatives per logical
/// edge, then frames. A pending emitter contributes an isolated |0>.
DenseState build_redundant_state(const RedundantGraph& rg,
                                 int max_qubits = DenseState::kDefaultMaxQubits);

}  // namespace gsgen
