#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gsgen/graph_state.hpp"
#include "gsgen/local_frame.hpp"

namespace gsgen {

/// Redundantly-encoded graph state: logical vertices are repetition-coded
/// blocks of physical qubits (GHZ blocks), logical edges are CZ gates
/// between one representative qubit per block. The represented state is
///   (tensor of per-qubit frames) * (CZ per logical edge on representatives)
///   * (GHZ block per vertex),
/// plus an optional spectator emitter qubit in |0> before its first
/// Hadamard ("pending").
///
/// The representative of a block is its lowest-id member; the block state
/// is symmetric under that choice, so representatives may change when
/// members are removed.
class RedundantGraph {
 public:
  RedundantGraph() = default;

  // --- construction ---
  int add_vertex(const std::set<int>& members);         // fresh vertex id
  void add_vertex(int vid, const std::set<int>& members);
  void add_logical_edge(int va, int vb);
  void toggle_logical_edge(int va, int vb);

  /// Register the emitter qubit in |0>, not yet part of any vertex.
  void init_emitter(int qe);

  // --- queries ---
  bool has_vertex(int vid) const { return vertices_.count(vid) != 0; }
  bool has_qubit(int q) const { return qubit_to_vertex_.count(q) != 0; }
  std::vector<int> vertex_ids() const;
  const std::set<int>& members(int vid) const;
  int representative(int vid) const;  // lowest member id
  int vertex_of(int q) const;
  std::vector<std::pair<int, int>> logical_edges() const;
  bool has_logical_edge(int va, int vb) const;
  std::set<int> logical_neighbors(int vid) const;
  int num_physical_qubits() const { return static_cast<int>(qubit_to_vertex_.size()); }

  std::optional<int> emitter_qubit() const { return emitter_; }
  bool emitter_pending() const { return emitter_pending_; }
  std::optional<int> emitter_vertex() const;

  LocalFrame frame(int q) const;
  void set_frame(int q, LocalFrame f);
  void compose_frame(int q, LocalFrame byproduct);

  // --- emitter sequence operations ---
  /// Emitter Hadamard: activates a pending emitter into a fresh singleton
  /// vertex, or pushes it out of its block (requires block size >= 2).
  int hadamard_emitter();
  int hadamard_emitter(int new_vertex_id);

  /// Photon emission: appends a fresh qubit to the emitter's block.
  void emit_photon(int new_id);

  /// X-measures the emitter out of the graph and forgets it.
  void measure_out_emitter(int outcome);

  // --- physical-qubit operations ---
  /// Physical Hadamard on a block member (block size >= 2): the qubit moves
  /// to a fresh singleton vertex connected to its old block.
  int hadamard_push(int q);
  int hadamard_push(int q, int new_vertex_id);

  /// Pauli measurement of a physical qubit with forced outcome. Z-type
  /// measurements collapse and remove the full block; X/Y-type measurements
  /// on a block of size >= 2 remove just the member (with a logical
  /// byproduct); on singleton vertices the plain graph rules apply at the
  /// logical level. Throws unsupported_rewrite for the singleton X cases
  /// whose output cannot be written as a framed redundant graph.
  void measure_member(int q, Pauli basis, int outcome);

  void z_measure_vertex_member(int q, int outcome) { measure_member(q, Pauli::Z, outcome); }
  void measure_x_member(int q, int outcome) { measure_member(q, Pauli::X, outcome); }
  void measure_y_member(int q, int outcome) { measure_member(q, Pauli::Y, outcome); }

  std::optional<int> forced_member_outcome(int q, Pauli basis) const;

  /// Local complementation at a singleton vertex, acting on logical edges;
  /// the state is unchanged (corrections land in the frames).
  void logical_local_complement(int vid);

  // --- structure manipulation used by fusions ---
  /// Members of `absorb` join `keep`; logical edges combine modulo two
  /// (a doubled CZ between blocks cancels). `absorb` disappears.
  void merge_vertices(int keep, int absorb);

  /// A diagonal frame on one block member acts logically, so it can move
  /// to any other member. Used to hand out clean photons for fusions.
  /// No-op when the frame is non-diagonal or the block has no other member.
  void relocate_diagonal_frame(int q);

  /// GHZ-merge of `absorb` into `keep` with the logical labels satisfying
  /// absorb = keep xor flip; adjacency and flip byproducts land in frames.
  void correlated_merge(int keep, int absorb, bool flip);
  void remove_member(int q);
  void remove_vertex_and_members(int vid);
  int fresh_vertex_id() const;

  /// Disjoint union; throws if ids clash or both sides hold an emitter.
  void absorb_disjoint(const RedundantGraph& other);

  /// Plain graph state as an all-singleton redundant graph (vertex id =
  /// qubit id).
  static RedundantGraph from_graph(const GraphState& g);

  /// Push-out view: one representative per block keeps the logical edges,
  /// every other member becomes a leaf with an H recorded in its frame.
  GraphState to_physical() const;

  bool operator==(const RedundantGraph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_ && frames_ == o.frames_ &&
           emitter_ == o.emitter_ && emitter_pending_ == o.emitter_pending_;
  }

 private:
  void require_vertex(int vid) const;
  void require_fresh_qubit(int q) const;
  void collapse_vertex(int vid, int s);
  void explode_linked_vertex(int vid, int s);
  void singleton_y_rule(int vid, int s);

  std::map<int, std::set<int>> vertices_;
  std::set<std::pair<int, int>> edges_;
  std::map<int, int> qubit_to_vertex_;
  std::map<int, LocalFrame> frames_;
  std::optional<int> emitter_;
  bool emitter_pending_ = false;
};

}  // namespace gsgen
