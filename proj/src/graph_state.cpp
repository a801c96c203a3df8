#include "gsgen/graph_state.hpp"

#include <algorithm>

namespace gsgen {

GraphState GraphState::with_qubits(int n) {
  if (n < 0) throw std::invalid_argument("negative qubit count");
  GraphState g;
  for (int i = 0; i < n; ++i) g.add_qubit();
  return g;
}

int GraphState::add_qubit() {
  int id = next_id_;
  add_qubit(id);
  return id;
}

void GraphState::add_qubit(int id) {
  if (id < 0) throw std::invalid_argument("qubit ids are nonnegative");
  if (adj_.count(id)) throw std::invalid_argument("qubit id already present");
  adj_[id] = {};
  next_id_ = std::max(next_id_, id + 1);
}

std::vector<int> GraphState::qubit_ids() const {
  std::vector<int> ids;
  ids.reserve(adj_.size());
  for (const auto& [q, _] : adj_) ids.push_back(q);
  return ids;
}

void GraphState::require_qubit(int a) const {
  if (!adj_.count(a)) throw std::invalid_argument("unknown qubit id");
}

bool GraphState::has_edge(int a, int b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) != 0;
}

int GraphState::num_edges() const {
  int d = 0;
  for (const auto& [q, nb] : adj_) d += static_cast<int>(nb.size());
  return d / 2;
}

std::vector<std::pair<int, int>> GraphState::edges() const {
  std::vector<std::pair<int, int>> es;
  for (const auto& [q, nb] : adj_)
    for (int v : nb)
      if (q < v) es.emplace_back(q, v);
  return es;
}

const std::set<int>& GraphState::neighbors(int a) const {
  require_qubit(a);
  return adj_.at(a);
}

LocalFrame GraphState::frame(int q) const {
  require_qubit(q);
  auto it = frames_.find(q);
  return it == frames_.end() ? LocalFrame::identity() : it->second;
}

void GraphState::set_frame(int q, LocalFrame f) {
  require_qubit(q);
  if (f.is_identity())
    frames_.erase(q);
  else
    frames_[q] = f;
}

void GraphState::compose_frame(int q, LocalFrame byproduct) {
  set_frame(q, frame(q) * byproduct);
}

void GraphState::add_edge(int a, int b) {
  require_qubit(a);
  require_qubit(b);
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
  adj_[a].insert(b);
  adj_[b].insert(a);
}

void GraphState::toggle_edge(int a, int b) {
  require_qubit(a);
  require_qubit(b);
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
  if (adj_[a].erase(b)) {
    adj_[b].erase(a);
  } else {
    adj_[a].insert(b);
    adj_[b].insert(a);
  }
}

void GraphState::cz(int a, int b) {
  require_qubit(a);
  require_qubit(b);
  if (a == b) throw std::invalid_argument("cz needs two distinct qubits");
  bool neg_a, neg_b;
  if (frame(a).conjugate_pauli(Pauli::Z, neg_a) != Pauli::Z ||
      frame(b).conjugate_pauli(Pauli::Z, neg_b) != Pauli::Z)
    throw unsupported_rewrite("cz through a frame that does not preserve the Z axis");
  toggle_edge(a, b);
  // CZ commuted through Z-axis-reversing frames leaves a Z on the partner.
  if (neg_a) compose_frame(b, LocalFrame::pauli_z());
  if (neg_b) compose_frame(a, LocalFrame::pauli_z());
}

void GraphState::local_complement(int a) {
  require_qubit(a);
  std::vector<int> nb(adj_[a].begin(), adj_[a].end());
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) toggle_edge(nb[i], nb[j]);
  compose_frame(a, LocalFrame::rot_x_m90());
  for (int v : nb) compose_frame(v, LocalFrame::rot_z_p90());
}

std::optional<int> GraphState::forced_outcome(int a, Pauli basis) const {
  require_qubit(a);
  bool neg;
  Pauli bare = frame(a).conjugate_pauli(basis, neg);
  if (bare == Pauli::X && adj_.at(a).empty()) return neg ? 1 : 0;
  return std::nullopt;
}

void GraphState::erase_qubit(int a) {
  for (int v : adj_[a]) adj_[v].erase(a);
  adj_.erase(a);
  frames_.erase(a);
}

void GraphState::measure(int a, Pauli basis, int outcome, std::optional<int> special) {
  require_qubit(a);
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");
  bool neg;
  Pauli bare = frame(a).conjugate_pauli(basis, neg);
  int s = outcome ^ (neg ? 1 : 0);
  switch (bare) {
    case Pauli::Z: {
      std::vector<int> nb(adj_[a].begin(), adj_[a].end());
      erase_qubit(a);
      if (s == 1)
        for (int v : nb) compose_frame(v, LocalFrame::pauli_z());
      return;
    }
    case Pauli::Y: {
      std::vector<int> nb(adj_[a].begin(), adj_[a].end());
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) toggle_edge(nb[i], nb[j]);
      LocalFrame byp = (s == 0) ? LocalFrame::rot_z_p90() : LocalFrame::rot_z_m90();
      erase_qubit(a);
      for (int v : nb) compose_frame(v, byp);
      return;
    }
    case Pauli::X: {
      if (adj_[a].empty()) {
        if (s == 1) throw deterministic_mismatch("X measurement of an isolated qubit is deterministic");
        erase_qubit(a);
        return;
      }
      int b0 = special ? *special : *adj_[a].begin();
      if (!has_edge(a, b0)) throw std::invalid_argument("special neighbor is not adjacent");
      // Sandwich the Y rule between two complementations at the chosen
      // neighbor; the frame left on `a` by the first one turns the X basis
      // into a Y basis, so the recursion resolves in one step.
      local_complement(b0);
      measure(a, basis, outcome);
      local_complement(b0);
      return;
    }
  }
}

bool canonical_equal(const GraphState& g1, const GraphState& g2, bool up_to_frames) {
  if (g1.qubit_ids() != g2.qubit_ids()) return false;
  if (g1.edges() != g2.edges()) return false;
  if (up_to_frames) return true;
  for (int q : g1.qubit_ids())
    if (g1.frame(q) != g2.frame(q)) return false;
  return true;
}

}  // namespace gsgen
