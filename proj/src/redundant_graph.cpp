#include "gsgen/redundant_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsgen {

namespace {
std::pair<int, int> norm_edge(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }
}  // namespace

void RedundantGraph::require_vertex(int vid) const {
  if (!vertices_.count(vid)) throw std::invalid_argument("unknown logical vertex");
}

void RedundantGraph::require_fresh_qubit(int q) const {
  if (q < 0) throw std::invalid_argument("qubit ids are nonnegative");
  if (qubit_to_vertex_.count(q) || (emitter_ && *emitter_ == q))
    throw std::invalid_argument("qubit id already present");
}

int RedundantGraph::fresh_vertex_id() const {
  return vertices_.empty() ? 0 : vertices_.rbegin()->first + 1;
}

int RedundantGraph::add_vertex(const std::set<int>& members) {
  int vid = fresh_vertex_id();
  add_vertex(vid, members);
  return vid;
}

void RedundantGraph::add_vertex(int vid, const std::set<int>& members) {
  if (vertices_.count(vid)) throw std::invalid_argument("vertex id already present");
  if (members.empty()) throw std::invalid_argument("logical vertices are nonempty");
  for (int q : members) {
    if (qubit_to_vertex_.count(q)) throw std::invalid_argument("qubit id already present");
    if (emitter_ && emitter_pending_ && *emitter_ == q)
      throw std::invalid_argument("qubit id already present");
  }
  vertices_[vid] = members;
  for (int q : members) qubit_to_vertex_[q] = vid;
}

void RedundantGraph::add_logical_edge(int va, int vb) {
  require_vertex(va);
  require_vertex(vb);
  if (va == vb) throw std::invalid_argument("self-loops are not allowed");
  edges_.insert(norm_edge(va, vb));
}

void RedundantGraph::toggle_logical_edge(int va, int vb) {
  require_vertex(va);
  require_vertex(vb);
  if (va == vb) throw std::invalid_argument("self-loops are not allowed");
  auto e = norm_edge(va, vb);
  if (!edges_.erase(e)) edges_.insert(e);
}

void RedundantGraph::init_emitter(int qe) {
  if (emitter_) throw std::logic_error("emitter already present");
  require_fresh_qubit(qe);
  emitter_ = qe;
  emitter_pending_ = true;
}

std::vector<int> RedundantGraph::vertex_ids() const {
  std::vector<int> ids;
  ids.reserve(vertices_.size());
  for (const auto& [v, _] : vertices_) ids.push_back(v);
  return ids;
}

const std::set<int>& RedundantGraph::members(int vid) const {
  require_vertex(vid);
  return vertices_.at(vid);
}

int RedundantGraph::representative(int vid) const { return *members(vid).begin(); }

int RedundantGraph::vertex_of(int q) const {
  auto it = qubit_to_vertex_.find(q);
  if (it == qubit_to_vertex_.end()) throw std::invalid_argument("unknown qubit id");
  return it->second;
}

std::vector<std::pair<int, int>> RedundantGraph::logical_edges() const {
  return {edges_.begin(), edges_.end()};
}

bool RedundantGraph::has_logical_edge(int va, int vb) const {
  return edges_.count(norm_edge(va, vb)) != 0;
}

std::set<int> RedundantGraph::logical_neighbors(int vid) const {
  require_vertex(vid);
  std::set<int> nb;
  for (const auto& [a, b] : edges_) {
    if (a == vid) nb.insert(b);
    if (b == vid) nb.insert(a);
  }
  return nb;
}

std::optional<int> RedundantGraph::emitter_vertex() const {
  if (!emitter_ || emitter_pending_) return std::nullopt;
  return vertex_of(*emitter_);
}

LocalFrame RedundantGraph::frame(int q) const {
  auto it = frames_.find(q);
  return it == frames_.end() ? LocalFrame::identity() : it->second;
}

void RedundantGraph::set_frame(int q, LocalFrame f) {
  if (!qubit_to_vertex_.count(q) && !(emitter_ && *emitter_ == q))
    throw std::invalid_argument("unknown qubit id");
  if (f.is_identity())
    frames_.erase(q);
  else
    frames_[q] = f;
}

void RedundantGraph::compose_frame(int q, LocalFrame byproduct) {
  set_frame(q, frame(q) * byproduct);
}

int RedundantGraph::hadamard_emitter() { return hadamard_emitter(fresh_vertex_id()); }

int RedundantGraph::hadamard_emitter(int new_vertex_id) {
  if (!emitter_) throw std::logic_error("no emitter present");
  if (emitter_pending_) {
    emitter_pending_ = false;
    add_vertex(new_vertex_id, {*emitter_});
    return new_vertex_id;
  }
  int vid = vertex_of(*emitter_);
  if (vertices_[vid].size() < 2)
    throw unsupported_rewrite("emitter Hadamard would empty its vertex");
  return hadamard_push(*emitter_, new_vertex_id);
}

void RedundantGraph::emit_photon(int new_id) {
  if (!emitter_ || emitter_pending_) throw std::logic_error("no emitter in the graph");
  require_fresh_qubit(new_id);
  int vid = vertex_of(*emitter_);
  vertices_[vid].insert(new_id);
  qubit_to_vertex_[new_id] = vid;
}

void RedundantGraph::measure_out_emitter(int outcome) {
  if (!emitter_) throw std::logic_error("no emitter present");
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");
  if (emitter_pending_) {
    // spectator |0>: either X outcome has probability 1/2, no byproducts
    frames_.erase(*emitter_);
    emitter_.reset();
    emitter_pending_ = false;
    return;
  }
  int q = *emitter_;
  measure_member(q, Pauli::X, outcome);
  emitter_.reset();
}

int RedundantGraph::hadamard_push(int q) { return hadamard_push(q, fresh_vertex_id()); }

int RedundantGraph::hadamard_push(int q, int new_vertex_id) {
  int vid = vertex_of(q);
  if (vertices_[vid].size() < 2)
    throw unsupported_rewrite("push-out needs a block of size >= 2");
  if (vertices_.count(new_vertex_id)) throw std::invalid_argument("vertex id already present");
  vertices_[vid].erase(q);
  vertices_[new_vertex_id] = {q};
  qubit_to_vertex_[q] = new_vertex_id;
  edges_.insert(norm_edge(vid, new_vertex_id));
  // physical H conjugates an existing frame on the pushed qubit
  LocalFrame h = LocalFrame::hadamard();
  set_frame(q, h * frame(q) * h);
  return new_vertex_id;
}

void RedundantGraph::remove_member(int q) {
  int vid = vertex_of(q);
  vertices_[vid].erase(q);
  qubit_to_vertex_.erase(q);
  frames_.erase(q);
  if (emitter_ && *emitter_ == q) emitter_.reset();
  if (vertices_[vid].empty()) {
    for (int c : logical_neighbors(vid)) edges_.erase(norm_edge(vid, c));
    vertices_.erase(vid);
  }
}

void RedundantGraph::remove_vertex_and_members(int vid) {
  require_vertex(vid);
  for (int c : logical_neighbors(vid)) edges_.erase(norm_edge(vid, c));
  for (int q : vertices_[vid]) {
    qubit_to_vertex_.erase(q);
    frames_.erase(q);
    if (emitter_ && *emitter_ == q) emitter_.reset();
  }
  vertices_.erase(vid);
}

void RedundantGraph::relocate_diagonal_frame(int q) {
  LocalFrame f = frame(q);
  if (f.is_identity() || !f.is_diagonal()) return;
  int vid = vertex_of(q);
  for (int other : vertices_.at(vid))
    if (other != q) {
      set_frame(q, LocalFrame::identity());
      compose_frame(other, f);
      return;
    }
}

void RedundantGraph::merge_vertices(int keep, int absorb) {
  require_vertex(keep);
  require_vertex(absorb);
  if (keep == absorb) throw std::invalid_argument("cannot merge a vertex with itself");
  for (int c : logical_neighbors(absorb)) {
    edges_.erase(norm_edge(absorb, c));
    if (c != keep) toggle_logical_edge(keep, c);
  }
  for (int q : vertices_[absorb]) {
    vertices_[keep].insert(q);
    qubit_to_vertex_[q] = keep;
  }
  vertices_.erase(absorb);
}

void RedundantGraph::correlated_merge(int keep, int absorb, bool flip) {
  bool were_adjacent = has_logical_edge(keep, absorb);
  std::set<int> absorb_members = members(absorb);
  std::set<int> absorb_nbrs = logical_neighbors(absorb);
  merge_vertices(keep, absorb);
  if (were_adjacent && !flip) compose_frame(representative(keep), LocalFrame::pauli_z());
  if (flip) {
    for (int q : absorb_members) compose_frame(q, LocalFrame::pauli_x());
    for (int d : absorb_nbrs)
      if (d != keep) compose_frame(representative(d), LocalFrame::pauli_z());
  }
}

void RedundantGraph::collapse_vertex(int vid, int s) {
  // effective Z on any member collapses the whole block and cuts its edges
  for (int c : logical_neighbors(vid))
    if (s == 1) compose_frame(representative(c), LocalFrame::pauli_z());
  remove_vertex_and_members(vid);
}

void RedundantGraph::explode_linked_vertex(int vid, int s) {
  // Block projected member-wise onto |s> by the X measurement of its only
  // (singleton) neighbor: every member becomes an isolated singleton vertex
  // with an H Z^s byproduct, all block edges are cut.
  for (int c : logical_neighbors(vid)) {
    edges_.erase(norm_edge(vid, c));
    if (s == 1) compose_frame(representative(c), LocalFrame::pauli_z());
  }
  std::vector<int> ms(vertices_[vid].begin(), vertices_[vid].end());
  vertices_.erase(vid);
  LocalFrame byp = LocalFrame::hadamard();
  if (s == 1) byp = byp * LocalFrame::pauli_z();
  bool reused = false;
  for (int m : ms) {
    int nv = reused ? fresh_vertex_id() : vid;
    reused = true;
    vertices_[nv] = {m};
    qubit_to_vertex_[m] = nv;
    compose_frame(m, byp);
  }
}

void RedundantGraph::singleton_y_rule(int vid, int s) {
  std::vector<int> nbv;
  for (int c : logical_neighbors(vid)) nbv.push_back(c);
  for (size_t i = 0; i < nbv.size(); ++i)
    for (size_t j = i + 1; j < nbv.size(); ++j) toggle_logical_edge(nbv[i], nbv[j]);
  LocalFrame byp = (s == 0) ? LocalFrame::rot_z_p90() : LocalFrame::rot_z_m90();
  remove_vertex_and_members(vid);
  for (int c : nbv) compose_frame(representative(c), byp);
}

void RedundantGraph::logical_local_complement(int vid) {
  require_vertex(vid);
  if (vertices_[vid].size() != 1)
    throw unsupported_rewrite("logical complementation needs a singleton vertex");
  int b = representative(vid);
  std::vector<int> nbv;
  for (int c : logical_neighbors(vid)) nbv.push_back(c);
  for (size_t i = 0; i < nbv.size(); ++i)
    for (size_t j = i + 1; j < nbv.size(); ++j) toggle_logical_edge(nbv[i], nbv[j]);
  compose_frame(b, LocalFrame::rot_x_m90());
  for (int c : nbv) compose_frame(representative(c), LocalFrame::rot_z_p90());
}

std::optional<int> RedundantGraph::forced_member_outcome(int q, Pauli basis) const {
  bool neg;
  Pauli bare = frame(q).conjugate_pauli(basis, neg);
  if (bare != Pauli::X) return std::nullopt;
  int vid = vertex_of(q);
  if (members(vid).size() == 1 && logical_neighbors(vid).empty()) return neg ? 1 : 0;
  return std::nullopt;
}

void RedundantGraph::measure_member(int q, Pauli basis, int outcome) {
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");
  int vid = vertex_of(q);
  bool neg;
  Pauli bare = frame(q).conjugate_pauli(basis, neg);
  int s = outcome ^ (neg ? 1 : 0);
  const auto& block = vertices_[vid];
  switch (bare) {
    case Pauli::Z:
      collapse_vertex(vid, s);
      return;
    case Pauli::Y:
      if (block.size() >= 2) {
        remove_member(q);
        // <y_s| on one GHZ member leaves a logical S-type byproduct
        compose_frame(representative(vid),
                      s == 0 ? LocalFrame::s_dagger() : LocalFrame::s_gate());
      } else {
        singleton_y_rule(vid, s);
      }
      return;
    case Pauli::X: {
      if (block.size() >= 2) {
        remove_member(q);
        if (s == 1) compose_frame(representative(vid), LocalFrame::pauli_z());
        return;
      }
      auto nbv = logical_neighbors(vid);
      if (nbv.empty()) {
        if (s == 1)
          throw deterministic_mismatch("X measurement of an isolated qubit is deterministic");
        remove_vertex_and_members(vid);
        return;
      }
      std::optional<int> b0;
      for (int c : nbv)
        if (members(c).size() == 1) {
          b0 = c;
          break;
        }
      if (b0) {
        logical_local_complement(*b0);
        measure_member(q, basis, outcome);  // resolves through the Y rule
        logical_local_complement(*b0);
        return;
      }
      if (nbv.size() == 1) {
        int b = *nbv.begin();
        remove_vertex_and_members(vid);
        explode_linked_vertex(b, s);
        return;
      }
      if (nbv.size() == 2) {
        // <x_s| inserts (I + (-1)^s Z Z) across the two anchors: a parity merge
        auto it = nbv.begin();
        int u = *it++;
        int v = *it;
        remove_vertex_and_members(vid);
        correlated_merge(u, v, s == 1);
        return;
      }
      throw unsupported_rewrite(
          "X measurement of a singleton vertex with three or more block neighbors leaves the "
          "redundant-graph class");
    }
  }
}

void RedundantGraph::absorb_disjoint(const RedundantGraph& other) {
  for (const auto& [vid, _] : other.vertices_)
    if (vertices_.count(vid)) throw std::invalid_argument("vertex id clash in union");
  for (const auto& [q, _] : other.qubit_to_vertex_)
    if (qubit_to_vertex_.count(q)) throw std::invalid_argument("qubit id clash in union");
  if (emitter_ && other.emitter_) throw std::logic_error("two emitters in one graph");
  vertices_.insert(other.vertices_.begin(), other.vertices_.end());
  edges_.insert(other.edges_.begin(), other.edges_.end());
  qubit_to_vertex_.insert(other.qubit_to_vertex_.begin(), other.qubit_to_vertex_.end());
  frames_.insert(other.frames_.begin(), other.frames_.end());
  if (other.emitter_) {
    emitter_ = other.emitter_;
    emitter_pending_ = other.emitter_pending_;
  }
}

RedundantGraph RedundantGraph::from_graph(const GraphState& g) {
  RedundantGraph rg;
  for (int q : g.qubit_ids()) rg.add_vertex(q, {q});
  for (const auto& [a, b] : g.edges()) rg.add_logical_edge(a, b);
  for (int q : g.qubit_ids())
    if (!g.frame(q).is_identity()) rg.set_frame(q, g.frame(q));
  return rg;
}

GraphState RedundantGraph::to_physical() const {
  GraphState g;
  for (const auto& [vid, ms] : vertices_)
    for (int q : ms) g.add_qubit(q);
  for (const auto& [vid, ms] : vertices_) {
    int rep = *ms.begin();
    for (int q : ms)
      if (q != rep) g.add_edge(rep, q);
  }
  for (const auto& [a, b] : edges_) g.add_edge(representative(a), representative(b));
  for (const auto& [vid, ms] : vertices_) {
    int rep = *ms.begin();
    for (int q : ms) {
      LocalFrame f = frame(q);
      if (q != rep) f = f * LocalFrame::hadamard();
      g.set_frame(q, f);
    }
  }
  if (emitter_ && emitter_pending_) {
    g.add_qubit(*emitter_);
    g.set_frame(*emitter_, frame(*emitter_) * LocalFrame::hadamard());
  }
  return g;
}

}  // namespace gsgen
