#include "gsgen/dense_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsgen/graph_state.hpp"
#include "gsgen/redundant_graph.hpp"

namespace gsgen {

using cd = DenseState::cd;

DenseState::DenseState(int max_qubits) : max_qubits_(max_qubits) {
  amp_ = {cd(1)};
}

bool DenseState::has_qubit(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

int DenseState::pos_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw std::invalid_argument("unknown qubit in dense register");
  return static_cast<int>(it - ids_.begin());
}

void DenseState::add_qubit(int id, const Qubit2& state) {
  if (has_qubit(id)) throw std::invalid_argument("duplicate qubit id in dense register");
  if (num_qubits() + 1 > max_qubits_) throw std::length_error("dense register exceeds max qubits");
  int pos = static_cast<int>(std::lower_bound(ids_.begin(), ids_.end(), id) - ids_.begin());
  ids_.insert(ids_.begin() + pos, id);
  size_t lo_mask = (size_t(1) << pos) - 1;
  std::vector<cd> out(amp_.size() * 2);
  for (size_t x = 0; x < amp_.size(); ++x) {
    size_t base = ((x & ~lo_mask) << 1) | (x & lo_mask);
    out[base] = amp_[x] * state[0];
    out[base | (size_t(1) << pos)] = amp_[x] * state[1];
  }
  amp_ = std::move(out);
}

void DenseState::apply_unitary(int id, const LocalFrame::Matrix& u) {
  int pos = pos_of(id);
  size_t bit = size_t(1) << pos;
  for (size_t x = 0; x < amp_.size(); ++x) {
    if (x & bit) continue;
    cd a0 = amp_[x], a1 = amp_[x | bit];
    amp_[x] = u[0] * a0 + u[1] * a1;
    amp_[x | bit] = u[2] * a0 + u[3] * a1;
  }
}

void DenseState::apply_h(int id) {
  apply_unitary(id, LocalFrame::hadamard().matrix());
}

void DenseState::apply_cz(int a, int b) {
  size_t ba = size_t(1) << pos_of(a), bb = size_t(1) << pos_of(b);
  if (ba == bb) throw std::invalid_argument("cz on identical qubits");
  for (size_t x = 0; x < amp_.size(); ++x)
    if ((x & ba) && (x & bb)) amp_[x] = -amp_[x];
}

void DenseState::apply_emission(int emitter_id, int new_id) {
  if (num_qubits() + 1 > max_qubits_) throw std::length_error("dense register exceeds max qubits");
  add_qubit(new_id, {cd(1), cd(0)});  // fresh |0>, then correlate with the emitter
  size_t nbit = size_t(1) << pos_of(new_id);
  size_t ebit = size_t(1) << pos_of(emitter_id);
  for (size_t x = 0; x < amp_.size(); ++x) {
    if ((x & ebit) && !(x & nbit)) {
      amp_[x | nbit] = amp_[x];
      amp_[x] = cd(0);
    }
  }
}

double DenseState::project_onto(int id, const Qubit2& phi) {
  int pos = pos_of(id);
  size_t bit = size_t(1) << pos;
  size_t lo_mask = bit - 1;
  std::vector<cd> out(amp_.size() / 2);
  for (size_t y = 0; y < out.size(); ++y) {
    size_t x = ((y & ~lo_mask) << 1) | (y & lo_mask);
    out[y] = std::conj(phi[0]) * amp_[x] + std::conj(phi[1]) * amp_[x | bit];
  }
  ids_.erase(ids_.begin() + pos);
  amp_ = std::move(out);
  double p = norm();
  if (p < 1e-12) throw std::domain_error("zero-probability branch requested");
  double inv = 1.0 / std::sqrt(p);
  for (auto& a : amp_) a *= inv;
  return p;
}

double DenseState::project_pauli(int id, Pauli p, int outcome) {
  // eigenstate <v_s| of P with eigenvalue (-1)^s
  Qubit2 phi;
  double r = M_SQRT1_2;
  switch (p) {
    case Pauli::Z:
      phi = outcome == 0 ? Qubit2{cd(1), cd(0)} : Qubit2{cd(0), cd(1)};
      break;
    case Pauli::X:
      phi = outcome == 0 ? Qubit2{cd(r), cd(r)} : Qubit2{cd(r), cd(-r)};
      break;
    case Pauli::Y:
      phi = outcome == 0 ? Qubit2{cd(r), cd(0, r)} : Qubit2{cd(r), cd(0, -r)};
      break;
  }
  return project_onto(id, phi);
}

double DenseState::fuse_type1(int a, int b, int i) {
  if (a == b) throw std::invalid_argument("fusion on identical qubits");
  size_t abit = size_t(1) << pos_of(a);
  int bpos = pos_of(b);
  size_t bbit = size_t(1) << bpos;
  size_t lo_mask = bbit - 1;
  std::vector<cd> out(amp_.size() / 2);
  for (size_t y = 0; y < out.size(); ++y) {
    size_t x = ((y & ~lo_mask) << 1) | (y & lo_mask);
    // survivor bit value must match the contracted b bit
    size_t abit_y = (abit < bbit) ? abit : abit >> 1;
    bool av = y & abit_y;
    cd v = av ? amp_[x | abit | bbit] : amp_[x & ~abit];
    if (av && i == 1) v = -v;
    out[y] = v;
  }
  ids_.erase(ids_.begin() + bpos);
  amp_ = std::move(out);
  double p = norm();
  if (p < 1e-12) throw std::domain_error("zero-probability branch requested");
  double inv = 1.0 / std::sqrt(p);
  for (auto& x : amp_) x *= inv;
  return p;
}

std::optional<DenseState::Qubit2> DenseState::factor_out(int id, double tol) {
  int pos = pos_of(id);
  size_t bit = size_t(1) << pos;
  size_t half = amp_.size() / 2;
  size_t lo_mask = bit - 1;
  // rows r0, r1 over the rest of the register
  std::vector<cd> r0(half), r1(half);
  for (size_t y = 0; y < half; ++y) {
    size_t x = ((y & ~lo_mask) << 1) | (y & lo_mask);
    r0[y] = amp_[x];
    r1[y] = amp_[x | bit];
  }
  double n0 = 0, n1 = 0;
  for (size_t y = 0; y < half; ++y) {
    n0 += std::norm(r0[y]);
    n1 += std::norm(r1[y]);
  }
  const std::vector<cd>& dom = (n0 >= n1) ? r0 : r1;
  const std::vector<cd>& oth = (n0 >= n1) ? r1 : r0;
  double ndom = std::max(n0, n1);
  if (ndom < tol) return std::nullopt;
  cd lam(0);
  for (size_t y = 0; y < half; ++y) lam += std::conj(dom[y]) * oth[y];
  lam /= ndom;
  double resid = 0;
  for (size_t y = 0; y < half; ++y) resid += std::norm(oth[y] - lam * dom[y]);
  if (resid > tol) return std::nullopt;
  cd q0 = (n0 >= n1) ? cd(1) : lam;
  cd q1 = (n0 >= n1) ? lam : cd(1);
  double qn = std::sqrt(std::norm(q0) + std::norm(q1));
  Qubit2 qubit = {q0 / qn, q1 / qn};
  // contract with <qubit|
  project_onto(id, qubit);
  return qubit;
}

double DenseState::norm() const {
  double s = 0;
  for (const auto& a : amp_) s += std::norm(a);
  return s;
}

void DenseState::normalize() {
  double n = std::sqrt(norm());
  if (n < 1e-300) throw std::domain_error("cannot normalize zero state");
  for (auto& a : amp_) a /= n;
}

bool DenseState::equal_up_to_phase(const DenseState& other, double tol) const {
  if (ids_ != other.ids_) return false;
  // phase from the largest amplitude of *this
  size_t k = 0;
  double best = -1;
  for (size_t x = 0; x < amp_.size(); ++x) {
    double a = std::abs(amp_[x]);
    if (a > best) {
      best = a;
      k = x;
    }
  }
  if (best < tol) return false;
  if (std::abs(other.amp_[k]) < tol) return false;
  cd phase = other.amp_[k] / amp_[k];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  double err = 0;
  for (size_t x = 0; x < amp_.size(); ++x) err += std::norm(amp_[x] * phase - other.amp_[x]);
  return std::sqrt(err) <= tol;
}

DenseState build_graph_state(const GraphState& g, int max_qubits) {
  DenseState s(max_qubits);
  for (int q : g.qubit_ids()) s.add_plus(q);
  for (const auto& [a, b] : g.edges()) s.apply_cz(a, b);
  for (int q : g.qubit_ids()) {
    LocalFrame f = g.frame(q);
    if (!f.is_identity()) s.apply_frame(q, f);
  }
  return s;
}

DenseState build_redundant_state(const RedundantGraph& rg, int max_qubits) {
  DenseState s(max_qubits);
  // GHZ block per vertex: |0..0> + |1..1> via emission chain from |+>
  for (int vid : rg.vertex_ids()) {
    const auto& members = rg.members(vid);
    auto it = members.begin();
    int first = *it;
    s.add_plus(first);
    for (++it; it != members.end(); ++it) s.apply_emission(first, *it);
  }
  for (const auto& [a, b] : rg.logical_edges()) s.apply_cz(rg.representative(a), rg.representative(b));
  if (rg.emitter_pending()) s.add_zero(rg.emitter_qubit().value());
  for (int q : s.qubit_ids()) {
    LocalFrame f = rg.frame(q);
    if (!f.is_identity()) s.apply_frame(q, f);
  }
  return s;
}

}  // namespace gsgen
