#include "gsgen/fusion.hpp"

#include <cmath>
#include <stdexcept>

namespace gsgen {

namespace {

// Diagonal tags form the cyclic group {I, S, Z, Sdag} = diag(1, i^q).
int diag_quarter(const LocalFrame& f, const char* gate) {
  if (!f.is_diagonal())
    throw unsupported_rewrite(std::string(gate) + " through a non-diagonal frame on a fused photon");
  const auto& m = f.matrix();
  std::complex<double> w = m[3] / m[0];
  for (int q = 0; q < 4; ++q) {
    std::complex<double> iq(q == 0 ? 1 : (q == 2 ? -1 : 0), q == 1 ? 1 : (q == 3 ? -1 : 0));
    if (std::abs(w - iq) < 1e-9) return q;
  }
  throw std::logic_error("diagonal frame with unexpected phase");
}

LocalFrame make_diag(int quarter) {
  switch (((quarter % 4) + 4) % 4) {
    case 0: return LocalFrame::identity();
    case 1: return LocalFrame::s_gate();
    case 2: return LocalFrame::pauli_z();
    default: return LocalFrame::s_dagger();
  }
}

int sole_neighbor(const RedundantGraph& rg, int vid, const char* gate) {
  auto nb = rg.logical_neighbors(vid);
  if (nb.size() != 1)
    throw unsupported_rewrite(std::string(gate) +
                              " on a bare endpoint needs exactly one block neighbor");
  return *nb.begin();
}

// GHZ-merge of `absorb` into `keep` where the logical labels satisfy
// absorb = keep xor flip, with phases i^(diag_q * keep_label) recorded on a
// keep-side member before merging.
void merge_with_correlation(RedundantGraph& rg, int keep, int absorb, bool flip, int diag_q) {
  if (diag_q % 4 != 0) rg.compose_frame(rg.representative(keep), make_diag(diag_q));
  rg.correlated_merge(keep, absorb, flip);
}

// Applies (I + i^cq Z_u Z_v)/norm on the representatives of two distinct
// blocks: a parity merge for real phases, an edge plus S-type rotations for
// imaginary ones.
void apply_parity_link(RedundantGraph& rg, int u, int v, int cq) {
  if (cq % 2 == 0) {
    merge_with_correlation(rg, u, v, cq == 2, 0);
  } else {
    rg.toggle_logical_edge(u, v);
    LocalFrame s = (cq == 1) ? LocalFrame::s_dagger() : LocalFrame::s_gate();
    rg.compose_frame(rg.representative(u), s);
    rg.compose_frame(rg.representative(v), s);
  }
}

}  // namespace

void fuse_type1(RedundantGraph& rg, int qa, int qb, int i) {
  int va = rg.vertex_of(qa), vb = rg.vertex_of(qb);
  if (va == vb) throw std::invalid_argument("fusion endpoints share a vertex");
  int wa = diag_quarter(rg.frame(qa), "type1");
  int wb = diag_quarter(rg.frame(qb), "type1");
  if (rg.has_logical_edge(va, vb)) {
    rg.toggle_logical_edge(va, vb);
    i ^= 1;
  }
  rg.merge_vertices(va, vb);
  rg.remove_member(qb);
  rg.set_frame(qa, make_diag(wa + wb + 2 * i));
}

void fuse_type2_variant(RedundantGraph& rg, int qa, int qb, int i, int j) {
  fuse_type1(rg, qa, qb, i);
  // the Z^i byproduct on the survivor flips the Y outcome via conjugation
  rg.measure_member(qa, Pauli::Y, j);
}

void fuse_type2_bell(RedundantGraph& rg, int qa, int qb, int i, int j) {
  int va = rg.vertex_of(qa), vb = rg.vertex_of(qb);
  if (va == vb) throw std::invalid_argument("fusion endpoints share a vertex");
  if (rg.has_logical_edge(va, vb))
    throw unsupported_rewrite("bell fusion between adjacent vertices is not supported");
  int cq = (2 * ((i ^ j) & 1) + diag_quarter(rg.frame(qa), "bell") +
            diag_quarter(rg.frame(qb), "bell")) % 4;
  bool a_multi = rg.members(va).size() >= 2;
  bool b_multi = rg.members(vb).size() >= 2;

  if (a_multi && b_multi) {
    rg.merge_vertices(va, vb);
    rg.remove_member(qa);
    rg.remove_member(qb);
    rg.compose_frame(rg.representative(va), make_diag(cq));
    return;
  }
  if (a_multi != b_multi) {
    int vm = a_multi ? va : vb;
    int vs = a_multi ? vb : va;
    int qm = a_multi ? qa : qb;
    int anchor = sole_neighbor(rg, vs, "bell");
    rg.remove_member(qm);
    rg.remove_vertex_and_members(vs);
    rg.toggle_logical_edge(vm, anchor);
    rg.compose_frame(rg.representative(vm), make_diag(cq));
    return;
  }
  // both endpoints bare: the projector acts through the anchors
  int ax = sole_neighbor(rg, va, "bell");
  int ay = sole_neighbor(rg, vb, "bell");
  rg.remove_vertex_and_members(va);
  rg.remove_vertex_and_members(vb);
  if (ax == ay) {
    if (cq == 2) throw deterministic_mismatch("zero-probability bell branch");
    return;  // (1 + i^cq) is a scalar here
  }
  apply_parity_link(rg, ax, ay, cq);
}

void fuse_type2_xz(RedundantGraph& rg, int qa, int qb, int i, int j) {
  int va = rg.vertex_of(qa), vb = rg.vertex_of(qb);
  if (va == vb) throw std::invalid_argument("fusion endpoints share a vertex");
  if (rg.has_logical_edge(va, vb))
    throw unsupported_rewrite("xz fusion between adjacent vertices is not supported");
  int m = (i ^ j) & 1;
  int wa = diag_quarter(rg.frame(qa), "xz");
  bool a_multi = rg.members(va).size() >= 2;
  bool b_multi = rg.members(vb).size() >= 2;

  // A diagonal byproduct on a block member is a logical byproduct, so on a
  // multi-member X side it can be relocated off the fused photon.
  LocalFrame fb = rg.frame(qb);
  int wb = diag_quarter(fb, "xz");
  if (wb != 0 && b_multi) {
    rg.set_frame(qb, LocalFrame::identity());
    for (int q2 : rg.members(vb))
      if (q2 != qb) {
        rg.compose_frame(q2, fb);
        break;
      }
    wb = 0;
  }
  if (wb % 2 != 0)
    throw unsupported_rewrite("xz fusion needs an I/Z frame on a bare X-side photon");
  // a Z frame on a bare X-side photon anti-correlates the collapse
  bool zflip = (wb == 2);
  int cq = (2 * m + wa) % 4;

  if (a_multi && b_multi) {
    rg.remove_member(qa);
    rg.remove_member(qb);
    rg.toggle_logical_edge(va, vb);
    rg.compose_frame(rg.representative(va), make_diag(cq));
    return;
  }
  if (a_multi && !b_multi) {
    // the bare X-side endpoint collapses its anchor block into the residual
    int anchor = sole_neighbor(rg, vb, "xz");
    rg.remove_member(qa);
    rg.remove_vertex_and_members(vb);
    merge_with_correlation(rg, va, anchor, zflip, cq);
    return;
  }
  if (!a_multi && b_multi) {
    // the bare Z side inserts Z^s on its anchor: a parity link to the residual
    int anchor = sole_neighbor(rg, va, "xz");
    rg.remove_member(qb);
    rg.remove_vertex_and_members(va);
    apply_parity_link(rg, anchor, vb, cq);
    return;
  }
  // both bare
  int ax = sole_neighbor(rg, va, "xz");
  int ay = sole_neighbor(rg, vb, "xz");
  rg.remove_vertex_and_members(va);
  rg.remove_vertex_and_members(vb);
  if (ax == ay) {
    rg.compose_frame(rg.representative(ax), make_diag(zflip ? (4 - cq) % 4 : cq + 2));
    return;
  }
  rg.toggle_logical_edge(ax, ay);
  if (!zflip) {
    rg.compose_frame(rg.representative(ay), make_diag(cq));
  } else {
    rg.compose_frame(rg.representative(ay), make_diag((4 - cq) % 4));
    rg.compose_frame(rg.representative(ax), LocalFrame::pauli_z());
  }
}

void fail_fusion(RedundantGraph& rg, int qa, int qb, int za, int zb) {
  if (rg.vertex_of(qa) == rg.vertex_of(qb))
    throw std::invalid_argument("fusion endpoints share a vertex");
  rg.measure_member(qa, Pauli::Z, za);
  rg.measure_member(qb, Pauli::Z, zb);
}

void fail_fusion_xz(RedundantGraph& rg, int qa, int qb, int sx, int sz) {
  if (rg.vertex_of(qa) == rg.vertex_of(qb))
    throw std::invalid_argument("fusion endpoints share a vertex");
  rg.measure_member(qa, Pauli::X, sx);
  rg.measure_member(qb, Pauli::Z, sz);
}

BoostedAttempt RngAttemptSource::next_attempt() {
  BoostedAttempt at;
  at.lost_a = !rng_.bernoulli(eta_);
  at.lost_b = !rng_.bernoulli(eta_);
  at.success = rng_.bit() == 0;
  if (at.success) {
    at.i = rng_.bit();
    at.j = rng_.bit();
  } else {
    at.za = rng_.bit();
    at.zb = rng_.bit();
  }
  return at;
}

BoostedAttempt ScriptedAttemptSource::next_attempt() {
  if (pos_ >= attempts_.size()) throw std::logic_error("attempt script exhausted");
  return attempts_[pos_++];
}

FusionOutcome boosted_fuse(RedundantGraph& rg, int va, int vb, int m, AttemptSource& src,
                           std::vector<FusionTraceRecord>* trace) {
  if (m < 1) throw std::invalid_argument("boosted fusion needs m >= 1");
  if (va == vb) throw std::invalid_argument("cannot fuse a vertex with itself");
  if (static_cast<int>(rg.members(va).size()) < m + 1 ||
      static_cast<int>(rg.members(vb).size()) < m + 1)
    throw std::invalid_argument("boosted fusion needs m allocated photons plus a survivor per vertex");
  if (auto e = rg.emitter_qubit();
      e && !rg.emitter_pending() &&
      (rg.vertex_of(*e) == va || rg.vertex_of(*e) == vb))
    throw std::invalid_argument("cannot allocate the emitter for a fusion");

  auto log = [&](FusionKind k, int attempts, int bi, int bj, int qa, int qb) {
    if (!trace) return;
    FusionTraceRecord r;
    r.type = "boosted";
    r.qa = qa;
    r.qb = qb;
    r.outcome_bits[0] = bi;
    r.outcome_bits[1] = bj;
    r.kind = k == FusionKind::Success ? "success"
             : k == FusionKind::PartialFail ? "partial_fail"
                                            : "complete_fail";
    r.attempts_used = attempts;
    trace->push_back(r);
  };

  for (int l = 1; l <= m; ++l) {
    int qa = *rg.members(va).begin();
    int qb = *rg.members(vb).begin();
    // logical byproducts sit on the lowest member; hand out clean photons
    rg.relocate_diagonal_frame(qa);
    rg.relocate_diagonal_frame(qb);
    rg.hadamard_push(qa);
    rg.hadamard_push(qb);
    BoostedAttempt at = src.next_attempt();
    if (at.lost_a || at.lost_b) {
      log(FusionKind::CompleteFail, l, 0, 0, qa, qb);
      return {FusionKind::CompleteFail, l};
    }
    if (at.success) {
      fuse_type2_variant(rg, qa, qb, at.i, at.j);
      for (int side : {va, vb}) {
        for (int k = l; k < m; ++k) {
          if (!src.leftover_detected()) {
            log(FusionKind::CompleteFail, l, at.i, at.j, qa, qb);
            return {FusionKind::CompleteFail, l};
          }
          int q = *rg.members(side).begin();
          rg.measure_x_member(q, src.leftover_outcome());
        }
      }
      log(FusionKind::Success, l, at.i, at.j, qa, qb);
      return {FusionKind::Success, l, at.i, at.j};
    }
    fail_fusion(rg, qa, qb, at.za, at.zb);
  }
  log(FusionKind::PartialFail, m, 0, 0, -1, -1);
  return {FusionKind::PartialFail, m};
}

}  // namespace gsgen
