#include "gsgen/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "gsgen/dense_state.hpp"
#include "gsgen/fusion.hpp"
#include "gsgen/json_io.hpp"
#include "gsgen/rng.hpp"

namespace gsgen {

namespace {

constexpr double kProbTol = 1e-10;

// thrown by a check when the generated input has no valid shape this round
struct skip_case {};

struct Ctx {
  SplitMix64 rng;
  int max_q;
  double tol;

  int pick(int n) { return static_cast<int>(rng.next() % static_cast<uint64_t>(n)); }
  bool chance(double p) { return rng.bernoulli(p); }
};

LocalFrame random_frame(Ctx& c) {
  // random walk over the generators covers the whole group
  LocalFrame f = LocalFrame::identity();
  int steps = c.pick(7);
  for (int s = 0; s < steps; ++s)
    f = f * (c.chance(0.5) ? LocalFrame::hadamard() : LocalFrame::s_gate());
  return f;
}

LocalFrame random_diag_frame(Ctx& c) {
  switch (c.pick(4)) {
    case 0: return LocalFrame::identity();
    case 1: return LocalFrame::s_gate();
    case 2: return LocalFrame::pauli_z();
    default: return LocalFrame::s_dagger();
  }
}

LocalFrame random_z_axis_frame(Ctx& c) {
  LocalFrame f = random_diag_frame(c);
  if (c.chance(0.5)) f = f * LocalFrame::pauli_x();
  return f;
}

GraphState random_graph(Ctx& c, int nmin = 2) {
  int n = nmin + c.pick(c.max_q - nmin + 1);
  GraphState g = GraphState::with_qubits(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (c.chance(0.4)) g.add_edge(a, b);
  for (int q = 0; q < n; ++q)
    if (c.chance(0.4)) g.set_frame(q, random_frame(c));
  return g;
}

RedundantGraph random_redundant(Ctx& c, int max_physical, bool allow_fancy_frames = true) {
  int n = 2 + c.pick(std::max(1, max_physical - 1));
  RedundantGraph rg;
  int q = 0;
  std::vector<int> vids;
  while (q < n) {
    int size = 1 + c.pick(std::min(3, n - q));
    std::set<int> ms;
    for (int k = 0; k < size; ++k) ms.insert(q++);
    vids.push_back(rg.add_vertex(ms));
  }
  for (size_t i = 0; i < vids.size(); ++i)
    for (size_t j = i + 1; j < vids.size(); ++j)
      if (c.chance(0.4)) rg.add_logical_edge(vids[i], vids[j]);
  for (int id = 0; id < n; ++id) {
    if (c.chance(0.6)) continue;
    if (allow_fancy_frames && c.chance(0.25))
      rg.set_frame(id, random_frame(c));
    else
      rg.set_frame(id, random_diag_frame(c));
  }
  return rg;
}

int random_member(Ctx& c, const RedundantGraph& rg) {
  auto vids = rg.vertex_ids();
  int vid = vids[c.pick(static_cast<int>(vids.size()))];
  const auto& ms = rg.members(vid);
  auto it = ms.begin();
  std::advance(it, c.pick(static_cast<int>(ms.size())));
  return *it;
}

/// Factors product-state leftovers out of `expected` until its register
/// matches `actual`, then compares up to a global phase.
std::optional<std::string> states_match(DenseState expected, const DenseState& actual, double tol) {
  std::vector<int> extra;
  for (int q : expected.qubit_ids()) {
    bool found = false;
    for (int r : actual.qubit_ids())
      if (q == r) found = true;
    if (!found) extra.push_back(q);
  }
  for (int q : extra) {
    auto f = expected.factor_out(q, tol);
    if (!f) return "leftover qubit " + std::to_string(q) + " is still entangled";
  }
  if (expected.qubit_ids() != actual.qubit_ids()) return std::string("register mismatch");
  if (!expected.equal_up_to_phase(actual, tol)) return std::string("states differ beyond tolerance");
  return std::nullopt;
}

std::string dump_graph(const GraphState& g) { return io::graph_to_json(g); }
std::string dump_rg(const RedundantGraph& rg) { return io::redundant_to_json(rg); }

// ---- plain graph rules -------------------------------------------------

std::optional<std::string> check_local_complement(Ctx& c) {
  GraphState g = random_graph(c);
  int n = g.num_qubits();
  int a = c.pick(n);
  DenseState before = build_graph_state(g);
  GraphState h = g;
  h.local_complement(a);
  if (auto err = states_match(before, build_graph_state(h), c.tol))
    return "local_complement changed the state: " + *err + " on " + dump_graph(g);
  GraphState h2 = h;
  h2.local_complement(a);
  if (!canonical_equal(g, h2, /*up_to_frames=*/true))
    return "local_complement is not a graph involution on " + dump_graph(g);
  return std::nullopt;
}

std::optional<std::string> check_cz(Ctx& c) {
  GraphState g = random_graph(c);
  int n = g.num_qubits();
  int a = c.pick(n), b = c.pick(n);
  if (a == b) b = (b + 1) % n;
  g.set_frame(a, random_z_axis_frame(c));
  g.set_frame(b, random_z_axis_frame(c));
  DenseState d = build_graph_state(g);
  d.apply_cz(a, b);
  GraphState h = g;
  h.cz(a, b);
  if (auto err = states_match(d, build_graph_state(h), c.tol))
    return "cz: " + *err + " on " + dump_graph(g);
  return std::nullopt;
}

std::optional<std::string> check_measure_plain(Ctx& c, Pauli basis) {
  GraphState g = random_graph(c);
  int n = g.num_qubits();
  int a = c.pick(n);
  double psum = 0;
  for (int outcome : {0, 1}) {
    DenseState d = build_graph_state(g);
    bool dense_ok = true;
    double p = 0;
    try {
      p = d.project_pauli(a, basis, outcome);
    } catch (const std::domain_error&) {
      dense_ok = false;
    }
    GraphState h = g;
    bool rewrite_ok = true;
    try {
      h.measure(a, basis, outcome);
    } catch (const deterministic_mismatch&) {
      rewrite_ok = false;
    }
    if (dense_ok != rewrite_ok)
      return "measurement determinism disagrees with the oracle on " + dump_graph(g);
    if (!dense_ok) continue;
    psum += p;
    if (std::abs(p - 0.5) > 1e-9 && std::abs(p - 1.0) > 1e-9)
      return "branch probability is neither 1/2 nor 1 on " + dump_graph(g);
    if (auto err = states_match(d, build_graph_state(h), c.tol))
      return "measurement rewrite: " + *err + " on " + dump_graph(g);
    if (h.has_qubit(a)) return "measured qubit still present";
  }
  if (std::abs(psum - 1.0) > kProbTol)
    return "branch probabilities do not sum to one on " + dump_graph(g);
  return std::nullopt;
}

// ---- redundant rules ----------------------------------------------------

std::optional<std::string> check_redundant_definition(Ctx& c) {
  RedundantGraph rg = random_redundant(c, c.max_q);
  DenseState a = build_redundant_state(rg);
  DenseState b = build_graph_state(rg.to_physical());
  if (!a.equal_up_to_phase(b, c.tol))
    return "block definition and push-out view disagree on " + dump_rg(rg);
  return std::nullopt;
}

std::optional<std::string> check_emit(Ctx& c) {
  RedundantGraph rg = random_redundant(c, c.max_q - 2);
  // put an emitter vertex next to a random spectator graph
  RedundantGraph erg;
  int qe = 1000;
  erg.init_emitter(qe);
  int ve = erg.hadamard_emitter(900);
  erg.absorb_disjoint(rg);
  for (int vid : rg.vertex_ids())
    if (c.chance(0.5)) erg.toggle_logical_edge(ve, vid);
  int grow = c.pick(2);
  for (int k = 0; k < grow; ++k) erg.emit_photon(1001 + k);

  DenseState d = build_redundant_state(erg);
  int new_id = 1001 + grow;
  d.apply_emission(qe, new_id);
  RedundantGraph after = erg;
  after.emit_photon(new_id);
  if (auto err = states_match(d, build_redundant_state(after), c.tol))
    return "emission: " + *err + " on " + dump_rg(erg);
  return std::nullopt;
}

std::optional<std::string> check_h_push(Ctx& c) {
  RedundantGraph rg = random_redundant(c, c.max_q);
  std::optional<int> pick;
  for (int vid : rg.vertex_ids())
    if (rg.members(vid).size() >= 2) {
      auto it = rg.members(vid).begin();
      std::advance(it, c.pick(static_cast<int>(rg.members(vid).size())));
      pick = *it;
      break;
    }
  if (!pick) throw skip_case{};  // no pushable block this round
  DenseState d = build_redundant_state(rg);
  d.apply_h(*pick);
  RedundantGraph after = rg;
  after.hadamard_push(*pick);
  if (auto err = states_match(d, build_redundant_state(after), c.tol))
    return "push-out: " + *err + " on " + dump_rg(rg);
  return std::nullopt;
}

std::optional<std::string> check_hadamard_emitter(Ctx& c) {
  // pending activation equals a plain H on the spectator |0>
  RedundantGraph rg;
  rg.init_emitter(0);
  DenseState d = build_redundant_state(rg);
  d.apply_h(0);
  RedundantGraph after = rg;
  after.hadamard_emitter();
  if (auto err = states_match(d, build_redundant_state(after), c.tol))
    return "emitter activation: " + *err;
  // and once photons exist the push-out path must hold
  after.emit_photon(1);
  after.emit_photon(2);
  DenseState d2 = build_redundant_state(after);
  d2.apply_h(0);
  RedundantGraph pushed = after;
  pushed.hadamard_emitter();
  if (auto err = states_match(d2, build_redundant_state(pushed), c.tol))
    return "emitter push: " + *err + " on " + dump_rg(after);
  return std::nullopt;
}

std::optional<std::string> check_member_measure(Ctx& c, Pauli basis) {
  RedundantGraph rg = random_redundant(c, c.max_q);
  int q = random_member(c, rg);
  double psum = 0;
  bool any = false;
  for (int outcome : {0, 1}) {
    DenseState d = build_redundant_state(rg);
    bool dense_ok = true;
    double p = 0;
    try {
      p = d.project_pauli(q, basis, outcome);
    } catch (const std::domain_error&) {
      dense_ok = false;
    }
    RedundantGraph h = rg;
    bool rewrite_ok = true;
    try {
      h.measure_member(q, basis, outcome);
    } catch (const deterministic_mismatch&) {
      rewrite_ok = false;
    } catch (const unsupported_rewrite&) {
      throw skip_case{};  // outside the representable class
    }
    if (dense_ok != rewrite_ok)
      return "member measurement determinism disagrees on " + dump_rg(rg);
    if (!dense_ok) continue;
    any = true;
    psum += p;
    if (std::abs(p - 0.5) > 1e-9 && std::abs(p - 1.0) > 1e-9)
      return "member branch probability is neither 1/2 nor 1 on " + dump_rg(rg);
    if (auto err = states_match(d, build_redundant_state(h), c.tol))
      return "member measurement: " + *err + " on " + dump_rg(rg);
  }
  if (any && std::abs(psum - 1.0) > kProbTol)
    return "member branch probabilities do not sum to one on " + dump_rg(rg);
  return std::nullopt;
}

std::optional<std::string> check_measure_out_emitter(Ctx& c) {
  // small emitter pipeline, then measure out
  std::vector<int> sizes;
  int total = 0;
  int blocks = 1 + c.pick(3);
  for (int b = 0; b < blocks && total < c.max_q - 2; ++b) {
    int s = 1 + c.pick(2);
    sizes.push_back(s);
    total += s;
  }
  RedundantGraph rg;
  rg.init_emitter(0);
  int q = 1;
  for (int s : sizes) {
    rg.hadamard_emitter();
    for (int k = 0; k < s; ++k) rg.emit_photon(q++);
  }
  for (int outcome : {0, 1}) {
    DenseState d = build_redundant_state(rg);
    bool dense_ok = true;
    try {
      d.project_pauli(0, Pauli::X, outcome);
    } catch (const std::domain_error&) {
      dense_ok = false;
    }
    RedundantGraph h = rg;
    bool rewrite_ok = true;
    try {
      h.measure_out_emitter(outcome);
    } catch (const deterministic_mismatch&) {
      rewrite_ok = false;
    }
    if (dense_ok != rewrite_ok) return "emitter measurement determinism disagrees on " + dump_rg(rg);
    if (!dense_ok) continue;
    if (auto err = states_match(d, build_redundant_state(h), c.tol))
      return "measure-out: " + *err + " on " + dump_rg(rg);
  }
  return std::nullopt;
}

// two disjoint random redundant graphs in one object, with designated
// fusion endpoints whose blocks have at least `min_a` / `min_b` members
struct FusionInput {
  RedundantGraph rg;
  int qa = -1, qb = -1;
};

FusionInput random_fusion_input(Ctx& c, int min_a, int min_b) {
  int budget = c.max_q;
  int need = std::max(min_a + 1, 2) + std::max(min_b + 1, 2);
  if (budget < need) throw skip_case{};
  FusionInput fi;
  // side A
  int na = std::max(min_a, 1) + c.pick(2);
  std::set<int> ma;
  for (int k = 0; k < na; ++k) ma.insert(k);
  int va = fi.rg.add_vertex(ma);
  int q = na;
  if (c.chance(0.7) && q + 1 <= budget / 2) {
    int snb = fi.rg.add_vertex({q++});
    fi.rg.add_logical_edge(va, snb);
  }
  fi.qa = c.pick(na);
  // side B with an id offset
  int base = budget / 2 + 2;
  int nb = std::max(min_b, 1) + c.pick(2);
  std::set<int> mb;
  for (int k = 0; k < nb; ++k) mb.insert(base + k);
  int vb = fi.rg.add_vertex(mb);
  int q2 = base + nb;
  if (c.chance(0.7) && q2 < base + budget / 2 - 1) {
    int snb = fi.rg.add_vertex({q2++});
    fi.rg.add_logical_edge(vb, snb);
  }
  fi.qb = base + c.pick(nb);
  for (int id : {fi.qa, fi.qb})
    if (c.chance(0.5)) fi.rg.set_frame(id, random_diag_frame(c));
  return fi;
}

std::optional<std::string> check_fuse_type1(Ctx& c) {
  FusionInput fi = random_fusion_input(c, 1, 1);
  int i = c.pick(2);
  DenseState d = build_redundant_state(fi.rg);
  double p = d.fuse_type1(fi.qa, fi.qb, i);
  if (p <= 0 || p > 1 + kProbTol) return "type1 branch probability out of range";
  RedundantGraph h = fi.rg;
  fuse_type1(h, fi.qa, fi.qb, i);
  if (auto err = states_match(d, build_redundant_state(h), c.tol))
    return "type1: " + *err + " on " + dump_rg(fi.rg);
  return std::nullopt;
}

std::optional<std::string> check_fuse_variant(Ctx& c) {
  FusionInput fi = random_fusion_input(c, 1, 1);
  int i = c.pick(2), j = c.pick(2);
  DenseState d = build_redundant_state(fi.rg);
  bool dense_ok = true;
  try {
    d.fuse_type1(fi.qa, fi.qb, i);
    d.project_pauli(fi.qa, Pauli::Y, j);
  } catch (const std::domain_error&) {
    dense_ok = false;
  }
  RedundantGraph h = fi.rg;
  bool rewrite_ok = true;
  try {
    fuse_type2_variant(h, fi.qa, fi.qb, i, j);
  } catch (const deterministic_mismatch&) {
    rewrite_ok = false;
  }
  if (dense_ok != rewrite_ok) return "variant determinism disagrees on " + dump_rg(fi.rg);
  if (!dense_ok) return std::nullopt;
  if (auto err = states_match(d, build_redundant_state(h), c.tol))
    return "type2 variant: " + *err + " on " + dump_rg(fi.rg);
  return std::nullopt;
}

std::optional<std::string> check_fuse_bell(Ctx& c) {
  int amin = c.chance(0.5) ? 2 : 1;
  int bmin = c.chance(0.5) ? 2 : 1;
  FusionInput fi = random_fusion_input(c, amin, bmin);
  // bare endpoints need their single block neighbor
  for (int q : {fi.qa, fi.qb}) {
    int v = fi.rg.vertex_of(q);
    if (fi.rg.members(v).size() == 1 && fi.rg.logical_neighbors(v).size() != 1) throw skip_case{};
  }
  int i = c.pick(2), j = c.pick(2);
  DenseState d = build_redundant_state(fi.rg);
  bool dense_ok = true;
  try {
    d.fuse_type1(fi.qa, fi.qb, i ^ j);
    d.project_pauli(fi.qa, Pauli::X, 0);
  } catch (const std::domain_error&) {
    dense_ok = false;
  }
  RedundantGraph h = fi.rg;
  bool rewrite_ok = true;
  try {
    fuse_type2_bell(h, fi.qa, fi.qb, i, j);
  } catch (const deterministic_mismatch&) {
    rewrite_ok = false;
  } catch (const unsupported_rewrite&) {
    throw skip_case{};
  }
  if (dense_ok != rewrite_ok) return "bell determinism disagrees on " + dump_rg(fi.rg);
  if (!dense_ok) return std::nullopt;
  if (auto err = states_match(d, build_redundant_state(h), c.tol))
    return "type2 bell: " + *err + " on " + dump_rg(fi.rg);
  return std::nullopt;
}

std::optional<std::string> check_fuse_xz(Ctx& c) {
  int amin = c.chance(0.5) ? 2 : 1;
  int bmin = c.chance(0.5) ? 2 : 1;
  FusionInput fi = random_fusion_input(c, amin, bmin);
  for (int q : {fi.qa, fi.qb}) {
    int v = fi.rg.vertex_of(q);
    if (fi.rg.members(v).size() == 1 && fi.rg.logical_neighbors(v).size() != 1) throw skip_case{};
  }
  // the X-side photon only folds Z-class frames
  if (fi.rg.frame(fi.qb) == LocalFrame::s_gate() ||
      fi.rg.frame(fi.qb) == LocalFrame::s_dagger())
    fi.rg.set_frame(fi.qb, LocalFrame::identity());
  int i = c.pick(2), j = c.pick(2);
  DenseState d = build_redundant_state(fi.rg);
  bool dense_ok = true;
  try {
    d.apply_h(fi.qb);
    d.fuse_type1(fi.qa, fi.qb, i ^ j);
    d.project_pauli(fi.qa, Pauli::X, 0);
  } catch (const std::domain_error&) {
    dense_ok = false;
  }
  RedundantGraph h = fi.rg;
  bool rewrite_ok = true;
  try {
    fuse_type2_xz(h, fi.qa, fi.qb, i, j);
  } catch (const deterministic_mismatch&) {
    rewrite_ok = false;
  } catch (const unsupported_rewrite&) {
    throw skip_case{};
  }
  if (dense_ok != rewrite_ok) return "xz determinism disagrees on " + dump_rg(fi.rg);
  if (!dense_ok) return std::nullopt;
  if (auto err = states_match(d, build_redundant_state(h), c.tol))
    return "type2 xz: " + *err + " on " + dump_rg(fi.rg);
  return std::nullopt;
}

std::optional<std::string> check_fail_fusion(Ctx& c) {
  FusionInput fi = random_fusion_input(c, 1, 1);
  int za = c.pick(2), zb = c.pick(2);
  DenseState d = build_redundant_state(fi.rg);
  d.project_pauli(fi.qa, Pauli::Z, za);
  d.project_pauli(fi.qb, Pauli::Z, zb);
  RedundantGraph h = fi.rg;
  fail_fusion(h, fi.qa, fi.qb, za, zb);
  if (auto err = states_match(d, build_redundant_state(h), c.tol))
    return "fail_fusion: " + *err + " on " + dump_rg(fi.rg);
  return std::nullopt;
}

std::optional<std::string> check_fail_fusion_xz(Ctx& c) {
  FusionInput fi = random_fusion_input(c, 2, 1);
  int sx = c.pick(2), sz = c.pick(2);
  DenseState d = build_redundant_state(fi.rg);
  bool dense_ok = true;
  try {
    d.project_pauli(fi.qa, Pauli::X, sx);
    d.project_pauli(fi.qb, Pauli::Z, sz);
  } catch (const std::domain_error&) {
    dense_ok = false;
  }
  RedundantGraph h = fi.rg;
  bool rewrite_ok = true;
  try {
    fail_fusion_xz(h, fi.qa, fi.qb, sx, sz);
  } catch (const deterministic_mismatch&) {
    rewrite_ok = false;
  } catch (const unsupported_rewrite&) {
    throw skip_case{};
  }
  if (dense_ok != rewrite_ok) return "xz failure determinism disagrees on " + dump_rg(fi.rg);
  if (!dense_ok) return std::nullopt;
  if (auto err = states_match(d, build_redundant_state(h), c.tol))
    return "fail_fusion_xz: " + *err + " on " + dump_rg(fi.rg);
  return std::nullopt;
}

}  // namespace

VerifyReport run_verification(int max_qubits, long long cases, uint64_t seed, double tol) {
  using Check = std::function<std::optional<std::string>(Ctx&)>;
  std::vector<std::pair<std::string, Check>> checks = {
      {"local_complement", check_local_complement},
      {"cz", check_cz},
      {"measure_x", [](Ctx& c) { return check_measure_plain(c, Pauli::X); }},
      {"measure_y", [](Ctx& c) { return check_measure_plain(c, Pauli::Y); }},
      {"measure_z", [](Ctx& c) { return check_measure_plain(c, Pauli::Z); }},
      {"redundant_definition", check_redundant_definition},
      {"emit_photon", check_emit},
      {"hadamard_push", check_h_push},
      {"hadamard_emitter", check_hadamard_emitter},
      {"member_x", [](Ctx& c) { return check_member_measure(c, Pauli::X); }},
      {"member_y", [](Ctx& c) { return check_member_measure(c, Pauli::Y); }},
      {"member_z", [](Ctx& c) { return check_member_measure(c, Pauli::Z); }},
      {"measure_out_emitter", check_measure_out_emitter},
      {"fuse_type1", check_fuse_type1},
      {"fuse_type2_variant", check_fuse_variant},
      {"fuse_type2_bell", check_fuse_bell},
      {"fuse_type2_xz", check_fuse_xz},
      {"fail_fusion", check_fail_fusion},
      {"fail_fusion_xz", check_fail_fusion_xz},
  };

  VerifyReport report;
  for (auto& [name, fn] : checks) {
    RuleReport rr;
    rr.rule = name;
    Ctx ctx{SplitMix64(mix_seed(seed, std::hash<std::string>{}(name))), max_qubits, tol};
    for (long long k = 0; k < cases; ++k) {
      try {
        std::optional<std::string> err = fn(ctx);
        ++rr.cases;
        if (err) {
          ++rr.failures;
          if (rr.first_failure.empty()) rr.first_failure = *err;
        }
      } catch (const skip_case&) {
        ++rr.skipped;
      } catch (const std::exception& e) {
        ++rr.cases;
        ++rr.failures;
        if (rr.first_failure.empty()) rr.first_failure = std::string("unexpected exception: ") + e.what();
      }
    }
    report.rules.push_back(std::move(rr));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& r : report.rules) {
    out << (r.failures == 0 ? "PASS" : "FAIL") << "  " << r.rule << "  cases=" << r.cases
        << " failures=" << r.failures;
    if (r.skipped) out << " skipped=" << r.skipped;
    out << "\n";
    if (r.failures > 0) out << "      first failure: " << r.first_failure << "\n";
  }
  out << (report.all_pass() ? "verification passed" : "verification FAILED") << "\n";
  return out.str();
}

}  // namespace gsgen
