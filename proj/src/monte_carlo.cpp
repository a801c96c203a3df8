#include "gsgen/monte_carlo.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace gsgen {

namespace {

/// Execution world: one RedundantGraph per connected component, merged on
/// demand when a fusion spans two of them.
struct World {
  std::vector<RedundantGraph> comps;
  std::map<int, int> stream_comp;  // emitter stream -> component
  std::map<int, int> vertex_comp;
  std::map<int, int> qubit_comp;

  RedundantGraph& of_stream(int s) { return comps[stream_comp.at(s)]; }

  int comp_of_vertex(int v) const { return vertex_comp.at(v); }
  int comp_of_qubit(int q) const { return qubit_comp.at(q); }

  void index_component(int ci) {
    const RedundantGraph& rg = comps[ci];
    for (int v : rg.vertex_ids()) {
      vertex_comp[v] = ci;
      for (int q : rg.members(v)) qubit_comp[q] = ci;
    }
  }

  /// Merge component cb into ca (disjoint union of the graphs).
  int unify(int ca, int cb) {
    if (ca == cb) return ca;
    comps[ca].absorb_disjoint(comps[cb]);
    comps[cb] = RedundantGraph();
    for (auto& [v, c] : vertex_comp)
      if (c == cb) c = ca;
    for (auto& [q, c] : qubit_comp)
      if (c == cb) c = ca;
    for (auto& [s, c] : stream_comp)
      if (c == cb) c = ca;
    return ca;
  }
};

struct Executor {
  World w;
  std::vector<FusionTraceRecord>* trace = nullptr;

  void init_emitter(int stream, int qe) {
    if (w.stream_comp.count(stream)) throw std::invalid_argument("duplicate emitter stream");
    w.comps.emplace_back();
    int ci = static_cast<int>(w.comps.size()) - 1;
    w.comps[ci].init_emitter(qe);
    w.stream_comp[stream] = ci;
  }

  void hadamard_emitter(int stream, int vid) {
    RedundantGraph& rg = w.of_stream(stream);
    rg.hadamard_emitter(vid);
    w.vertex_comp[vid] = w.stream_comp.at(stream);
  }

  void emit(int stream, int q) {
    RedundantGraph& rg = w.of_stream(stream);
    rg.emit_photon(q);
    w.qubit_comp[q] = w.stream_comp.at(stream);
  }

};

}  // namespace

std::pair<double, double> wilson_interval(long long successes, long long trials, double z) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  double n = static_cast<double>(trials);
  double p = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2 * n)) / denom;
  double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

TrialResult run_plan(const GenerationPlan& plan, const LossModel& loss, uint64_t trial_index,
                     bool keep_trace) {
  if (loss.eta < 0 || loss.eta > 1) throw std::invalid_argument("eta must lie in [0, 1]");
  SplitMix64 rng(mix_seed(loss.seed, loss.substream, trial_index));
  Executor ex;
  TrialResult res;
  if (keep_trace) ex.trace = &res.fusion_trace;

  auto fail = [&](FailureCause c) {
    res.success = false;
    res.cause = c;
  };

  for (const auto& ins : plan.instructions) {
    switch (ins.op) {
      case Op::InitEmitter:
        ex.init_emitter(ins.stream, ins.a);
        break;
      case Op::HadamardEmitter:
        ex.hadamard_emitter(ins.stream, ins.a);
        break;
      case Op::Emit:
        ex.emit(ins.stream, ins.a);
        ++res.photons_emitted;
        break;
      case Op::MeasureXEmitter: {
        RedundantGraph& rg = ex.w.of_stream(ins.stream);
        // spin readout: no photon loss; outcome random unless forced
        int outcome;
        if (!rg.emitter_qubit()) throw std::invalid_argument("no emitter to measure");
        if (!rg.emitter_pending() &&
            rg.forced_member_outcome(*rg.emitter_qubit(), Pauli::X).has_value())
          outcome = *rg.forced_member_outcome(*rg.emitter_qubit(), Pauli::X);
        else
          outcome = rng.bit();
        rg.measure_out_emitter(outcome);
        break;
      }
      case Op::HPush: {
        RedundantGraph& rg = ex.w.comps[ex.w.comp_of_qubit(ins.a)];
        rg.hadamard_push(ins.a, ins.b);
        ex.w.vertex_comp[ins.b] = ex.w.comp_of_qubit(ins.a);
        break;
      }
      case Op::FuseType1:
      case Op::FuseType2Variant: {
        int ci = ex.w.unify(ex.w.comp_of_qubit(ins.a), ex.w.comp_of_qubit(ins.b));
        RedundantGraph& rg = ex.w.comps[ci];
        bool da = rng.bernoulli(loss.eta), db = rng.bernoulli(loss.eta);
        if (!da || !db) {
          fail(FailureCause::Loss);
          break;
        }
        bool heralded_success = rng.bit() == 0;
        if (ins.op == Op::FuseType1) {
          if (heralded_success)
            fuse_type1(rg, ins.a, ins.b, rng.bit());
          else {
            fail_fusion(rg, ins.a, ins.b, rng.bit(), rng.bit());
            fail(FailureCause::Partial);
          }
        } else {
          if (heralded_success)
            fuse_type2_variant(rg, ins.a, ins.b, rng.bit(), rng.bit());
          else {
            fail_fusion(rg, ins.a, ins.b, rng.bit(), rng.bit());
            fail(FailureCause::Partial);
          }
        }
        break;
      }
      case Op::BoostedFuse: {
        int ci = ex.w.unify(ex.w.comp_of_vertex(ins.a), ex.w.comp_of_vertex(ins.b));
        RedundantGraph& rg = ex.w.comps[ci];
        RngAttemptSource src(rng, loss.eta);
        FusionOutcome out = boosted_fuse(rg, ins.a, ins.b, ins.m, src, ex.trace);
        if (out.kind == FusionKind::PartialFail) fail(FailureCause::Partial);
        if (out.kind == FusionKind::CompleteFail) fail(FailureCause::Loss);
        break;
      }
      case Op::MeasureX:
      case Op::MeasureZ: {
        RedundantGraph& rg = ex.w.comps[ex.w.comp_of_qubit(ins.a)];
        if (!rng.bernoulli(loss.eta)) {
          fail(FailureCause::Loss);
          break;
        }
        Pauli basis = (ins.op == Op::MeasureX) ? Pauli::X : Pauli::Z;
        auto forced = rg.forced_member_outcome(ins.a, basis);
        rg.measure_member(ins.a, basis, forced ? *forced : rng.bit());
        break;
      }
    }
    if (!res.success) break;
  }
  return res;
}

Estimate estimate(const GenerationPlan& plan, const LossModel& loss, long long trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  long long successes = 0;
  for (long long t = 0; t < trials; ++t)
    if (run_plan(plan, loss, static_cast<uint64_t>(t)).success) ++successes;
  Estimate e;
  e.successes = successes;
  e.trials = trials;
  e.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
  auto [lo, hi] = wilson_interval(successes, trials, 1.959963984540054);
  e.ci_low = lo;
  e.ci_high = hi;
  return e;
}

namespace {

/// Attempt source that always reports the forced heralded success.
class ForcedAttemptSource : public AttemptSource {
 public:
  explicit ForcedAttemptSource(int bit) : bit_(bit) {}
  BoostedAttempt next_attempt() override {
    BoostedAttempt at;
    at.success = true;
    at.i = bit_;
    at.j = bit_;
    return at;
  }
  bool leftover_detected() override { return true; }
  int leftover_outcome() override { return bit_; }

 private:
  int bit_;
};

}  // namespace

RedundantGraph execute_plan_noiseless(const GenerationPlan& plan, int forced_outcome) {
  Executor ex;
  for (const auto& ins : plan.instructions) {
    switch (ins.op) {
      case Op::InitEmitter:
        ex.init_emitter(ins.stream, ins.a);
        break;
      case Op::HadamardEmitter:
        ex.hadamard_emitter(ins.stream, ins.a);
        break;
      case Op::Emit:
        ex.emit(ins.stream, ins.a);
        break;
      case Op::MeasureXEmitter: {
        RedundantGraph& rg = ex.w.of_stream(ins.stream);
        int outcome = forced_outcome;
        if (!rg.emitter_pending()) {
          auto f = rg.forced_member_outcome(*rg.emitter_qubit(), Pauli::X);
          if (f) outcome = *f;
        }
        rg.measure_out_emitter(outcome);
        break;
      }
      case Op::HPush: {
        RedundantGraph& rg = ex.w.comps[ex.w.comp_of_qubit(ins.a)];
        rg.hadamard_push(ins.a, ins.b);
        ex.w.vertex_comp[ins.b] = ex.w.comp_of_qubit(ins.a);
        break;
      }
      case Op::FuseType1: {
        RedundantGraph& rg =
            ex.w.comps[ex.w.unify(ex.w.comp_of_qubit(ins.a), ex.w.comp_of_qubit(ins.b))];
        fuse_type1(rg, ins.a, ins.b, forced_outcome);
        break;
      }
      case Op::FuseType2Variant: {
        RedundantGraph& rg =
            ex.w.comps[ex.w.unify(ex.w.comp_of_qubit(ins.a), ex.w.comp_of_qubit(ins.b))];
        fuse_type2_variant(rg, ins.a, ins.b, forced_outcome, forced_outcome);
        break;
      }
      case Op::BoostedFuse: {
        RedundantGraph& rg =
            ex.w.comps[ex.w.unify(ex.w.comp_of_vertex(ins.a), ex.w.comp_of_vertex(ins.b))];
        ForcedAttemptSource src(forced_outcome);
        boosted_fuse(rg, ins.a, ins.b, ins.m, src, nullptr);
        break;
      }
      case Op::MeasureX:
      case Op::MeasureZ: {
        RedundantGraph& rg = ex.w.comps[ex.w.comp_of_qubit(ins.a)];
        Pauli basis = (ins.op == Op::MeasureX) ? Pauli::X : Pauli::Z;
        auto forced = rg.forced_member_outcome(ins.a, basis);
        rg.measure_member(ins.a, basis, forced ? *forced : forced_outcome);
        break;
      }
    }
  }
  // gather surviving components into one graph
  RedundantGraph out;
  for (auto& c : ex.w.comps)
    if (!c.vertex_ids().empty() || c.emitter_qubit()) out.absorb_disjoint(c);
  return out;
}

}  // namespace gsgen
