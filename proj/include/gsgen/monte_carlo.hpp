#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsgen/fusion.hpp"
#include "gsgen/plan.hpp"
#include "gsgen/redundant_graph.hpp"
#include "gsgen/rng.hpp"

namespace gsgen {

struct LossModel {
  double eta = 1.0;         // per-photon detection probability
  uint64_t seed = 0;        // master seed
  uint64_t substream = 0;   // disjoint substream index
};

enum class FailureCause { Partial, Loss };

struct TrialResult {
  bool success = true;
  std::optional<FailureCause> cause;
  int photons_emitted = 0;
  std::vector<FusionTraceRecord> fusion_trace;
  /// Terminal measurements whose rewrite leaves the representable class
  /// (parity-encoded outputs) fall back to detection-only accounting; this
  /// flag records that the surviving graph is then only structural.
  bool structure_exact = true;
};

struct Estimate {
  double p_hat = 0;
  double ci_low = 0;   // Wilson 95%
  double ci_high = 0;
  long long successes = 0;
  long long trials = 0;
};

/// Wilson score interval with normal quantile z.
std::pair<double, double> wilson_interval(long long successes, long long trials, double z);

/// Executes one stochastic trial of a generation plan: heralded fusion
/// outcomes are sampled uniformly, photon loss is sampled at detection time
/// (inside fusions and at terminal measurements) with probability 1 - eta.
/// The trial succeeds when every boosted fusion succeeds and every measured
/// photon is detected. The trajectory depends only on (seed, substream,
/// trial_index).
TrialResult run_plan(const GenerationPlan& plan, const LossModel& loss, uint64_t trial_index = 0,
                     bool keep_trace = false);

/// Mean success over `trials` runs with a Wilson 95% interval; bit-exact
/// for a fixed (seed, substream) regardless of scheduling.
Estimate estimate(const GenerationPlan& plan, const LossModel& loss, long long trials);

/// Final graph of a lossless, outcome-forced execution (all heralded
/// fusions succeed with the given outcome bits, all measurements read the
/// forced bit). Used for structural audits and oracle checks of compiled
/// plans.
RedundantGraph execute_plan_noiseless(const GenerationPlan& plan, int forced_outcome = 0);

}  // namespace gsgen
