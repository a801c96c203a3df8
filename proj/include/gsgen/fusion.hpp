#pragma once

#include <string>
#include <vector>

#include "gsgen/redundant_graph.hpp"
#include "gsgen/rng.hpp"

namespace gsgen {

enum class FusionKind { Success, PartialFail, CompleteFail };

struct FusionOutcome {
  FusionKind kind;
  int attempts_used = 1;
  int outcome_i = 0;
  int outcome_j = 0;
};

/// One line of the fusion run log.
struct FusionTraceRecord {
  std::string type;  // "type1", "type2_variant", "type2_bell", "type2_xz", "boosted"
  int qa = -1;
  int qb = -1;
  int outcome_bits[2] = {0, 0};
  std::string kind;  // "success", "partial_fail", "complete_fail"
  int attempts_used = 1;
};

/// Type I fusion on photons qa, qb of two distinct vertices: the vertices
/// merge, qb is consumed, and a Z^i byproduct lands on the survivor. An
/// existing logical edge between the two vertices cancels against the gate
/// and flips the outcome interpretation. Diagonal frames on the fused
/// photons fold into the survivor; other frames are rejected.
void fuse_type1(RedundantGraph& rg, int qa, int qb, int i);

/// The boosted-fusion type II variant: a type I fusion followed by a Y
/// measurement of the merged photon, so both photons are consumed. On
/// pushed-out singleton endpoints this toggles an edge between the two
/// parent vertices.
void fuse_type2_variant(RedundantGraph& rg, int qa, int qb, int i, int j);

/// Bell-basis type II fusion (ZZ and XX measurements): projects onto
/// (|00> + (-1)^(i xor j) |11>)/sqrt(2) and merges the residual blocks.
/// Bare endpoints anchor through their single block neighbor.
void fuse_type2_bell(RedundantGraph& rg, int qa, int qb, int i, int j);

/// XZ/ZX type II fusion: projects onto (|0+> + (-1)^(i xor j) |1->)/sqrt(2),
/// creating an edge between the residual blocks.
void fuse_type2_xz(RedundantGraph& rg, int qa, int qb, int i, int j);

/// Heralded failure shared by type I, the variant and the Bell gate: both
/// photons are Z-measured where they stand (a failure inside a block takes
/// the whole block down; push out first to lose only the pair).
void fail_fusion(RedundantGraph& rg, int qa, int qb, int za, int zb);

/// Heralded failure of the XZ gate: X on qa, Z on qb.
void fail_fusion_xz(RedundantGraph& rg, int qa, int qb, int sx, int sz);

/// One heralded fusion attempt as sampled by the environment.
struct BoostedAttempt {
  bool lost_a = false;
  bool lost_b = false;
  bool success = false;
  int i = 0, j = 0;    // success outcome bits
  int za = 0, zb = 0;  // heralded-failure Z outcomes
};

class AttemptSource {
 public:
  virtual ~AttemptSource() = default;
  virtual BoostedAttempt next_attempt() = 0;
  /// Detection and outcome of one leftover X measurement after success.
  virtual bool leftover_detected() = 0;
  virtual int leftover_outcome() = 0;
};

/// Samples attempts from a seeded stream with per-photon detection
/// probability eta; heralded class and all outcome bits are uniform.
class RngAttemptSource : public AttemptSource {
 public:
  RngAttemptSource(SplitMix64& rng, double eta) : rng_(rng), eta_(eta) {}
  BoostedAttempt next_attempt() override;
  bool leftover_detected() override { return rng_.bernoulli(eta_); }
  int leftover_outcome() override { return rng_.bit(); }

 private:
  SplitMix64& rng_;
  double eta_;
};

/// Fixed attempt script for branch-enumeration tests (lossless leftovers,
/// outcome 0).
class ScriptedAttemptSource : public AttemptSource {
 public:
  explicit ScriptedAttemptSource(std::vector<BoostedAttempt> attempts)
      : attempts_(std::move(attempts)) {}
  BoostedAttempt next_attempt() override;
  bool leftover_detected() override { return true; }
  int leftover_outcome() override { return 0; }

 private:
  std::vector<BoostedAttempt> attempts_;
  size_t pos_ = 0;
};

/// Boosted type II fusion between vertices va and vb with m allocated
/// photons per side: sequential push-and-fuse attempts until one succeeds,
/// then the unused allocated photons are X-measured out. A lost photon
/// heralds CompleteFail immediately and leaves the graph spoiled. Both
/// blocks need m allocated photons plus one survivor.
FusionOutcome boosted_fuse(RedundantGraph& rg, int va, int vb, int m, AttemptSource& src,
                           std::vector<FusionTraceRecord>* trace = nullptr);

}  // namespace gsgen
