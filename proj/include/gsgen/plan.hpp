#pragma once

#include <map>
#include <string>
#include <vector>

namespace gsgen {

enum class Op {
  InitEmitter,      // a = emitter qubit id
  HadamardEmitter,  // a = new vertex id
  Emit,             // a = new photon id
  MeasureXEmitter,  //
  HPush,            // a = qubit id, b = new vertex id
  FuseType1,        // a = qa, b = qb
  FuseType2Variant, // a = qa, b = qb
  BoostedFuse,      // a = vertex A, b = vertex B, m = photons per side
  MeasureX,         // a = qubit id
  MeasureZ,         // a = qubit id
};

struct Instruction {
  Op op;
  int stream = 0;
  int a = -1;
  int b = -1;
  int m = 0;
};

struct TimeModel {
  double t_emit = 1.0;
  double t_h = 0.0;
};

/// Ordered instruction list for one generation protocol. Qubit and vertex
/// ids are globally unique across streams, assigned at compile time.
struct GenerationPlan {
  std::string family;
  std::map<std::string, long long> params;
  std::vector<Instruction> instructions;

  int photon_count() const;
  int boosted_fusion_count() const;
  int bare_fusion_count() const;
  int measure_x_count() const;
  int stream_count() const;
};

/// Concatenation; streams and ids must already be disjoint.
GenerationPlan merge_plans(const std::vector<GenerationPlan>& plans, const std::string& family,
                           const std::map<std::string, long long>& params);

/// Single-emitter redundantly-encoded linear cluster with the given block
/// sizes: init, then per block a spin Hadamard followed by |A_i| emissions,
/// and a final X measurement of the emitter.
GenerationPlan compile_linear(const std::vector<int>& sizes, int stream = 0, int first_qubit = 0,
                              int first_vertex = 0);

/// GHZ_n as the one-vertex special case.
GenerationPlan compile_ghz(int n);

/// n1 x n2 cluster: n2 layer plans (interior blocks of 2m+1 photons,
/// boundary blocks of m+1) where each layer after the first carries the n1
/// boosted fusions wiring it to the previous layer. n2 = 1 degenerates to
/// one plain linear cluster.
std::vector<GenerationPlan> compile_2d_layers(int n1, int n2, int m);

/// The combined multi-stream plan for an n1 x n2 cluster.
GenerationPlan compile_cluster_2d(int n1, int n2, int m);

/// d-dimensional cluster of shape dims: one linear-cluster stream per grid
/// line along the first dimension, boosted fusions along every other
/// dimension.
GenerationPlan compile_cluster_nd(const std::vector<int>& dims, int m);

/// k-qubit ring: linear cluster with blocks (1+m, 1, ..., 1, 1+m) closed by
/// one boosted fusion.
GenerationPlan compile_ring(int k, int m);

/// Encoded k-qubit ring with (n1, n2) parity encoding: a ring with m+1
/// photons per block (2m+1 at the two ends), k three-block clusters of
/// sizes (n2, (n1-1)m+1, n2), k(n1-2) GHZ blocks of n2+m photons, boosted
/// fusions attaching codes and ring, and the final 2k X measurements.
GenerationPlan compile_encoded_ring(int k, int n1, int n2, int m);

/// Sum of per-instruction costs: emissions cost t_emit, spin Hadamards
/// t_h, everything else is free.
double plan_duration(const GenerationPlan& p, const TimeModel& t);

/// Time with all streams running in parallel: max over per-stream sums.
double plan_duration_parallel(const GenerationPlan& p, const TimeModel& t);

}  // namespace gsgen
