#pragma once

#include <string>
#include <vector>

namespace gsgen::analytics {

/// Success probability of a boosted type II fusion with m photon pairs at
/// per-photon detection probability eta: (1 - 2^-m) eta^(2m).
double p_boosted(int m, double eta);

struct MOptResult {
  int m = 1;
  bool capped = false;  // eta = 1 has a divergent optimum; m is the cap
};

/// Improvement factor from the m-th photon pair: (1-2^-m)/(1-2^-(m+1)),
/// with f(0) = 0.
double improvement_factor(int m);

/// Allocation maximizing p_boosted at fixed eta; ties resolve to the
/// smaller m. Capped (with a flag) at m_cap where the optimum diverges.
MOptResult m_opt(double eta, int m_cap = 30);

/// n1 x n2 cluster success probability P_B^(n1(n2-1)).
double p_cluster_2d(int n1, int n2, int m, double eta);
double log_p_cluster_2d(int n1, int n2, int m, double eta);

/// Non-adaptive all-photonic baseline (eta^2/2 per edge over all
/// n1(n2-1) + n2(n1-1) edges).
double p_allphotonic_2d(int n1, int n2, double eta);
double log_p_allphotonic_2d(int n1, int n2, double eta);

/// Emission time of one redundantly-encoded linear cluster:
/// n1((2m+1) t_emit + t_h).
double t_ext(int m, int n1, double t_emit, double t_h);

/// Cluster generation rate P / T_ext.
double rate_2d(int n1, int n2, int m, double eta, double t_emit, double t_h);

/// Number of fusions for a d-dimensional cluster of the given shape.
long long n_fusions_ddim(const std::vector<int>& dims);
double p_cluster_ddim(const std::vector<int>& dims, int m, double eta);

/// Encoded-ring success probability P_B^(1 + k(n1-1)) eta^(2k);
/// independent of n2.
double p_ring_encoded(int k, int n1, double eta, int m);

/// Ancilla-assisted Bell measurements. k must sit on the scheme's ladder
/// (2^(N+1)-2 for the entangled-ancilla scheme, 2^(N+2)-4 for the
/// disentangled one).
double p_grice(double eta, double eta_ancilla, long long k);
double p_evl(double eta, double eta_ancilla, long long k);
bool grice_ladder_contains(long long k);
bool evl_ladder_contains(long long k);
/// Best success over the ladder with at most `budget` ancilla photons.
double p_grice_optimized(double eta, double eta_ancilla, long long budget = 4096,
                         long long* best_k = nullptr);
double p_evl_optimized(double eta, double eta_ancilla, long long budget = 4096,
                       long long* best_k = nullptr);

/// Repeat-until-success spin-spin entanglement: eta^2 / (2 - eta^2).
double p_rus(double eta);

struct FactoryConfig {
  int k = 6;
  int n1 = 4;
  int n2 = 2;
  int m = 3;
  long long n_a = 0;  // ring-factory multiplexing width
  long long n_b = 0;  // code-factory multiplexing width
  double epsilon = 0.01;
};

/// Per-trial probabilities of the three factories.
double factory_p_a(const FactoryConfig& cfg, double eta);  // one k-ring
double factory_p_b(const FactoryConfig& cfg, double eta);  // one (n1,n2) code
double factory_p_c(const FactoryConfig& cfg, double eta);  // one combining trial

/// Overall success probability of the three-factory pipeline at widths
/// (n_a, n_b).
double factory_success(const FactoryConfig& cfg, double eta);

struct FactorySizing {
  long long c_hat = 0;
  long long n_a_hat = 0;
  long long n_b_hat = 0;
};

/// Multiplexing widths that reach success ~ 1 - epsilon.
FactorySizing factory_sizing(const FactoryConfig& cfg, double eta);

/// Binomial pmf / upper tail with stable log-space evaluation.
double binomial_pmf(long long n, double p, long long k);
double binomial_tail_geq(long long n, double p, long long k);

/// Plain data table (header + rows) for the CSV/JSON emitters.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Boosted-fusion success vs loss: columns loss, m_opt, capped,
/// p_boosted(m_opt), then p_boosted(m) per requested fixed m.
Table fig5_table(double eta_min, double eta_max, int steps, const std::vector<int>& fixed_ms,
                 int m_cap = 30);

/// Cluster-generation comparison on a size grid: all-photonic, plain type
/// II, boosted, and the rate ratio boosted/type-II at t_h.
Table fig6_table(const std::vector<int>& sizes1, const std::vector<int>& sizes2,
                 const std::vector<double>& etas, double t_emit, double t_h);

/// Scheme comparison: boosted optimum vs RUS vs optimized ancilla schemes.
Table fig9_table(double eta_min, double eta_max, int steps, long long budget = 4096);

/// Factory success probability over a width grid plus the sizing row.
Table factory_table(const FactoryConfig& cfg, double eta, const std::vector<long long>& n_a_grid,
                    const std::vector<long long>& n_b_grid);

}  // namespace gsgen::analytics
