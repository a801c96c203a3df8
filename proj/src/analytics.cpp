#include "gsgen/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsgen::analytics {

namespace {
void check_eta(double eta) {
  if (eta < 0 || eta > 1) throw std::invalid_argument("eta must lie in [0, 1]");
}
}  // namespace

double p_boosted(int m, double eta) {
  if (m < 1) throw std::invalid_argument("boosted fusion needs m >= 1");
  check_eta(eta);
  return (1.0 - std::ldexp(1.0, -m)) * std::pow(eta, 2 * m);
}

double improvement_factor(int m) {
  if (m < 0) throw std::invalid_argument("negative m");
  if (m == 0) return 0.0;
  return (1.0 - std::ldexp(1.0, -m)) / (1.0 - std::ldexp(1.0, -(m + 1)));
}

MOptResult m_opt(double eta, int m_cap) {
  check_eta(eta);
  if (eta == 0) throw std::invalid_argument("m_opt is undefined at eta = 0");
  double eta2 = eta * eta;
  // adding pair m+1 helps strictly iff eta^2 > f(m); ties keep the smaller m
  for (int m = 1; m < m_cap; ++m)
    if (eta2 <= improvement_factor(m)) return {m, false};
  return {m_cap, true};
}

double log_p_cluster_2d(int n1, int n2, int m, double eta) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("cluster dimensions must be >= 1");
  return static_cast<double>(n1) * (n2 - 1) * std::log(p_boosted(m, eta));
}

double p_cluster_2d(int n1, int n2, int m, double eta) {
  return std::exp(log_p_cluster_2d(n1, n2, m, eta));
}

double log_p_allphotonic_2d(int n1, int n2, double eta) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("cluster dimensions must be >= 1");
  check_eta(eta);
  long long edges = static_cast<long long>(n1) * (n2 - 1) + static_cast<long long>(n2) * (n1 - 1);
  if (edges == 0) return 0.0;
  return static_cast<double>(edges) * std::log(eta * eta / 2.0);
}

double p_allphotonic_2d(int n1, int n2, double eta) {
  return std::exp(log_p_allphotonic_2d(n1, n2, eta));
}

double t_ext(int m, int n1, double t_emit, double t_h) {
  if (m < 1 || n1 < 1) throw std::invalid_argument("t_ext needs m, n1 >= 1");
  return n1 * ((2.0 * m + 1.0) * t_emit + t_h);
}

double rate_2d(int n1, int n2, int m, double eta, double t_emit, double t_h) {
  double t = t_ext(m, n1, t_emit, t_h);
  if (t <= 0) throw std::invalid_argument("zero duration");
  return p_cluster_2d(n1, n2, m, eta) / t;
}

long long n_fusions_ddim(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("empty dimension list");
  for (int n : dims)
    if (n < 1) throw std::invalid_argument("cluster dimensions must be >= 1");
  long long total = 0;
  for (size_t i = 1; i < dims.size(); ++i) {
    long long g = dims[i] - 1;
    for (size_t j = 0; j < dims.size(); ++j)
      if (j != i) g *= dims[j];
    total += g;
  }
  return total;
}

double p_cluster_ddim(const std::vector<int>& dims, int m, double eta) {
  return std::exp(static_cast<double>(n_fusions_ddim(dims)) * std::log(p_boosted(m, eta)));
}

double p_ring_encoded(int k, int n1, double eta, int m) {
  if (k < 3 || n1 < 1) throw std::invalid_argument("encoded rings need k >= 3, n1 >= 1");
  double gates = 1.0 + static_cast<double>(k) * (n1 - 1);
  return std::exp(gates * std::log(p_boosted(m, eta)) + 2.0 * k * std::log(eta));
}

bool grice_ladder_contains(long long k) {
  for (long long v = 2; v <= k; v = 2 * v + 2)
    if (v == k) return true;
  return false;
}

bool evl_ladder_contains(long long k) {
  for (long long v = 4; v <= k; v = 2 * v + 4)
    if (v == k) return true;
  return false;
}

double p_grice(double eta, double eta_ancilla, long long k) {
  check_eta(eta);
  check_eta(eta_ancilla);
  if (!grice_ladder_contains(k))
    throw std::invalid_argument("ancilla count is not on the 2^(N+1)-2 ladder");
  double ps = static_cast<double>(k + 1) / static_cast<double>(k + 2);
  return ps * eta * eta * std::pow(eta_ancilla, static_cast<double>(k));
}

double p_evl(double eta, double eta_ancilla, long long k) {
  check_eta(eta);
  check_eta(eta_ancilla);
  if (!evl_ladder_contains(k))
    throw std::invalid_argument("ancilla count is not on the 2^(N+2)-4 ladder");
  double ps = static_cast<double>(k + 2) / static_cast<double>(k + 4);
  return ps * eta * eta * std::pow(eta_ancilla, static_cast<double>(k));
}

double p_grice_optimized(double eta, double eta_ancilla, long long budget, long long* best_k) {
  double best = 0;
  for (long long k = 2; k <= budget; k = 2 * k + 2) {
    double p = p_grice(eta, eta_ancilla, k);
    if (p > best) {
      best = p;
      if (best_k) *best_k = k;
    }
  }
  return best;
}

double p_evl_optimized(double eta, double eta_ancilla, long long budget, long long* best_k) {
  double best = 0;
  for (long long k = 4; k <= budget; k = 2 * k + 4) {
    double p = p_evl(eta, eta_ancilla, k);
    if (p > best) {
      best = p;
      if (best_k) *best_k = k;
    }
  }
  return best;
}

double p_rus(double eta) {
  check_eta(eta);
  return eta * eta / (2.0 - eta * eta);
}

double factory_p_a(const FactoryConfig& cfg, double eta) { return p_boosted(cfg.m, eta); }

double factory_p_b(const FactoryConfig& cfg, double eta) {
  if (cfg.n1 < 2) throw std::invalid_argument("parity encoding needs n1 >= 2");
  return std::pow(p_boosted(cfg.m, eta), static_cast<double>(cfg.n1 - 2));
}

double factory_p_c(const FactoryConfig& cfg, double eta) {
  return std::pow(p_boosted(cfg.m, eta) * eta * eta, static_cast<double>(cfg.k));
}

double binomial_pmf(long long n, double p, long long k) {
  if (k < 0 || k > n) return 0.0;
  if (p <= 0) return k == 0 ? 1.0 : 0.0;
  if (p >= 1) return k == n ? 1.0 : 0.0;
  double lg = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
              k * std::log(p) + (n - k) * std::log1p(-p);
  return std::exp(lg);
}

double binomial_tail_geq(long long n, double p, long long k) {
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  // sum the smaller side
  if (k > static_cast<long long>(p * n)) {
    double s = 0;
    for (long long i = k; i <= n; ++i) s += binomial_pmf(n, p, i);
    return std::min(1.0, s);
  }
  double s = 0;
  for (long long i = 0; i < k; ++i) s += binomial_pmf(n, p, i);
  return std::max(0.0, 1.0 - s);
}

namespace {
// suffix[i] = P(X >= i) for X ~ Binom(n, p), i = 0..n+1
std::vector<double> binomial_upper_tails(long long n, double p) {
  std::vector<double> tail(static_cast<size_t>(n) + 2, 0.0);
  double acc = 0;
  for (long long i = n; i >= 0; --i) {
    acc += binomial_pmf(n, p, i);
    tail[static_cast<size_t>(i)] = std::min(1.0, acc);
  }
  return tail;
}
}  // namespace

double factory_success(const FactoryConfig& cfg, double eta) {
  if (cfg.n_a < 0 || cfg.n_b < 0) throw std::invalid_argument("negative multiplexing width");
  if (cfg.n_a == 0 || cfg.n_b == 0) return 0.0;
  double pa = factory_p_a(cfg, eta);
  double pb = factory_p_b(cfg, eta);
  double pc = factory_p_c(cfg, eta);
  long long cmax = std::min(cfg.n_a, cfg.n_b);
  std::vector<double> tail_a = binomial_upper_tails(cfg.n_a, pa);
  std::vector<double> tail_b = binomial_upper_tails(cfg.n_b, pb);
  // P(at least c resources) = P_A(>= c) * P(>= k*c code blocks)
  auto p_resources_geq = [&](long long c) {
    if (c <= 0) return 1.0;
    if (c > cfg.n_a) return 0.0;
    long long need_b = static_cast<long long>(cfg.k) * c;
    if (need_b > cfg.n_b) return 0.0;
    return tail_a[static_cast<size_t>(c)] * tail_b[static_cast<size_t>(need_b)];
  };
  double total = 0;
  double geq_c = p_resources_geq(1);
  for (long long c = 1; c <= cmax; ++c) {
    double geq_next = (c + 1 <= cmax) ? p_resources_geq(c + 1) : 0.0;
    double exactly_c = std::max(0.0, geq_c - geq_next);
    total += exactly_c * (1.0 - std::pow(1.0 - pc, static_cast<double>(c)));
    geq_c = geq_next;
  }
  return std::min(1.0, total);
}

FactorySizing factory_sizing(const FactoryConfig& cfg, double eta) {
  if (cfg.epsilon <= 0 || cfg.epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  double pa = factory_p_a(cfg, eta);
  double pb = factory_p_b(cfg, eta);
  double pc = factory_p_c(cfg, eta);
  FactorySizing s;
  s.c_hat = static_cast<long long>(std::ceil(std::log(cfg.epsilon) / std::log1p(-pc)));
  s.n_a_hat = static_cast<long long>(std::ceil(static_cast<double>(s.c_hat) / pa));
  s.n_b_hat = static_cast<long long>(std::ceil(cfg.k * static_cast<double>(s.c_hat) / pb));
  return s;
}

Table fig5_table(double eta_min, double eta_max, int steps, const std::vector<int>& fixed_ms,
                 int m_cap) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  Table t;
  t.header = {"loss", "eta", "m_opt", "m_opt_capped", "p_boosted_opt"};
  for (int m : fixed_ms) t.header.push_back("p_boosted_m" + std::to_string(m));
  for (int i = 0; i < steps; ++i) {
    double eta = steps == 1 ? eta_min
                            : eta_min + (eta_max - eta_min) * static_cast<double>(i) / (steps - 1);
    MOptResult mo = m_opt(eta, m_cap);
    std::vector<double> row = {1.0 - eta, eta, static_cast<double>(mo.m), mo.capped ? 1.0 : 0.0,
                               p_boosted(mo.m, eta)};
    for (int m : fixed_ms) row.push_back(p_boosted(m, eta));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig6_table(const std::vector<int>& sizes1, const std::vector<int>& sizes2,
                 const std::vector<double>& etas, double t_emit, double t_h) {
  Table t;
  t.header = {"eta",        "n1",       "n2",           "p_allphotonic",
              "p_type2",    "m_opt",    "p_boosted_opt", "rate_ratio"};
  for (double eta : etas)
    for (int n1 : sizes1)
      for (int n2 : sizes2) {
        MOptResult mo = m_opt(eta);
        double r_ratio = rate_2d(n1, n2, mo.m, eta, t_emit, t_h) /
                         rate_2d(n1, n2, 1, eta, t_emit, t_h);
        t.rows.push_back({eta, static_cast<double>(n1), static_cast<double>(n2),
                          p_allphotonic_2d(n1, n2, eta), p_cluster_2d(n1, n2, 1, eta),
                          static_cast<double>(mo.m), p_cluster_2d(n1, n2, mo.m, eta), r_ratio});
      }
  return t;
}

Table fig9_table(double eta_min, double eta_max, int steps, long long budget) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  Table t;
  t.header = {"eta",     "p_boosted_opt", "m_opt",  "p_rus",
              "p_grice", "k_grice",       "p_evl",  "k_evl"};
  for (int i = 0; i < steps; ++i) {
    double eta = steps == 1 ? eta_min
                            : eta_min + (eta_max - eta_min) * static_cast<double>(i) / (steps - 1);
    MOptResult mo = m_opt(eta);
    long long kg = 0, ke = 0;
    double pg = p_grice_optimized(eta, eta, budget, &kg);
    double pe = p_evl_optimized(eta, eta, budget, &ke);
    t.rows.push_back({eta, p_boosted(mo.m, eta), static_cast<double>(mo.m), p_rus(eta), pg,
                      static_cast<double>(kg), pe, static_cast<double>(ke)});
  }
  return t;
}

Table factory_table(const FactoryConfig& cfg, double eta, const std::vector<long long>& n_a_grid,
                    const std::vector<long long>& n_b_grid) {
  Table t;
  t.header = {"N_A", "N_B", "P_S"};
  for (long long na : n_a_grid)
    for (long long nb : n_b_grid) {
      FactoryConfig c = cfg;
      c.n_a = na;
      c.n_b = nb;
      t.rows.push_back({static_cast<double>(na), static_cast<double>(nb), factory_success(c, eta)});
    }
  return t;
}

}  // namespace gsgen::analytics
