#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "gsgen/analytics.hpp"

using namespace gsgen::analytics;

TEST_CASE("boosted fusion probability") {
  CHECK(p_boosted(1, 1.0) == doctest::Approx(0.5));
  CHECK(p_boosted(3, 0.95) == doctest::Approx(0.6432054043).epsilon(1e-9));
  CHECK(p_boosted(40, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(p_boosted(0, 0.9), std::invalid_argument);
  // strictly increasing in eta at fixed m
  for (int m : {1, 2, 5}) {
    double last = -1;
    for (double eta = 0.1; eta <= 1.0; eta += 0.05) {
      double p = p_boosted(m, eta);
      CHECK(p > last);
      last = p;
    }
  }
}

TEST_CASE("improvement factor and the optimal allocation") {
  CHECK(improvement_factor(0) == 0.0);
  CHECK(improvement_factor(1) == doctest::Approx(2.0 / 3.0));
  CHECK(improvement_factor(2) == doctest::Approx(6.0 / 7.0));
  CHECK(improvement_factor(3) == doctest::Approx(14.0 / 15.0));

  CHECK(m_opt(0.7).m == 1);
  CHECK(m_opt(0.9).m == 2);
  CHECK(m_opt(0.95).m == 3);
  auto capped = m_opt(1.0);
  CHECK(capped.capped);
  CHECK(capped.m == 30);
  CHECK_FALSE(m_opt(0.9).capped);
  CHECK_THROWS_AS(m_opt(0.0), std::invalid_argument);

  // the transition from 1 to 2 sits at sqrt(2/3) within 1e-9, inclusive below
  double thr = std::sqrt(2.0 / 3.0);
  CHECK(m_opt(thr - 1e-9).m == 1);
  CHECK(m_opt(thr).m == 1);
  CHECK(m_opt(thr + 1e-9).m == 2);

  // optimality and monotonicity over a dense grid
  int last_m = 1;
  for (int i = 0; i <= 400; ++i) {
    double eta = 0.3 + 0.7 * i / 400.0;
    int mo = m_opt(eta).m;
    CHECK(mo >= last_m);
    last_m = std::max(last_m, mo);
    double best = p_boosted(mo, eta);
    for (int m = 1; m <= 20; ++m) CHECK(best >= p_boosted(m, eta) - 1e-12);
  }
}

TEST_CASE("2d cluster probabilities") {
  CHECK(p_cluster_2d(5, 5, 3, 0.95) == doctest::Approx(1.4688e-4).epsilon(1e-3));
  CHECK(p_cluster_2d(5, 5, 3, 0.95) > 1.3e-4);
  CHECK(p_cluster_2d(5, 5, 3, 0.95) < 1.6e-4);
  CHECK(p_cluster_2d(7, 1, 2, 0.9) == 1.0);
  CHECK(p_cluster_2d(2, 2, 1, 1.0) == doctest::Approx(0.25));
}

TEST_CASE("all-photonic baseline") {
  CHECK(p_allphotonic_2d(2, 1, 1.0) == doctest::Approx(0.5));
  CHECK(p_allphotonic_2d(2, 2, 1.0) == doctest::Approx(0.0625));
  CHECK(p_allphotonic_2d(5, 5, 0.95) ==
        doctest::Approx(std::pow(0.95 * 0.95 / 2, 40)).epsilon(1e-10));
}

TEST_CASE("emission time and rate ratios reproduce the published factors") {
  CHECK(t_ext(1, 1, 1.0, 1.0) == doctest::Approx(4.0));
  CHECK(t_ext(3, 5, 1.0, 0.0) == doctest::Approx(35.0));
  double r95 = rate_2d(5, 5, 3, 0.95, 1.0, 0.0) / rate_2d(5, 5, 1, 0.95, 1.0, 0.0);
  CHECK(r95 == doctest::Approx(513.7).epsilon(0.002));
  CHECK(std::abs(r95 - 514) <= 1.0);
  double r90 = rate_2d(5, 5, 2, 0.9, 1.0, 0.0) / rate_2d(5, 5, 1, 0.9, 1.0, 0.0);
  CHECK(std::abs(r90 - 29.5) <= 0.5);
}

TEST_CASE("d-dimensional fusion counts") {
  CHECK(n_fusions_ddim({5, 5}) == 20);
  CHECK(n_fusions_ddim({2, 2, 2}) == 8);
  CHECK(n_fusions_ddim({9}) == 0);
  CHECK(p_cluster_ddim({9}, 2, 0.8) == 1.0);
  for (int n1 = 1; n1 <= 10; ++n1)
    for (int n2 = 1; n2 <= 10; ++n2) {
      CHECK(n_fusions_ddim({n1, n2}) == static_cast<long long>(n1) * (n2 - 1));
      CHECK(p_cluster_ddim({n1, n2}, 2, 0.93) ==
            doctest::Approx(p_cluster_2d(n1, n2, 2, 0.93)).epsilon(1e-12));
    }
}

TEST_CASE("encoded ring law") {
  CHECK(p_ring_encoded(3, 2, 1.0, 1) == doctest::Approx(0.0625));
  CHECK(p_ring_encoded(6, 4, 1.0, 3) ==
        doctest::Approx(std::pow(1 - 1.0 / 8, 19)).epsilon(1e-12));
  // independence from n2 is structural: the formula takes no n2
  double base = p_ring_encoded(6, 4, 0.95, 3);
  CHECK(base ==
        doctest::Approx(std::pow(p_boosted(3, 0.95), 19) * std::pow(0.95, 12)).epsilon(1e-12));
}

TEST_CASE("ancilla-assisted schemes and repeat-until-success") {
  CHECK(p_grice(1.0, 1.0, 2) == doctest::Approx(0.75));
  CHECK(p_evl(1.0, 1.0, 4) == doctest::Approx(0.75));
  CHECK(p_rus(1.0) == doctest::Approx(1.0));
  CHECK(p_rus(0.9) == doctest::Approx(0.680672268908).epsilon(1e-9));
  CHECK_THROWS_AS(p_grice(1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(p_evl(1.0, 1.0, 6), std::invalid_argument);
  CHECK(grice_ladder_contains(2));
  CHECK(grice_ladder_contains(6));
  CHECK(grice_ladder_contains(14));
  CHECK_FALSE(grice_ladder_contains(8));
  CHECK(evl_ladder_contains(4));
  CHECK(evl_ladder_contains(12));
  CHECK(evl_ladder_contains(28));

  long long kg = 0;
  double pg = p_grice_optimized(0.99, 0.99, 4096, &kg);
  CHECK(pg > 0);
  CHECK(grice_ladder_contains(kg));
}

TEST_CASE("scheme ordering across the working range") {
  for (int i = 0; i <= 100; ++i) {
    double eta = 0.82 + (1.0 - 0.82) * i / 100.0;
    double pb = p_boosted(m_opt(eta).m, eta);
    CHECK(p_rus(eta) >= pb - 1e-12);
    CHECK(pb >= p_grice_optimized(eta, eta) - 1e-12);
    CHECK(pb >= p_evl_optimized(eta, eta) - 1e-12);
  }
}

TEST_CASE("binomial helpers") {
  double sum = 0;
  for (int k = 0; k <= 30; ++k) sum += binomial_pmf(30, 0.37, k);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binomial_tail_geq(10, 0.5, 0) == 1.0);
  CHECK(binomial_tail_geq(10, 0.5, 11) == 0.0);
  CHECK(binomial_tail_geq(4, 0.5, 2) == doctest::Approx(11.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("factory success probability") {
  FactoryConfig cfg;
  cfg.k = 6;
  cfg.n1 = 4;
  cfg.m = 3;
  cfg.n_a = 0;
  cfg.n_b = 0;
  CHECK(factory_success(cfg, 0.95) == 0.0);

  // deterministic supply saturates at 1 (eta = 1 with a huge m makes every
  // probability approach 1)
  FactoryConfig sure;
  sure.k = 2;
  sure.n1 = 3;
  sure.m = 40;
  sure.n_a = 4;
  sure.n_b = 2 * 4;
  CHECK(factory_success(sure, 1.0) == doctest::Approx(1.0).epsilon(1e-6));

  // monotone in both widths
  FactoryConfig c = cfg;
  double last = 0;
  for (long long w = 10; w <= 400; w += 30) {
    c.n_a = w;
    c.n_b = 6 * w;
    double p = factory_success(c, 0.95);
    CHECK(p >= last - 1e-12);
    last = p;
  }
}

TEST_CASE("factory sizing reproduces the published trial count") {
  FactoryConfig cfg;
  cfg.k = 6;
  cfg.n1 = 4;
  cfg.m = 3;
  cfg.epsilon = 0.01;
  CHECK(factory_p_c(cfg, 0.95) == doctest::Approx(0.0382672).epsilon(1e-4));
  FactorySizing s = factory_sizing(cfg, 0.95);
  CHECK(s.c_hat == 119);
  // the sizing hits the target up to the stated slack band
  FactoryConfig at = cfg;
  at.n_a = s.n_a_hat;
  at.n_b = s.n_b_hat;
  double ps = factory_success(at, 0.95);
  CHECK(ps >= 1 - cfg.epsilon - 0.05);
  // halving epsilon costs about ln2/|ln(1-p_c)| extra trials
  FactoryConfig half = cfg;
  half.epsilon = 0.005;
  FactorySizing s2 = factory_sizing(half, 0.95);
  double delta = std::log(2.0) / std::abs(std::log1p(-factory_p_c(cfg, 0.95)));
  CHECK(std::abs((s2.c_hat - s.c_hat) - delta) <= 1.0);
}

TEST_CASE("figure tables") {
  Table f5 = fig5_table(0.8, 1.0, 50, {1, 2, 3});
  CHECK(f5.header.size() == 5 + 3);
  CHECK(f5.rows.size() == 50);
  // staircase boundary: m_opt steps exactly where eta^2 crosses f(m)
  for (const auto& row : f5.rows) {
    double eta = row[1];
    int mo = static_cast<int>(row[2]);
    if (!static_cast<bool>(row[3])) {
      CHECK(eta * eta <= improvement_factor(mo) + 1e-12);
      CHECK(eta * eta > improvement_factor(mo - 1) - 1e-12);
    }
  }

  Table f6 = fig6_table({5}, {5}, {0.95}, 1.0, 0.0);
  REQUIRE(f6.rows.size() == 1);
  CHECK(f6.rows[0][7] == doctest::Approx(513.7).epsilon(0.002));

  Table f9 = fig9_table(0.82, 1.0, 20);
  for (const auto& row : f9.rows) {
    CHECK(row[3] >= row[1] - 1e-12);  // RUS at least as good as boosted
    CHECK(row[1] >= row[4] - 1e-12);  // boosted beats the ancilla ladders
    CHECK(row[1] >= row[6] - 1e-12);
  }
}
