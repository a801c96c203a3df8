#include "doctest.h"

#include <cmath>
#include <map>

#include "gsgen/analytics.hpp"
#include "gsgen/monte_carlo.hpp"

using namespace gsgen;

namespace {

// two GHZ blocks of m+1 photons joined by one boosted fusion
GenerationPlan boosted_only_plan(int m) {
  GenerationPlan a = compile_linear({m + 1}, 0, 0, 0);
  GenerationPlan b = compile_linear({m + 1}, 1, 100, 100);
  GenerationPlan p = merge_plans({a, b}, "boosted-pair", {{"m", m}});
  p.instructions.push_back({Op::BoostedFuse, 0, 0, 100, m});
  return p;
}

}  // namespace

TEST_CASE("wilson interval basics") {
  auto [lo, hi] = wilson_interval(50, 100, 1.96);
  CHECK(lo == doctest::Approx(0.404).epsilon(0.01));
  CHECK(hi == doctest::Approx(0.596).epsilon(0.01));
  auto [l0, h0] = wilson_interval(0, 10, 1.96);
  CHECK(l0 == 0.0);
  CHECK(h0 > 0.0);
  CHECK_THROWS_AS(wilson_interval(0, 0, 1.0), std::invalid_argument);
}

TEST_CASE("lossless plan without fusions always succeeds") {
  GenerationPlan p = compile_linear({2, 1, 2});
  Estimate e = estimate(p, {1.0, 42, 0}, 200);
  CHECK(e.p_hat == 1.0);
}

TEST_CASE("eta zero with any fusion never succeeds") {
  GenerationPlan p = boosted_only_plan(1);
  Estimate e = estimate(p, {0.0, 42, 0}, 200);
  CHECK(e.p_hat == 0.0);
}

TEST_CASE("identical seeds give identical estimates") {
  GenerationPlan p = boosted_only_plan(2);
  Estimate a = estimate(p, {0.9, 7, 0}, 2000);
  Estimate b = estimate(p, {0.9, 7, 0}, 2000);
  CHECK(a.successes == b.successes);
  Estimate c = estimate(p, {0.9, 8, 0}, 2000);
  CHECK(a.successes != c.successes);  // almost surely
}

TEST_CASE("boosted fusion success rate follows the closed form") {
  for (auto [m, eta] : std::vector<std::pair<int, double>>{{1, 1.0}, {2, 0.9}, {3, 0.95}}) {
    GenerationPlan p = boosted_only_plan(m);
    long long trials = 40000;
    Estimate e = estimate(p, {eta, 11, 0}, trials);
    double expect = analytics::p_boosted(m, eta);
    auto [lo, hi] = wilson_interval(e.successes, trials, 3.0);
    CHECK(lo <= expect);
    CHECK(expect <= hi);
  }
}

TEST_CASE("2x2 cluster estimate matches the square of the fusion law") {
  GenerationPlan p = compile_cluster_2d(2, 2, 1);
  long long trials = 40000;
  Estimate e = estimate(p, {1.0, 3, 0}, trials);
  auto [lo, hi] = wilson_interval(e.successes, trials, 3.0);
  CHECK(lo <= 0.25);
  CHECK(0.25 <= hi);
}

TEST_CASE("d-dimensional cluster estimate matches the Appendix form") {
  std::vector<int> dims = {2, 2, 2};
  GenerationPlan p = compile_cluster_nd(dims, 1);
  long long trials = 30000;
  double eta = 0.97;
  Estimate e = estimate(p, {eta, 5, 0}, trials);
  double expect = analytics::p_cluster_ddim(dims, 1, eta);
  auto [lo, hi] = wilson_interval(e.successes, trials, 3.0);
  CHECK(lo <= expect);
  CHECK(expect <= hi);
}

TEST_CASE("encoded ring at eta=1 hits the closed-form value") {
  GenerationPlan p = compile_encoded_ring(3, 2, 1, 1);
  long long trials = 50000;
  Estimate e = estimate(p, {1.0, 9, 0}, trials);
  auto [lo, hi] = wilson_interval(e.successes, trials, 3.0);
  CHECK(lo <= 0.0625);
  CHECK(0.0625 <= hi);
}

TEST_CASE("trial failure causes are recorded") {
  GenerationPlan p = boosted_only_plan(1);
  int partial = 0, loss = 0, ok = 0;
  for (int t = 0; t < 400; ++t) {
    TrialResult r = run_plan(p, {0.8, 21, 0}, t);
    if (r.success)
      ++ok;
    else if (r.cause == FailureCause::Partial)
      ++partial;
    else
      ++loss;
  }
  CHECK(ok > 0);
  CHECK(partial > 0);
  CHECK(loss > 0);
}

TEST_CASE("fusion trace records the boosted gate summary") {
  GenerationPlan p = boosted_only_plan(2);
  TrialResult r = run_plan(p, {1.0, 2, 0}, 0, /*keep_trace=*/true);
  REQUIRE(r.fusion_trace.size() == 1);
  CHECK(r.fusion_trace[0].type == "boosted");
  CHECK(r.fusion_trace[0].attempts_used >= 1);
}

TEST_CASE("attempts distribution is truncated geometric at eta = 1") {
  // chi-square against P(l) = 2^-l (l < m), P(m) = 2^-(m-1), m = 4
  const int m = 4;
  const long long trials = 100000;
  GenerationPlan p = boosted_only_plan(m);
  std::map<int, long long> hist;
  long long used = 0;
  for (long long t = 0; t < trials; ++t) {
    TrialResult r = run_plan(p, {1.0, 31, 0}, t, true);
    REQUIRE(r.fusion_trace.size() == 1);
    ++hist[r.fusion_trace[0].attempts_used];
    ++used;
  }
  double chi2 = 0;
  for (int l = 1; l <= m; ++l) {
    double expect = used * ((l < m) ? std::ldexp(1.0, -l) : std::ldexp(1.0, -(m - 1)));
    double diff = hist[l] - expect;
    chi2 += diff * diff / expect;
  }
  // dof = 3, critical value at p = 0.01
  CHECK(chi2 < 11.345);
}

TEST_CASE("disjoint substreams give statistically compatible estimates") {
  GenerationPlan p = boosted_only_plan(2);
  long long trials = 20000;
  Estimate a = estimate(p, {0.92, 5, 0}, trials);
  Estimate b = estimate(p, {0.92, 5, 1}, trials);
  double pool = (a.p_hat + b.p_hat) / 2;
  double sigma = std::sqrt(2 * pool * (1 - pool) / trials);
  CHECK(std::abs(a.p_hat - b.p_hat) < 4 * sigma);
  CHECK(a.successes != b.successes);  // genuinely different streams
}

TEST_CASE("ring protocol loss exponent comes from the terminal measurements") {
  // encoded ring at n2 = 1..3 gives identical trajectories: n2 only adds
  // unmeasured photons
  long long trials = 4000;
  Estimate ref = estimate(compile_encoded_ring(3, 2, 1, 1), {0.9, 77, 0}, trials);
  for (int n2 : {2, 3}) {
    Estimate e = estimate(compile_encoded_ring(3, 2, n2, 1), {0.9, 77, 0}, trials);
    CHECK(e.successes == ref.successes);
  }
}
