#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsgen/analytics.hpp"
#include "gsgen/json_io.hpp"
#include "gsgen/monte_carlo.hpp"
#include "gsgen/plan.hpp"
#include "gsgen/verify.hpp"

namespace {

using namespace gsgen;

std::vector<int> parse_int_list(const std::string& spec) {
  // "3..8" or "1,2,3"
  std::vector<int> out;
  auto dots = spec.find("..");
  if (dots != std::string::npos) {
    int lo = std::stoi(spec.substr(0, dots));
    int hi = std::stoi(spec.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::string cur;
  for (char ch : spec + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& spec) {
  std::vector<double> out;
  std::string cur;
  for (char ch : spec + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

std::string out_path(const std::string& path) {
  const char* dir = std::getenv("GSGEN_OUTDIR");
  if (!dir || path.empty() || path.front() == '/') return path;
  return std::string(dir) + "/" + path;
}

uint64_t env_seed(uint64_t flag_seed, bool seed_given) {
  if (seed_given) return flag_seed;
  if (const char* s = std::getenv("GSGEN_SEED")) return std::strtoull(s, nullptr, 10);
  return flag_seed;
}

void emit_table(const analytics::Table& t, const std::string& csv_path,
                const std::string& json_path) {
  if (!csv_path.empty())
    io::write_file(out_path(csv_path), io::table_to_csv(t));
  else
    std::cout << io::table_to_csv(t);
  if (!json_path.empty()) io::write_file(out_path(json_path), io::table_to_json(t));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid photonic graph-state generation toolkit"};
  app.require_subcommand(1);

  // ---- rates ----
  auto* rates = app.add_subcommand("rates", "emit success-probability and rate tables");
  int fig = 5;
  double eta_min = 0.8, eta_max = 1.0;
  int steps = 200;
  std::string m_list = "1,2,3,4";
  int m_cap = 30;
  std::string sizes1 = "3..8", sizes2, etas = "0.9,0.95,0.99";
  double t_emit = 1.0, t_h = 0.0;
  long long budget = 4096;
  std::string out_csv, out_json;
  rates->add_option("--figure", fig, "table family: 5, 6 or 9")->check(CLI::IsMember({5, 6, 9}));
  rates->add_option("--eta-min", eta_min);
  rates->add_option("--eta-max", eta_max);
  rates->add_option("--steps", steps);
  rates->add_option("--m-list", m_list, "fixed m columns for figure 5");
  rates->add_option("--m-cap", m_cap);
  rates->add_option("--sizes", sizes1, "n1 grid, e.g. 3..8 or 3,5,7");
  rates->add_option("--sizes2", sizes2, "n2 grid (defaults to --sizes)");
  rates->add_option("--etas", etas, "eta list for figure 6");
  rates->add_option("--t-emit", t_emit);
  rates->add_option("--t-h", t_h);
  rates->add_option("--budget", budget, "ancilla photon budget for figure 9");
  rates->add_option("-o,--output", out_csv, "CSV output path (stdout if omitted)");
  rates->add_option("--json", out_json, "JSON mirror output path");

  // ---- plan ----
  auto* planc = app.add_subcommand("plan", "compile a generation plan");
  std::string family, sizes_spec = "1,1,1", dims_spec = "2,2";
  int pk = 6, pn1 = 4, pn2 = 2, pm = 1, pn = 3;
  std::string plan_out = "plan.jsonl";
  planc->add_option("family", family, "linear | ghz | cluster2d | clusterNd | ring | encoded-ring")
      ->required();
  planc->add_option("--sizes", sizes_spec, "block sizes for the linear family");
  planc->add_option("--dims", dims_spec, "cluster shape for clusterNd");
  planc->add_option("--k", pk);
  planc->add_option("--n1", pn1);
  planc->add_option("--n2", pn2);
  planc->add_option("--m", pm);
  planc->add_option("--n", pn, "photon count for ghz");
  planc->add_option("-o,--output", plan_out);

  // ---- simulate ----
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate for a plan file");
  std::string plan_in;
  double sim_eta = 1.0, trials_d = 1e5;
  uint64_t seed = 0, substream = 0;
  bool seed_given = false;
  std::string results_out;
  sim->add_option("plan", plan_in, "plan file (JSON lines)")->required();
  sim->add_option("--eta", sim_eta);
  sim->add_option("--trials", trials_d, "trial count (accepts 1e6)");
  sim->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
  sim->add_option("--substream", substream);
  sim->add_option("-o,--output", results_out, "results JSON path (stdout if omitted)");

  // ---- factory ----
  auto* fac = app.add_subcommand("factory", "multiplexed factory success and sizing");
  analytics::FactoryConfig cfg;
  double fac_eta = 0.95;
  int fac_m = 0;  // 0 = use m_opt
  std::string sweep_na, sweep_nb, fac_out, fac_json;
  fac->add_option("--k", cfg.k);
  fac->add_option("--n1", cfg.n1);
  fac->add_option("--n2", cfg.n2);
  fac->add_option("--m", fac_m, "photons per fusion (default: optimal for eta)");
  fac->add_option("--eta", fac_eta);
  fac->add_option("--epsilon", cfg.epsilon);
  fac->add_option("--NA", cfg.n_a, "ring-factory width (0 = use sizing)");
  fac->add_option("--NB", cfg.n_b, "code-factory width (0 = use sizing)");
  fac->add_option("--sweep-na", sweep_na, "width grid, e.g. 1..200");
  fac->add_option("--sweep-nb", sweep_nb);
  fac->add_option("-o,--output", fac_out);
  fac->add_option("--json", fac_json);

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "run the oracle verification suite");
  int vq = 8;
  long long vcases = 500;
  uint64_t vseed = 12345;
  bool vseed_given = false;
  ver->add_option("--max-qubits", vq);
  ver->add_option("--cases", vcases);
  ver->add_option("--seed", vseed)->each([&](const std::string&) { vseed_given = true; });

  // ---- compare ----
  auto* cmp = app.add_subcommand("compare", "boosted vs RUS vs ancilla-assisted fusion");
  double c_eta_min = 0.5, c_eta_max = 1.0;
  int c_steps = 101;
  long long c_budget = 4096;
  std::string cmp_out, cmp_json;
  cmp->add_option("--eta-min", c_eta_min);
  cmp->add_option("--eta-max", c_eta_max);
  cmp->add_option("--steps", c_steps);
  cmp->add_option("--budget", c_budget);
  cmp->add_option("-o,--output", cmp_out);
  cmp->add_option("--json", cmp_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*rates) {
      analytics::Table t;
      if (fig == 5) {
        t = analytics::fig5_table(eta_min, eta_max, steps, parse_int_list(m_list), m_cap);
      } else if (fig == 6) {
        auto s1 = parse_int_list(sizes1);
        auto s2 = sizes2.empty() ? s1 : parse_int_list(sizes2);
        t = analytics::fig6_table(s1, s2, parse_double_list(etas), t_emit, t_h);
      } else {
        t = analytics::fig9_table(eta_min, eta_max, steps, budget);
      }
      emit_table(t, out_csv, out_json);
      return 0;
    }

    if (*planc) {
      GenerationPlan p;
      if (family == "linear")
        p = compile_linear(parse_int_list(sizes_spec));
      else if (family == "ghz")
        p = compile_ghz(pn);
      else if (family == "cluster2d")
        p = compile_cluster_2d(pn1, pn2, pm);
      else if (family == "clusterNd")
        p = compile_cluster_nd(parse_int_list(dims_spec), pm);
      else if (family == "ring")
        p = compile_ring(pk, pm);
      else if (family == "encoded-ring")
        p = compile_encoded_ring(pk, pn1, pn2, pm);
      else
        throw CLI::ValidationError("unknown plan family: " + family);
      io::write_file(out_path(plan_out), io::plan_to_jsonl(p));
      std::cout << "wrote " << out_path(plan_out) << ": " << p.photon_count() << " photons, "
                << p.boosted_fusion_count() << " boosted fusions, " << p.stream_count()
                << " streams\n";
      return 0;
    }

    if (*sim) {
      GenerationPlan p = io::plan_from_jsonl(io::read_file(plan_in));
      LossModel loss{sim_eta, env_seed(seed, seed_given), substream};
      long long trials = static_cast<long long>(trials_d);
      Estimate e = estimate(p, loss, trials);
      std::string json = io::results_to_json(p, loss, e);
      if (results_out.empty())
        std::cout << json << "\n";
      else
        io::write_file(out_path(results_out), json);
      return 0;
    }

    if (*fac) {
      if (fac_m <= 0) cfg.m = analytics::m_opt(fac_eta).m;
      else cfg.m = fac_m;
      auto sizing = analytics::factory_sizing(cfg, fac_eta);
      double pc = analytics::factory_p_c(cfg, fac_eta);
      double delta_c_half = std::log(2.0) / std::abs(std::log1p(-pc));
      analytics::Table t;
      t.header = {"k",     "n1",      "m",        "eta",     "epsilon",   "p_a",  "p_b",
                  "p_c",   "c_hat",   "NA_hat",   "NB_hat",  "P_S",       "delta_c_per_eps_halving"};
      analytics::FactoryConfig at = cfg;
      at.n_a = cfg.n_a > 0 ? cfg.n_a : sizing.n_a_hat;
      at.n_b = cfg.n_b > 0 ? cfg.n_b : sizing.n_b_hat;
      t.rows.push_back({static_cast<double>(cfg.k), static_cast<double>(cfg.n1),
                        static_cast<double>(cfg.m), fac_eta, cfg.epsilon,
                        analytics::factory_p_a(cfg, fac_eta), analytics::factory_p_b(cfg, fac_eta),
                        pc, static_cast<double>(sizing.c_hat), static_cast<double>(sizing.n_a_hat),
                        static_cast<double>(sizing.n_b_hat), analytics::factory_success(at, fac_eta),
                        delta_c_half});
      emit_table(t, fac_out, fac_json);
      if (!sweep_na.empty() || !sweep_nb.empty()) {
        std::vector<long long> nas, nbs;
        for (int v : parse_int_list(sweep_na.empty() ? std::to_string(at.n_a) : sweep_na))
          nas.push_back(v);
        for (int v : parse_int_list(sweep_nb.empty() ? std::to_string(at.n_b) : sweep_nb))
          nbs.push_back(v);
        analytics::Table sweep = analytics::factory_table(cfg, fac_eta, nas, nbs);
        std::string path = fac_out.empty() ? "" : out_path(fac_out) + ".sweep.csv";
        if (path.empty())
          std::cout << io::table_to_csv(sweep);
        else
          io::write_file(path, io::table_to_csv(sweep));
      }
      return 0;
    }

    if (*ver) {
      VerifyReport report = run_verification(vq, vcases, env_seed(vseed, vseed_given));
      std::cout << format_report(report);
      return report.all_pass() ? 0 : 1;
    }

    if (*cmp) {
      analytics::Table t = analytics::fig9_table(c_eta_min, c_eta_max, c_steps, c_budget);
      emit_table(t, cmp_out, cmp_json);
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
