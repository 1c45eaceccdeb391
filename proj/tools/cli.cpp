#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pulsefront/eigensolve.hpp"
#include "pulsefront/errors.hpp"
#include "pulsefront/homog.hpp"
#include "pulsefront/io.hpp"
#include "pulsefront/patch.hpp"
#include "pulsefront/profiles.hpp"
#include "pulsefront/simulate.hpp"
#include "pulsefront/speed.hpp"

namespace pulsefront::cli {

namespace {

int env_grid_n() {
  const char* env = std::getenv("PULSEFRONT_GRID_N");
  if (!env) return 256;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 16)
    throw BadConfig("PULSEFRONT_GRID_N must be an integer >= 16");
  return static_cast<int>(v);
}

struct Output {
  bool quiet = false;
  bool json = false;
  nlohmann::json doc;

  void line(const std::string& text) {
    if (!quiet && !json) std::cout << text << '\n';
  }
  template <class T>
  void field(const std::string& key, const T& value) {
    if (json) doc[key] = value;
  }
  void flush() {
    if (json) std::cout << doc.dump(2) << '\n';
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"pulsefront: minimal speeds of pulsating fronts in 1-D periodic media"};
  app.require_subcommand(1);

  app.fallthrough();
  Output out;
  int seed = 0;  // reserved for future stochastic features
  auto* quiet_flag = app.add_flag("--quiet", out.quiet, "suppress normal output");
  auto* json_flag = app.add_flag("--json", out.json, "machine-readable output");
  quiet_flag->excludes(json_flag);
  app.add_option("--seed", seed, "reserved");

  // ---- eigen ----
  auto* sc_eigen = app.add_subcommand("eigen", "principal eigenvalue k(lambda, L)");
  std::string eigen_config, eigen_out;
  double eigen_lambda = 0.0, eigen_L = 1.0;
  int eigen_n = 0;
  sc_eigen->add_option("--config", eigen_config, "profile pair JSON")->required();
  sc_eigen->add_option("--lambda", eigen_lambda)->required();
  sc_eigen->add_option("--L", eigen_L)->required();
  sc_eigen->add_option("--n", eigen_n, "grid size (fixed; default auto-refined)");
  sc_eigen->add_option("--out", eigen_out, "write eigenfunction CSV (x, phi)");
  sc_eigen->callback([&] {
    ProfilePair pair = io::load_pair(eigen_config);
    EigenRequest req{pair, eigen_lambda, eigen_L, eigen_n > 0 ? eigen_n : env_grid_n()};
    EigenOptions opts;
    opts.auto_refine = (eigen_n == 0);
    EigenResult res = principal_eigenvalue(req, opts);
    out.line("k = " + num(res.k));
    out.line("residual = " + num(res.residual));
    out.line("n = " + std::to_string(res.n));
    out.field("k", res.k);
    out.field("k_tilde", res.k_tilde);
    out.field("residual", res.residual);
    out.field("n", res.n);
    if (res.rho1) {
      out.line("rho1 = " + num(*res.rho1));
      out.field("rho1", *res.rho1);
    }
    if (!eigen_out.empty()) {
      std::vector<double> xs(res.phi.size());
      for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = static_cast<double>(i) / static_cast<double>(res.n);
      io::write_csv(eigen_out, {"x", "phi"}, {xs, res.phi});
    }
  });

  // ---- speed ----
  auto* sc_speed = app.add_subcommand("speed", "minimal speed c*_L");
  std::string speed_config;
  double speed_L = 1.0;
  int speed_n = 0;
  sc_speed->add_option("--config", speed_config)->required();
  sc_speed->add_option("--L", speed_L)->required();
  sc_speed->add_option("--n", speed_n);
  sc_speed->callback([&] {
    ProfilePair pair = io::load_pair(speed_config);
    SpeedResult res = minimal_speed(pair, speed_L, speed_n > 0 ? speed_n : env_grid_n());
    out.line("c_star = " + num(res.c_star));
    out.line("lambda_star = " + num(res.lambda_star));
    out.line("k_at_min = " + num(res.k_at_min));
    out.line("evals = " + std::to_string(res.evals));
    out.field("c_star", res.c_star);
    out.field("lambda_star", res.lambda_star);
    out.field("k_at_min", res.k_at_min);
    out.field("bracket", std::vector<double>{res.bracket.first, res.bracket.second});
    out.field("evals", res.evals);
  });

  // ---- sweep-l ----
  auto* sc_sweep = app.add_subcommand("sweep-l", "sweep c*_L over L");
  std::string sweep_config, sweep_out;
  double l_min = 0.0, l_max = 0.0;
  int sweep_points = 0, sweep_n = 0;
  bool geometric = false;
  sc_sweep->add_option("--config", sweep_config)->required();
  sc_sweep->add_option("--l-min", l_min)->required();
  sc_sweep->add_option("--l-max", l_max)->required();
  sc_sweep->add_option("--points", sweep_points)->required();
  sc_sweep->add_flag("--geometric", geometric, "geometric L spacing");
  sc_sweep->add_option("--n", sweep_n);
  sc_sweep->add_option("--out", sweep_out, "CSV: L,c_star,lambda_star,k_at_min,n_grid");
  sc_sweep->callback([&] {
    if (!(l_min > 0.0) || !(l_max > l_min))
      throw InvalidRequest("need 0 < l-min < l-max");
    if (sweep_points < 3) throw InvalidRequest("need at least 3 points");
    ProfilePair pair = io::load_pair(sweep_config);
    std::vector<double> Ls(sweep_points);
    for (int i = 0; i < sweep_points; ++i) {
      const double t = static_cast<double>(i) / (sweep_points - 1);
      Ls[i] = geometric ? l_min * std::pow(l_max / l_min, t)
                        : l_min + t * (l_max - l_min);
    }
    SweepReport rep = sweep_L(pair, Ls, sweep_n > 0 ? sweep_n : env_grid_n());
    if (!sweep_out.empty()) {
      std::vector<double> c0, c1, c2, c3, c4;
      for (const auto& r : rep.rows) {
        c0.push_back(r.L);
        c1.push_back(r.c_star);
        c2.push_back(r.lambda_star);
        c3.push_back(r.k_at_min);
        c4.push_back(r.n_grid);
      }
      io::write_csv(sweep_out, {"L", "c_star", "lambda_star", "k_at_min", "n_grid"},
                    {c0, c1, c2, c3, c4});
    }
    out.line("rows = " + std::to_string(rep.rows.size()));
    out.line("c_at_zero = " + num(rep.c_at_zero));
    out.line("d1 = " + num(rep.d1));
    out.line("d2 = " + num(rep.d2));
    out.field("c_at_zero", rep.c_at_zero);
    out.field("d1", rep.d1);
    out.field("d2", rep.d2);
    if (out.json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : rep.rows)
        rows.push_back({{"L", r.L},
                        {"c_star", r.c_star},
                        {"lambda_star", r.lambda_star},
                        {"k_at_min", r.k_at_min},
                        {"n_grid", r.n_grid}});
      out.doc["rows"] = rows;
    }
  });

  // ---- gamma ----
  auto* sc_gamma = app.add_subcommand("gamma", "homogenization report");
  std::string gamma_config;
  int gamma_grid = 4096;
  sc_gamma->add_option("--config", gamma_config)->required();
  sc_gamma->add_option("--grid", gamma_grid, "quadrature points");
  sc_gamma->callback([&] {
    ProfilePair pair = io::load_pair(gamma_config);
    HomogReport rep = homogenize(pair, gamma_grid);
    out.line("a_H = " + num(rep.a_H));
    out.line("mu_A = " + num(rep.mu_A));
    out.line("c_hom = " + num(rep.c_hom));
    out.line("lambda_hom = " + num(rep.lambda_hom));
    out.line("gamma = " + num(rep.gamma));
    out.line(std::string("degenerate = ") + (rep.degenerate ? "true" : "false"));
    out.field("a_H", rep.a_H);
    out.field("mu_A", rep.mu_A);
    out.field("c_hom", rep.c_hom);
    out.field("lambda_hom", rep.lambda_hom);
    out.field("gamma", rep.gamma);
    out.field("degenerate", rep.degenerate);
  });

  // ---- beta0 ----
  auto* sc_beta = app.add_subcommand("beta0", "mean-zero growth first-order slope");
  std::string beta_config;
  int beta_grid = 4096;
  sc_beta->add_option("--config", beta_config)->required();
  sc_beta->add_option("--grid", beta_grid);
  sc_beta->callback([&] {
    ProfilePair pair = io::load_pair(beta_config);
    MeanZeroReport rep = beta_mean_zero(pair, beta_grid);
    out.line("beta = " + num(rep.beta));
    out.line("slope = " + num(rep.slope));
    out.line("lambda_slope = " + num(rep.lambda_slope));
    out.field("beta", rep.beta);
    out.field("slope", rep.slope);
    out.field("lambda_slope", rep.lambda_slope);
  });

  // ---- frag ----
  auto* sc_frag = app.add_subcommand("frag", "fragmentation sweep of the patch model");
  double frag_L0 = 1.0, frag_l = 0.8, frag_m = 1.0;
  int z_steps = 41;
  std::string frag_out;
  sc_frag->add_option("--L0", frag_L0)->required();
  sc_frag->add_option("--l", frag_l)->required();
  sc_frag->add_option("--m", frag_m)->required();
  sc_frag->add_option("--z-steps", z_steps);
  sc_frag->add_option("--out", frag_out, "CSV: z,c_star,lambda_star,k_at_min,regime_warning");
  sc_frag->callback([&] {
    PatchConfig cfg{frag_L0, frag_l, 0.0, frag_m};
    FragSweepReport rep = frag_sweep(cfg, z_steps);
    if (!frag_out.empty()) {
      std::vector<double> c0, c1, c2, c3, c4;
      for (const auto& r : rep.rows) {
        c0.push_back(r.z);
        c1.push_back(r.c_star);
        c2.push_back(r.lambda_star);
        c3.push_back(r.k_at_min);
        c4.push_back(r.regime_warning ? 1.0 : 0.0);
      }
      io::write_csv(frag_out, {"z", "c_star", "lambda_star", "k_at_min", "regime_warning"},
                    {c0, c1, c2, c3, c4});
    }
    out.line(std::string("monotone_decreasing = ") + (rep.monotone_decreasing ? "true" : "false"));
    out.line(std::string("monotone_increasing = ") + (rep.monotone_increasing ? "true" : "false"));
    out.line("symmetry_defect = " + num(rep.symmetry_defect));
    if (rep.regime_warning)
      out.line("RegimeWarning: l/L0 <= 3/4, monotonicity flags are informational");
    out.field("monotone_decreasing", rep.monotone_decreasing);
    out.field("monotone_increasing", rep.monotone_increasing);
    out.field("symmetry_defect", rep.symmetry_defect);
    out.field("regime_warning", rep.regime_warning);
  });

  // ---- simulate ----
  auto* sc_sim = app.add_subcommand("simulate", "direct front simulation");
  std::string sim_config, sim_out;
  double sim_L = 1.0, sim_tend = 100.0, sim_dx = 0.05, sim_domain = 0.0, sim_level = 0.5;
  bool sim_compare = false;
  sc_sim->add_option("--config", sim_config)->required();
  sc_sim->add_option("--L", sim_L)->required();
  sc_sim->add_option("--t-end", sim_tend)->required();
  sc_sim->add_option("--dx", sim_dx)->required();
  sc_sim->add_option("--domain", sim_domain, "domain length (default 50 max(L,1))");
  sc_sim->add_option("--level", sim_level, "front tracking level");
  sc_sim->add_flag("--compare", sim_compare, "also compute the variational c*");
  sc_sim->add_option("--out", sim_out, "trace CSV: t,x_front");
  sc_sim->callback([&] {
    ProfilePair pair = io::load_pair(sim_config);
    const double domain = sim_domain > 0.0 ? sim_domain : 50.0 * std::max(sim_L, 1.0);
    SimConfig cfg = make_sim_config(pair, sim_L, domain, sim_dx, sim_tend);
    cfg.front_level = sim_level;
    SimOutput so = run_front(cfg);
    if (!sim_out.empty())
      io::write_csv(sim_out, {"t", "x_front"}, {so.trace.times, so.trace.positions});
    out.line("measured_speed = " + num(so.result.measured_speed));
    out.line("fit_residual = " + num(so.result.fit_residual));
    out.line("pulsation_defect = " + num(so.result.pulsation_defect));
    out.field("measured_speed", so.result.measured_speed);
    out.field("fit_residual", so.result.fit_residual);
    out.field("pulsation_defect", so.result.pulsation_defect);
    if (sim_compare) {
      SpeedResult ref = minimal_speed(pair, sim_L, env_grid_n());
      out.line("c_star_reference = " + num(ref.c_star));
      out.field("c_star_reference", ref.c_star);
    }
  });

  // ---- plot ----
  auto* sc_plot = app.add_subcommand("plot", "render a CSV column pair as an SVG polyline");
  std::string plot_in, plot_svg, plot_x, plot_y;
  sc_plot->add_option("--in", plot_in)->required();
  sc_plot->add_option("--out", plot_svg)->required();
  sc_plot->add_option("--x", plot_x)->required();
  sc_plot->add_option("--y", plot_y)->required();
  sc_plot->callback([&] {
    io::plot_csv(plot_in, plot_svg, plot_x, plot_y);
    out.line("wrote " + plot_svg);
    out.field("out", plot_svg);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    out.flush();
    return 0;
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << e.what() << '\n';
    return 3;
  }
}

}  // namespace pulsefront::cli
