#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dftatoms/appendix.hpp"
#include "dftatoms/constants.hpp"
#include "dftatoms/dmf.hpp"
#include "dftatoms/engel_dreizler.hpp"
#include "dftatoms/fockspace.hpp"
#include "dftatoms/hartree.hpp"
#include "dftatoms/hellmann.hpp"
#include "dftatoms/macke.hpp"
#include "dftatoms/phasespace.hpp"
#include "dftatoms/thomasfermi.hpp"
#include "dftatoms/tfw.hpp"
#include "dftatoms/verify.hpp"

namespace {

using nlohmann::json;

std::string num12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Round to 12 significant digits so the JSON emitter prints exactly that.
double r12(double v) { return std::strtod(num12(v).c_str(), nullptr); }

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << text << "\n";
}

dfta::RadialGrid load_grid_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open grid file: " + path);
  json j;
  is >> j;
  std::vector<double> nodes = j.at("nodes").get<std::vector<double>>();
  const auto spacing =
      j.value("spacing", std::string("logarithmic")) == "uniform"
          ? dfta::GridSpacing::uniform
          : dfta::GridSpacing::logarithmic;
  if (j.contains("weights"))
    return dfta::RadialGrid(std::move(nodes),
                            j.at("weights").get<std::vector<double>>(),
                            spacing);
  return dfta::RadialGrid(std::move(nodes), spacing);
}

// --grid file, DFTATOMS_GRID env var, or the built-in default.
std::optional<dfta::RadialGrid> resolve_grid(const std::string& arg) {
  if (!arg.empty() && arg != "default") return load_grid_file(arg);
  if (const char* env = std::getenv("DFTATOMS_GRID"))
    if (env[0] != '\0') return load_grid_file(env);
  return std::nullopt;
}

dfta::RadialDensity load_density_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open density file: " + path);
  return dfta::RadialDensity::read_csv(is, dfta::GridSpacing::logarithmic);
}

std::string tf_solution_json(const dfta::tf::TfSolution& sol, double n) {
  std::string out = "{\"Z\":" + num12(sol.z) + ",\"N\":" + num12(n) +
                    ",\"energy_hartree\":" + num12(sol.energy) +
                    ",\"mass\":" + num12(sol.rho.mass()) +
                    ",\"mu\":" + num12(sol.mu) +
                    ",\"residual\":" + num12(sol.residual) +
                    ",\"on_mass_shell\":" +
                    (sol.constrained_boundary ? "true" : "false") +
                    ",\"profile\":[";
  const auto& r = sol.rho.grid().nodes();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += "{\"r\":" + num12(r[i]) + ",\"rho\":" + num12(sol.rho.values()[i]) +
           ",\"phi\":" + num12(sol.phi[i]) + "}";
  }
  out += "]}";
  return out;
}

std::string tf_solution_csv(const dfta::tf::TfSolution& sol) {
  std::string out = "r,rho,phi\n";
  const auto& r = sol.rho.grid().nodes();
  for (std::size_t i = 0; i < r.size(); ++i)
    out += num12(r[i]) + "," + num12(sol.rho.values()[i]) + "," +
           num12(sol.phi[i]) + "\n";
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Orbital-free DFT functionals and density-matrix solvers"};
  app.require_subcommand(1);
  std::string out_path, format = "json", grid_arg;
  app.add_option("--out", out_path, "output path ('-' for stdout)");
  app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // tf solve
  auto* tf_cmd = app.add_subcommand("tf", "Thomas-Fermi atom");
  auto* tf_solve = tf_cmd->add_subcommand("solve", "solve the TF equation");
  double tf_z = 1.0, tf_n = -1.0, tf_tol = 1e-6;
  tf_solve->add_option("--z", tf_z, "nuclear charge")->required();
  tf_solve->add_option("--n", tf_n, "electron number (defaults to Z)");
  tf_solve->add_option("--tol", tf_tol);
  tf_solve->add_option("--grid", grid_arg, "grid file or 'default'");

  // tfw solve | critical
  auto* tfw_cmd = app.add_subcommand("tfw", "Thomas-Fermi-Weizsaecker atom");
  auto* tfw_solve = tfw_cmd->add_subcommand("solve", "minimize at fixed N");
  double tfw_z = 1.0, tfw_n = 1.0, tfw_lambda = 0.2, tfw_tol = 1e-8;
  tfw_solve->add_option("--z", tfw_z)->required();
  tfw_solve->add_option("--n", tfw_n)->required();
  tfw_solve->add_option("--lambda", tfw_lambda)->required();
  tfw_solve->add_option("--tol", tfw_tol);
  tfw_solve->add_option("--grid", grid_arg);
  auto* tfw_critical =
      tfw_cmd->add_subcommand("critical", "bracket the critical charge");
  double crit_z = 1.0, crit_lambda = 0.2, crit_tol = 2e-2;
  tfw_critical->add_option("--z", crit_z)->required();
  tfw_critical->add_option("--lambda", crit_lambda)->required();
  tfw_critical->add_option("--tol", crit_tol);

  // hw eval
  auto* hw_cmd = app.add_subcommand("hw", "Hellmann-Weizsaecker functional");
  auto* hw_eval = hw_cmd->add_subcommand("eval", "evaluate channel energies");
  std::string hw_file;
  double hw_z = 1.0;
  hw_eval->add_option("--channels", hw_file, "JSON channel file")->required();
  hw_eval->add_option("--z", hw_z)->required();

  // macke build | bound
  auto* macke_cmd = app.add_subcommand("macke", "Macke orbital constructors");
  auto* macke_build = macke_cmd->add_subcommand("build", "emit orbitals");
  std::string macke_density;
  double macke_a = 0.5;
  macke_build->add_option("--density", macke_density, "CSV x,rho")->required();
  macke_build->add_option("--a", macke_a, "phase offset");
  auto* macke_bound =
      macke_cmd->add_subcommand("bound", "kinetic upper bound");
  macke_bound->add_option("--density", macke_density, "CSV x,rho")->required();

  // dmf minimize | eval
  auto* dmf_cmd = app.add_subcommand("dmf", "density-matrix functionals");
  auto* dmf_minimize = dmf_cmd->add_subcommand("minimize");
  std::string dmf_problem, dmf_functional = "hf";
  int dmf_n = 2;
  std::uint64_t dmf_seed = 1;
  dmf_minimize->add_option("--problem", dmf_problem, "problem JSON")->required();
  dmf_minimize->add_option("--n", dmf_n)->required();
  dmf_minimize->add_option("--functional", dmf_functional)
      ->check(CLI::IsMember({"hf", "mueller"}));
  dmf_minimize->add_option("--seed", dmf_seed);
  auto* dmf_eval = dmf_cmd->add_subcommand("eval");
  std::string dmf_gamma_file;
  dmf_eval->add_option("--problem", dmf_problem)->required();
  dmf_eval->add_option("--gamma", dmf_gamma_file, "JSON {gamma:[[...]]}")
      ->required();

  // fock fci | rdm
  auto* fock_cmd = app.add_subcommand("fock", "exact Fock-space oracle");
  auto* fock_fci = fock_cmd->add_subcommand("fci");
  std::string fock_problem;
  int fock_n = 2, fock_k = 1;
  fock_fci->add_option("--problem", fock_problem)->required();
  fock_fci->add_option("--n", fock_n)->required();
  auto* fock_rdm = fock_cmd->add_subcommand("rdm");
  fock_rdm->add_option("--problem", fock_problem)->required();
  fock_rdm->add_option("--n", fock_n)->required();
  fock_rdm->add_option("--k", fock_k)->check(CLI::IsMember({1, 2}));

  // ed eval | kernels
  auto* ed_cmd = app.add_subcommand("ed", "Engel-Dreizler functional");
  auto* ed_eval = ed_cmd->add_subcommand("eval");
  std::string ed_density;
  double ed_z = 1.0, ed_c = dfta::speed_of_light, ed_lambda = 1.0 / 9.0;
  ed_eval->add_option("--density", ed_density, "CSV r,rho")->required();
  ed_eval->add_option("--z", ed_z)->required();
  ed_eval->add_option("--c", ed_c);
  ed_eval->add_option("--lambda", ed_lambda);
  auto* ed_kern = ed_cmd->add_subcommand("kernels");
  double ed_t = 1.0;
  ed_kern->add_option("--t", ed_t)->required();

  // phasespace reduce | englert
  auto* ps_cmd = app.add_subcommand("phasespace", "semiclassical phase space");
  auto* ps_reduce = ps_cmd->add_subcommand("reduce");
  double ps_z = 1.0;
  std::string ps_mode = "position";
  std::size_t ps_np = 4000, ps_nr = 700;
  ps_reduce->add_option("--z", ps_z)->required();
  ps_reduce->add_option("--mode", ps_mode)
      ->check(CLI::IsMember({"position", "momentum"}));
  ps_reduce->add_option("--np", ps_np);
  ps_reduce->add_option("--nr", ps_nr);

  // appendix maximal | infimum
  auto* ap_cmd = app.add_subcommand("appendix", "appendix lemmas");
  auto* ap_max = ap_cmd->add_subcommand("maximal");
  double ap_alpha = 1.0, ap_x = 1.0;
  int ap_d = 3;
  ap_max->add_option("--alpha", ap_alpha)->required();
  ap_max->add_option("--d", ap_d)->check(CLI::IsMember({1, 2, 3}));
  ap_max->add_option("--x", ap_x)->required();
  auto* ap_inf = ap_cmd->add_subcommand("infimum");
  double ap_gamma = 1.0, ap_z = 1.0, ap_c = 1.0;
  ap_inf->add_option("--gamma", ap_gamma)->required();
  ap_inf->add_option("--z", ap_z)->required();
  ap_inf->add_option("--c", ap_c)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the theorem suite");
  std::string suite = "all";
  std::uint64_t verify_seed = 7;
  bool timings = false;
  verify_cmd->add_option("--suite", suite);
  verify_cmd->add_option("--seed", verify_seed);
  verify_cmd->add_flag("--timings", timings,
                       "include runtimes (omitted from canonical reports)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError&) {
    std::cerr << app.help() << "\n";
    return 64;
  }

  if (tf_solve->parsed()) {
    auto grid = resolve_grid(grid_arg);
    const double n = tf_n < 0.0 ? tf_z : tf_n;
    auto sol = grid ? dfta::tf::solve_tf_constrained(tf_z, n, *grid, tf_tol)
                    : dfta::tf::solve_tf_constrained(tf_z, n, tf_tol);
    write_output(format == "csv" ? tf_solution_csv(sol)
                                 : tf_solution_json(sol, n),
                 out_path);
    return 0;
  }

  if (tfw_solve->parsed()) {
    dfta::tfw::TfwOptions opt;
    opt.tol = tfw_tol;
    opt.throw_on_failure = false;
    auto grid = resolve_grid(grid_arg);
    auto sol = grid ? dfta::tfw::minimize_tfw(tfw_z, tfw_n, tfw_lambda, *grid,
                                              opt)
                    : dfta::tfw::minimize_tfw(tfw_z, tfw_n, tfw_lambda, opt);
    std::string out =
        "{\"Z\":" + num12(tfw_z) + ",\"N\":" + num12(tfw_n) +
        ",\"lambda\":" + num12(tfw_lambda) +
        ",\"energy_hartree\":" + num12(sol.energy) +
        ",\"mu\":" + num12(sol.mu) +
        ",\"euler_residual\":" + num12(sol.euler_residual) +
        ",\"bound\":" + (sol.bound ? "true" : "false") +
        ",\"mass\":" + num12(sol.rho.mass()) + "}";
    write_output(out, out_path);
    return sol.bound ? 0 : 1;
  }

  if (tfw_critical->parsed()) {
    auto bracket = dfta::tfw::critical_charge(crit_z, crit_lambda, crit_tol);
    std::string out =
        "{\"Z\":" + num12(crit_z) + ",\"lambda\":" + num12(crit_lambda) +
        ",\"n_lower\":" + num12(bracket.n_lower) +
        ",\"n_upper\":" + num12(bracket.n_upper) +
        ",\"benguria_cap\":" + num12(2.0 * crit_z) + ",\"excess_cap\":" +
        num12(dfta::tfw::excess_charge_cap(crit_z, crit_lambda)) + "}";
    write_output(out, out_path);
    return 0;
  }

  if (hw_eval->parsed()) {
    std::ifstream is(hw_file);
    if (!is) throw std::runtime_error("cannot open channel file: " + hw_file);
    json j;
    is >> j;
    dfta::RadialGrid grid(j.at("nodes").get<std::vector<double>>(),
                          dfta::GridSpacing::logarithmic);
    std::vector<std::vector<double>> channels;
    for (const auto& ch : j.at("channels"))
      channels.push_back(ch.get<std::vector<double>>());
    dfta::tfw::ChannelDensities densities(std::move(grid),
                                          std::move(channels));
    auto terms = dfta::tfw::hw_energy_terms(densities, hw_z);
    std::string out = "{\"Z\":" + num12(hw_z) +
                      ",\"gradient\":" + num12(terms.gradient) +
                      ",\"centrifugal\":" + num12(terms.centrifugal) +
                      ",\"cubic\":" + num12(terms.cubic) +
                      ",\"external\":" + num12(terms.external) +
                      ",\"hartree\":" + num12(terms.hartree) +
                      ",\"total\":" + num12(terms.total()) + "}";
    write_output(out, out_path);
    return 0;
  }

  if (macke_build->parsed() || macke_bound->parsed()) {
    std::ifstream is(macke_density);
    if (!is)
      throw std::runtime_error("cannot open density file: " + macke_density);
    std::vector<double> x, rho;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      if (first && line.find("rho") != std::string::npos) {
        first = false;
        continue;
      }
      first = false;
      std::istringstream ls(line);
      std::string a, b;
      std::getline(ls, a, ',');
      std::getline(ls, b, ',');
      x.push_back(std::stod(a));
      rho.push_back(std::stod(b));
    }
    dfta::macke::LineGrid grid;
    grid.nodes = x;
    grid.h = x.size() > 1 ? x[1] - x[0] : 1.0;
    grid.weights = dfta::interpolatory_line_weights(grid.nodes);
    if (macke_build->parsed()) {
      auto set = dfta::macke::macke_orbitals_1d(grid, rho, macke_a);
      std::string out = "x";
      for (int k = 0; k < set.particle_count(); ++k)
        out += ",re_phi" + std::to_string(k + 1) + ",im_phi" +
               std::to_string(k + 1);
      out += "\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out += num12(grid.nodes[i]);
        for (int k = 0; k < set.particle_count(); ++k) {
          const auto v = set.value(k, i);
          out += "," + num12(v.real()) + "," + num12(v.imag());
        }
        out += "\n";
      }
      write_output(out, out_path);
    } else {
      auto [a_opt, direct] = dfta::macke::optimal_phase_1d(grid, rho);
      const double mass = grid.integrate(rho);
      const int n = static_cast<int>(std::round(mass));
      const double bound = dfta::macke::kinetic_upper_bound_1d(grid, rho, n);
      std::string out = "{\"N\":" + std::to_string(n) +
                        ",\"bound\":" + num12(bound) +
                        ",\"optimal_a\":" + num12(a_opt) +
                        ",\"slater_kinetic\":" + num12(direct) + "}";
      write_output(out, out_path);
    }
    return 0;
  }

  if (dmf_minimize->parsed() || dmf_eval->parsed() || fock_fci->parsed() ||
      fock_rdm->parsed()) {
    const std::string path = dmf_minimize->parsed() || dmf_eval->parsed()
                                 ? dmf_problem
                                 : fock_problem;
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open problem file: " + path);
    std::stringstream buffer;
    buffer << is.rdbuf();
    auto spec = dfta::fock::ManyBodyOperatorSpec::from_json_string(
        buffer.str());
    if (dmf_minimize->parsed()) {
      dfta::dmf::TwoBodyProblem prob(std::move(spec));
      dfta::dmf::MinimizeOptions opt;
      opt.seed = dmf_seed;
      const auto functional = dmf_functional == "hf"
                                  ? dfta::dmf::Functional::hf
                                  : dfta::dmf::Functional::mueller;
      auto res = dfta::dmf::minimize_dmf(prob, dmf_n, functional, opt);
      std::string out = "{\"N\":" + std::to_string(dmf_n) +
                        ",\"functional\":\"" + dmf_functional +
                        "\",\"energy\":" + num12(res.energy) +
                        ",\"occupations\":[";
      for (int i = 0; i < res.gamma.occupations().size(); ++i)
        out += (i ? "," : "") + num12(res.gamma.occupations()[i]);
      out += "],\"projected_gradient\":" + num12(res.projected_gradient_norm) +
             "}";
      write_output(out, out_path);
      return 0;
    }
    if (dmf_eval->parsed()) {
      std::ifstream gs(dmf_gamma_file);
      if (!gs)
        throw std::runtime_error("cannot open gamma file: " + dmf_gamma_file);
      json gj;
      gs >> gj;
      const auto rows = gj.at("gamma");
      Eigen::MatrixXcd g(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
          g(i, j) = rows.at(i).at(j).get<double>();
      dfta::dmf::DensityMatrix gamma(g);
      dfta::dmf::TwoBodyProblem prob(std::move(spec));
      std::string out =
          "{\"hf\":" + num12(dfta::dmf::hf_energy(gamma, prob)) +
          ",\"mueller\":" + num12(dfta::dmf::muller_energy(gamma, prob)) +
          ",\"trace\":" + num12(gamma.trace()) + "}";
      write_output(out, out_path);
      return 0;
    }
    if (fock_fci->parsed()) {
      auto gs = dfta::fock::ground_state(spec, fock_n);
      std::string out = "{\"N\":" + std::to_string(fock_n) +
                        ",\"energy\":" + num12(gs.energy) + "}";
      write_output(out, out_path);
      return 0;
    }
    auto gs = dfta::fock::ground_state(spec, fock_n);
    auto rdm = dfta::fock::reduced_density_matrix(gs.psi, fock_k);
    std::string out = "{\"N\":" + std::to_string(fock_n) +
                      ",\"k\":" + std::to_string(fock_k) +
                      ",\"energy\":" + num12(gs.energy) + ",\"rdm_re\":[";
    for (int i = 0; i < rdm.rows(); ++i) {
      if (i) out += ",";
      out += "[";
      for (int j = 0; j < rdm.cols(); ++j)
        out += (j ? "," : "") + num12(rdm(i, j).real());
      out += "]";
    }
    out += "],\"trace\":" + num12(rdm.trace().real()) + "}";
    write_output(out, out_path);
    return 0;
  }

  if (ed_eval->parsed()) {
    auto rho = load_density_csv(ed_density);
    dfta::ed::EdParams params{ed_c, ed_lambda, ed_z};
    auto terms = dfta::ed::ed_energy_terms(rho, params);
    std::string out = "{\"Z\":" + num12(ed_z) + ",\"c\":" + num12(ed_c) +
                      ",\"lambda\":" + num12(ed_lambda) +
                      ",\"weizsaecker\":" + num12(terms.weizsaecker) +
                      ",\"kinetic\":" + num12(terms.kinetic) +
                      ",\"exchange\":" + num12(terms.exchange) +
                      ",\"potential\":" + num12(terms.potential) +
                      ",\"total\":" + num12(terms.total()) + "}";
    write_output(out, out_path);
    return 0;
  }

  if (ed_kern->parsed()) {
    auto k = dfta::ed::ed_kernels(ed_t);
    write_output("{\"t\":" + num12(ed_t) + ",\"f2\":" + num12(k.f2) +
                     ",\"ttf\":" + num12(k.ttf) + ",\"x\":" + num12(k.x) + "}",
                 out_path);
    return 0;
  }

  if (ps_reduce->parsed()) {
    auto tf_sol = dfta::tf::solve_tf_neutral(ps_z);
    auto grid = dfta::RadialGrid::logarithmic(ps_nr, 2e-5, 40.0);
    std::vector<double> rho(grid.size());
    const auto& src_r = tf_sol.rho.grid().nodes();
    const auto& src_v = tf_sol.rho.values();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = grid.nodes()[i];
      auto it = std::lower_bound(src_r.begin(), src_r.end(), r);
      std::size_t k = std::min<std::size_t>(
          std::max<std::ptrdiff_t>(it - src_r.begin(), 1), src_r.size() - 1);
      const double t = (r - src_r[k - 1]) / (src_r[k] - src_r[k - 1]);
      rho[i] = (1.0 - t) * src_v[k - 1] + t * src_v[k];
    }
    dfta::RadialDensity density(grid, rho);
    auto vh = dfta::hartree_potential(density);
    std::vector<double> phi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      phi[i] = std::max(ps_z / grid.nodes()[i] - vh[i], 1e-12);
    auto momentum = dfta::ps::momentum_grid_for(phi, ps_np);
    auto fill = dfta::ps::minimize_momentum_slices(density, momentum);
    const double e_phase = dfta::ps::phase_energy(fill, ps_z);
    if (ps_mode == "position") {
      if (format == "csv") {
        auto marginal = fill.position_marginal();
        std::string out = "r,rho\n";
        for (std::size_t i = 0; i < grid.size(); ++i)
          out += num12(grid.nodes()[i]) + "," + num12(marginal.values()[i]) +
                 "\n";
        write_output(out, out_path);
      } else {
        write_output("{\"Z\":" + num12(ps_z) +
                         ",\"phase_energy\":" + num12(e_phase) +
                         ",\"tf_energy\":" + num12(tf_sol.energy) + "}",
                     out_path);
      }
    } else {
      dfta::ps::MomentumDensity tau(momentum, fill.momentum_marginal());
      const double e_englert = dfta::ps::englert_energy(tau, ps_z);
      if (format == "csv") {
        std::string out = "p,tau\n";
        for (std::size_t j = 0; j < momentum.size(); ++j)
          out += num12(momentum.nodes()[j]) + "," + num12(tau.values()[j]) +
                 "\n";
        write_output(out, out_path);
      } else {
        write_output("{\"Z\":" + num12(ps_z) +
                         ",\"phase_energy\":" + num12(e_phase) +
                         ",\"englert_energy\":" + num12(e_englert) +
                         ",\"tf_energy\":" + num12(tf_sol.energy) + "}",
                     out_path);
      }
    }
    return 0;
  }

  if (ap_max->parsed()) {
    dfta::appendix::MaximalFunctionQuery q{ap_alpha, ap_d};
    const double value = dfta::appendix::maximal_function_power(q, ap_x);
    write_output("{\"alpha\":" + num12(ap_alpha) +
                     ",\"d\":" + std::to_string(ap_d) + ",\"x\":" +
                     num12(ap_x) + ",\"value\":" + num12(value) +
                     ",\"constant\":" + num12(value * std::pow(ap_x, ap_alpha)) +
                     "}",
                 out_path);
    return 0;
  }

  if (ap_inf->parsed()) {
    const double value = dfta::appendix::scaled_infimum(ap_gamma, ap_z, ap_c);
    write_output("{\"gamma\":" + num12(ap_gamma) + ",\"z\":" + num12(ap_z) +
                     ",\"c\":" + num12(ap_c) + ",\"infimum\":" + num12(value) +
                     "}",
                 out_path);
    return 0;
  }

  if (verify_cmd->parsed()) {
    auto report = dfta::verify::run_suite(suite, verify_seed);
    write_output(dfta::verify::report_json(report, timings), out_path);
    return report.all_passed() ? 0 : 2;
  }

  std::cerr << app.help() << "\n";
  return 64;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
