#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ptdirac/error.hpp"
#include "ptdirac/evolution.hpp"
#include "ptdirac/existence.hpp"
#include "ptdirac/ptquad.hpp"
#include "ptdirac/solitons.hpp"
#include "ptdirac/stability.hpp"
#include "ptdirac/version.hpp"

namespace ptdirac::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

namespace {

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::string& header) : out_(path) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    out_ << header << '\n';
  }
  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      if (!first) out_ << ',';
      out_ << format_double(v);
      first = false;
    }
    out_ << '\n';
  }
  std::ostream& raw() { return out_; }

 private:
  std::ofstream out_;
};

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json meta_header(const std::string& command, const json& config) {
  return {{"command", command}, {"version", PTDIRAC_VERSION}, {"config", config}};
}

std::optional<double> opt_number(const json& config, const char* key) {
  if (!config.contains(key) || config.at(key).is_null()) return std::nullopt;
  return config.at(key).get<double>();
}

UniformGrid grid_from(const json& c) {
  const double L = c.at("L").get<double>();
  const auto n = c.value("n", std::size_t{0});
  return n ? UniformGrid::symmetric(L, n) : UniformGrid::with_spacing(L, c.at("h").get<double>());
}

struct Built {
  SolitonProfile profile;
  ModelParams params;
  json info;
};

Built build_soliton(const json& c, const UniformGrid& grid) {
  const ModelTag tag = parse_model_tag(c.at("model").get<std::string>());
  const double gamma = c.at("gamma").get<double>();
  const auto omega = opt_number(c, "omega");
  const auto alpha = opt_number(c, "alpha");
  Built b;
  b.params = ModelParams::of(tag, gamma);
  switch (tag) {
    case ModelTag::Thirring: {
      require(omega.has_value() != alpha.has_value(), ErrorCode::ParamOutOfRange,
              "the Thirring soliton takes exactly one of --omega and --alpha");
      const double a = alpha ? *alpha : thirring_alpha(gamma, *omega);
      const ThirringParameters tp = thirring_parameters(gamma, a);
      b.profile = thirring_soliton(gamma, a, grid);
      b.info = {{"alpha", a}, {"omega", tp.omega}, {"kappa", tp.kappa}};
      break;
    }
    case ModelTag::GrossNeveu:
      require(omega.has_value() && !alpha, ErrorCode::ParamOutOfRange,
              "the Gross-Neveu soliton takes --omega");
      b.profile = gross_neveu_soliton(gamma, *omega, grid);
      b.info = {{"omega", *omega}};
      break;
    case ModelTag::NewModel: {
      require(omega.has_value() && !alpha, ErrorCode::ParamOutOfRange,
              "the new-model soliton takes --omega");
      const DomainVerdict d = classify(*omega, gamma);
      if (d.status == DomainStatus::Outside) std::cout << "domain " << to_string(d.status) << '\n';
      b.profile = new_model_pt_soliton(*omega, gamma, grid);
      b.info = {{"omega", *omega}, {"domain", to_string(d.status)}};
      break;
    }
    case ModelTag::GeneralCubic:
      fail(ErrorCode::ParamOutOfRange, "no soliton constructor for the general cubic model");
  }
  return b;
}

// Position of the maximum of a on x >= 0, refined by a parabola through three nodes.
double hump_position(const SolitonProfile& p) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < p.grid.n; ++j)
    if (p.grid[j] >= 0.0 && (best == 0 || p.a[j] > p.a[best])) best = j;
  double x = p.grid[best];
  if (best > 0 && best + 1 < p.grid.n) {
    const double ym = p.a[best - 1], y0 = p.a[best], yp = p.a[best + 1];
    const double den = ym - 2.0 * y0 + yp;
    if (den < 0.0) x += 0.5 * p.grid.h * (ym - yp) / den;
  }
  return std::abs(x);
}

void write_profile(const fs::path& path, const SolitonProfile& p) {
  CsvWriter csv(path, "x,a,b,theta,phi,re_u,im_u,re_v,im_v");
  const cvec u = p.u(), v = p.v();
  for (std::size_t j = 0; j < p.grid.n; ++j)
    csv.row({p.grid[j], p.a[j], p.b[j], p.theta[j], p.phi[j], u[j].real(), u[j].imag(),
             v[j].real(), v[j].imag()});
}

void write_state(const fs::path& path, const FieldState& s) {
  CsvWriter csv(path, "x,re_u,im_u,re_v,im_v");
  for (std::size_t j = 0; j < s.grid.n; ++j)
    csv.row({s.grid[j], s.u[j].real(), s.u[j].imag(), s.v[j].real(), s.v[j].imag()});
}

std::string state_name(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "state_t%010.4f.csv", t);
  return buf;
}

void cmd_soliton(const json& c, const fs::path& out) {
  const UniformGrid grid = grid_from(c);
  const Built b = build_soliton(c, grid);
  const ResidualNorms res = stationary_residual(b.params, b.profile);
  json results = b.info;
  results["residual"] = {{"u", res.u}, {"v", res.v}, {"max", res.max()}};
  results["nodes"] = grid.n;
  results["h"] = grid.h;
  results["sup_a"] = sup_norm(b.profile.a);
  results["sup_b"] = sup_norm(b.profile.b);
  if (b.profile.model == ModelTag::NewModel) {
    const double omega = b.profile.omega;
    results["branch"] = to_string(2.0 * omega * omega > 1.0 ? Branch::HighFreq : Branch::LowFreq);
    const double xm = hump_position(b.profile);
    results["bimodal"] = xm > grid.h;
    results["x_m"] = xm;
  }
  write_profile(out / "profile.csv", b.profile);
  json meta = meta_header("soliton", c);
  meta["results"] = results;
  write_json(out / "meta.json", meta);
  std::cout << "residual " << format_double(res.max()) << '\n';
}

void cmd_domain(const json& c, const fs::path& out) {
  const double g0 = c.at("gamma_min").get<double>();
  const double g1 = c.at("gamma_max").get<double>();
  const auto points = c.at("points").get<std::size_t>();
  require(g0 > 0.0 && g1 < 1.0 && g0 <= g1 && points >= 1, ErrorCode::ParamOutOfRange,
          "gamma range must satisfy 0 < gamma_min <= gamma_max < 1");
  CsvWriter csv(out / "boundary.csv", "gamma,omega_c,omega_upper");
  for (std::size_t i = 0; i < points; ++i) {
    const double g = points == 1 ? g0 : g0 + (g1 - g0) * static_cast<double>(i) /
                                                 static_cast<double>(points - 1);
    csv.row({g, omega_c(g), std::sqrt(1.0 - g * g)});
  }
  const GammaStar gs = gamma_star();
  write_json(out / "gamma_star.json", {{"X_root", gs.X_root}, {"gamma_star", gs.gamma_star}});
  write_json(out / "meta.json", meta_header("domain", c));
  std::cout << "gamma_star " << format_double(gs.gamma_star) << '\n';
}

BoundaryScheme parse_boundary(const std::string& s) {
  if (s == "inflow") return BoundaryScheme::Inflow;
  if (s == "dirichlet") return BoundaryScheme::Dirichlet;
  fail(ErrorCode::ParamOutOfRange, "unknown boundary scheme '" + s + "'");
}

void cmd_spectrum(const json& c, const fs::path& out) {
  const auto N = c.at("N").get<std::size_t>();
  const double L = c.at("L").get<double>();
  SpectrumOptions opts;
  opts.boundary = parse_boundary(c.at("boundary").get<std::string>());

  if (c.at("onset").get<bool>()) {
    const auto gammas = c.at("gammas").get<std::vector<double>>();
    const double tol = c.at("tol").get<double>();
    const auto jobs = std::max<std::size_t>(1, c.at("jobs").get<std::size_t>());
    std::vector<Onset> rows(gammas.size());
    for (std::size_t start = 0; start < gammas.size(); start += jobs) {
      std::vector<std::future<Onset>> batch;
      for (std::size_t k = start; k < std::min(gammas.size(), start + jobs); ++k)
        batch.push_back(std::async(std::launch::async, [&, k] {
          return instability_onset(gammas[k], N, L, tol);
        }));
      for (std::size_t k = 0; k < batch.size(); ++k) rows[start + k] = batch[k].get();
    }
    CsvWriter csv(out / "onset.csv", "gamma,omega_inst,band_found");
    for (std::size_t k = 0; k < gammas.size(); ++k)
      csv.row({gammas[k], rows[k].omega_inst, rows[k].band_found ? 1.0 : 0.0});
    write_json(out / "meta.json", meta_header("spectrum", c));
    return;
  }

  const Built b = build_soliton(c, UniformGrid::with_spacing(L, c.at("h").get<double>()));
  const double gamma = c.at("gamma").get<double>();
  const SpectrumReport r = spectrum(b.profile, gamma, b.profile.omega, N, L, opts);
  {
    CsvWriter csv(out / "spectrum.csv", "re_lambda,im_lambda,label");
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k)
      csv.raw() << format_double(r.eigenvalues[k].real()) << ','
                << format_double(r.eigenvalues[k].imag()) << ',' << to_string(r.labels[k])
                << '\n';
  }
  json meta = meta_header("spectrum", c);
  meta["results"] = {{"verdict", to_string(r.verdict)},
                     {"max_growth", r.max_growth},
                     {"leading", {r.leading.real(), r.leading.imag()}},
                     {"gap_edges", {r.gap_edges.first, r.gap_edges.second}},
                     {"spurious", r.spurious},
                     {"quadruplet_defect", quadruplet_defect(r)}};
  write_json(out / "meta.json", meta);
  std::cout << "verdict " << to_string(r.verdict) << " max_growth " << format_double(r.max_growth)
            << " leading " << format_double(r.leading.real()) << " +/- "
            << format_double(r.leading.imag()) << "i\n";
}

PerturbMode parse_perturb(const std::string& s) {
  if (s == "amplitude") return PerturbMode::Amplitude;
  if (s == "noise") return PerturbMode::Noise;
  fail(ErrorCode::ParamOutOfRange, "unknown perturbation '" + s + "'");
}

// Returns false when the run blew up.
bool cmd_evolve(const json& c, const fs::path& out) {
  const double dx = c.at("dx").get<double>();
  const UniformGrid grid = UniformGrid::with_spacing(c.at("L").get<double>(), dx);
  const Built b = build_soliton(c, grid);
  const std::string mode = c.at("perturb").get<std::string>();
  const FieldState init =
      mode == "none" ? b.profile.state(0.0)
                     : perturb(b.profile, c.at("eps").get<double>(), parse_perturb(mode),
                               c.at("seed").get<std::uint64_t>());
  EvolveOptions opts;
  opts.ledger_every = c.at("ledger_every").get<std::size_t>();
  opts.snapshot_every = c.at("snapshot_every").get<double>();
  opts.blowup_level = c.at("blowup_level").get<double>();
  const EvolutionResult r = evolve(b.params, init, c.at("t_final").get<double>(), dx, opts);

  {
    CsvWriter csv(out / "ledger.csv", "t,q,H,P");
    for (std::size_t k = 0; k < r.ledger.times.size(); ++k)
      csv.row({r.ledger.times[k], r.ledger.q[k], r.ledger.H[k], r.ledger.P[k]});
  }
  for (const FieldState& s : r.snapshots) write_state(out / state_name(s.time), s);
  write_state(out / state_name(r.final.time), r.final);

  json meta = meta_header("evolve", c);
  meta["results"] = {{"blowup", r.blowup},
                     {"last_valid_time", r.last_valid_time},
                     {"drift_q", r.ledger.drift_q()},
                     {"has_energy_momentum", r.ledger.has_energy_momentum}};
  if (r.ledger.has_energy_momentum) {
    meta["results"]["drift_H"] = r.ledger.drift_H();
    meta["results"]["drift_P"] = r.ledger.drift_P();
  }
  write_json(out / "meta.json", meta);
  if (r.blowup) {
    std::cerr << "BlowupDetected: last valid time " << format_double(r.last_valid_time) << '\n';
    return false;
  }
  std::cout << "drift_q " << format_double(r.ledger.drift_q()) << '\n';
  return true;
}

bool dispatch(const std::string& command, const json& config, const fs::path& out) {
  fs::create_directories(out);
  if (command == "soliton") cmd_soliton(config, out);
  else if (command == "domain") cmd_domain(config, out);
  else if (command == "spectrum") cmd_spectrum(config, out);
  else if (command == "evolve") return cmd_evolve(config, out);
  else fail(ErrorCode::ParamOutOfRange, "unknown command '" + command + "'");
  return true;
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

struct SolitonArgs {
  std::string model = "newmodel";
  double gamma = 0.0;
  std::optional<double> omega, alpha;
};

void add_soliton_args(CLI::App* app, SolitonArgs& s) {
  app->add_option("--model", s.model, "thirring | gn | newmodel")
      ->capture_default_str()
      ->check(CLI::IsMember({"thirring", "mtm", "gn", "grossneveu", "newmodel", "new"}));
  app->add_option("--gamma", s.gamma, "gain-loss coefficient")->capture_default_str();
  app->add_option("--omega", s.omega, "frequency");
  app->add_option("--alpha", s.alpha, "Thirring parameter in (0, pi/2)");
}

json soliton_json(const SolitonArgs& s) {
  return {{"model", s.model},
          {"gamma", s.gamma},
          {"omega", optional_json(s.omega)},
          {"alpha", optional_json(s.alpha)}};
}

}  // namespace

void execute(const std::string& command, const json& config, const fs::path& out) {
  dispatch(command, config, out);
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"PT-symmetric nonlinear Dirac solitons: construction, existence, stability, dynamics"};
  app.set_version_flag("--version", PTDIRAC_VERSION);
  // -h is not a help alias: --h is the grid spacing option.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  const char* env_out = std::getenv(kOutputDirEnv);
  std::string out_dir = env_out ? env_out : ".";
  app.add_option("--out", out_dir,
                 std::string("output directory (default $") + kOutputDirEnv + " or .)");

  SolitonArgs sol;
  double L = 30.0, h = 0.01;
  std::size_t n = 0;
  auto* soliton = app.add_subcommand("soliton", "construct a soliton; writes profile.csv, meta.json");
  add_soliton_args(soliton, sol);
  soliton->add_option("--L", L, "half-width")->capture_default_str();
  soliton->add_option("--h", h, "grid spacing")->capture_default_str();
  soliton->add_option("--n", n, "node count (overrides --h)");

  double gmin = 0.01, gmax = 0.99;
  std::size_t points = 99;
  auto* domain = app.add_subcommand("domain", "existence boundary; writes boundary.csv, gamma_star.json");
  domain->add_option("--gamma-min", gmin)->capture_default_str();
  domain->add_option("--gamma-max", gmax)->capture_default_str();
  domain->add_option("--points", points)->capture_default_str();

  SolitonArgs spectrum_args;
  std::size_t N = 1200, jobs = 1;
  double sL = 40.0, sh = 0.01, tol = 1e-3;
  std::string boundary = "inflow";
  bool onset = false;
  std::vector<double> gammas;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "linear spectrum; writes spectrum.csv, meta.json");
  add_soliton_args(spectrum_cmd, spectrum_args);
  spectrum_cmd->add_option("--N", N, "collocation nodes")->capture_default_str();
  spectrum_cmd->add_option("--L", sL, "mesh half-width")->capture_default_str();
  spectrum_cmd->add_option("--h", sh, "construction grid spacing")->capture_default_str();
  spectrum_cmd->add_option("--boundary", boundary, "inflow | dirichlet")
      ->capture_default_str()
      ->check(CLI::IsMember({"inflow", "dirichlet"}));
  spectrum_cmd->add_flag("--onset", onset, "tabulate the instability onset; writes onset.csv");
  spectrum_cmd->add_option("--gammas", gammas, "gamma values for --onset")->delimiter(',');
  spectrum_cmd->add_option("--tol", tol, "onset tolerance in omega")->capture_default_str();
  spectrum_cmd->add_option("--jobs", jobs, "concurrent onset points")->capture_default_str();

  SolitonArgs ev;
  double eL = 40.0, dx = 0.01, t_final = 50.0, eps = 0.0, snap = 0.0, blowup = 1e6;
  std::uint64_t seed = 0;
  std::size_t ledger_every = 0;
  std::string perturb_mode = "none";
  auto* evolve_cmd = app.add_subcommand("evolve", "time evolution; writes ledger.csv, state_t*.csv");
  add_soliton_args(evolve_cmd, ev);
  evolve_cmd->add_option("--L", eL, "half-width")->capture_default_str();
  evolve_cmd->add_option("--dx", dx, "grid spacing = time step")->capture_default_str();
  evolve_cmd->add_option("--t-final", t_final)->capture_default_str();
  evolve_cmd->add_option("--perturb", perturb_mode, "none | amplitude | noise")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "amplitude", "noise"}));
  evolve_cmd->add_option("--eps", eps, "perturbation size")->capture_default_str();
  evolve_cmd->add_option("--seed", seed)->capture_default_str();
  evolve_cmd->add_option("--snapshot-every", snap, "time between snapshots, 0 = final only")
      ->capture_default_str();
  evolve_cmd->add_option("--ledger-every", ledger_every, "steps between ledger rows, 0 = auto")
      ->capture_default_str();
  evolve_cmd->add_option("--blowup-level", blowup)->capture_default_str();

  std::string meta_path;
  auto* rerun = app.add_subcommand("rerun", "repeat a run from its meta.json");
  rerun->add_option("meta", meta_path, "meta.json of an earlier run")->required();

  std::vector<const char*> argv;
  argv.push_back("ptdirac");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  std::string command;
  json config;
  if (soliton->parsed()) {
    command = "soliton";
    config = soliton_json(sol);
    config.update({{"L", L}, {"h", h}, {"n", n}});
  } else if (domain->parsed()) {
    command = "domain";
    config = {{"gamma_min", gmin}, {"gamma_max", gmax}, {"points", points}};
  } else if (spectrum_cmd->parsed()) {
    command = "spectrum";
    config = soliton_json(spectrum_args);
    config.update({{"N", N}, {"L", sL}, {"h", sh}, {"boundary", boundary}, {"onset", onset},
                   {"gammas", gammas}, {"tol", tol}, {"jobs", jobs}});
  } else if (evolve_cmd->parsed()) {
    command = "evolve";
    config = soliton_json(ev);
    config.update({{"L", eL}, {"dx", dx}, {"t_final", t_final}, {"perturb", perturb_mode},
                   {"eps", eps}, {"seed", seed}, {"snapshot_every", snap},
                   {"ledger_every", ledger_every}, {"blowup_level", blowup}});
  }

  try {
    if (rerun->parsed()) {
      std::ifstream in(meta_path);
      if (!in) {
        std::cerr << "cannot read " << meta_path << '\n';
        return kExitDomain;
      }
      const json meta = json::parse(in);
      command = meta.at("command").get<std::string>();
      config = meta.at("config");
    }
    return dispatch(command, config, out_dir) ? kExitOk : kExitNumerical;
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << '\n';
    return is_domain_error(e.code()) ? kExitDomain : kExitNumerical;
  } catch (const json::exception& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace ptdirac::cli
