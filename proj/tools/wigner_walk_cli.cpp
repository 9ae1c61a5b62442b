#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wigner/bases.hpp"
#include "wigner/io.hpp"
#include "wigner/named_states.hpp"
#include "wigner/parallel.hpp"
#include "wigner/trapping.hpp"

namespace {

using namespace wigner;

struct RunConfig {
  std::string j_text = "1/2";
  double rho = 0.5;
  bool rho_set = false;
  double alpha = 0.0, beta = -1.0, gamma = 0.0;
  std::string state = "chi+";
  int t = 100;
  std::string output = "-";
  std::string format = "csv";

  HalfInt j() const { return parse_half_int(j_text); }

  /// Effective one-parameter value; Euler runs derive it from beta.
  double effective_rho() const { return beta >= 0.0 ? std::cos(beta / 2.0) : rho; }

  CoinOperator coin() const {
    if (beta >= 0.0) return wigner_coin_euler(j(), alpha, beta, gamma);
    return wigner_coin(j(), rho);
  }
};

void add_common_options(CLI::App* cmd, RunConfig& cfg, bool with_state) {
  cmd->add_option("--j", cfg.j_text, "total spin, e.g. 1/2, 1, 3/2, 2")->required();
  cmd->add_option("--rho", cfg.rho, "coin parameter in [0, 1]");
  cmd->add_option("--alpha", cfg.alpha, "first Euler angle");
  cmd->add_option("--beta", cfg.beta, "second Euler angle in [0, pi]; selects the Euler form");
  cmd->add_option("--gamma", cfg.gamma, "third Euler angle");
  if (with_state) cmd->add_option("--state", cfg.state, "named state or basis:a1,a2,... literal");
  cmd->add_option("-o,--output", cfg.output, "output path, '-' for stdout");
  cmd->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

std::complex<double> parse_complex(const std::string& text) {
  // Accepts forms like 0.5, -0.5, 0.5+0.25i, 0.5-0.25i, 0.25i, i, -i.
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("state: empty amplitude");
  double re = 0.0, im = 0.0;
  if (s.back() == 'i') {
    s.pop_back();
    size_t split = s.size();
    for (size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    std::string im_part;
    if (split == s.size()) {
      im_part = s;
    } else {
      re = std::stod(s.substr(0, split));
      im_part = s.substr(split);
    }
    if (im_part.empty() || im_part == "+") im = 1.0;
    else if (im_part == "-") im = -1.0;
    else im = std::stod(im_part);
  } else {
    re = std::stod(s);
  }
  return {re, im};
}

CoinStateVector parse_state(HalfInt j, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return named_state(j, text);
  const std::string tag = text.substr(0, colon);
  BasisTag basis;
  if (tag == "standard") basis = BasisTag::standard;
  else if (tag == "suitable") basis = BasisTag::suitable;
  else if (tag == "lambda") basis = BasisTag::lambda;
  else throw std::invalid_argument("state: unknown basis tag '" + tag + "'");
  CoinStateVector psi;
  psi.j = j;
  psi.basis = basis;
  std::vector<std::complex<double>> amps;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) amps.push_back(parse_complex(item));
  if (static_cast<int>(amps.size()) != dimension(j))
    throw std::invalid_argument("state: expected " + std::to_string(dimension(j)) + " amplitudes");
  psi.amps.resize(dimension(j));
  for (int i = 0; i < dimension(j); ++i) psi.amps(i) = amps[static_cast<size_t>(i)];
  if (!is_normalized(psi, 1e-6)) normalize(psi);
  return psi;
}

void emit(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << payload;
}

HeaderFields base_header(const RunConfig& cfg) {
  HeaderFields header;
  header.emplace_back("j", to_string(cfg.j()));
  if (cfg.beta >= 0.0) {
    header.emplace_back("alpha", format_full(cfg.alpha));
    header.emplace_back("beta", format_full(cfg.beta));
    header.emplace_back("gamma", format_full(cfg.gamma));
  } else {
    header.emplace_back("rho", format_full(cfg.rho));
  }
  return header;
}

int cmd_simulate(const RunConfig& cfg) {
  const CoinStateVector psi = parse_state(cfg.j(), cfg.state);
  const ProbabilityProfile profile = position_distribution(evolve(cfg.coin(), psi, cfg.t));
  HeaderFields header = base_header(cfg);
  header.emplace_back("state", cfg.state);
  header.emplace_back("t", std::to_string(cfg.t));
  emit(cfg.output, cfg.format == "csv" ? profile_to_csv(profile, header) : profile_to_json(profile, header));
  return 0;
}

int cmd_density(const RunConfig& cfg, int points, double eps) {
  const HalfInt j = cfg.j();
  if (j.twice() > 4)
    throw UnsupportedError("density: closed-form weights exist for j <= 2 only");
  const double rho = cfg.effective_rho();
  const CoinStateVector psi = parse_state(j, cfg.state);
  const CoinStateVector h = to_suitable(resolve_to_standard(psi, rho), rho);
  const LimitDensityModel model = limit_density_model(j, rho, h);

  const double vmax = j.twice() * rho;  // 2 j rho
  std::vector<double> caustics;
  for (const WeightPolynomial& poly : model.components) caustics.push_back(2.0 * poly.m.value() * rho);
  std::vector<std::pair<double, double>> samples;
  samples.reserve(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    double v = -vmax + eps + (2.0 * vmax - 2.0 * eps) * i / (points - 1);
    for (const double c : caustics) {
      if (std::abs(std::abs(v) - c) < eps) v = v < 0.0 ? -(c - eps) : c - eps;
    }
    samples.emplace_back(v, limit_density(model, v));
  }
  HeaderFields header = base_header(cfg);
  header.emplace_back("state", cfg.state);
  header.emplace_back("trapped_mass", format_full(model.trapped_mass));
  emit(cfg.output, cfg.format == "csv" ? density_to_csv(samples, header) : density_to_json(samples, header));
  return 0;
}

int cmd_trapping(const RunConfig& cfg, int window) {
  const HalfInt j = cfg.j();
  const double rho = cfg.effective_rho();
  const CoinStateVector psi = parse_state(j, cfg.state);
  const TrappingModel model = trapping_model(j, rho, psi);
  std::vector<std::pair<int, double>> samples;
  for (int x = -window; x <= window; ++x) samples.emplace_back(2 * x, trapping_probability(model, x));
  HeaderFields header = base_header(cfg);
  header.emplace_back("state", cfg.state);
  header.emplace_back("Q", format_full(model.Q));
  header.emplace_back("total", format_full(trapping_total(model)));
  emit(cfg.output,
       cfg.format == "csv" ? trapping_to_csv(samples, header) : trapping_to_json(samples, header));
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  std::vector<VerificationReport> reports;
  const int workers = default_worker_count();

  if (suite == "figures" || suite == "all") {
    const auto& benchmarks = density_benchmarks();
    std::vector<VerificationReport> slots(benchmarks.size());
    std::vector<std::function<void()>> tasks;
    for (size_t i = 0; i < benchmarks.size(); ++i) {
      tasks.push_back([&, i] {
        const DensityBenchmark& bench = benchmarks[i];
        const CoinStateVector psi = named_state(bench.j, bench.state);
        const ProbabilityProfile profile =
            position_distribution(evolve(bench.j, bench.rho, psi, bench.t));
        const CoinStateVector h = to_suitable(resolve_to_standard(psi, bench.rho), bench.rho);
        VerificationReport report = compare_density(profile, limit_density_model(bench.j, bench.rho, h));
        report.scenario = "density_overlay:" + bench.id;
        slots[i] = std::move(report);
      });
    }
    run_tasks(tasks, workers);
    for (auto& report : slots) reports.push_back(std::move(report));
  }
  if (suite == "peaks" || suite == "all") {
    const auto& claims = peak_claims();
    std::vector<VerificationReport> slots(claims.size());
    std::vector<std::function<void()>> tasks;
    for (size_t i = 0; i < claims.size(); ++i)
      tasks.push_back([&, i] { slots[i] = check_peak_claim(claims[i]); });
    run_tasks(tasks, workers);
    for (auto& report : slots) reports.push_back(std::move(report));
  }
  if (suite == "gauge" || suite == "all") {
    reports.push_back(check_alpha_gauge(HalfInt(1), 2.0 * std::acos(0.5), 0.7, named_state(HalfInt(1), "chi0"), 200));
    reports.push_back(check_alpha_gauge(HalfInt::from_twice(3), 2.0 * std::acos(0.8), 1.1,
                                        named_state(HalfInt::from_twice(3), "chi1+"), 200));
    for (const int t : {100, 200, 400}) {
      VerificationReport report =
          check_gamma_shift(HalfInt(1), 2.0 * std::acos(0.6), 0.9, named_state(HalfInt(1), "chi+"), t);
      report.scenario += ":t" + std::to_string(t);
      reports.push_back(std::move(report));
    }
  }
  if (suite == "normalization" || suite == "all") {
    for (const char* j_text : {"1/2", "1", "3/2", "2"}) {
      const HalfInt j = parse_half_int(j_text);
      for (const std::string& name : named_state_catalog(j)) {
        for (const double rho : {0.4, 0.7}) {
          VerificationReport report = audit_normalization(j, rho, named_state(j, name));
          report.scenario += ":j" + std::string(j_text) + ":" + name + ":r" + format_full(rho);
          reports.push_back(std::move(report));
        }
      }
    }
  }
  if (suite == "trapping" || suite == "all") {
    for (const double rho : {0.5, 0.7}) {
      const TrappingModel model = trapping_model(HalfInt(2), rho, named_state(HalfInt(2), "lambda0"));
      const double q2 = model.Q * model.Q;
      VerificationReport report;
      report.scenario = "trapping_ratio:lambda0:r" + format_full(rho);
      for (int x = 1; x <= 3; ++x) {
        const double ratio = trapping_probability(model, x + 1) / trapping_probability(model, x);
        const std::string name = "ratio_x" + std::to_string(x);
        report.metrics[name] = ratio;
        report.passes[name] = std::abs(ratio - q2) <= 1e-12;
      }
      reports.push_back(std::move(report));
    }
  }
  if (reports.empty()) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  emit(cfg.output, cfg.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports));
  bool all = true;
  for (const VerificationReport& report : reports) all = all && report.passed();
  return all ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, const std::string& rho_grid, const std::string& states_text) {
  const HalfInt j = cfg.j();
  double lo = 0.1, hi = 0.9, step = 0.1;
  {
    std::stringstream ss(rho_grid);
    std::string part;
    std::vector<double> parts;
    while (std::getline(ss, part, ':')) parts.push_back(std::stod(part));
    if (parts.size() != 3) throw std::invalid_argument("sweep: --rho-grid expects start:stop:step");
    lo = parts[0];
    hi = parts[1];
    step = parts[2];
    if (step <= 0.0) throw std::invalid_argument("sweep: step must be positive");
  }
  std::vector<double> rhos;
  for (double r = lo; r <= hi + 1e-12; r += step) rhos.push_back(r);
  std::vector<std::string> states;
  {
    std::stringstream ss(states_text);
    std::string item;
    while (std::getline(ss, item, ',')) states.push_back(item);
  }
  if (states.empty()) throw std::invalid_argument("sweep: no states given");

  struct Row {
    std::string state;
    double rho;
    double norm_error, p_origin, moment1, moment2;
  };
  std::vector<Row> rows(states.size() * rhos.size());
  std::vector<std::function<void()>> tasks;
  for (size_t si = 0; si < states.size(); ++si) {
    for (size_t ri = 0; ri < rhos.size(); ++ri) {
      tasks.push_back([&, si, ri] {
        const double rho = rhos[ri];
        const CoinStateVector psi = parse_state(j, states[si]);
        const ProbabilityProfile profile = position_distribution(evolve(j, rho, psi, cfg.t));
        Row& row = rows[si * rhos.size() + ri];
        row.state = states[si];
        row.rho = rho;
        row.norm_error = std::abs(profile.total() - 1.0);
        row.p_origin = profile.at(0);
        row.moment1 = empirical_moment(profile, 1);
        row.moment2 = empirical_moment(profile, 2);
      });
    }
  }
  run_tasks(tasks, default_worker_count());

  std::ostringstream out;
  out << "# j=" << to_string(j) << "\n# t=" << cfg.t << "\n";
  out << "state,rho,norm_error,p_origin,moment1,moment2\n";
  for (const Row& row : rows) {
    out << row.state << "," << format_full(row.rho) << "," << format_full(row.norm_error) << ","
        << format_full(row.p_origin) << "," << format_full(row.moment1) << ","
        << format_full(row.moment2) << "\n";
  }
  emit(cfg.output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time quantum walks on the line with Wigner rotation coins"};
  app.require_subcommand(1);

  RunConfig cfg;
  int points = 2001;
  double eps = 1e-6;
  int window = 12;
  std::string suite = "all";
  std::string rho_grid = "0.1:0.9:0.1";
  std::string states_text = "chi+";

  CLI::App* simulate = app.add_subcommand("simulate", "evolve a walk and write p(x, t)");
  add_common_options(simulate, cfg, true);
  simulate->add_option("--t", cfg.t, "number of steps")->required();

  CLI::App* density = app.add_subcommand("density", "closed-form limit density nu(v)");
  add_common_options(density, cfg, true);
  density->add_option("--points", points, "sample count");
  density->add_option("--eps", eps, "band-edge offset");

  CLI::App* trapping = app.add_subcommand("trapping", "closed-form trapping profile p_inf(x)");
  add_common_options(trapping, cfg, true);
  trapping->add_option("--window", window, "half-width in even sites");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "figures, peaks, gauge, normalization, trapping, or all");
  verify->add_option("-o,--output", cfg.output, "output path, '-' for stdout");
  verify->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* sweep = app.add_subcommand("sweep", "simulate over a rho grid and state list");
  add_common_options(sweep, cfg, false);
  sweep->add_option("--t", cfg.t, "number of steps")->required();
  sweep->add_option("--rho-grid", rho_grid, "start:stop:step");
  sweep->add_option("--states", states_text, "comma-separated state names");

  try {
    app.parse(argc, argv);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (density->parsed()) return cmd_density(cfg, points, eps);
    if (trapping->parsed()) return cmd_trapping(cfg, window);
    if (verify->parsed()) return cmd_verify(cfg, suite);
    if (sweep->parsed()) return cmd_sweep(cfg, rho_grid, states_text);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const wigner::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
