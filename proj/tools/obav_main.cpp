// obav: simulate the order-book random-walk model, compute its exact trade
// and avalanche laws over rationals, evaluate the Brownian-limit transforms,
// and cross-verify the three layers.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "obav/book.hpp"
#include "obav/csv.hpp"
#include "obav/limits.hpp"
#include "obav/montecarlo.hpp"
#include "obav/trade_gfs.hpp"
#include "obav/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace obav;

namespace {

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct OutputSink {
  fs::path dir;
  bool force = false;

  fs::path prepare(const std::string& filename) const {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path p = dir / filename;
    if (fs::exists(p) && !force)
      throw std::runtime_error("output exists, pass --force to overwrite: " + p.string());
    return p;
  }
};

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const OutputSink& sink, const std::string& command,
                    const std::vector<std::string>& argv_echo, const json& config,
                    const json& extras, const std::vector<fs::path>& outputs,
                    double elapsed_ms) {
  json manifest;
  manifest["command"] = command;
  manifest["command_line"] = argv_echo;
  manifest["tool_version"] = kToolVersion;
  manifest["config"] = config;
  manifest["started_utc"] = now_utc();
  manifest["elapsed_ms"] = elapsed_ms;
  for (const auto& [k, v] : extras.items()) manifest[k] = v;
  manifest["outputs"] = json::array();
  for (const auto& p : outputs)
    manifest["outputs"].push_back({{"path", p.filename().string()}, {"digest", file_digest(p)}});
  const fs::path p = sink.dir / "manifest.json";
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest: " + p.string());
  out << manifest.dump(2) << '\n';
}

int default_threads() {
  if (const char* env = std::getenv("OBAV_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  int mu = 1;
  int epsilon = 1;
  std::uint64_t paths = 0;
  std::uint64_t seed = 0;
  int horizon = 0;
  bool empty_book = false;
  std::string quantity = "full";
  int threads = default_threads();
  double z = 1.96;
  std::uint64_t trade_log_paths = 0;
  std::string out_dir = "obav_out";
  bool force = false;
  std::string from_manifest;
};

Quantity parse_quantity(const std::string& q) {
  static const std::map<std::string, Quantity> names = {
      {"simplified", Quantity::SimplifiedLength},
      {"full", Quantity::FullLength},
      {"t1", Quantity::FirstTradeTime},
      {"d-index", Quantity::FirstTypeIIIndex},
      {"tau-d", Quantity::TimeToFirstTypeII}};
  return names.at(q);
}

int run_simulate(SimulateArgs args, const std::vector<std::string>& argv_echo) {
  if (!args.from_manifest.empty()) {
    std::ifstream in(args.from_manifest);
    if (!in) {
      std::cerr << "error: cannot read manifest " << args.from_manifest << "\n";
      return kExitIo;
    }
    json m;
    in >> m;
    const auto& c = m.at("config");
    args.mu = c.at("mu").get<int>();
    args.epsilon = c.at("epsilon").get<int>();
    args.paths = c.at("paths").get<std::uint64_t>();
    args.seed = c.at("seed").get<std::uint64_t>();
    args.horizon = c.at("horizon").get<int>();
    args.empty_book = c.at("init_mode").get<std::string>() == "empty";
    args.quantity = c.at("quantity").get<std::string>();
    args.z = c.at("z").get<double>();
  }

  AvalancheConfig cfg;
  cfg.mu = args.mu;
  cfg.epsilon = args.epsilon;
  cfg.horizon = args.horizon;
  cfg.n_paths = args.paths;
  cfg.init_mode = args.empty_book ? InitMode::EmptyBook : InitMode::FullBook;
  cfg.master_seed = args.seed;
  cfg.validate();

  const auto t0 = std::chrono::steady_clock::now();
  const EmpiricalDistribution dist =
      estimate_distribution(cfg, parse_quantity(args.quantity), args.threads);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  OutputSink sink{args.out_dir, args.force};
  const fs::path csv_path = sink.prepare("distribution.csv");
  {
    CsvWriter csv(csv_path, {"value", "count", "p_hat", "ci_low", "ci_high"});
    for (const auto& [v, c] : dist.counts) {
      const double p = dist.p_hat(v);
      const double half = dist.ci_half_width(v, args.z);
      csv.write_row({std::to_string(v), std::to_string(c), fmt_double(p),
                     fmt_double(p - half), fmt_double(p + half)});
    }
  }

  std::vector<fs::path> outputs = {csv_path};
  if (args.trade_log_paths > 0) {
    const fs::path log_path = sink.prepare("trade_log.csv");
    CsvWriter log(log_path, {"path_id", "time", "level", "kind", "gap", "flash_crash"});
    const InitMode mode = args.empty_book ? InitMode::EmptyBook : InitMode::FullBook;
    for (std::uint64_t i = 0; i < args.trade_log_paths; ++i) {
      const WalkPath path = generate_walk(RngStream(args.seed, i), cfg.effective_horizon());
      for (const auto& ev : detect_trades(path, SpreadParam(args.mu), mode, args.epsilon)) {
        log.write_row({std::to_string(i), std::to_string(ev.time), std::to_string(ev.level),
                       ev.kind == TradeKind::TypeI ? "I" : "II",
                       std::to_string(ev.intertrade_gap), ev.flash_crash ? "1" : "0"});
      }
    }
    outputs.push_back(log_path);
  }

  json config = {{"mu", args.mu},
                 {"epsilon", args.epsilon},
                 {"paths", args.paths},
                 {"seed", args.seed},
                 {"horizon", args.horizon},
                 {"init_mode", args.empty_book ? "empty" : "full"},
                 {"quantity", args.quantity},
                 {"z", args.z}};
  json extras = {{"censored_count", dist.censored}, {"n_samples", dist.n_samples}};
  write_manifest(sink, "simulate", argv_echo, config, extras, outputs, elapsed);
  std::cout << "wrote " << csv_path.string() << " (" << dist.n_samples << " samples, "
            << dist.censored << " censored)\n";
  return kExitOk;
}

// ---- exact -----------------------------------------------------------------

struct ExactArgs {
  std::string target;
  int mu = 0;
  int epsilon = 0;
  int order = 64;
  bool decimal = false;
  std::string out_dir = "obav_out";
  bool force = false;
};

std::vector<std::string> series_header(bool decimal, const std::string& label = "") {
  std::vector<std::string> h;
  if (!label.empty()) h.push_back(label);
  h.insert(h.end(), {"power", "numerator", "denominator"});
  if (decimal) h.push_back("decimal");
  return h;
}

void write_series_csv(CsvWriter& csv, const RationalSeries& s, bool decimal,
                      const std::string& label = "") {
  for (int k = 0; k <= s.order(); ++k) {
    std::vector<std::string> row;
    if (!label.empty()) row.push_back(label);
    row.push_back(std::to_string(k));
    row.push_back(s.coeff(k).num().str());
    row.push_back(s.coeff(k).den().str());
    if (decimal) row.push_back(fmt_double(s.coeff(k).to_double()));
    csv.write_row(row);
  }
}

int run_exact(const ExactArgs& args, const std::vector<std::string>& argv_echo) {
  const auto need_mu = [&] {
    if (args.mu < 1) throw CLI::ValidationError("--mu is required (>= 1) for this target");
  };
  const auto need_eps = [&] {
    if (args.epsilon < 1)
      throw CLI::ValidationError("--epsilon is required (>= 1) for this target");
  };

  OutputSink sink{args.out_dir, args.force};
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path path = sink.prepare(args.target + ".csv");
  std::vector<std::string> header;

  const bool dec = args.decimal;
  if (args.target == "t1") {
    need_mu();
    CsvWriter csv(path, series_header(dec));
    write_series_csv(csv, t1_pgf(args.mu, args.order), dec);
  } else if (args.target == "empty-t1") {
    need_mu();
    CsvWriter csv(path, series_header(dec));
    write_series_csv(csv, first_trade_pgf_empty(args.mu, args.order), dec);
  } else if (args.target == "simplified-pgf") {
    need_eps();
    CsvWriter csv(path, series_header(dec));
    write_series_csv(csv, simplified_avalanche_pgf(args.epsilon, args.order), dec);
  } else if (args.target == "full-pgf") {
    need_mu();
    need_eps();
    CsvWriter csv(path, series_header(dec));
    write_series_csv(csv, full_avalanche_pgf(args.mu, args.epsilon, args.order), dec);
  } else if (args.target == "q") {
    need_mu();
    need_eps();
    std::vector<std::string> header = {"mu", "epsilon", "numerator", "denominator"};
    if (dec) header.push_back("decimal");
    CsvWriter csv(path, header);
    const Rational q = t1_survival(args.mu, args.epsilon);
    std::vector<std::string> row = {std::to_string(args.mu), std::to_string(args.epsilon),
                                    q.num().str(), q.den().str()};
    if (dec) row.push_back(fmt_double(q.to_double()));
    csv.write_row(row);
  } else if (args.target == "moments") {
    need_eps();
    std::vector<std::string> header = {"name", "numerator", "denominator"};
    if (dec) header.push_back("decimal");
    CsvWriter csv(path, header);
    const auto m = simplified_moments(args.epsilon);
    std::vector<std::string> mean_row = {"mean", m.mean.num().str(), m.mean.den().str()};
    std::vector<std::string> var_row = {"variance", m.variance.num().str(),
                                        m.variance.den().str()};
    if (dec) {
      mean_row.push_back(fmt_double(m.mean.to_double()));
      var_row.push_back(fmt_double(m.variance.to_double()));
    }
    csv.write_row(mean_row);
    csv.write_row(var_row);
  } else if (args.target == "classes") {
    need_mu();
    CsvWriter csv(path, series_header(dec, "class"));
    write_series_csv(csv, class_gf(CombClass::A, args.mu, args.order), dec, "A");
    write_series_csv(csv, class_gf(CombClass::B, args.mu, args.order), dec, "B");
    write_series_csv(csv, class_gf(CombClass::C, args.mu, args.order), dec, "C");
  } else {
    throw CLI::ValidationError("unknown --target " + args.target);
  }

  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json config = {{"target", args.target}, {"mu", args.mu},       {"epsilon", args.epsilon},
                 {"order", args.order},   {"decimal", args.decimal}};
  write_manifest(sink, "exact", argv_echo, config, {}, {path}, elapsed);
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string budget = "full";
  int threads = default_threads();
  std::string out_dir;
  bool force = false;
};

int run_verify(const VerifyArgs& args) {
  using namespace obav::verify;
  const Budget budget = args.budget == "quick" ? Budget::Quick : Budget::Full;

  std::vector<CriterionResult> results;
  const auto want = [&](const std::string& s) { return args.suite == "all" || args.suite == s; };
  if (want("tables")) {
    results.push_back(criterion_first_trade_table());
    results.push_back(criterion_survival_table());
    results.push_back(criterion_avalanche_forms());
    results.push_back(criterion_avalanche_tables());
    results.push_back(criterion_moments());
  }
  if (want("oracle")) {
    results.push_back(criterion_oracle(budget));
    results.push_back(criterion_lemmas(budget));
  }
  if (want("montecarlo")) {
    results.push_back(criterion_type1_mass(budget));
    results.push_back(criterion_montecarlo(budget, args.threads));
  }
  if (want("limits")) {
    results.push_back(criterion_limits(budget));
  }
  if (results.empty()) {
    std::cerr << "error: unknown suite " << args.suite << "\n";
    return kExitUsage;
  }

  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass();
    std::cout << (r.pass() ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title
              << " (" << r.checks.size() << " checks, " << fmt_double(r.seconds) << " s)\n";
    for (const auto& c : r.checks)
      if (!c.pass)
        std::cout << "      FAIL " << c.name << ": expected " << c.expected << ", got "
                  << c.actual << "\n";
  }

  if (!args.out_dir.empty()) {
    OutputSink sink{args.out_dir, args.force};
    const fs::path path = sink.prepare("verify_report.csv");
    CsvWriter csv(path, {"criterion", "check", "status", "expected", "actual"});
    for (const auto& r : results)
      for (const auto& c : r.checks)
        csv.write_row({std::to_string(r.id), c.name, c.pass ? "PASS" : "FAIL", c.expected,
                       c.actual});
    std::cout << "wrote " << path.string() << "\n";
  }

  return all_pass ? kExitOk : kExitVerifyFailed;
}

// ---- limit -----------------------------------------------------------------

struct LimitArgs {
  std::string target;
  std::vector<double> lambda_grid = {1.0};
  std::vector<double> x_grid = {0.01, 0.1, 1.0, 10.0, 100.0};
  std::vector<int> n_grid = {100, 1000, 10000};
  double epsilon = 1.0;
  double mu = 1.0;
  std::string out_dir = "obav_out";
  bool force = false;
};

int run_limit(const LimitArgs& args, const std::vector<std::string>& argv_echo) {
  OutputSink sink{args.out_dir, args.force};
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path path = sink.prepare("limit_" + args.target + ".csv");

  if (args.target == "simplified") {
    CsvWriter csv(path, {"lambda", "epsilon", "value"});
    for (double lam : args.lambda_grid)
      csv.write_row({fmt_double(lam), fmt_double(args.epsilon),
                     fmt_double(simplified_limit_laplace(lam, args.epsilon))});
  } else if (args.target == "full") {
    CsvWriter csv(path, {"lambda", "epsilon", "mu", "value"});
    for (double lam : args.lambda_grid)
      csv.write_row({fmt_double(lam), fmt_double(args.epsilon), fmt_double(args.mu),
                     fmt_double(full_limit_laplace(LaplaceArg(lam, args.epsilon, args.mu)))});
  } else if (args.target == "h") {
    CsvWriter csv(path, {"x", "mu", "g", "h"});
    for (double x : args.x_grid)
      csv.write_row({fmt_double(x), fmt_double(args.mu), fmt_double(excursion_density_g(x)),
                     fmt_double(h_density(x, args.mu))});
  } else if (args.target == "hyperbolic") {
    CsvWriter csv(path, {"s", "mu", "tanh_term", "coth_term", "csch_term", "sech_sq_term",
                         "identity_residual"});
    for (double s : args.lambda_grid) {
      const auto h = hyperbolic_coefficients(s, args.mu);
      const double residual = std::abs(h.coth_term - h.csch_term - h.tanh_term);
      csv.write_row({fmt_double(s), fmt_double(args.mu), fmt_double(h.tanh_term),
                     fmt_double(h.coth_term), fmt_double(h.csch_term),
                     fmt_double(h.sech_sq_term), fmt_double(residual)});
    }
  } else if (args.target == "converge-t1") {
    CsvWriter csv(path,
                  {"n", "scaled_mu", "discrete_value", "limit_value", "error", "fitted_order"});
    for (double s : args.lambda_grid) {
      const auto rep = convergence_study_t1(args.mu, s, args.n_grid);
      for (const auto& r : rep.rows)
        csv.write_row({std::to_string(r.n), std::to_string(r.scaled_param),
                       fmt_double(r.discrete_value), fmt_double(r.limit_value),
                       fmt_double(r.error), fmt_double(rep.fitted_order)});
    }
  } else if (args.target == "converge-simplified") {
    CsvWriter csv(path, {"n", "eps_disc", "discrete_value", "limit_value", "error",
                         "tail_diagnostic", "tail_target", "fitted_order"});
    for (double lam : args.lambda_grid) {
      const auto rep = convergence_study_simplified(args.epsilon, lam, args.n_grid);
      for (const auto& r : rep.rows)
        csv.write_row({std::to_string(r.n), std::to_string(r.eps_disc),
                       fmt_double(r.discrete_value), fmt_double(r.limit_value),
                       fmt_double(r.error), fmt_double(r.tail_diagnostic),
                       fmt_double(r.tail_target), fmt_double(rep.fitted_order)});
    }
  } else {
    throw CLI::ValidationError("unknown --target " + args.target);
  }

  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json config = {{"target", args.target},   {"lambda_grid", args.lambda_grid},
                 {"x_grid", args.x_grid},   {"n_grid", args.n_grid},
                 {"epsilon", args.epsilon}, {"mu", args.mu}};
  write_manifest(sink, "limit", argv_echo, config, {}, {path}, elapsed);
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "order-book avalanche toolkit: seeded simulation, exact rational "
      "generating functions, and Brownian-limit numerics"};
  app.require_subcommand(1);

  std::vector<std::string> argv_echo(argv, argv + argc);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand(
      "simulate",
      "Monte Carlo distribution of a trade/avalanche quantity. Writes "
      "distribution.csv (value,count,p_hat,ci_low,ci_high) and manifest.json");
  simulate->add_option("--mu", sim.mu, "spread parameter (ticks, >= 1)");
  simulate->add_option("--epsilon", sim.epsilon, "avalanche window (steps, >= 1)");
  simulate->add_option("--paths", sim.paths, "number of simulated paths")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "master seed (one stream per path)");
  simulate->add_option("--horizon", sim.horizon, "path horizon (0: 64*eps + 64*mu^2)");
  simulate->add_flag("--empty-book", sim.empty_book, "start from an empty book");
  simulate
      ->add_option("--quantity", sim.quantity,
                   "one of simplified|full|t1|d-index|tau-d (default full)")
      ->check(CLI::IsMember({"simplified", "full", "t1", "d-index", "tau-d"}));
  simulate->add_option("--threads", sim.threads, "worker threads (default $OBAV_THREADS or 1)");
  simulate->add_option("--z", sim.z, "CI multiplier for the p_hat bands (default 1.96)");
  simulate->add_option("--trade-log", sim.trade_log_paths,
                       "also export trade_log.csv (path_id,time,level,kind,gap,flash_crash) "
                       "for this many paths");
  simulate->add_option("--out", sim.out_dir, "output directory (default obav_out)");
  simulate->add_flag("--force", sim.force, "overwrite existing outputs");
  simulate->add_option("--from-manifest", sim.from_manifest,
                       "rerun the configuration recorded in a manifest.json");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand(
      "exact",
      "exact rational series and moments of the trade/avalanche laws. Writes "
      "<target>.csv (power,numerator,denominator[,decimal])");
  exact_cmd
      ->add_option("--target", exact.target,
                   "one of t1|q|simplified-pgf|full-pgf|moments|empty-t1|classes")
      ->required()
      ->check(CLI::IsMember(
          {"t1", "q", "simplified-pgf", "full-pgf", "moments", "empty-t1", "classes"}));
  exact_cmd->add_option("--mu", exact.mu, "spread parameter");
  exact_cmd->add_option("--epsilon", exact.epsilon, "avalanche window");
  exact_cmd->add_option("--order", exact.order, "series truncation order (default 64)");
  exact_cmd->add_flag("--decimal", exact.decimal, "add a decimal column (always written)");
  exact_cmd->add_option("--out", exact.out_dir, "output directory (default obav_out)");
  exact_cmd->add_flag("--force", exact.force, "overwrite existing outputs");

  VerifyArgs ver;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the acceptance checks (PASS/FAIL per criterion)");
  verify_cmd->add_option("--suite", ver.suite, "tables|oracle|montecarlo|limits|all")
      ->check(CLI::IsMember({"tables", "oracle", "montecarlo", "limits", "all"}));
  verify_cmd->add_option("--budget", ver.budget, "quick|full (default full)")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--threads", ver.threads, "worker threads for Monte Carlo");
  verify_cmd->add_option("--out", ver.out_dir, "write verify_report.csv to this directory");
  verify_cmd->add_flag("--force", ver.force, "overwrite existing outputs");

  LimitArgs lim;
  auto* limit_cmd = app.add_subcommand(
      "limit",
      "Brownian-limit transforms, densities and convergence studies. Convergence "
      "CSVs carry (n,scaled param,discrete_value,limit_value,error,...,fitted_order)");
  limit_cmd
      ->add_option("--target", lim.target,
                   "one of simplified|full|h|hyperbolic|converge-t1|converge-simplified")
      ->required()
      ->check(CLI::IsMember(
          {"simplified", "full", "h", "hyperbolic", "converge-t1", "converge-simplified"}));
  limit_cmd->add_option("--lambda-grid", lim.lambda_grid,
                        "Laplace variable grid (also the s grid, default 1)");
  limit_cmd->add_option("--x-grid", lim.x_grid, "abscissae for the h density table");
  limit_cmd->add_option("--n-grid", lim.n_grid, "scaling grid for convergence studies");
  limit_cmd->add_option("--epsilon", lim.epsilon, "continuum window (default 1.0)");
  limit_cmd->add_option("--mu", lim.mu, "continuum spread (default 1.0)");
  limit_cmd->add_option("--out", lim.out_dir, "output directory (default obav_out)");
  limit_cmd->add_flag("--force", lim.force, "overwrite existing outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(sim, argv_echo);
    if (exact_cmd->parsed()) return run_exact(exact, argv_echo);
    if (verify_cmd->parsed()) return run_verify(ver);
    if (limit_cmd->parsed()) return run_limit(lim, argv_echo);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
