// fuzzyskew: skewness panels, TCPO runs and timing tables from the command line.
//
// Exit status: 0 success, 1 unexpected error, 2 asset file error,
// 3 no feasible portfolio, 4 invalid configuration.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzzyskew/asset_io.hpp"
#include "fuzzyskew/error.hpp"
#include "fuzzyskew/metrics.hpp"
#include "fuzzyskew/portfolio.hpp"
#include "fuzzyskew/timing.hpp"
#include "json.hpp"

namespace {

using namespace fuzzyskew;
using nlohmann::json;

enum Exit : int { ok = 0, failure = 1, parse_error = 2, infeasible = 3, bad_config = 4 };

std::string fmt6(double v) {
  if (std::isnan(v)) return "undefined";
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

json number_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

std::optional<MomentFamily> parse_moments(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "vb13" || s == "possibilistic") return MomentFamily::vb13;
  if (s == "lgy15") return MomentFamily::lgy15;
  throw InvalidArgument("unknown moment family '" + s + "' (expected auto|possibilistic|lgy15)");
}

// Skewness that reports an undefined ratio as NaN instead of throwing.
double skew_or_nan(FuzzyView f, const MetricSpec& spec) {
  try {
    return skewness(f, spec);
  } catch (const DegenerateInput&) {
    return std::nan("");
  }
}

struct SkewOptions {
  std::string input;
  std::string coef = "all";
  double alpha = 0.25;
  double v = 0.5;
  std::string out = "text";
  std::string output;
};

int cmd_skew(const SkewOptions& o) {
  const auto assets = load_assets(o.input);

  std::vector<std::pair<std::string, MetricSpec>> columns;
  if (o.coef == "all") {
    columns = {{"jkpt1(0.1)", {Coefficient::jkpt1, {0.1, o.v}, {}}},
               {"jkpt1(0.25)", {Coefficient::jkpt1, {0.25, o.v}, {}}},
               {"jkpt2", {Coefficient::jkpt2, {0.25, o.v}, {}}},
               {"vb13", {Coefficient::vb13, {}, {}}},
               {"lgy15", {Coefficient::lgy15, {}, {}}}};
  } else {
    MetricSpec spec{parse_coefficient(o.coef), {o.alpha, o.v}, {}};
    columns = {{spec.label(), spec}};
  }
  for (const auto& [label, spec] : columns) spec.validate();

  std::ostringstream os;
  if (o.out == "json") {
    json list = json::array();
    for (const auto& a : assets) {
      json row{{"name", a.name}};
      for (const auto& [label, spec] : columns) row[label] = number_or_null(skew_or_nan(a.number, spec));
      list.push_back(row);
    }
    os << list.dump(2) << '\n';
  } else {
    const char sep = o.out == "csv" ? ',' : '\t';
    os << "name";
    for (const auto& c : columns) os << sep << (o.out == "csv" ? "\"" + c.first + "\"" : c.first);
    os << '\n';
    for (const auto& a : assets) {
      os << a.name;
      for (const auto& c : columns) os << sep << fmt6(skew_or_nan(a.number, c.second));
      os << '\n';
    }
  }

  if (o.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(o.output, std::ios::app);
    if (!f) throw InvalidArgument("cannot open output file " + o.output);
    f << os.str();
  }
  return ok;
}

struct OptimizeOptions {
  std::string assets;
  std::string mode = "skew";
  double rho = 0.0;
  double beta = 0.0;
  double gamma = -1.0;
  std::size_t mesh = 100;
  std::string coef = "jkpt1";
  double alpha = 0.25;
  double v = 0.5;
  std::string moments = "auto";
  std::string out = "json";
  int workers = 0;
};

int cmd_optimize(const OptimizeOptions& o) {
  PortfolioProblem problem;
  problem.mode = parse_mode(o.mode);
  problem.rho = o.rho;
  problem.beta = o.beta;
  problem.gamma = o.gamma;
  problem.mesh = o.mesh;
  problem.metrics = {parse_coefficient(o.coef), {o.alpha, o.v}, parse_moments(o.moments)};
  for (auto& a : load_assets(o.assets)) problem.assets.push_back(std::move(a.number));
  problem.validate();

  Solution s;
  try {
    s = optimize(problem, o.workers);
  } catch (const NoFeasiblePoint& e) {
    std::cerr << "fuzzyskew: infeasible: " << e.what() << '\n';
    return infeasible;
  }
  const double ms = std::chrono::duration<double, std::milli>(s.elapsed).count();

  if (o.out == "csv") {
    std::cout << "coefficient,mode,n_assets,mesh,evaluated_points,elapsed_ms,mean,dispersion,skewness";
    for (std::size_t i = 0; i < s.weights.size(); ++i) std::cout << ",w" << i + 1;
    std::cout << '\n' << std::setprecision(17);
    std::cout << '"' << problem.metrics.label() << "\"," << to_string(problem.mode) << ',' << problem.assets.size()
              << ',' << problem.mesh << ',' << s.evaluated_points << ',' << ms << ',' << s.panel.mean << ','
              << s.panel.dispersion << ',' << s.panel.skewness;
    for (const double w : s.weights) std::cout << ',' << w;
    std::cout << '\n';
  } else {
    const json report{
        {"coefficient", problem.metrics.label()},
        {"moments", problem.metrics.moment_family() == MomentFamily::vb13 ? "possibilistic" : "lgy15"},
        {"mode", to_string(problem.mode)},
        {"thresholds", {{"rho", problem.rho}, {"beta", problem.beta}, {"gamma", problem.gamma}}},
        {"mesh", problem.mesh},
        {"n_assets", problem.assets.size()},
        {"weights", s.weights},
        {"mean", s.panel.mean},
        {"dispersion", s.panel.dispersion},
        {"skewness", s.panel.skewness},
        {"evaluated_points", s.evaluated_points},
        {"elapsed_ms", ms},
    };
    std::cout << report.dump(2) << '\n';
  }
  return ok;
}

struct BenchOptions {
  std::string assets;
  std::vector<std::string> coefs{"jkpt1", "vb13", "lgy15"};
  double alpha = 0.25;
  double v = 0.5;
  double rho = 0.0;
  double beta = 0.0;
  double gamma = -1.0;
  std::size_t mesh = 100;
  std::size_t repeats = 3;
  int workers = 1;
  std::string sweep;
};

int cmd_bench(const BenchOptions& o) {
  BenchConfig cfg;
  for (const auto& c : o.coefs) cfg.metrics.push_back({parse_coefficient(c), {o.alpha, o.v}, {}});
  for (const auto& m : cfg.metrics) m.validate();
  cfg.rho = o.rho;
  cfg.beta = o.beta;
  cfg.gamma = o.gamma;
  cfg.mesh = o.mesh;
  cfg.repeats = o.repeats;
  cfg.workers = o.workers;
  if (cfg.repeats == 0) throw InvalidArgument("--repeats must be at least 1");
  if (cfg.mesh == 0) throw InvalidArgument("--mesh must be at least 1");

  std::vector<std::size_t> counts;
  if (!o.sweep.empty()) {
    const auto colon = o.sweep.find(':');
    if (colon == std::string::npos) throw InvalidArgument("--sweep expects FROM:TO");
    const std::size_t from = std::stoul(o.sweep.substr(0, colon));
    const std::size_t to = std::stoul(o.sweep.substr(colon + 1));
    if (from == 0 || to < from) throw InvalidArgument("--sweep expects 1 <= FROM <= TO");
    for (std::size_t n = from; n <= to; ++n) counts.push_back(n);
  }

  std::vector<FuzzyNumber> base;
  for (auto& a : load_assets(o.assets)) base.push_back(std::move(a.number));
  if (counts.empty()) counts.push_back(base.size());

  bool header = true;
  for (const std::size_t n : counts) {
    const auto assets = counts.size() == 1 && n == base.size() ? base : synthetic_assets(base, n);
    const auto rows = run_bench(assets, cfg);
    std::cout << bench_csv(rows, header) << std::flush;
    header = false;
  }
  return ok;
}

int cmd_convert(const std::string& input, const std::string& output) {
  const auto assets = load_assets(input);
  const std::string text = write_assets(assets);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output);
    if (!f) throw InvalidArgument("cannot open output file " + output);
    f << text;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantile- and moment-based skewness of fuzzy numbers, and TCPO portfolio search"};
  app.require_subcommand(1);

  SkewOptions skew;
  auto* skew_cmd = app.add_subcommand("skew", "Skewness coefficients of every fuzzy number in a file");
  skew_cmd->add_option("--input", skew.input, "Asset JSON file")->required();
  skew_cmd->add_option("--coef", skew.coef, "jkpt1|jkpt2|vb13|lgy15|all")->capture_default_str();
  skew_cmd->add_option("--alpha", skew.alpha, "Quantile level for jkpt1")->capture_default_str();
  skew_cmd->add_option("--v", skew.v, "Outer/inner mixing weight")->capture_default_str();
  skew_cmd->add_option("--out", skew.out, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  skew_cmd->add_option("--output", skew.output, "Append to this file instead of stdout");

  OptimizeOptions opt;
  auto* opt_cmd = app.add_subcommand("optimize", "Threshold-constrained mesh search");
  opt_cmd->add_option("--assets", opt.assets, "Asset JSON file")->required();
  opt_cmd->add_option("--mode", opt.mode, "skew|mean|var")->capture_default_str();
  opt_cmd->add_option("--rho", opt.rho, "Minimum mean")->capture_default_str();
  opt_cmd->add_option("--beta", opt.beta, "Maximum dispersion")->capture_default_str();
  opt_cmd->add_option("--gamma", opt.gamma, "Minimum skewness")->capture_default_str();
  opt_cmd->add_option("--mesh", opt.mesh, "Mesh resolution r (step 1/r)")->capture_default_str();
  opt_cmd->add_option("--coef", opt.coef, "jkpt1|jkpt2|vb13|lgy15")->capture_default_str();
  opt_cmd->add_option("--alpha", opt.alpha, "Quantile level for jkpt1")->capture_default_str();
  opt_cmd->add_option("--v", opt.v, "Outer/inner mixing weight")->capture_default_str();
  opt_cmd->add_option("--moments", opt.moments, "auto|possibilistic|lgy15")->capture_default_str();
  opt_cmd->add_option("--out", opt.out, "json|csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  opt_cmd->add_option("--workers", opt.workers, "Threads (0 = OpenMP default)")->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Median TCPO run time per coefficient and mode (CSV)");
  bench_cmd->add_option("--assets", bench.assets, "Asset JSON file")->required();
  bench_cmd->add_option("--coef", bench.coefs, "Coefficients to time")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--alpha", bench.alpha, "Quantile level for jkpt1")->capture_default_str();
  bench_cmd->add_option("--v", bench.v, "Outer/inner mixing weight")->capture_default_str();
  bench_cmd->add_option("--rho", bench.rho, "Minimum mean")->capture_default_str();
  bench_cmd->add_option("--beta", bench.beta, "Maximum dispersion")->capture_default_str();
  bench_cmd->add_option("--gamma", bench.gamma, "Minimum skewness")->capture_default_str();
  bench_cmd->add_option("--mesh", bench.mesh, "Mesh resolution")->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per row (median reported)")->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers, "Threads (0 = OpenMP default)")->capture_default_str();
  bench_cmd->add_option("--sweep", bench.sweep, "Asset-count sweep FROM:TO using synthetic copies");

  std::string conv_in, conv_out;
  auto* conv_cmd = app.add_subcommand("convert", "Rewrite an asset file as explicit piecewise entries");
  conv_cmd->add_option("--input", conv_in, "Asset JSON file")->required();
  conv_cmd->add_option("--output", conv_out, "Destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_config;
  }

  try {
    if (*skew_cmd) return cmd_skew(skew);
    if (*opt_cmd) return cmd_optimize(opt);
    if (*bench_cmd) return cmd_bench(bench);
    if (*conv_cmd) return cmd_convert(conv_in, conv_out);
  } catch (const ParseError& e) {
    std::cerr << "fuzzyskew: " << e.what() << '\n';
    return parse_error;
  } catch (const InvalidArgument& e) {
    std::cerr << "fuzzyskew: invalid configuration: " << e.what() << '\n';
    return bad_config;
  } catch (const std::logic_error& e) {
    std::cerr << "fuzzyskew: invalid configuration: " << e.what() << '\n';
    return bad_config;
  } catch (const std::exception& e) {
    std::cerr << "fuzzyskew: " << e.what() << '\n';
    return failure;
  }
  return failure;
}
