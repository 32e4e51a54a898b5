// alpharm command line front end.
//
// Subcommands map one-to-one onto the library surface: `kernel` tabulates the
// boundary kernel mean, `eval` samples a stored series solution on a polar
// grid, `bounds` tabulates the pointwise estimates, `verify` runs the
// self-check battery, `landau` computes univalence/covering radii, and `scan`
// sweeps the landau computation over a range of alpha.
//
// Exit codes: 0 success, 1 I/O or usage failure, 2 domain error in the
// numerical inputs, 3 verification found a violated bound.  Output written
// through format_double so repeated runs are byte identical.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <limits>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "alpharm/bounds.hpp"
#include "alpharm/io.hpp"
#include "alpharm/kernel.hpp"
#include "alpharm/landau.hpp"
#include "alpharm/solution.hpp"
#include "alpharm/verify.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr std::size_t kMaxGridCount = 1000000;

// Parses either a single value "0.5" or an inclusive range "a:b:n".
std::vector<double> parse_value_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  const auto number = [&text](const std::string& field) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw alpharm::IoError("bad numeric field '" + field + "' in grid '" + text + "'");
    return value;
  };
  if (parts.size() == 1) return {number(parts[0])};
  if (parts.size() != 3)
    throw alpharm::IoError("grid '" + text + "' must be a number or a:b:n");
  const double lo = number(parts[0]);
  const double hi = number(parts[1]);
  double count_raw = number(parts[2]);
  if (count_raw < 1.0 || count_raw > static_cast<double>(kMaxGridCount) ||
      count_raw != static_cast<double>(static_cast<std::size_t>(count_raw)))
    throw alpharm::IoError("grid count in '" + text + "' must be an integer in [1, 1000000]");
  const auto count = static_cast<std::size_t>(count_raw);
  std::vector<double> values;
  values.reserve(count);
  if (count == 1) {
    values.push_back(lo);
    return values;
  }
  for (std::size_t i = 0; i < count; ++i)
    values.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  return values;
}

// Parses "NxM" polar grid dimensions.
std::pair<int, int> parse_polar_grid(const std::string& text) {
  const auto cross = text.find('x');
  if (cross == std::string::npos)
    throw alpharm::IoError("grid '" + text + "' must look like 8x16");
  const auto dimension = [&text](const std::string& field) {
    int value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 1 || value > 4096)
      throw alpharm::IoError("grid dimension '" + field + "' in '" + text +
                             "' must be an integer in [1, 4096]");
    return value;
  };
  return {dimension(text.substr(0, cross)), dimension(text.substr(cross + 1))};
}

double parse_exponent(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw alpharm::IoError("--p expects a number or 'inf', got '" + text + "'");
  return value;
}

unsigned long long seed_from_env() {
  const char* raw = std::getenv("ALPHARM_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  unsigned long long value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc() || *ptr != '\0')
    throw alpharm::IoError("ALPHARM_SEED must be a nonnegative integer");
  return value;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    std::cout.flush();
  } else {
    alpharm::write_text_file(out_path, content);
  }
}

// Loads a solution either from its JSON form or by fitting boundary samples.
alpharm::SeriesSolution load_input_solution(const std::string& solution_path,
                                            const std::string& boundary_path,
                                            double alpha) {
  if (!solution_path.empty()) return alpharm::load_solution(solution_path);
  if (boundary_path.empty())
    throw alpharm::IoError("pass --solution or --boundary");
  const alpharm::BoundaryData data = alpharm::load_boundary(boundary_path);
  const int order = std::min((data.size() - 1) / 4, 64);
  return alpharm::from_boundary(data, alpha, order);
}

struct KernelArgs {
  double alpha = 0.0;
  std::string r_text;
  int quad_n = 256;
  std::string out_path;
};

void run_kernel(const KernelArgs& args) {
  const std::vector<double> radii = parse_value_grid(args.r_text);
  std::string table = "r,M_alpha_closed,M_alpha_quad,slope\n";
  for (const double r : radii) {
    const double closed = alpharm::kernel_mean_closed(args.alpha, r);
    const double quad = alpharm::kernel_mean_quadrature(args.alpha, r, args.quad_n);
    const double slope = alpharm::kernel_mean_slope(args.alpha, r);
    table += alpharm::format_double(r) + "," + alpharm::format_double(closed) + "," +
             alpharm::format_double(quad) + "," + alpharm::format_double(slope) + "\n";
  }
  emit(args.out_path, table);
}

struct EvalArgs {
  std::string solution_path;
  std::string boundary_path;
  double alpha = 0.0;
  std::string grid_text = "8x16";
  std::string out_path;
};

void run_eval(const EvalArgs& args) {
  const alpharm::SeriesSolution sol =
      load_input_solution(args.solution_path, args.boundary_path, args.alpha);
  const auto [radial, angular] = parse_polar_grid(args.grid_text);
  std::string table = "r,theta,re,im\n";
  for (int i = 0; i < radial; ++i) {
    const double r = 0.9 * static_cast<double>(i + 1) / static_cast<double>(radial);
    for (int j = 0; j < angular; ++j) {
      const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(angular);
      const std::complex<double> value =
          alpharm::evaluate(sol, alpharm::DiskPoint(std::polar(r, theta)));
      table += alpharm::format_double(r) + "," + alpharm::format_double(theta) + "," +
               alpharm::format_double(value.real()) + "," +
               alpharm::format_double(value.imag()) + "\n";
    }
  }
  emit(args.out_path, table);
}

struct BoundsArgs {
  double alpha = 0.0;
  double m = 1.0;
  std::string r_text = "0:0.95:20";
  std::string out_path;
};

void run_bounds(const BoundsArgs& args) {
  const std::vector<double> radii = parse_value_grid(args.r_text);
  std::string table =
      "r,center_deviation,gradient_tight,gradient_loose,increment,colonna,heinz_arctan\n";
  for (const double r : radii) {
    const alpharm::DiskPoint z{std::complex<double>(r, 0.0)};
    table += alpharm::format_double(r) + "," +
             alpharm::format_double(alpharm::center_deviation_bound(args.alpha, args.m, z)) +
             "," + alpharm::format_double(alpharm::gradient_bound(args.alpha, args.m, r, true)) +
             "," + alpharm::format_double(alpharm::gradient_bound(args.alpha, args.m, r, false)) +
             "," + alpharm::format_double(alpharm::increment_bound(args.m, r)) + "," +
             alpharm::format_double(alpharm::colonna_bound(r)) + "," +
             alpharm::format_double(alpharm::heinz_arctan_bound(r)) + "\n";
  }
  emit(args.out_path, table);
}

struct VerifyArgs {
  std::string solution_path;
  std::string boundary_path;
  double alpha = 0.0;
  double sup_override = 0.0;
  int points = 200;
  double tol_scale = 1e-6;
  int quad_n = 256;
  std::string out_path;
};

// Returns false when some bound came back violated.
bool run_verify(const VerifyArgs& args) {
  alpharm::VerifyOptions options;
  options.points = args.points;
  options.seed = seed_from_env();
  options.tol_scale = args.tol_scale;
  options.sup_override = args.sup_override;
  options.quad_n = args.quad_n;
  std::vector<alpharm::BoundReport> reports;
  if (!args.solution_path.empty()) {
    const alpharm::SeriesSolution sol = alpharm::load_solution(args.solution_path);
    reports = alpharm::verify_solution(sol, options);
  } else {
    if (args.boundary_path.empty())
      throw alpharm::IoError("pass --solution or --boundary");
    const alpharm::BoundaryData data = alpharm::load_boundary(args.boundary_path);
    reports = alpharm::verify_boundary(data, args.alpha, options);
  }
  std::string lines;
  for (const auto& report : reports) lines += alpharm::report_to_json_line(report);
  emit(args.out_path, lines);
  return alpharm::all_satisfied(reports);
}

struct LandauArgs {
  double alpha = 0.0;
  std::string p_text = "2";
  double norm = 0.0;
  double lambda = 0.0;
  bool beta_mode = false;
  std::string solution_path;
  std::string out_path;
};

void run_landau(const LandauArgs& args) {
  if (args.beta_mode) {
    const alpharm::SeriesSolution sol = alpharm::load_solution(args.solution_path);
    const alpharm::WirtingerPair at_center =
        alpharm::wirtinger_derivatives(sol, alpharm::DiskPoint(std::complex<double>(0.0, 0.0)));
    const double beta = std::fabs(at_center.jacobian());
    const double sup = alpharm::sup_estimate(sol);
    const alpharm::LandauInputs inputs(sol.alpha(), beta, sup);
    const double rho0 = alpharm::solve_rho(inputs);
    const alpharm::UnivalentRange range = alpharm::univalent_range(inputs, rho0);
    alpharm::LandauResult result;
    result.gamma0 = 1.0;
    result.mstar = sup;
    result.rho0 = rho0;
    result.r0_lower = range.r0_lower;
    result.univalence_radius = rho0;
    result.covering_radius = range.r0_lower;
    emit(args.out_path, alpharm::landau_to_json(result));
    return;
  }
  const double p = parse_exponent(args.p_text);
  const alpharm::LandauResult result =
      alpharm::landau_hardy(args.alpha, p, args.norm, args.lambda);
  emit(args.out_path, alpharm::landau_to_json(result));
}

struct ScanArgs {
  std::string alpha_text;
  std::string p_text = "2";
  double norm = 0.0;
  double lambda = 0.0;
  std::string out_path;
};

void run_scan(const ScanArgs& args) {
  const std::vector<double> alphas = parse_value_grid(args.alpha_text);
  const double p = parse_exponent(args.p_text);
  std::string table = "alpha,gamma0,mstar,rho0,r0_lower,univalence_radius,covering_radius\n";
  for (const double alpha : alphas) {
    const alpharm::LandauResult result = alpharm::landau_hardy(alpha, p, args.norm, args.lambda);
    table += alpharm::format_double(alpha) + "," + alpharm::format_double(result.gamma0) + "," +
             alpharm::format_double(result.mstar) + "," + alpharm::format_double(result.rho0) +
             "," + alpharm::format_double(result.r0_lower) + "," +
             alpharm::format_double(result.univalence_radius) + "," +
             alpharm::format_double(result.covering_radius) + "\n";
  }
  emit(args.out_path, table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerics for the disk family of alpha-harmonic mappings"};
  app.require_subcommand(1);

  KernelArgs kernel_args;
  CLI::App* kernel_cmd = app.add_subcommand("kernel", "tabulate the kernel mean and its slope");
  kernel_cmd->add_option("--alpha", kernel_args.alpha, "family parameter, must exceed -1")
      ->required();
  kernel_cmd->add_option("--r", kernel_args.r_text, "radius or radius grid a:b:n")->required();
  kernel_cmd->add_option("--quad-n", kernel_args.quad_n, "starting quadrature node count");
  kernel_cmd->add_option("--out", kernel_args.out_path, "write CSV here instead of stdout");

  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "sample a solution on a polar grid");
  CLI::Option* eval_sol = eval_cmd->add_option("--solution", eval_args.solution_path,
                                               "solution JSON produced by this tool or by hand");
  CLI::Option* eval_bnd =
      eval_cmd->add_option("--boundary", eval_args.boundary_path, "boundary sample CSV");
  eval_sol->excludes(eval_bnd);
  CLI::Option* eval_alpha =
      eval_cmd->add_option("--alpha", eval_args.alpha, "family parameter for boundary fits");
  eval_alpha->needs(eval_bnd);
  eval_bnd->needs(eval_alpha);
  eval_cmd->add_option("--grid", eval_args.grid_text, "polar grid as RADIALxANGULAR");
  eval_cmd->add_option("--out", eval_args.out_path, "write CSV here instead of stdout");

  BoundsArgs bounds_args;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "tabulate the pointwise estimates");
  bounds_cmd->add_option("--alpha", bounds_args.alpha, "family parameter, must exceed -1")
      ->required();
  bounds_cmd->add_option("--m", bounds_args.m, "sup bound fed into the estimates");
  bounds_cmd->add_option("--r", bounds_args.r_text, "radius or radius grid a:b:n");
  bounds_cmd->add_option("--out", bounds_args.out_path, "write CSV here instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the self-check battery");
  CLI::Option* verify_sol =
      verify_cmd->add_option("--solution", verify_args.solution_path, "solution JSON to check");
  CLI::Option* verify_bnd =
      verify_cmd->add_option("--boundary", verify_args.boundary_path, "boundary sample CSV");
  verify_sol->excludes(verify_bnd);
  CLI::Option* verify_alpha =
      verify_cmd->add_option("--alpha", verify_args.alpha, "family parameter for boundary fits");
  verify_alpha->needs(verify_bnd);
  verify_bnd->needs(verify_alpha);
  verify_cmd->add_option("--m", verify_args.sup_override,
                         "certified sup bound, overrides the sampled estimate");
  verify_cmd->add_option("--points", verify_args.points, "random sample count per sweep");
  verify_cmd->add_option("--tol", verify_args.tol_scale, "violation tolerance per unit of sup");
  verify_cmd->add_option("--quad-n", verify_args.quad_n, "starting quadrature node count");
  verify_cmd->add_option("--out", verify_args.out_path, "write JSON lines here instead of stdout");

  LandauArgs landau_args;
  CLI::App* landau_cmd = app.add_subcommand("landau", "univalence and covering radii");
  CLI::Option* landau_alpha =
      landau_cmd->add_option("--alpha", landau_args.alpha, "family parameter in (-1, 0]");
  landau_cmd->add_option("--p", landau_args.p_text, "integral exponent, a number or 'inf'");
  CLI::Option* landau_norm =
      landau_cmd->add_option("--norm", landau_args.norm, "boundary integral mean norm");
  CLI::Option* landau_lambda =
      landau_cmd->add_option("--lambda", landau_args.lambda, "Jacobian lower bound at the origin");
  CLI::Option* landau_beta = landau_cmd->add_flag("--beta-mode", landau_args.beta_mode,
                                                  "measure the scale from a stored solution");
  CLI::Option* landau_sol = landau_cmd->add_option("--solution", landau_args.solution_path,
                                                   "solution JSON for --beta-mode");
  landau_beta->needs(landau_sol);
  landau_sol->needs(landau_beta);
  landau_beta->excludes(landau_alpha);
  landau_beta->excludes(landau_norm);
  landau_beta->excludes(landau_lambda);
  landau_cmd->add_option("--out", landau_args.out_path, "write JSON here instead of stdout");

  ScanArgs scan_args;
  CLI::App* scan_cmd = app.add_subcommand("scan", "sweep the landau computation over alpha");
  scan_cmd->add_option("--alpha", scan_args.alpha_text, "alpha grid a:b:n")->required();
  scan_cmd->add_option("--p", scan_args.p_text, "integral exponent, a number or 'inf'");
  scan_cmd->add_option("--norm", scan_args.norm, "boundary integral mean norm")->required();
  scan_cmd->add_option("--lambda", scan_args.lambda, "Jacobian lower bound at the origin")
      ->required();
  scan_cmd->add_option("--out", scan_args.out_path, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (kernel_cmd->parsed()) run_kernel(kernel_args);
    if (eval_cmd->parsed()) run_eval(eval_args);
    if (bounds_cmd->parsed()) run_bounds(bounds_args);
    if (verify_cmd->parsed() && !run_verify(verify_args)) return 3;
    if (landau_cmd->parsed()) run_landau(landau_args);
    if (scan_cmd->parsed()) run_scan(scan_args);
  } catch (const alpharm::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
