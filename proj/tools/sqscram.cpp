// Copyright 2026 The sqscram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sqscram: bound reports, parameter scans, oracle validation and general-dyne runs.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sqscram/bounds.hpp"
#include "sqscram/errors.hpp"
#include "sqscram/generaldyne.hpp"
#include "sqscram/report.hpp"
#include "sqscram/validate.hpp"
#include "sqscram_cli.hpp"

namespace {

using namespace sqscram;

constexpr int kExitOk = 0;
constexpr int kExitBreach = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTail = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PointArgs {
  std::string lambda1 = "0";
  std::string lambda2 = "0";
  std::string alpha = "0";
  std::string theta = "0";
  std::string phi = "0";

  void add_to(CLI::App* app) {
    app->add_option("--lambda1", lambda1, "first squeezing lambda1")->capture_default_str();
    app->add_option("--lambda2", lambda2, "second squeezing lambda2")->capture_default_str();
    app->add_option("--alpha", alpha, "coherent amplitude alpha >= 0")->capture_default_str();
    app->add_option("--theta", theta, "probe phase theta (radians, pi/4 syntax allowed)")
        ->capture_default_str();
    app->add_option("--phi", phi, "scrambler phase phi (radians, pi/4 syntax allowed)")
        ->capture_default_str();
  }

  ModelParams params() const {
    try {
      return {cli::parse_real(lambda1), cli::parse_real(lambda2), cli::parse_real(alpha),
              cli::parse_real(theta), cli::parse_real(phi)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

struct OutputArgs {
  std::string format = "csv";
  int digits = 0;

  void add_to(CLI::App* app) {
    app->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app->add_option("--digits", digits, "significant digits (0 = shortest round trip)")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();
  }
  bool json() const { return format == "json"; }
};

std::optional<WeightMatrix> parse_weight_arg(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    return cli::parse_weight(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::optional<double> parse_z_arg(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double z = 0.0;
  try {
    z = cli::parse_real(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(z > 0.0)) throw UsageError("--z must be > 0");
  return z;
}

void print_reports(const std::vector<BoundReport>& rows, const OutputArgs& out, bool as_array) {
  if (out.json()) {
    std::cout << (as_array ? to_json(rows, out.digits) : to_json(rows.front(), out.digits))
              << '\n';
    return;
  }
  std::cout << csv_header() << '\n';
  for (const BoundReport& r : rows) std::cout << csv_row(r, out.digits) << '\n';
}

std::string columns_help() {
  std::string s = "CSV columns (empty cell = undefined, e.g. singular Q):\n  ";
  s += csv_header();
  return s;
}

void print_table(const std::vector<std::pair<std::string, double>>& fields,
                 const OutputArgs& out) {
  if (out.json()) {
    std::cout << '{';
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << '"' << fields[i].first << "\":";
      if (std::isfinite(fields[i].second)) {
        std::cout << format_number(fields[i].second, out.digits);
      } else {
        std::cout << "null";
      }
    }
    std::cout << "}\n";
    return;
  }
  for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "," : "") << fields[i].first;
  std::cout << '\n';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::cout << (i ? "," : "");
    if (std::isfinite(fields[i].second)) std::cout << format_number(fields[i].second, out.digits);
  }
  std::cout << '\n';
}

// --- bounds -----------------------------------------------------------------------------

struct BoundsCmd {
  PointArgs point;
  OutputArgs out;
  std::string z;
  std::string weight;

  int run() const {
    ReportOptions opts;
    opts.z = parse_z_arg(z);
    opts.weight = parse_weight_arg(weight);
    print_reports({make_report(point.params(), opts)}, out, false);
    return kExitOk;
  }
};

// --- scan -------------------------------------------------------------------------------

struct ScanCmd {
  PointArgs point;
  OutputArgs out;
  std::string axis;
  std::string start;
  std::string stop;
  int count = 0;
  std::string z;
  std::string weight;

  int run() const {
    cli::ScanSpec spec;
    try {
      spec = cli::make_scan_spec(axis, cli::parse_real(start), cli::parse_real(stop), count);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const ModelParams base = point.params();
    ReportOptions opts;
    opts.z = parse_z_arg(z);
    opts.weight = parse_weight_arg(weight);

    std::vector<ModelParams> points;
    std::vector<ReportOptions> point_opts;
    try {
      for (int i = 0; i < spec.count; ++i) {
        const double v = spec.value(i);
        ReportOptions o = opts;
        if (spec.axis == cli::ScanAxis::kZ) {
          if (!(v > 0.0)) throw std::invalid_argument("z axis must stay > 0");
          o.z = v;
        }
        points.push_back(cli::with_axis(base, spec.axis, v));
        point_opts.push_back(o);
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    std::vector<BoundReport> rows(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1,
                                                        points.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += workers) {
          try {
            rows[i] = make_report(points[i], point_opts[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    print_reports(rows, out, true);
    return kExitOk;
  }
};

// --- validate ---------------------------------------------------------------------------

struct ValidateCmd {
  OutputArgs out;
  std::size_t dim = default_numerics().fock_dim;
  std::size_t max_dim = default_numerics().max_fock_dim;
  double tail_tol = default_numerics().tail_tol;
  bool no_adapt = false;
  int grid_points = 0;
  double tolerance = 1e-6;
  std::string lambda1, lambda2, alpha, theta, phi;

  int run() const {
    NumericsConfig cfg = default_numerics();
    cfg.fock_dim = dim;
    cfg.max_fock_dim = std::max(max_dim, dim);
    cfg.tail_tol = tail_tol;
    cfg.adapt_dim = !no_adapt;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    ValidationGrid g = thin_grid(standard_grid(), grid_points);
    try {
      auto pin = [](std::vector<double>& axis, const std::string& s) {
        if (!s.empty()) axis = {cli::parse_real(s)};
      };
      pin(g.lambda1, lambda1);
      pin(g.lambda2, lambda2);
      pin(g.alpha, alpha);
      pin(g.theta, theta);
      pin(g.phi, phi);
      if (std::any_of(g.alpha.begin(), g.alpha.end(), [](double a) { return !(a >= 0.0); })) {
        throw std::invalid_argument("alpha must be >= 0");
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    const ValidationResult res = validate_grid(g, cfg);
    const bool ok = res.max_q_error < tolerance && res.max_u_error < tolerance &&
                    res.max_moment_error < tolerance;
    print_table({{"points", double(res.points)},
                 {"max_dim", double(res.max_dim)},
                 {"max_rel_error_Q", res.max_q_error},
                 {"max_rel_error_U", res.max_u_error},
                 {"max_rel_error_moments", res.max_moment_error},
                 {"tolerance", tolerance},
                 {"pass", ok ? 1.0 : 0.0}},
                out);
    return ok ? kExitOk : kExitBreach;
  }
};

// --- generaldyne ------------------------------------------------------------------------

struct GeneralDyneCmd {
  PointArgs point;
  OutputArgs out;
  std::string z = "1";
  bool optimize = false;
  bool asymptotic = false;

  int run() const {
    ModelParams p = point.params();
    const std::optional<double> zval = parse_z_arg(z);
    std::vector<std::pair<std::string, double>> fields;
    if (asymptotic && !(p.alpha() > 0.0)) throw UsageError("--asymptotic needs --alpha > 0");

    GeneralDyneSetting setting(zval.value_or(1.0));
    if (optimize) {
      const OptimizedSetting best = optimize_setting(p.lambda1(), p.lambda2(), p.alpha());
      fields.insert(fields.end(), {{"theta_star", best.theta},
                                   {"phi_star", best.phi},
                                   {"z_star", best.z},
                                   {"evaluations", double(best.evaluations)}});
      p = p.with_theta(best.theta).with_phi(best.phi);
      setting = GeneralDyneSetting(best.z);
    } else if (asymptotic) {
      constexpr double quarter_pi = std::numbers::pi / 4;
      p = p.with_theta(0.0).with_phi(quarter_pi);
      setting = GeneralDyneSetting(std::exp(2.0 * p.lambda2()));
    }

    const CFIMatrix f = cfi_matrix(p, setting);
    double cg = std::nan("");
    try {
      cg = c_g(f);
    } catch (const SingularError&) {
    }
    fields.insert(fields.end(), {{"theta", p.theta()},
                                 {"phi", p.phi()},
                                 {"z", setting.z()},
                                 {"F11", f.F.a},
                                 {"F12", f.F.b},
                                 {"F22", f.F.d},
                                 {"C_g", cg}});
    if (asymptotic) {
      const double published = cg_asymptotic(p.alpha(), p.lambda1());
      const double leading = cg_leading_order(p.alpha(), p.lambda1());
      const auto band = holevo_ratio_band(p.alpha(), p.lambda1());
      fields.insert(fields.end(), {{"C_g_asymptotic", published},
                                   {"ratio_exact_asymptotic", cg / published},
                                   {"C_g_leading_order", leading},
                                   {"ratio_exact_leading_order", cg / leading},
                                   {"holevo_ratio_low", band.first},
                                   {"holevo_ratio_high", band.second}});
    }
    print_table(fields, out);
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args;
  try {
    args = cli::expand_config(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Precision bounds for two-parameter squeezing estimation with a phase scrambler"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_unused;
  app.add_option("--config", config_unused,
                 "key=value file; keys are long flag names, applied before the command line");

  BoundsCmd bounds;
  CLI::App* b = app.add_subcommand("bounds", "closed-form report for one parameter point");
  bounds.point.add_to(b);
  bounds.out.add_to(b);
  b->add_option("--z", bounds.z, "general-dyne seed squeezing; adds C_g");
  b->add_option("--weight", bounds.weight, "weight matrix W as a,b,c,d; adds C_W = Tr[W Q^-1]");
  b->footer(columns_help());

  ScanCmd scan;
  CLI::App* s = app.add_subcommand("scan", "report per point along one parameter axis");
  scan.point.add_to(s);
  scan.out.add_to(s);
  s->add_option("--axis", scan.axis, "lambda1, lambda2, alpha, theta, phi or z")->required();
  s->add_option("--start", scan.start, "first value")->required();
  s->add_option("--stop", scan.stop, "last value (> start)")->required();
  s->add_option("--count", scan.count, "number of points (>= 2)")->required();
  s->add_option("--z", scan.z, "general-dyne seed squeezing; adds C_g");
  s->add_option("--weight", scan.weight, "weight matrix W as a,b,c,d; adds C_W");
  s->footer(columns_help());

  ValidateCmd validate;
  CLI::App* v = app.add_subcommand("validate", "compare closed forms with the Fock-space oracle");
  validate.out.add_to(v);
  v->add_option("--dim", validate.dim, "initial Fock truncation")->capture_default_str();
  v->add_option("--max-dim", validate.max_dim, "largest adaptive truncation")
      ->capture_default_str();
  v->add_option("--tail-tol", validate.tail_tol, "tail probability tolerance")
      ->capture_default_str();
  v->add_flag("--no-adapt", validate.no_adapt, "fail instead of growing the truncation");
  v->add_option("--grid-points", validate.grid_points,
                "values kept per axis of the standard grid (1 = midpoint, 0 = all)")
      ->capture_default_str();
  v->add_option("--tolerance", validate.tolerance, "pass threshold for every error")
      ->capture_default_str();
  v->add_option("--lambda1", validate.lambda1, "pin lambda1");
  v->add_option("--lambda2", validate.lambda2, "pin lambda2");
  v->add_option("--alpha", validate.alpha, "pin alpha");
  v->add_option("--theta", validate.theta, "pin theta");
  v->add_option("--phi", validate.phi, "pin phi");

  GeneralDyneCmd gd;
  CLI::App* g = app.add_subcommand("generaldyne", "classical Fisher information of general-dyne");
  gd.point.add_to(g);
  gd.out.add_to(g);
  g->add_option("--z", gd.z, "seed squeezing z > 0 (1 = heterodyne)")->capture_default_str();
  g->add_flag("--optimize", gd.optimize, "minimize C_g over theta, phi and z");
  g->add_flag("--asymptotic", gd.asymptotic,
              "evaluate at theta = 0, phi = pi/4, z = e^{2 lambda2} and compare with the "
              "large-alpha forms");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*b) return bounds.run();
    if (*s) return scan.run();
    if (*v) return validate.run();
    if (*g) return gd.run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TailError& e) {
    std::cerr << "error: " << e.what() << " (dim " << e.dim() << ", tail " << e.tail() << ")\n";
    return kExitTail;
  } catch (const OptimizationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBreach;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBreach;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBreach;
  }
  return kExitUsage;
}
