// fjb: evaluate the library's functions, sweep the bound inequalities on
// grids or random samples, locate envelope crossover thresholds, and run the
// identity/limit batteries.  Exit codes: 0 success, 1 a check failed,
// 2 usage/configuration error, 3 domain error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fjb/bounds.hpp"
#include "fjb/dirichlet.hpp"
#include "fjb/figures.hpp"
#include "fjb/fjsums.hpp"
#include "fjb/specfun.hpp"
#include "fjb/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
const double kUnset = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string cnum(const fjb::ComplexValue& v) {
  return num(v.re) + (v.im < 0 ? " - " : " + ") + num(std::abs(v.im)) + "i";
}

struct EvalArgs {
  double x = kUnset;
  double mu = kUnset;
  double lambda = kUnset;
  double t = kUnset;
  double lo = kUnset;
  double hi = kUnset;
  double zre = kUnset;
  double zim = kUnset;
  long n = -1;
};

double req(double v, const char* name) {
  if (std::isnan(v)) {
    throw std::invalid_argument(std::string("eval: missing required option --") + name);
  }
  return v;
}

long reqn(long v) {
  if (v < 0) throw std::invalid_argument("eval: missing required option --n");
  return v;
}

int run_eval(const std::string& fn, const EvalArgs& a, const fjb::EvalOptions& opts) {
  using namespace fjb;
  std::ostringstream os;
  if (fn == "Si") {
    os << num(specfun::sine_integral(req(a.t, "t"), opts));
  } else if (fn == "si") {
    os << num(specfun::si(req(a.t, "t"), opts));
  } else if (fn == "Ci") {
    os << num(specfun::cosine_integral(req(a.t, "t"), opts));
  } else if (fn == "Cin") {
    os << num(specfun::cin(req(a.t, "t"), opts));
  } else if (fn == "E") {
    os << cnum(specfun::exp_integral_E(req(a.t, "t"), opts));
  } else if (fn == "M") {
    os << num(specfun::comparison_M(req(a.t, "t"), opts));
  } else if (fn == "digamma") {
    os << num(specfun::digamma(req(a.t, "t")));
  } else if (fn == "lgamma") {
    os << num(specfun::log_gamma(req(a.t, "t")));
  } else if (fn == "arccot") {
    os << num(specfun::arccot(req(a.t, "t")));
  } else if (fn == "L") {
    os << cnum(fjsums::L_infinite({req(a.x, "x"), req(a.mu, "mu")}, opts));
  } else if (fn == "L_series") {
    double err = 0.0;
    os << cnum(fjsums::l_direct_series({req(a.x, "x"), req(a.mu, "mu")}, opts, &err));
    os << "  err_est = " << num(err);
  } else if (fn == "L_trunc") {
    os << cnum(fjsums::L_truncated({req(a.x, "x"), req(a.mu, "mu")}, reqn(a.n), opts));
  } else if (fn == "S_finite") {
    os << cnum(fjsums::l_finite_sum({req(a.x, "x"), req(a.mu, "mu")}, reqn(a.n)));
  } else if (fn == "S_sine") {
    os << num(fjsums::sine_partial_sum(req(a.x, "x"), reqn(a.n)));
  } else if (fn == "Lodd") {
    os << cnum(fjsums::L_odd({req(a.x, "x"), req(a.lambda, "lambda")}, opts));
  } else if (fn == "Spi") {
    os << num(fjsums::S_pi(req(a.lambda, "lambda"), opts));
  } else if (fn == "rotL") {
    os << cnum(fjsums::rotated_L({req(a.x, "x"), req(a.mu, "mu")}, opts));
  } else if (fn == "Dn") {
    os << num(dirichlet::dirichlet_kernel(req(a.x, "x"), static_cast<int>(reqn(a.n))));
  } else if (fn == "Ssi") {
    os << num(dirichlet::ssi({req(a.x, "x"), req(a.lambda, "lambda")}, opts));
  } else if (fn == "Eci") {
    os << cnum(dirichlet::eci({req(a.x, "x"), req(a.lambda, "lambda")}, opts));
  } else if (fn == "EciLap") {
    os << cnum(dirichlet::eci_laplace({req(a.x, "x"), req(a.lambda, "lambda")}, opts));
  } else if (fn == "Sci") {
    os << num(dirichlet::sci({req(a.x, "x"), req(a.lambda, "lambda")}, opts));
  } else if (fn == "Cci") {
    os << num(dirichlet::cci({req(a.x, "x"), req(a.lambda, "lambda")}, opts));
  } else if (fn == "Dremainder") {
    os << num(dirichlet::series_remainder_via_kernel(req(a.x, "x"), req(a.mu, "mu"), opts));
  } else if (fn == "Dcos") {
    os << num(dirichlet::cos_kernel_integral(req(a.lo, "lo"), req(a.hi, "hi"),
                                             req(a.mu, "mu"), opts));
  } else if (fn == "arccot_env") {
    os << num(bounds::arccot_envelope(req(a.mu, "mu"), req(a.x, "x")));
  } else if (fn == "m_env") {
    os << num(bounds::m_envelope(req(a.mu, "mu"), req(a.x, "x"), opts));
  } else if (fn == "m_env_odd") {
    os << num(bounds::m_envelope_odd(req(a.lambda, "lambda"), req(a.x, "x"), opts));
  } else if (fn == "log_env") {
    os << num(bounds::log_envelope(req(a.mu, "mu"), req(a.x, "x")));
  } else if (fn == "frac_env") {
    os << num(bounds::frac_envelope(req(a.mu, "mu"), req(a.x, "x")));
  } else if (fn == "sec_env") {
    os << num(bounds::sec_envelope(req(a.lambda, "lambda"), req(a.x, "x")));
  } else if (fn == "ebycos_rhs") {
    os << num(bounds::ebycos_rhs(req(a.lambda, "lambda"), req(a.x, "x"), opts));
  } else if (fn == "classical") {
    const auto b = bounds::classical_bounds(reqn(a.n), req(a.x, "x"));
    os << "fj_turan = " << num(b.fj_turan) << "\nfejer1928 = " << num(b.fejer1928)
       << "\nturan1952 = " << num(b.turan1952) << "\nak2003 = " << num(b.ak2003)
       << "\nbk1998 = " << num(b.bk1998)
       << "\nkoumandos2012 = " << num(b.koumandos2012)
       << "\nalkou12 = " << num(b.alkou12)
       << "\nak_even_upper = " << num(b.ak_even_upper);
  } else if (fn == "legendre") {
    os << num(bounds::legendre_p(static_cast<int>(reqn(a.n)), req(a.t, "t")));
  } else if (fn == "alkou_delta") {
    os << num(bounds::alkou_delta(reqn(a.n)));
  } else if (fn == "Rn") {
    os << cnum(bounds::taylor_remainder({req(a.zre, "zre"), req(a.zim, "zim"), reqn(a.n)}));
  } else if (fn == "taylor_bounds") {
    const auto tb = bounds::taylor_bounds({req(a.zre, "zre"), req(a.zim, "zim"), reqn(a.n)});
    const auto show = [&](const char* name, const std::optional<double>& v) {
      os << name << " = " << (v ? num(*v) : std::string("-")) << '\n';
    };
    show("simple", tb.simple);
    show("mp", tb.mp);
    show("log1z", tb.log1z);
    os << "mhat = " << (tb.mhat ? num(*tb.mhat) : std::string("-"));
  } else {
    throw std::invalid_argument("eval: unknown function name '" + fn + "'");
  }
  std::cout << os.str() << "\nabs_tol = " << num(opts.abs_tol) << '\n';
  return 0;
}

fjb::verify::Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ':')) parts.push_back(cur);
  if (parts.size() < 3 || parts.size() > 4) {
    throw std::invalid_argument("axis must be lo:hi:count[:log|:linear]");
  }
  fjb::verify::Axis ax;
  try {
    ax.lo = std::stod(parts[0]);
    ax.hi = std::stod(parts[1]);
    ax.count = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("axis must be lo:hi:count[:log|:linear]");
  }
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      ax.spacing = fjb::verify::Spacing::Log;
    } else if (parts[3] == "linear") {
      ax.spacing = fjb::verify::Spacing::Linear;
    } else {
      throw std::invalid_argument("axis spacing must be 'log' or 'linear'");
    }
  }
  return ax;
}

fjb::verify::GridSpec default_grid(fjb::bounds::BoundId id) {
  using fjb::bounds::BoundId;
  using fjb::verify::Axis;
  const double pi = fjb::specfun::kPi;
  fjb::verify::GridSpec g;
  switch (id) {
    case BoundId::ArccotEnvelope:
      g.axes = {Axis{0.0, pi, 400}, Axis{-0.5, 30.0, 61}};
      break;
    case BoundId::MEnvelope:
    case BoundId::FracEnvelope:
      g.axes = {Axis{0.0, pi, 400}, Axis{-0.45, 20.0, 42}};
      break;
    case BoundId::LogEnvelope:
      g.axes = {Axis{0.0, pi, 400}, Axis{-0.45, 5.0, 42}};
      break;
    case BoundId::SecEnvelope:
    case BoundId::EbycosRhs:
      g.axes = {Axis{0.0, 0.5 * pi, 400}, Axis{0.5, 50.0, 100}};
      break;
    case BoundId::FJTuran:
    case BoundId::Fejer1928:
    case BoundId::Koumandos2012:
    case BoundId::AlKou12:
      g.axes = {Axis{0.0, pi, 400}, Axis{1.0, 50.0, 50}};
      break;
    case BoundId::Turan1952:
    case BoundId::AK2003:
      g.axes = {Axis{0.0, pi, 400}, Axis{2.0, 50.0, 49}};
      break;
    case BoundId::BK1998:
      g.axes = {Axis{0.0, pi, 400}, Axis{3.0, 50.0, 48}};
      break;
    case BoundId::AKEvenUpper:
      g.axes = {Axis{0.0, pi, 400}, Axis{2.0, 20.0, 10}};
      break;
    case BoundId::TaylorSimple:
    case BoundId::TaylorMhat:
      g.axes = {Axis{0.0, 1.0, 21}, Axis{0.0, 2.0 * pi, 60}, Axis{1.0, 30.0, 30}};
      break;
    case BoundId::TaylorMp:
    case BoundId::TaylorLog1z:
      g.axes = {Axis{0.0, 0.999, 21}, Axis{0.0, 2.0 * pi, 60}, Axis{1.0, 30.0, 30}};
      break;
  }
  return g;
}

int report_sweep(const fjb::verify::InequalityReport& rep,
                 const nlohmann::json& grid_desc, const fjb::EvalOptions& opts,
                 const std::string& json_path) {
  const int axes = fjb::verify::axis_count(rep.bound_id);
  std::cout << "bound " << fjb::bounds::to_string(rep.bound_id) << ": "
            << rep.samples << " samples, " << rep.violations << " violations, "
            << rep.near_equality << " near-equality\n";
  std::cout << "min_margin = " << num(rep.min_margin) << " at (";
  for (int i = 0; i < axes; ++i) {
    std::cout << (i ? ", " : "") << num(rep.argmin[static_cast<std::size_t>(i)]);
  }
  std::cout << ")\nbudget = " << num(rep.budget) << ", elapsed = "
            << num(rep.elapsed_seconds) << " s\n";
  if (!json_path.empty()) {
    nlohmann::json j;
    j["bound"] = fjb::bounds::to_string(rep.bound_id);
    j["grid"] = grid_desc;
    j["samples"] = rep.samples;
    j["violations"] = rep.violations;
    j["near_equality"] = rep.near_equality;
    j["min_margin"] = rep.min_margin;
    nlohmann::json argmin = nlohmann::json::array();
    for (int i = 0; i < axes; ++i) argmin.push_back(rep.argmin[static_cast<std::size_t>(i)]);
    j["argmin"] = argmin;
    j["tolerances"] = {{"abs_tol", opts.abs_tol}, {"budget", rep.budget}};
    j["elapsed_seconds"] = rep.elapsed_seconds;
    j["version"] = kVersion;
    if (json_path == "-") {
      std::cout << j.dump(2) << '\n';
    } else {
      std::ofstream out(json_path);
      if (!out) throw std::runtime_error("cannot open " + json_path);
      out << j.dump(2) << '\n';
    }
  }
  return rep.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigonometric-sum envelope evaluation and certification"};
  app.set_version_flag("--version", kVersion);
  double abs_tol = fjb::EvalOptions{}.abs_tol;
  app.add_option("--abs-tol", abs_tol, "absolute tolerance for evaluations")
      ->envname("FJB_ABS_TOL");
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate one function at a point");
  std::string fn;
  EvalArgs ea;
  eval->add_option("--fn", fn, "function name")->required();
  eval->add_option("--x", ea.x, "angle argument");
  eval->add_option("--mu", ea.mu, "order parameter");
  eval->add_option("--lambda", ea.lambda, "odd-order parameter");
  eval->add_option("--t", ea.t, "real argument");
  eval->add_option("--lo", ea.lo, "interval start");
  eval->add_option("--hi", ea.hi, "interval end");
  eval->add_option("--zre", ea.zre, "real part of z");
  eval->add_option("--zim", ea.zim, "imaginary part of z");
  eval->add_option("--n", ea.n, "truncation order");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "sweep one bound over a grid or random samples");
  std::string bound_name;
  std::vector<std::string> axis_texts;
  long random_count = 0;
  std::uint64_t seed = 12345;
  std::string json_path;
  sweep->add_option("--bound", bound_name, "bound name")->required();
  sweep->add_option("--axis", axis_texts, "axis as lo:hi:count[:log|:linear]");
  sweep->add_option("--random", random_count, "use N random samples instead of a grid");
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_option("--json", json_path,
                    "write the report as JSON to this file ('-' for stdout)");

  // thresholds
  app.add_subcommand("thresholds", "locate both envelope crossover thresholds");

  // identities
  app.add_subcommand("identities", "run the cross-representation identity battery");

  // limits
  app.add_subcommand("limits", "run the scaling-limit deviation tables");

  // figure
  auto* figure = app.add_subcommand("figure", "emit a reference CSV");
  std::string fig_name;
  long fig_n = 10;
  double fig_lambda = 12.0;
  long fig_points = 400;
  std::string fig_out = "-";
  figure->add_option("name", fig_name, "fig1 or fig2")->required();
  figure->add_option("--n", fig_n, "partial-sum order (fig1)");
  figure->add_option("--lambda", fig_lambda, "frequency (fig2)");
  figure->add_option("--points", fig_points, "number of rows");
  figure->add_option("--out", fig_out, "output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    fjb::EvalOptions opts;
    opts.abs_tol = abs_tol;
    opts.validate();

    if (eval->parsed()) return run_eval(fn, ea, opts);

    if (sweep->parsed()) {
      const auto id = fjb::bounds::bound_from_string(bound_name);
      if (!id) throw std::invalid_argument("unknown bound '" + bound_name + "'");
      if (random_count > 0) {
        const auto rep = fjb::verify::sweep_random(*id, random_count, seed, opts);
        nlohmann::json gd = {{"random", random_count}, {"seed", seed}};
        return report_sweep(rep, gd, opts, json_path);
      }
      fjb::verify::GridSpec grid;
      if (axis_texts.empty()) {
        grid = default_grid(*id);
      } else {
        for (const auto& t : axis_texts) grid.axes.push_back(parse_axis(t));
      }
      nlohmann::json gd = nlohmann::json::array();
      for (const auto& ax : grid.axes) {
        gd.push_back({{"lo", ax.lo},
                      {"hi", ax.hi},
                      {"count", ax.count},
                      {"spacing", ax.spacing == fjb::verify::Spacing::Log ? "log" : "linear"}});
      }
      const auto rep = fjb::verify::sweep(*id, grid, opts);
      return report_sweep(rep, gd, opts, json_path);
    }

    if (app.got_subcommand("thresholds")) {
      const auto t0 = fjb::verify::find_threshold(fjb::verify::Threshold::CrossoverMArccot, opts);
      const auto t1 = fjb::verify::find_threshold(fjb::verify::Threshold::CrossoverEArccot, opts);
      std::cout << "t0 (M = arccot)   root = " << num(t0.root)
                << "  residual = " << num(t0.residual) << '\n';
      std::cout << "t1 (|E| = arccot) root = " << num(t1.root)
                << "  residual = " << num(t1.residual) << '\n';
      const bool ok = std::abs(t0.residual) <= 1e-12 && std::abs(t1.residual) <= 1e-12 &&
                      t1.root < t0.root && t0.root < 1.0;
      return ok ? 0 : 1;
    }

    if (app.got_subcommand("identities")) {
      int fails = 0;
      for (const auto& r : fjb::verify::check_identities(opts)) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                  << "  residual = " << num(r.residual)
                  << "  tol = " << num(r.tolerance) << '\n';
        if (!r.pass) ++fails;
      }
      return fails == 0 ? 0 : 1;
    }

    if (app.got_subcommand("limits")) {
      int fails = 0;
      for (const auto& t : fjb::verify::check_limits(opts)) {
        std::cout << t.name << ":";
        for (int i = 0; i < 3; ++i) {
          std::cout << "  " << num(t.scales[static_cast<std::size_t>(i)]) << " -> "
                    << num(t.deviations[static_cast<std::size_t>(i)]);
        }
        std::cout << (t.decreasing ? "  [decreasing]" : "  [NOT DECREASING]") << '\n';
        if (!t.decreasing) ++fails;
      }
      return fails == 0 ? 0 : 1;
    }

    if (figure->parsed()) {
      std::ostringstream body;
      if (fig_name == "fig1") {
        fjb::figures::write_fig1(body, fig_n, fig_points, opts);
      } else if (fig_name == "fig2") {
        fjb::figures::write_fig2(body, fig_lambda, fig_points, opts);
      } else {
        throw std::invalid_argument("unknown figure '" + fig_name + "'");
      }
      if (fig_out == "-") {
        std::cout << body.str();
      } else {
        std::ofstream out(fig_out);
        if (!out) throw std::runtime_error("cannot open " + fig_out);
        out << body.str();
      }
      return 0;
    }

    throw std::invalid_argument("no subcommand given");
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
