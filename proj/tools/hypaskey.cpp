// hypaskey: evaluate the integrals, run verification suites and convergence studies.
#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <cctype>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypaskey/errors.hpp"
#include "hypaskey/hyperbolic_gamma.hpp"
#include "hypaskey/painleve.hpp"
#include "hypaskey/qaskey.hpp"
#include "hypaskey/semiclassical.hpp"
#include "hypaskey/suites.hpp"

using namespace hypaskey;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw UsageError("cannot parse complex number '" + whole + "' (expected a+bi)");
  return v;
}

// Accepts "1.5", "-0.2i", "0.1+0.25i", "1e-3-2e-2i", "i".
Complex parse_complex(std::string text) {
  const std::string whole = text;
  std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (text.empty() || (text.back() != 'i' && text.back() != 'j')) return {parse_real(text, whole), 0.0};
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const double re = split == std::string::npos ? 0.0 : parse_real(text.substr(0, split), whole);
  const std::string im = split == std::string::npos ? text : text.substr(split);
  if (im.empty() || im == "+") return {re, 1.0};
  if (im == "-") return {re, -1.0};
  return {re, parse_real(im, whole)};
}

std::string show(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string show(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

struct Options {
  std::vector<double> b;
  std::optional<std::string> zeta, omega, z;
  std::optional<double> sigma, mu, height, tol;
  std::string target;
  std::string suite;
  std::string out = ".";
  bool serial = false;
};

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

double single_b(const Options& o) {
  if (o.b.size() != 1) throw UsageError("eval needs exactly one --b value");
  return o.b.front();
}

EvalConfig config_from(const Options& o) {
  EvalConfig cfg;
  cfg.tol = o.tol.value_or(defaults().eval_tol);
  cfg.sb_tol = defaults().sb_tol;
  cfg.delta = defaults().contour_delta;
  cfg.max_panels = defaults().max_panels;
  cfg.execution = o.serial ? quad::Execution::serial : quad::Execution::parallel;
  return cfg;
}

void print_scaled(const std::string& what, const ScaledValue& v, const EvalConfig& cfg) {
  std::cout << "target = " << what << '\n'
            << "log_scale = " << show(v.log_scale) << '\n'
            << "mantissa = " << show(v.mantissa) << '\n';
  const Complex value = v.value();
  if (std::isfinite(value.real()) && std::isfinite(value.imag())) std::cout << "value = " << show(value) << '\n';
  std::cout << "contour_height = " << show(v.contour.height.value_or(NAN)) << '\n'
            << "window = [" << show(v.contour.t_min.value_or(NAN)) << ", " << show(v.contour.t_max.value_or(NAN))
            << "]\n"
            << "nodes = " << v.contour.nodes << '\n'
            << "tol = " << show(cfg.tol) << '\n'
            << "sb_tol = " << show(cfg.sb_tol) << '\n'
            << "error_estimate = " << show(v.error_estimate) << '\n'
            << "evaluations = " << v.evaluations << '\n'
            << "defaults_version = " << defaults().version << '\n';
}

int cmd_eval(const Options& o) {
  const EvalConfig cfg = config_from(o);
  ContourSpec contour;
  contour.height = o.height;
  contour.tail_tol = defaults().tail_tol;
  const std::string& t = o.target;
  if (t == "M") {
    const double b = single_b(o);
    const Complex zeta = parse_complex(need(o.zeta, "--zeta"));
    const Complex omega = parse_complex(need(o.omega, "--omega"));
    const bool regime = zeta.imag() == 0.0 && omega.imag() > 0.0 && omega.imag() < 0.5;
    const ScaledValue v = regime ? eval_M(b, zeta.real(), omega, contour, cfg)
                                 : eval_M_general(b, zeta, omega, contour, cfg);
    print_scaled(regime ? "M(b, zeta/b, omega/b), saddle normalization" : "M(b, zeta/b, omega/b), general contour", v,
                 cfg);
  } else if (t == "Q") {
    const double b = single_b(o);
    const ScaledValue v = eval_Q(b, need(o.sigma, "--sigma"), need(o.mu, "--mu"), contour, cfg);
    print_scaled("Q(b, sigma/b, mu/b)", v, cfg);
  } else if (t == "sb") {
    const HypGammaParams p(single_b(o));
    const Complex z = parse_complex(need(o.z, "--z"));
    const double tol = o.tol.value_or(defaults().sb_tol);
    const Complex l = ln_sb(p, z, tol);
    std::cout << "target = s_b(z)\n"
              << "ln_value = " << show(l) << '\n'
              << "value = " << show(std::exp(l)) << '\n'
              << "strip_half_width = " << show(p.strip_half_width()) << '\n'
              << "tol = " << show(tol) << '\n'
              << "defaults_version = " << defaults().version << '\n';
  } else if (t == "fM") {
    const Complex zeta = parse_complex(need(o.zeta, "--zeta"));
    if (zeta.imag() != 0.0) throw DomainError("fM needs real zeta");
    std::cout << "target = f_M(zeta, omega), closed form\nvalue = "
              << show(f_M_closed(zeta.real(), parse_complex(need(o.omega, "--omega")))) << '\n';
  } else if (t == "fQ") {
    std::cout << "target = f_Q(sigma, mu), closed form\nvalue = "
              << show(f_Q_closed(need(o.sigma, "--sigma"), need(o.mu, "--mu"))) << '\n';
  } else if (t == "W") {
    std::cout << "target = W(i sigma, -mu - i/2), rotated closed form\nvalue = "
              << show(W_rotated(need(o.sigma, "--sigma"), need(o.mu, "--mu"))) << '\n';
  } else if (t == "Y") {
    const PIPoint p(parse_complex(need(o.zeta, "--zeta")), parse_complex(need(o.omega, "--omega")));
    std::cout << "target = Y(zeta, omega)\nvalue = " << show(Y(p)) << '\n';
  } else {
    throw UsageError("unknown target '" + t + "'");
  }
  return 0;
}

std::filesystem::path out_dir(const Options& o) {
  std::filesystem::path dir(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& w) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  w(f);
  if (!f) throw std::runtime_error("write failed for " + path.string());
  std::cout << "wrote " << path.string() << '\n';
}

int cmd_verify(const Options& o) {
  SuiteOptions so;
  if (!o.b.empty()) so.b = o.b;
  so.tol = o.tol;
  so.execution = o.serial ? quad::Execution::serial : quad::Execution::parallel;
  const std::string suite = o.suite.empty() ? "all" : o.suite;
  const auto reports = run_suite(suite, so);
  const auto dir = out_dir(o);
  write_file(dir / ("verify_" + suite + ".jsonl"), [&](std::ostream& f) { write_jsonl(f, reports); });
  write_file(dir / ("verify_" + suite + ".csv"), [&](std::ostream& f) { write_csv(f, reports); });
  write_file(dir / ("verify_" + suite + ".runtime.jsonl"), [&](std::ostream& f) { write_runtime_sidecar(f, reports); });
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed ? 0 : 1;
  std::cout << "suite " << suite << ": " << reports.size() - failed << "/" << reports.size() << " checks pass\n";
  return failed == 0 ? 0 : kExitFail;
}

int cmd_converge(const Options& o) {
  const std::vector<double> bs = o.b.empty() ? defaults().converge_b : o.b;
  for (double b : bs) {
    if (b < defaults().min_feasible_b) {
      throw DomainError("b = " + show(b) + " is below the feasible range b >= " + show(defaults().min_feasible_b));
    }
  }
  EvalConfig cfg = config_from(o);
  ConvergenceStudy s;
  if (o.target == "M") {
    const Complex zeta = parse_complex(need(o.zeta, "--zeta"));
    if (zeta.imag() != 0.0) throw DomainError("converge M needs real zeta");
    s = converge_M(zeta.real(), parse_complex(need(o.omega, "--omega")), bs, cfg);
  } else if (o.target == "Q") {
    s = converge_Q(need(o.sigma, "--sigma"), need(o.mu, "--mu"), bs, cfg);
  } else {
    throw UsageError("converge target must be M or Q");
  }
  const auto dir = out_dir(o);
  write_file(dir / ("converge_" + o.target + ".csv"), [&](std::ostream& f) { write_csv(f, s); });
  write_file(dir / ("converge_" + o.target + ".json"), [&](std::ostream& f) { write_json(f, s); });
  std::cout << "fitted_order = " << show(s.fitted_order) << '\n';
  if (!s.warning.empty()) std::cerr << "warning: " << s.warning << '\n';
  bool row_failed = false;
  for (const auto& e : s.row_errors) row_failed = row_failed || !e.empty();
  return row_failed ? kExitFail : 0;
}

void apply_thread_env() {
  const char* env = std::getenv("HYPASKEY_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw UsageError(std::string("HYPASKEY_THREADS must be a positive integer, got '") + env + "'");
  omp_set_num_threads(static_cast<int>(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerics for the q-Askey integrals M and Q and their semiclassical limits"};
  app.set_config("--config", "", "flat key=value file; command-line flags override it");
  app.require_subcommand(0, 1);
  bool show_defaults = false;
  app.add_flag("--show-defaults", show_defaults, "print the versioned defaults table and exit");

  Options o;
  app.add_option("--b", o.b, "b value(s); lists are comma separated")->delimiter(',');
  app.add_option("--zeta", o.zeta, "zeta, as a+bi");
  app.add_option("--omega", o.omega, "omega, as a+bi");
  app.add_option("--z", o.z, "argument of s_b, as a+bi");
  app.add_option("--sigma", o.sigma, "sigma (real)");
  app.add_option("--mu", o.mu, "mu (real)");
  app.add_option("--contour-height", o.height, "contour height in scaled variables");
  app.add_option("--tol", o.tol, "quadrature tolerance");
  app.add_option("--out", o.out, "output directory")->capture_default_str();
  app.add_option("--target", o.target, "M, Q, sb, fM, fQ, W or Y");
  app.add_option("--suite", o.suite, "saddles, odes, identities, difference, expansion or all");
  app.add_flag("--serial", o.serial, "use the serial reference kernels");

  auto* eval = app.add_subcommand("eval", "evaluate one quantity")->fallthrough();
  auto* verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
  auto* converge = app.add_subcommand("converge", "numeric over asymptotic ratios for descending b")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    apply_thread_env();
    if (show_defaults) {
      print_defaults(std::cout);
      return 0;
    }
    if (eval->parsed()) return cmd_eval(o);
    if (verify->parsed()) return cmd_verify(o);
    if (converge->parsed()) return cmd_converge(o);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
