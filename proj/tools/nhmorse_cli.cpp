// nhmorse: figure grids, index tables, bound-state tables and the
// verification suite for the complex Morse problem.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <nhmorse/acceptance.hpp>
#include <nhmorse/grid.hpp>
#include <nhmorse/morse.hpp>
#include <nhmorse/residual.hpp>
#include <nhmorse/riccati.hpp>

namespace {

using namespace nhmorse;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  double A = 1.0;
  double B = 2.0;
  double a = 0.5;
  double K = 0.0;
  double Kprime = 2.0;
  Sector component = Sector::bosonic;
  std::optional<ParameterMap> map;
  double x_min = 0.0;
  double x_max = 3.0;
  int nx = 61;
  double K_min = 0.0;
  double K_max = 2.0;
  int nK = 41;
  grid::SolutionKind solution = grid::SolutionKind::m;
  std::string alpha = "1,0";
  std::optional<std::string> beta;
  BoundStateConvention convention = BoundStateConvention::paper;
  std::string out;
  std::string only;
  double tol = 1e-8;
};

ComplexScalar parse_complex(const std::string& text) {
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  double re = 0.0;
  double im = 0.0;
  if (!(is >> re)) throw CLI::ValidationError("complex", "expected \"re,im\", got " + text);
  if (is.peek() == ',') {
    is.get();
    if (!(is >> im)) throw CLI::ValidationError("complex", "expected \"re,im\", got " + text);
  }
  if (!is.eof() && is.peek() != std::char_traits<char>::eof()) {
    throw CLI::ValidationError("complex", "trailing characters in " + text);
  }
  return {re, im};
}

void add_physics(CLI::App* cmd, Options& o) {
  cmd->add_option("--A", o.A, "superpotential asymptote A");
  cmd->add_option("--B", o.B, "superpotential amplitude B (> 0)");
  cmd->add_option("--a", o.a, "range parameter a (> 0)");
  cmd->add_option("--K", o.K, "nonhermiticity parameter K");
  cmd->add_option("--Kprime", o.Kprime, "energy parameter K'");
}

void add_xrange(CLI::App* cmd, Options& o) {
  cmd->add_option("--x-min", o.x_min);
  cmd->add_option("--x-max", o.x_max);
  cmd->add_option("--nx", o.nx)->check(CLI::Range(2, 1000000));
}

const std::map<std::string, Sector> kSectors{{"fermionic", Sector::fermionic},
                                             {"bosonic", Sector::bosonic}};
const std::map<std::string, ParameterMap> kMaps{{"printed", ParameterMap::printed},
                                                {"derived", ParameterMap::derived}};
const std::map<std::string, grid::SolutionKind> kSolutions{
    {"m", grid::SolutionKind::m}, {"w", grid::SolutionKind::w}, {"mix", grid::SolutionKind::mix}};
const std::map<std::string, BoundStateConvention> kConventions{
    {"paper", BoundStateConvention::paper}, {"shifted", BoundStateConvention::shifted}};

morse::MorseParameters parameters(const Options& o) {
  morse::MorseParameters p;
  p.A = o.A;
  p.B = o.B;
  p.a = o.a;
  p.K = o.K;
  p.Kprime = o.Kprime;
  p.alpha1 = p.alpha2 = parse_complex(o.alpha);
  const ComplexScalar beta =
      o.beta ? parse_complex(*o.beta)
             : (o.solution == grid::SolutionKind::w ? ComplexScalar{1.0, 0.0} : ComplexScalar{});
  p.beta1 = p.beta2 = beta;
  p.validate();
  return p;
}

using grid::format_number;

int run_grid(const Options& o) {
  grid::GridSpec spec;
  spec.params = parameters(o);
  spec.component = o.component;
  spec.map = o.map.value_or(ParameterMap::printed);
  spec.solution = o.solution;
  spec.x_range = {o.x_min, o.x_max, o.nx};
  spec.K_range = {o.K_min, o.K_max, o.nK};
  spec.x_range.validate();
  spec.K_range.validate();

  grid::WaveGrid g;
  try {
    g = grid::evaluate_grid(spec);
  } catch (const grid::GridEvaluationError& e) {
    std::cerr << "nhmorse grid: " << e.what() << "\n";
    return kExitFailure;
  }
  if (o.out.empty()) {
    grid::write_csv(g, std::cout);
    std::cout.flush();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "nhmorse grid: cannot open " << o.out << "\n";
      return kExitFailure;
    }
    grid::write_csv(g, file);
  }
  return 0;
}

int run_params(const Options& o) {
  const morse::MorseParameters p = parameters(o);
  const auto printed = morse::indices(p, ParameterMap::printed);
  const auto derived = morse::indices(p, ParameterMap::derived);
  const auto put_c = [](const char* name, ComplexScalar v) {
    std::cout << name << ' ' << format_number(v.real()) << ' ' << format_number(v.imag()) << '\n';
  };
  const auto put_r = [](const char* name, double v) {
    std::cout << name << ' ' << format_number(v) << '\n';
  };
  put_c("kappa1", printed.kappa1);
  put_c("kappa2", printed.kappa2);
  put_c("mu_printed", printed.mu);
  put_c("mu_derived", derived.mu);
  put_r("B_bar", p.B_bar());
  put_r("C_bar1", p.C_bar1());
  put_r("C_bar2", p.C_bar2());
  put_r("y_x_min", riccati::morse_y(p.riccati(), o.x_min));
  put_r("y_x_max", riccati::morse_y(p.riccati(), o.x_max));
  return 0;
}

double bound_state_residual(const Options& o, int n, Sector sector, double kprime_squared) {
  morse::MorseParameters p;
  p.A = o.A;
  p.B = o.B;
  p.a = o.a;
  p.K = 0.0;
  const auto Q = [&](double x) {
    return morse::ode_coefficient_energy(p, kprime_squared, sector, x);
  };
  const auto w = [&](double x) {
    return morse::hermitic_bound_state(o.A, o.B, o.a, n, o.convention, x);
  };
  const auto w2 = [&](double x) {
    return morse::hermitic_bound_state_jet(o.A, o.B, o.a, n, o.convention, x).d2;
  };
  return verify::ode_residual(Q, w, w2, {o.x_min, o.x_max, o.nx}, o.tol).max_rel_residual;
}

int run_bound_states(const Options& o) {
  riccati::MorseRiccati{o.A, o.B, o.a}.validate();
  verify::Grid1D{o.x_min, o.x_max, o.nx}.validate();
  if (!(morse::bound_state_exponent(o.A, o.a, 0, o.convention) > 0.0)) {
    std::cout << "no bound states\n";
    return 0;
  }
  std::cout << "# convention=" << to_string(o.convention)
            << "; residuals of the K=0 equation with K'^2 = K'(n)^2 and with K'^2 = K'(n)^2 - A^2\n";
  std::cout << "n Kprime mu bosonic_Kp2 bosonic_Kp2_minus_A2 fermionic_Kp2 "
               "fermionic_Kp2_minus_A2\n";
  const auto mark = [&](double r) { return format_number(r) + (r <= o.tol ? "*" : ""); };
  for (int n = 0; morse::bound_state_exponent(o.A, o.a, n, o.convention) > 0.0; ++n) {
    const double kp = morse::bound_state_kprime(o.A, o.a, n, o.convention);
    const double mu = morse::bound_state_exponent(o.A, o.a, n, o.convention);
    const double printed_e = kp * kp;
    const double derived_e = kp * kp - o.A * o.A;
    std::cout << n << ' ' << format_number(kp) << ' ' << format_number(mu) << ' '
              << mark(bound_state_residual(o, n, Sector::bosonic, printed_e)) << ' '
              << mark(bound_state_residual(o, n, Sector::bosonic, derived_e)) << ' '
              << mark(bound_state_residual(o, n, Sector::fermionic, printed_e)) << ' '
              << mark(bound_state_residual(o, n, Sector::fermionic, derived_e)) << '\n';
  }
  return 0;
}

int run_verify(const Options& o) {
  std::vector<acceptance::CheckResult> results;
  if (!o.only.empty()) {
    results.push_back(acceptance::run_check(o.only));
  } else {
    results = acceptance::run_all();
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << acceptance::format_line(r) << '\n';
    all = all && r.pass;
  }
  return all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-extended Morse problem: grids, indices, bound states, verification"};
  app.require_subcommand(1);
  Options o;

  auto* grid_cmd = app.add_subcommand("grid", "emit a wavefunction grid as CSV");
  add_physics(grid_cmd, o);
  add_xrange(grid_cmd, o);
  grid_cmd->add_option("--component", o.component)->transform(CLI::CheckedTransformer(kSectors));
  grid_cmd->add_option("--param-map", o.map)->transform(CLI::CheckedTransformer(kMaps));
  grid_cmd->add_option("--K-min", o.K_min);
  grid_cmd->add_option("--K-max", o.K_max);
  grid_cmd->add_option("--nK", o.nK)->check(CLI::Range(2, 1000000));
  grid_cmd->add_option("--solution", o.solution)->transform(CLI::CheckedTransformer(kSolutions));
  grid_cmd->add_option("--alpha", o.alpha, "M amplitude as \"re,im\"");
  grid_cmd->add_option("--beta", o.beta, "W amplitude as \"re,im\" (default 1 for --solution w)");
  grid_cmd->add_option("--out", o.out, "output path (default standard output)");

  auto* params_cmd = app.add_subcommand("params", "print Whittaker indices and coefficients");
  add_physics(params_cmd, o);
  params_cmd->add_option("--x-min", o.x_min);
  params_cmd->add_option("--x-max", o.x_max);

  auto* bound_cmd = app.add_subcommand("bound-states", "tabulate hermitic bound states");
  bound_cmd->add_option("--A", o.A);
  bound_cmd->add_option("--B", o.B);
  bound_cmd->add_option("--a", o.a);
  add_xrange(bound_cmd, o);
  bound_cmd->add_option("--convention", o.convention)
      ->transform(CLI::CheckedTransformer(kConventions));
  bound_cmd->add_option("--tol", o.tol, "residual marked with * at or below this value");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--only", o.only, "run a single named check");

  try {
    app.parse(argc, argv);
    if (verify_cmd->parsed() && !o.only.empty() && !acceptance::is_check(o.only)) {
      std::cerr << "nhmorse verify: unknown check '" << o.only << "'; known:";
      for (const auto& n : acceptance::check_names()) std::cerr << ' ' << n;
      std::cerr << '\n';
      return kExitUsage;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (grid_cmd->parsed()) return run_grid(o);
    if (params_cmd->parsed()) return run_params(o);
    if (bound_cmd->parsed()) return run_bound_states(o);
    if (verify_cmd->parsed()) return run_verify(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "nhmorse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "nhmorse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "nhmorse: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
