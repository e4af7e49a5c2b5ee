#include <nhmorse/grid.hpp>

#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>


namespace nhmorse::grid {

const char* to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::m:
      return "m";
    case SolutionKind::w:
      return "w";
    case SolutionKind::mix:
      return "mix";
  }
  return "?";
}

ComplexScalar evaluate_point(const GridSpec& spec, double K, double x) {
  morse::MorseParameters p = spec.params;
  p.K = K;
  switch (spec.solution) {
    case SolutionKind::m:
      return morse::wavefunction_laguerre_form(p, spec.component, spec.map, x);
    case SolutionKind::w:
      p.alpha1 = 0.0;
      p.alpha2 = 0.0;
      break;
    case SolutionKind::mix:
      break;
  }
  return morse::wavefunction(p, spec.component, spec.map, x);
}

namespace {

WaveGrid prepare(const GridSpec& spec) {
  spec.params.validate();
  WaveGrid g;
  g.x_values = spec.x_range.points();
  g.K_values = spec.K_range.points();
  g.component = spec.component;
  g.y_values.reserve(g.x_values.size());
  for (double x : g.x_values) g.y_values.push_back(riccati::morse_y(spec.params.riccati(), x));
  g.values.assign(g.x_values.size() * g.K_values.size(), ComplexScalar{});
  return g;
}

[[noreturn]] void raise_at(const WaveGrid& g, std::size_t flat, const std::string& message) {
  const std::size_t nx = g.x_values.size();
  const double K = g.K_values[flat / nx];
  const double x = g.x_values[flat % nx];
  throw GridEvaluationError("evaluation failed at K=" + format_number(K) +
                                " x=" + format_number(x) + ": " + message,
                            K, x);
}

}  // namespace

WaveGrid evaluate_grid_serial(const GridSpec& spec) {
  WaveGrid g = prepare(spec);
  const std::size_t nx = g.x_values.size();
  for (std::size_t flat = 0; flat < g.values.size(); ++flat) {
    try {
      g.values[flat] = evaluate_point(spec, g.K_values[flat / nx], g.x_values[flat % nx]);
    } catch (const std::exception& e) {
      raise_at(g, flat, e.what());
    }
  }
  return g;
}

WaveGrid evaluate_grid(const GridSpec& spec) {
  WaveGrid g = prepare(spec);
  const std::size_t nx = g.x_values.size();
  const long n_rows = static_cast<long>(g.K_values.size());

  // Exceptions cannot leave a parallel region; keep the first failure in
  // row-major order so the report matches the serial driver.
  std::size_t first_failure = std::numeric_limits<std::size_t>::max();
  std::string failure_message;

#pragma omp parallel for schedule(dynamic, 1)
  for (long row = 0; row < n_rows; ++row) {
    const double K = g.K_values[static_cast<std::size_t>(row)];
    for (std::size_t col = 0; col < nx; ++col) {
      const std::size_t flat = static_cast<std::size_t>(row) * nx + col;
      try {
        g.values[flat] = evaluate_point(spec, K, g.x_values[col]);
      } catch (const std::exception& e) {
#pragma omp critical(nhmorse_grid_failure)
        {
          if (flat < first_failure) {
            first_failure = flat;
            failure_message = e.what();
          }
        }
        break;
      }
    }
  }
  if (first_failure != std::numeric_limits<std::size_t>::max()) {
    raise_at(g, first_failure, failure_message);
  }
  return g;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const WaveGrid& grid, std::ostream& out) {
  out << "x,K,y,re,im\n";
  const std::size_t nx = grid.x_values.size();
  std::string line;
  for (std::size_t k = 0; k < grid.K_values.size(); ++k) {
    const std::string K = format_number(grid.K_values[k]);
    for (std::size_t i = 0; i < nx; ++i) {
      const ComplexScalar& v = grid.values[k * nx + i];
      line.clear();
      line += format_number(grid.x_values[i]);
      line += ',';
      line += K;
      line += ',';
      line += format_number(grid.y_values[i]);
      line += ',';
      line += format_number(v.real());
      line += ',';
      line += format_number(v.imag());
      line += '\n';
      out << line;
    }
  }
}

std::string to_csv(const WaveGrid& grid) {
  std::ostringstream os;
  write_csv(grid, os);
  return os.str();
}

}  // namespace nhmorse::grid
