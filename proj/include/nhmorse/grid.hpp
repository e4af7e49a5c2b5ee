#pragma once

// Sampling of Morse wavefunctions over an (x, K) rectangle.
//
// evaluate_grid runs rows (fixed K) across OpenMP threads;
// evaluate_grid_serial is the single-threaded reference it is tested
// against. Every cell is an independent pure evaluation, so both produce
// bit-identical values.

#include <iosfwd>
#include <string>
#include <vector>

#include <nhmorse/morse.hpp>
#include <nhmorse/residual.hpp>
#include <nhmorse/types.hpp>

namespace nhmorse::grid {

enum class SolutionKind {
  m,    // alpha * M, Laguerre form
  w,    // beta * W
  mix,  // alpha * M + beta * W
};

const char* to_string(SolutionKind kind);

struct GridSpec {
  morse::MorseParameters params;  // K is overwritten per row
  Sector component = Sector::bosonic;
  ParameterMap map = ParameterMap::printed;
  SolutionKind solution = SolutionKind::m;
  verify::Grid1D x_range{0.0, 3.0, 61};
  verify::Grid1D K_range{0.0, 2.0, 41};
};

struct WaveGrid {
  std::vector<double> x_values;
  std::vector<double> K_values;
  std::vector<double> y_values;  // y(x), one per column
  Sector component = Sector::bosonic;
  std::vector<ComplexScalar> values;  // row-major, row = K, column = x

  const ComplexScalar& at(std::size_t k_row, std::size_t x_col) const {
    return values[k_row * x_values.size() + x_col];
  }
};

/// The single cell evaluation shared by both drivers.
ComplexScalar evaluate_point(const GridSpec& spec, double K, double x);

/// Thrown by the drivers; names the first failing (K, x) in row-major order.
class GridEvaluationError : public Error {
 public:
  GridEvaluationError(const std::string& what, double K, double x)
      : Error(what), K_(K), x_(x) {}
  double K() const { return K_; }
  double x() const { return x_; }

 private:
  double K_;
  double x_;
};

WaveGrid evaluate_grid_serial(const GridSpec& spec);
WaveGrid evaluate_grid(const GridSpec& spec);

/// Round-trip formatting: at most 17 significant digits, '.' decimal
/// separator regardless of locale. Zero of either sign prints as "0".
std::string format_number(double v);

/// Header `x,K,y,re,im`, then one row per (K, x), K outer ascending.
void write_csv(const WaveGrid& grid, std::ostream& out);
std::string to_csv(const WaveGrid& grid);

}  // namespace nhmorse::grid
