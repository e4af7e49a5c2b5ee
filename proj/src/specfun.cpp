#include <nhmorse/specfun.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace nhmorse::specfun {

namespace {

using std::numbers::pi;

// Lanczos approximation, g = 7, nine coefficients (the widely published set
// from P. Godfrey). Relative error of Gamma below ~2e-15 for Re z >= 1/2.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

constexpr double kPoleDistance = 1e-12;
constexpr double kParameterPoleDistance = 1e-6;
constexpr double kSeriesStopRatio = 1e-17;
constexpr int kSeriesStopRun = 3;
constexpr int kMaxSeriesTerms = 10000;

std::string describe(ComplexScalar z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

// Distance from z to the nearest nonpositive integer, and that integer.
double distance_to_nonpositive_integer(ComplexScalar z, long& nearest) {
  const double r = std::round(z.real());
  nearest = r > 0.0 ? 0 : static_cast<long>(r);
  return std::abs(z - static_cast<double>(nearest));
}

ComplexScalar lanczos_log_gamma(ComplexScalar z) {
  z -= 1.0;
  ComplexScalar x = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    x += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const ComplexScalar t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// Reflection in the closed upper half plane. log sin(pi z) is expanded as
//   log(1/2) + i pi/2 - i pi z + log(1 - e^{2 pi i z}),
// which is analytic for Im z >= 0 and matches the principal log-gamma
// branch (cut on the negative real axis, real axis taken from above).
ComplexScalar reflected_log_gamma_upper(ComplexScalar z) {
  const ComplexScalar q = std::exp(2.0 * pi * kI * z);
  const ComplexScalar log_sin =
      std::log(0.5) + kI * (0.5 * pi) - kI * pi * z + std::log(1.0 - q);
  return std::log(pi) - log_sin - lanczos_log_gamma(1.0 - z);
}

using ComplexLD = std::complex<long double>;

// Plain forward series; caller has handled admissibility and the sign of z.
// A nonnegative terminate_at keeps terms n = 0..terminate_at only.
ComplexScalar kummer_series(ComplexScalar a, ComplexScalar b, double z, long terminate_at) {
  const ComplexLD a_ld(a.real(), a.imag());
  const ComplexLD b_ld(b.real(), b.imag());
  const long double z_ld = z;

  ComplexLD term = 1.0L;
  ComplexLD sum = 1.0L;
  int small_run = 0;
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    if (terminate_at >= 0 && n >= terminate_at) {
      return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    const long double nn = static_cast<long double>(n);
    term *= (a_ld + nn) / (b_ld + nn) * (z_ld / (nn + 1.0L));
    sum += term;
    if (std::abs(term) <= kSeriesStopRatio * std::abs(sum)) {
      if (++small_run >= kSeriesStopRun) {
        ComplexScalar out(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
        if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
          throw NonConvergence("kummer_m: series overflow at a=" + describe(a) +
                               " b=" + describe(b));
        }
        return out;
      }
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("kummer_m: term cap reached at a=" + describe(a) + " b=" + describe(b) +
                       " z=" + std::to_string(z));
}

// e^{-y/2} y^{s} with its first two derivatives divided by itself.
struct Prefactor {
  ComplexScalar value;
  ComplexScalar log_d1;  // P'/P
  ComplexScalar log_d2;  // P''/P
};

Prefactor whittaker_prefactor(ComplexScalar mu, double y) {
  if (!(y > 0.0)) throw DomainError("whittaker: argument must be positive");
  const ComplexScalar s = mu + 0.5;
  const ComplexScalar value = std::exp(-0.5 * y + s * std::log(y));
  const ComplexScalar r = s / y - 0.5;
  return {value, r, r * r - s / (y * y)};
}

// U and dU/dz at one point.
struct UState {
  ComplexScalar u;
  ComplexScalar du;
};

// Connection-formula cancellation above this factor switches tricomi_u to
// the asymptotic series plus inward Taylor stepping.
constexpr double kMaxCancellation = 1e4;
constexpr double kTaylorStep = 2.0;
constexpr int kMaxAsymptoticTerms = 2000;

// Poincare expansion U ~ z^{-a} sum (a)_n (a-b+1)_n / n! (-z)^{-n}, together
// with U' = -a U(a+1, b+1, z). Fails (returns false) if the terms turn upward
// before reaching the stopping ratio.
bool tricomi_asymptotic(ComplexScalar a, ComplexScalar b, double z, UState& out) {
  const ComplexScalar c = a - b + 1.0;
  ComplexScalar t0 = 1.0, s0 = 1.0;
  ComplexScalar t1 = 1.0, s1 = 1.0;
  const double hump = std::abs(a) + std::abs(c) + 2.0;
  int small_run = 0;
  for (int n = 0; n < kMaxAsymptoticTerms; ++n) {
    const double prev = std::abs(t0) + std::abs(t1);
    t0 *= (a + double(n)) * (c + double(n)) / (-(n + 1.0) * z);
    t1 *= (a + double(n + 1)) * (c + double(n)) / (-(n + 1.0) * z);
    s0 += t0;
    s1 += t1;
    const double cur = std::abs(t0) + std::abs(t1);
    if (std::abs(t0) <= kSeriesStopRatio * std::abs(s0) &&
        std::abs(t1) <= kSeriesStopRatio * std::abs(s1)) {
      if (++small_run >= kSeriesStopRun) {
        out.u = std::exp(-a * std::log(z)) * s0;
        out.du = -a * std::exp(-(a + 1.0) * std::log(z)) * s1;
        return true;
      }
    } else {
      small_run = 0;
      if (n > hump && cur >= prev) return false;
    }
  }
  return false;
}

// One Taylor step of z U'' + (b - z) U' - a U = 0 from z0 to z0 + t.
UState kummer_ode_step(ComplexScalar a, ComplexScalar b, double z0, UState s, double t) {
  ComplexScalar c_prev = s.u, c_cur = s.du;  // c_n, c_{n+1}
  ComplexScalar value = c_prev + c_cur * t;
  ComplexScalar deriv = c_cur;
  double power = t;  // t^{n+1}
  int small_run = 0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const ComplexScalar c_next =
        ((double(n) + a) * c_prev - (n + 1.0) * (double(n) + b - z0) * c_cur) /
        (z0 * (n + 1.0) * (n + 2.0));
    deriv += (n + 2.0) * c_next * power;
    power *= t;
    const ComplexScalar term = c_next * power;
    value += term;
    c_prev = c_cur;
    c_cur = c_next;
    if (std::abs(term) <= kSeriesStopRatio * std::abs(value)) {
      if (++small_run >= kSeriesStopRun) return {value, deriv};
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("tricomi_u: Taylor step did not converge");
}

ComplexScalar tricomi_by_continuation(ComplexScalar a, ComplexScalar b, double z) {
  double start = std::max(z, 40.0) + 2.0 * (std::abs(a) + std::abs(a - b + 1.0));
  UState s;
  while (!tricomi_asymptotic(a, b, start, s)) {
    start *= 2.0;
    if (start > 1e6) {
      throw NonConvergence("tricomi_u: asymptotic series unusable at a=" + describe(a) +
                           " b=" + describe(b));
    }
  }
  double x = start;
  while (x > z) {
    const double step = std::min({kTaylorStep, 0.25 * x, x - z});
    s = kummer_ode_step(a, b, x, s, -step);
    x = (x - step <= z) ? z : x - step;
  }
  return s.u;
}

}  // namespace

bool is_nonpositive_integer(ComplexScalar z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

ComplexScalar log_gamma(ComplexScalar z) {
  long nearest = 0;
  if (distance_to_nonpositive_integer(z, nearest) < kPoleDistance) {
    throw PoleError("log_gamma: pole at " + describe(z));
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  if (z.imag() >= 0.0) return reflected_log_gamma_upper(z);
  return std::conj(reflected_log_gamma_upper(std::conj(z)));
}

ComplexScalar reciprocal_gamma(ComplexScalar z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

ComplexScalar kummer_m(ComplexScalar a, ComplexScalar b, double z) {
  long terminate_at = -1;
  if (is_nonpositive_integer(a)) terminate_at = static_cast<long>(-a.real());

  long nearest = 0;
  if (distance_to_nonpositive_integer(b, nearest) < kParameterPoleDistance) {
    // Terminating series never divides by (b + n) for n >= -a.
    if (terminate_at < 0 || terminate_at > -nearest) {
      throw ParameterPole("kummer_m: b=" + describe(b) + " at a nonpositive integer");
    }
  }
  if (z == 0.0) return 1.0;
  if (terminate_at >= 0 || z > 0.0) return kummer_series(a, b, z, terminate_at);

  const ComplexScalar c = b - a;
  long c_terminate = -1;
  if (is_nonpositive_integer(c)) c_terminate = static_cast<long>(-c.real());
  return std::exp(z) * kummer_series(c, b, -z, c_terminate);
}

ComplexScalar tricomi_u(ComplexScalar a, ComplexScalar b, double z) {
  if (!(z > 0.0)) throw DomainError("tricomi_u: z must be positive");
  const double nearest = std::round(b.real());
  if (std::abs(b - nearest) < kParameterPoleDistance) {
    throw IntegerB("tricomi_u: b=" + describe(b) + " too close to an integer");
  }
  ComplexScalar first = 0.0, second = 0.0;
  const ComplexScalar a1 = a - b + 1.0;
  try {
    if (!is_nonpositive_integer(a1)) {
      first = std::exp(log_gamma(1.0 - b) - log_gamma(a1)) * kummer_m(a, b, z);
    }
    if (!is_nonpositive_integer(a)) {
      const ComplexScalar log_coef = log_gamma(b - 1.0) - log_gamma(a) + (1.0 - b) * std::log(z);
      second = std::exp(log_coef) * kummer_m(a1, 2.0 - b, z);
    }
  } catch (const NonConvergence&) {
    return tricomi_by_continuation(a, b, z);
  }
  const ComplexScalar result = first + second;
  const double scale = std::max(std::abs(first), std::abs(second));
  if (!std::isfinite(scale) || scale > kMaxCancellation * std::abs(result)) {
    return tricomi_by_continuation(a, b, z);
  }
  return result;
}

ComplexScalar whittaker_m(const WhittakerIndices& idx, double y) {
  const Prefactor p = whittaker_prefactor(idx.mu, y);
  return p.value * kummer_m(idx.mu - idx.kappa + 0.5, 2.0 * idx.mu + 1.0, y);
}

ComplexScalar whittaker_w(const WhittakerIndices& idx, double y) {
  const Prefactor p = whittaker_prefactor(idx.mu, y);
  return p.value * tricomi_u(idx.mu - idx.kappa + 0.5, 2.0 * idx.mu + 1.0, y);
}

Jet whittaker_m_jet(const WhittakerIndices& idx, double y) {
  const Prefactor p = whittaker_prefactor(idx.mu, y);
  const ComplexScalar a = idx.mu - idx.kappa + 0.5;
  const ComplexScalar b = 2.0 * idx.mu + 1.0;
  const ComplexScalar f0 = kummer_m(a, b, y);
  const ComplexScalar f1 = a / b * kummer_m(a + 1.0, b + 1.0, y);
  const ComplexScalar f2 = a * (a + 1.0) / (b * (b + 1.0)) * kummer_m(a + 2.0, b + 2.0, y);
  return {p.value * f0, p.value * (p.log_d1 * f0 + f1),
          p.value * (p.log_d2 * f0 + 2.0 * p.log_d1 * f1 + f2)};
}

Jet whittaker_w_jet(const WhittakerIndices& idx, double y) {
  const Prefactor p = whittaker_prefactor(idx.mu, y);
  const ComplexScalar a = idx.mu - idx.kappa + 0.5;
  const ComplexScalar b = 2.0 * idx.mu + 1.0;
  const ComplexScalar u0 = tricomi_u(a, b, y);
  const ComplexScalar u1 = -a * tricomi_u(a + 1.0, b + 1.0, y);
  const ComplexScalar u2 = a * (a + 1.0) * tricomi_u(a + 2.0, b + 2.0, y);
  return {p.value * u0, p.value * (p.log_d1 * u0 + u1),
          p.value * (p.log_d2 * u0 + 2.0 * p.log_d1 * u1 + u2)};
}

ComplexScalar whittaker_m_dy(const WhittakerIndices& idx, double y) {
  const Prefactor p = whittaker_prefactor(idx.mu, y);
  const ComplexScalar a = idx.mu - idx.kappa + 0.5;
  const ComplexScalar b = 2.0 * idx.mu + 1.0;
  return p.value * (p.log_d1 * kummer_m(a, b, y) + a / b * kummer_m(a + 1.0, b + 1.0, y));
}

ComplexScalar whittaker_w_dy(const WhittakerIndices& idx, double y) {
  const Prefactor p = whittaker_prefactor(idx.mu, y);
  const ComplexScalar a = idx.mu - idx.kappa + 0.5;
  const ComplexScalar b = 2.0 * idx.mu + 1.0;
  return p.value * (p.log_d1 * tricomi_u(a, b, y) - a * tricomi_u(a + 1.0, b + 1.0, y));
}

double laguerre_poly(int n, double p, double y) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + p - y;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + p - y) * cur - (k + p) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

ComplexScalar kummer_core(ComplexScalar nu, ComplexScalar alpha, double y) {
  return kummer_m(-nu, alpha + 1.0, y);
}

ComplexScalar laguerre_function(ComplexScalar nu, ComplexScalar alpha, double y) {
  const ComplexScalar log_norm =
      log_gamma(nu + alpha + 1.0) - log_gamma(nu + 1.0) - log_gamma(alpha + 1.0);
  return std::exp(log_norm) * kummer_core(nu, alpha, y);
}

}  // namespace nhmorse::specfun

namespace nhmorse {

const char* to_string(Sector s) { return s == Sector::fermionic ? "fermionic" : "bosonic"; }

const char* to_string(ParameterMap m) { return m == ParameterMap::printed ? "printed" : "derived"; }

const char* to_string(BoundStateConvention c) {
  return c == BoundStateConvention::paper ? "paper" : "shifted";
}

}  // namespace nhmorse
