#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include <nhmorse/residual.hpp>
#include <nhmorse/specfun.hpp>
#include <nhmorse/verify.hpp>

#include "test_support.hpp"

using namespace nhmorse;
using namespace nhmorse::specfun;
using nhmorse::test::bit_equal;
using nhmorse::test::log_distance;
using nhmorse::test::rel_err;
using C = ComplexScalar;

namespace {

// L_n^alpha(x) = sum_k (-1)^k C(n+alpha, n-k) x^k / k!, binomial as a
// product; independent of the three-term recurrence.
double laguerre_explicit(int n, double alpha, double x, double* magnitude = nullptr) {
  double sum = 0.0;
  double abs_sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    double binom = 1.0;
    for (int j = 1; j <= n - k; ++j) binom *= (alpha + k + j) / j;
    double power = 1.0;
    for (int j = 1; j <= k; ++j) power *= x / j;
    sum += (k % 2 == 0 ? 1.0 : -1.0) * binom * power;
    abs_sum += std::abs(binom * power);
  }
  if (magnitude) *magnitude = abs_sum;
  return sum;
}

}  // namespace

TEST_CASE("log_gamma: elementary values") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(0.5) - 0.57236494292470008707) < 1e-14);
  CHECK(std::abs(log_gamma(4.0) - std::log(6.0)) < 1e-14);
  CHECK(std::abs(log_gamma(0.1) - 2.252712651734205902) < 1e-14);
}

TEST_CASE("log_gamma: principal branch against high-precision values") {
  struct Case {
    C z, want;
  };
  // mpmath loggamma, 30 digits
  const std::vector<Case> cases = {
      {{0.3, 5.0}, {-7.2566488183218252769, 2.7373708904538277669}},
      {{-2.5, 3.0}, {-7.4782360420503149704, -5.7261042719103868422}},
      {{1.5, -2.2}, {-1.7231749667280957847, -0.90111211169187187216}},
      {{10.0, 0.5}, {12.788687722901191677, 1.1261063095901985488}},
      {{-0.7, -1.3}, {-1.5605604806554743991, 3.320512649359660799}},
      {{0.5, 0.5}, {0.11238724280962311252, -0.75072920212205074465}},
      {{25.0, -30.0}, {39.427996866863048254, -101.40802825393379099}},
      {{-5.5, 0.25}, {-4.7937546567831260543, -18.401256282223739086}},
      {{-0.5, 0.0}, {1.26551212348465, -3.14159265358979}},
      {{-1.5, 0.0}, {0.860047015376481, -6.28318530717959}},
  };
  for (const auto& c : cases) {
    INFO("z = " << c.z);
    CHECK(std::abs(log_gamma(c.z) - c.want) < 1e-12 * std::max(1.0, std::abs(c.want)));
  }
}

TEST_CASE("log_gamma: poles") {
  CHECK_THROWS_AS(log_gamma(0.0), PoleError);
  CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
  CHECK_THROWS_AS(log_gamma(C(-2.0, 1e-13)), PoleError);
  CHECK_NOTHROW(log_gamma(C(-2.0, 1e-9)));
  CHECK(reciprocal_gamma(-4.0) == C(0.0));
  CHECK(rel_err(reciprocal_gamma(5.0), C(1.0 / 24.0)) < 1e-14);
}

TEST_CASE("log_gamma: recurrence and reflection") {
  const std::vector<C> points = {{0.3, 0.7},  {-1.6, 2.1}, {3.2, -4.4},
                                 {-7.3, -0.4}, {0.9, 12.0}, {-0.25, 0.0}};
  for (C z : points) {
    INFO("z = " << z);
    CHECK(log_distance(log_gamma(z + 1.0) - log_gamma(z), std::log(z)) < 1e-12);
    const C lhs = log_gamma(z) + log_gamma(1.0 - z);
    const C rhs = std::log(std::numbers::pi / std::sin(std::numbers::pi * z));
    CHECK(log_distance(lhs, rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("log_gamma: duplication formula") {
  for (C z : {C(0.7, 0.2), C(2.5, -3.0), C(-1.3, 0.8)}) {
    const C lhs = log_gamma(2.0 * z);
    const C rhs = (2.0 * z - 1.0) * std::log(2.0) - 0.5 * std::log(std::numbers::pi) +
                  log_gamma(z) + log_gamma(z + 0.5);
    CHECK(log_distance(lhs, rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("kummer_m: closed forms") {
  CHECK(rel_err(kummer_m(1.0, 1.0, 1.0), C(std::exp(1.0))) < 1e-15);
  CHECK(kummer_m(C(0.3, 2.0), C(-1.5, 0.4), 0.0) == C(1.0));
  CHECK(rel_err(kummer_m(-1.0, 2.0, 1.0), C(0.5)) < 1e-15);
  CHECK(rel_err(kummer_m(-3.0, 2.0, 5.0), C(0.79166666666666666667)) < 1e-14);
  // 1F1(1; 2; z) = (e^z - 1)/z
  CHECK(rel_err(kummer_m(1.0, 2.0, 7.5), C(std::expm1(7.5) / 7.5)) < 1e-14);
}

TEST_CASE("kummer_m: complex parameters against high-precision values") {
  CHECK(rel_err(kummer_m(C(1, 2), C(3, -1), 5.0), C(-13.964102198955508268, -8.2192639486442956308)) <
        1e-13);
  CHECK(rel_err(kummer_m(C(-4.5, 1), C(2.2, 0.3), 20.0),
                C(-997.93861538475738511, 1833.8682978678566562)) < 1e-12);
}

TEST_CASE("kummer_m: parameter poles and termination") {
  CHECK_THROWS_AS(kummer_m(0.5, -2.0, 1.0), ParameterPole);
  CHECK_THROWS_AS(kummer_m(0.5, C(-3.0, 5e-7), 1.0), ParameterPole);
  // a = -2 terminates before (b + n) reaches zero at b = -3.
  const C m = kummer_m(-2.0, -3.0, 1.5);
  CHECK(rel_err(m, C(1.0 + (-2.0 / -3.0) * 1.5 + (-2.0 * -1.0) / (-3.0 * -2.0) * 1.5 * 1.5 / 2.0)) <
        1e-15);
  CHECK_THROWS_AS(kummer_m(-4.0, -3.0, 1.5), ParameterPole);
}

TEST_CASE("kummer_m: overflow is reported") {
  CHECK_THROWS_AS(kummer_m(1.0, 1.0, 1e5), NonConvergence);
}

TEST_CASE("kummer_m: negative argument uses the transformation") {
  // 1F1(1; 2; -z) = (1 - e^{-z}) / z
  CHECK(rel_err(kummer_m(1.0, 2.0, -12.0), C(-std::expm1(-12.0) / 12.0)) < 1e-14);
}

TEST_CASE("tricomi_u") {
  CHECK(rel_err(tricomi_u(0.0, C(2.3, 0.4), 3.0), C(1.0)) < 1e-15);
  const C u = tricomi_u(1.0, 1.5, 2.0);
  CHECK(rel_err(u, C(0.42136922928805447322)) < 1e-13);

  // Same connection formula with the double-double reference for M.
  const double z = 2.0;
  const C a = 1.0, b = 1.5;
  const C via_reference =
      std::exp(log_gamma(1.0 - b) - log_gamma(a - b + 1.0)) * verify::reference_kummer(a, b, z) +
      std::exp(log_gamma(b - 1.0) - log_gamma(a) + (1.0 - b) * std::log(z)) *
          verify::reference_kummer(a - b + 1.0, 2.0 - b, z);
  CHECK(rel_err(u, via_reference) < 1e-13);

  CHECK_THROWS_AS(tricomi_u(1.0, 2.0, 1.0), IntegerB);
  CHECK_THROWS_AS(tricomi_u(1.0, C(3.0, 1e-7), 1.0), IntegerB);
  CHECK_THROWS_AS(tricomi_u(1.0, 1.5, 0.0), DomainError);
}

TEST_CASE("tricomi_u: decays for real a > 0") {
  for (double a : {0.5, 1.0, 2.3}) {
    double prev = std::abs(tricomi_u(a, 1.5, 5.0));
    for (double z = 6.0; z <= 30.0; z += 1.0) {
      const double cur = std::abs(tricomi_u(a, 1.5, z));
      INFO("a = " << a << " z = " << z);
      CHECK(cur < prev);
      prev = cur;
    }
  }
  // U(a, a+1, z) = z^{-a} exactly.
  CHECK(rel_err(tricomi_u(0.6, 1.6, 30.0), C(std::pow(30.0, -0.6))) < 1e-13);
  CHECK(rel_err(tricomi_u(0.6, 1.6, 8.0), C(std::pow(8.0, -0.6))) < 1e-11);
}

TEST_CASE("tricomi_u: large argument against high-precision values") {
  CHECK(rel_err(tricomi_u(2.3, 1.5, 25.0), C(0.000523676345350841493317706903011)) < 1e-12);
  CHECK(rel_err(tricomi_u(C(1.2, -0.7), C(0.4, 0.3), 18.0),
                C(-0.0156372763382237558607518874214, 0.0242158192813918844244520726663)) < 1e-12);
  CHECK(rel_err(whittaker_w({0.7, 0.4}, 30.0), C(0.00000332114598730047915187893183826)) < 1e-12);
  // Kummer's relation U(a,b,z) = z^{1-b} U(a-b+1, 2-b, z) across both routes.
  for (double z : {6.0, 15.0, 28.0}) {
    const C a(1.7, 0.4), b(0.35, -0.2);
    CHECK(rel_err(tricomi_u(a, b, z),
                  std::exp((1.0 - b) * std::log(z)) * tricomi_u(a - b + 1.0, 2.0 - b, z)) < 1e-11);
  }
}

TEST_CASE("whittaker_m") {
  CHECK(rel_err(whittaker_m({0.0, 0.5}, 2.0), C(2.0 * std::sinh(1.0))) < 1e-15);
  const WhittakerIndices idx{C(0.7, -0.3), C(1.2, 0.4)};
  const double y = 1e-7;
  CHECK(rel_err(whittaker_m(idx, y) / std::exp((idx.mu + 0.5) * std::log(y)), C(1.0)) < 1e-6);
  CHECK(rel_err(whittaker_m({2.5, 4.0}, 8.0), C(2529.1041944573007393)) < 1e-13);
}

TEST_CASE("whittaker_m: matches RK integration of the Whittaker equation") {
  const WhittakerIndices idx{2.5, 4.0};
  const auto Q = [&](double y) {
    return -0.25 + idx.kappa / y + (0.25 - idx.mu * idx.mu) / (y * y);
  };
  const Jet seed = whittaker_m_jet(idx, 4.0);
  const auto end = verify::integrate_ode(Q, 4.0, seed.value, seed.d1, 8.0, 1e-4);
  CHECK(rel_err(end.w, whittaker_m(idx, 8.0)) < 1e-9);
  CHECK(rel_err(end.dw, whittaker_m_dy(idx, 8.0)) < 1e-9);
}

TEST_CASE("whittaker_w: closed forms and integer b") {
  CHECK_THROWS_AS(whittaker_w({0.0, 0.5}, 2.0), IntegerB);
  // Continuity towards the excluded W_{0,1/2}(2) = e^{-1}.
  CHECK(std::abs(whittaker_w({0.0, 0.5 + 1e-4}, 2.0) - std::exp(-1.0)) < 1e-3);
  // mu = 1/2 - kappa gives U(1-2k, 2-2k, y) = y^{2k-1}, so W = e^{-y/2} y^k.
  for (double y : {0.5, 2.0, 7.0}) {
    CHECK(rel_err(whittaker_w({0.2, 0.3}, y), C(std::exp(-0.5 * y) * std::pow(y, 0.2))) < 1e-12);
  }
  CHECK(rel_err(whittaker_w({2.5, 4.3}, 8.0), C(24.913878147320714076)) < 1e-12);
  const WhittakerIndices cidx{C(1.5, -2.0), std::sqrt(C(4.0, -16.0))};
  CHECK(rel_err(whittaker_w(cidx, 3.0), C(4.4948595111549756079, -1.7413209790669169137)) < 1e-11);
}

TEST_CASE("whittaker_w: Wronskian with M") {
  const WhittakerIndices idx{C(0.8, -0.6), C(1.3, 0.9)};
  const C expected = -std::exp(log_gamma(2.0 * idx.mu + 1.0) - log_gamma(idx.mu - idx.kappa + 0.5));
  std::vector<C> values;
  for (double y = 0.5; y <= 9.0; y += 0.25) {
    const C w = whittaker_m(idx, y) * whittaker_w_dy(idx, y) -
                whittaker_w(idx, y) * whittaker_m_dy(idx, y);
    CHECK(rel_err(w, expected) < 1e-10);
    values.push_back(w);
  }
  CHECK(verify::relative_std(values).first < 1e-10);
}

TEST_CASE("whittaker_w: large-y decay e^{-y/2} y^kappa") {
  // log(|W| e^{y/2}) against log y over [10, 30]; slope tends to kappa.
  const WhittakerIndices idx{0.7, 0.4};
  std::vector<double> lx, ly;
  for (double y = 10.0; y <= 30.0; y += 2.0) {
    lx.push_back(std::log(y));
    ly.push_back(std::log(std::abs(whittaker_w(idx, y))) + 0.5 * y);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  CHECK(std::abs(sxy / sxx - 0.7) < 0.02);
}

TEST_CASE("whittaker_m_dy") {
  CHECK(rel_err(whittaker_m_dy({0.0, 0.5}, 2.0), C(std::cosh(1.0))) < 1e-15);
  const WhittakerIndices idx{C(1.5, -2.0), std::sqrt(C(4.0, -16.0))};
  for (double y : {0.7, 2.0, 5.5, 8.0}) {
    const double h = 1e-5;
    const C fd = (whittaker_m(idx, y + h) - whittaker_m(idx, y - h)) / (2.0 * h);
    CHECK(rel_err(whittaker_m_dy(idx, y), fd) < 1e-7);
  }
  // Leading behaviour (mu + 1/2) y^{mu - 1/2}.
  const double y = 1e-8;
  const C lead = (idx.mu + 0.5) * std::exp((idx.mu - 0.5) * std::log(y));
  CHECK(rel_err(whittaker_m_dy(idx, y), lead) < 1e-6);
}

TEST_CASE("whittaker jets agree with first-derivative routines") {
  const WhittakerIndices idx{C(0.9, 0.2), C(2.1, -0.7)};
  for (double y : {0.3, 3.0, 7.9}) {
    CHECK(rel_err(whittaker_m_jet(idx, y).d1, whittaker_m_dy(idx, y)) < 1e-14);
    CHECK(rel_err(whittaker_w_jet(idx, y).d1, whittaker_w_dy(idx, y)) < 1e-13);
  }
}

TEST_CASE("laguerre_poly") {
  for (double p : {-0.5, 0.0, 2.0, 7.3}) {
    for (double y : {0.0, 1.0, 4.5}) {
      CHECK(laguerre_poly(0, p, y) == 1.0);
      CHECK(laguerre_poly(1, p, y) == doctest::Approx(1.0 + p - y).epsilon(1e-15));
    }
  }
  CHECK(laguerre_poly(2, 2.0, 3.0) == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(laguerre_explicit(2, 2.0, 3.0) == doctest::Approx(-1.5).epsilon(1e-15));
  for (int n = 0; n <= 12; ++n) {
    for (double p : {0.0, 1.5, 6.0}) {
      for (double y : {0.3, 2.0, 9.0}) {
        double magnitude = 0.0;
        const double want = laguerre_explicit(n, p, y, &magnitude);
        INFO("n=" << n << " p=" << p << " y=" << y);
        CHECK(std::abs(laguerre_poly(n, p, y) - want) <= 1e-14 * magnitude);
      }
    }
  }
  CHECK(laguerre_poly(-1, 1.0, 1.0) == 0.0);
}

TEST_CASE("kummer_core") {
  CHECK(kummer_core(0.0, C(2.3, 1.0), 4.0) == C(1.0));
  const double kappa = 1.5, mu = 0.5, y = 3.0;
  const C lhs = whittaker_m({kappa, mu}, y);
  const C rhs = std::pow(y, mu + 0.5) * std::exp(-0.5 * y) * kummer_core(kappa - mu - 0.5, 2.0 * mu, y);
  CHECK(rel_err(lhs, rhs) < 1e-12);
  for (double p : {0.5, 2.0}) {
    const double y1 = 1.7;
    CHECK(rel_err(kummer_core(1.0, p, y1), C(1.0 - y1 / (p + 1.0))) < 1e-15);
    CHECK(rel_err(kummer_core(1.0, p, y1), C(laguerre_poly(1, p, y1) / (p + 1.0))) < 1e-15);
  }
}

TEST_CASE("laguerre_function") {
  for (int n = 0; n <= 6; ++n) {
    for (double p : {0.0, 1.0, 3.5}) {
      for (double y : {0.5, 2.5, 8.0}) {
        const double want = laguerre_poly(n, p, y);
        CHECK(std::abs(laguerre_function(n, p, y) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
  CHECK(rel_err(laguerre_function(0.0, C(1.3, -0.2), 2.0), C(1.0)) < 1e-14);
  const C nu(0.3, -0.4), alpha(2.1, 0.7);
  const double y = 1.7;
  CHECK(rel_err(laguerre_function(nu, alpha, y), C(1.5927789870535876314, -0.15193285347799291137)) <
        1e-12);
  const C norm = std::exp(log_gamma(nu + 1.0) + log_gamma(alpha + 1.0) - log_gamma(nu + alpha + 1.0));
  CHECK(rel_err(laguerre_function(nu, alpha, y) * norm, kummer_core(nu, alpha, y)) < 1e-13);
  CHECK_THROWS_AS(laguerre_function(-1.0, 0.5, 1.0), PoleError);
}

TEST_CASE("series determinism") {
  const C a(-3.7, 2.2), b(4.1, -1.3);
  CHECK(bit_equal(kummer_m(a, b, 17.3), kummer_m(a, b, 17.3)));
  CHECK(bit_equal(tricomi_u(a, b, 4.2), tricomi_u(a, b, 4.2)));
  CHECK(bit_equal(log_gamma(a), log_gamma(a)));
}
