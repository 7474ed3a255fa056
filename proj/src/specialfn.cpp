#include "thetaqmc/specialfn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "thetaqmc/error.hpp"

namespace thetaqmc {

namespace {

// Gamma((r+1)/2) / Gamma(r/2), stepping r by two from r = 1 or r = 2.
long double gamma_ratio(int r) {
  const long double sqrt_pi = std::sqrt(std::numbers::pi_v<long double>);
  long double ratio = (r % 2 == 1) ? 1.0L / sqrt_pi : sqrt_pi / 2.0L;
  for (int s = (r % 2 == 1) ? 1 : 2; s < r; s += 2) ratio *= static_cast<long double>(s + 1) / s;
  return ratio;
}

// Gamma(x) for x = half_units / 2 > 0.
long double half_integer_gamma(int half_units) {
  long double g = (half_units % 2 == 1) ? std::sqrt(std::numbers::pi_v<long double>) : 1.0L;
  for (int h = (half_units % 2 == 1) ? 1 : 2; h < half_units; h += 2) g *= h / 2.0L;
  return g;
}

}  // namespace

SeriesEval f_hat(int r, double t, double tol) {
  if (r < 0) throw DomainError("f_hat: r must be non-negative");
  if (!(std::abs(t) <= 1.0)) throw DomainError("f_hat: |t| must be at most 1, got " + std::to_string(t));
  if (!(tol > 0.0)) throw std::invalid_argument("f_hat: tol must be positive");

  if (std::abs(t) == 1.0) {
    if (r == 0) throw SlowConvergenceError("f_hat: series diverges at |t| = 1 for r = 0", INFINITY);
    // 2F1(1/2, 1/2; c; 1) = Gamma(c) Gamma(c - 1) / Gamma(c - 1/2)^2 with c = r/2 + 1.
    const long double num = half_integer_gamma(r + 2) * half_integer_gamma(r);
    const long double den = half_integer_gamma(r + 1) * half_integer_gamma(r + 1);
    return {static_cast<double>(t * (num / den)), 0, 0.0};
  }

  const long double tt = t;
  const long double z = tt * tt;
  const long double one_minus_z = 1.0L - z;
  const long double p = r / 2.0L + 1.0L;
  const long double asymptotic = std::tgamma(p) / std::numbers::pi_v<long double>;

  long double coef = 1.0L;
  long double power = tt;  // t^(2k+1)
  long double sum = 0.0L;
  long double bound = INFINITY;
  for (long k = 0; k < kSeriesTermCap; ++k) {
    sum += coef * power;
    const long double next_k = k + 1;
    coef *= (2 * next_k - 1) * (2 * next_k - 1) / (2 * next_k * (r + 2 * next_k));
    power *= z;
    bound = std::abs(coef * power) / one_minus_z;
    if (std::abs(t) > 0.99 && r > 0) {
      const long double refined =
          asymptotic * std::abs(tt) * (std::pow(next_k, -p) + std::pow(next_k, 1.0L - p) / (p - 1.0L));
      bound = std::min(bound, refined);
    }
    if (bound <= tol) return {static_cast<double>(sum), k + 1, static_cast<double>(bound)};
  }
  throw SlowConvergenceError("f_hat: tolerance not met within " + std::to_string(kSeriesTermCap) + " terms",
                             static_cast<double>(bound));
}

double rounding_coefficient(int r) {
  if (r < 1) throw DomainError("rounding_coefficient: r must be at least 1");
  const long double ratio = gamma_ratio(r);
  return static_cast<double>(2.0L / r * ratio * ratio);
}

double expected_inner_product(int r, double t, double tol) { return rounding_coefficient(r) * f_hat(r, t, tol).value; }

double pochhammer(double a, int n) {
  double out = 1.0;
  if (n >= 0) {
    for (int j = 0; j < n; ++j) out *= a + j;
    return out;
  }
  for (int j = 1; j <= -n; ++j) out *= a - j;
  return 1.0 / out;
}

double hyp2f1_series(double a, double b, double c, double z, double tol) {
  if (!(std::abs(z) < 1.0)) throw DomainError("hyp2f1_series: needs |z| < 1");
  long double term = 1.0L;
  long double sum = 1.0L;
  for (long j = 0; j < kSeriesTermCap; ++j) {
    term *= (a + j) * static_cast<long double>(b + j) / ((c + j) * (j + 1.0L)) * z;
    sum += term;
    if (std::abs(term) < tol) return static_cast<double>(sum);
  }
  throw SlowConvergenceError("hyp2f1_series: term cap reached", static_cast<double>(std::abs(term)));
}

}  // namespace thetaqmc
