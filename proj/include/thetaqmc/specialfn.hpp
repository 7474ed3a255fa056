#pragma once

namespace thetaqmc {

struct SeriesEval {
  double value = 0.0;
  long terms_used = 0;
  /// Upper bound on the magnitude of the omitted tail.
  double truncation_bound = 0.0;
};

inline constexpr long kSeriesTermCap = 1000000;

/// F^(r, t) = t * 2F1(1/2, 1/2; r/2 + 1; t^2) = sum_k c_k(r) t^(2k+1) with
/// c_0 = 1 and c_k = c_{k-1} (2k-1)^2 / (2k (r + 2k)).
///
/// Summed in long double until the tail bound drops to tol. The bound is
/// geometric, c_K |t|^(2K+1) / (1 - t^2); for |t| > 0.99 it is tightened with
/// c_k <= L k^-(r/2+1), L = Gamma(r/2 + 1) / pi. At |t| = 1 the value comes
/// from Gauss's summation theorem (r >= 1). Requires r >= 0.
///
/// Throws DomainError for |t| > 1 and SlowConvergenceError if tol is not met
/// within kSeriesTermCap terms (always the case for r = 0, |t| = 1).
SeriesEval f_hat(int r, double t, double tol = 1e-15);

/// (2/r) * (Gamma((r+1)/2) / Gamma(r/2))^2, through the half-integer
/// recurrence Gamma(x + 1) = x Gamma(x). r = 1: 2/pi, r = 2: pi/4, r = 3: 8/(3 pi).
double rounding_coefficient(int r);

/// E[(Zu/|Zu|) . (Zv/|Zv|)] for unit u, v with u.v = t and Z an r x n Gaussian matrix.
double expected_inner_product(int r, double t, double tol = 1e-15);

/// Rising factorial (a)_n, including the negative-n convention 1 / ((a-|n|)...(a-1)).
double pochhammer(double a, int n);

/// Plain series sum_j (a)_j (b)_j / (c)_j z^j / j! for |z| < 1, stopping once a
/// term falls below tol in magnitude. Reference implementation for tests.
double hyp2f1_series(double a, double b, double c, double z, double tol = 1e-17);

}  // namespace thetaqmc
