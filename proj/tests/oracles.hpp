/*
   Copyright 2026 The locreq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Reference implementations used only by the tests. Written in long double
// and without touching the library so they can disagree with it.

#ifndef LOCREQ_TESTS_ORACLES_HPP
#define LOCREQ_TESTS_ORACLES_HPP

#include <cmath>

namespace oracle {

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

/// erf by its Maclaurin series; good for |x| <= 3.
inline long double erf_series(long double x) {
  long double term = x;
  long double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    const long double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < 1e-30L) break;
  }
  return 2.0L / std::sqrt(kPi) * sum;
}

/// erfc by the Laplace continued fraction (modified Lentz); x > 0.
inline long double erfc_cf(long double x) {
  const long double tiny = 1e-300L;
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  long double f = x;
  long double c = x;
  long double d = 0.0L;
  for (int k = 1; k < 5000; ++k) {
    const long double a = k / 2.0L;
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 1e-25L) break;
  }
  return std::exp(-x * x) / std::sqrt(kPi) / f;
}

inline long double erfc_oracle(long double x) {
  if (x < 0) return 2.0L - erfc_oracle(-x);
  if (x <= 2.5L) return 1.0L - erf_series(x);
  return erfc_cf(x);
}

/// Standard normal CDF.
inline long double phi(long double z) {
  return 0.5L * erfc_oracle(-z / std::sqrt(2.0L));
}

/// Two-sided tail 2(1 - phi(z)) for z >= 0.
inline long double two_sided_tail(long double z) {
  return erfc_oracle(z / std::sqrt(2.0L));
}

/// z with two-sided tail equal to `tail`, by bisection.
inline long double two_sided_sigma(long double tail) {
  long double lo = 0.0L;
  long double hi = 40.0L;
  for (int i = 0; i < 300; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (two_sided_tail(mid) > tail) lo = mid;
    else hi = mid;
  }
  return 0.5L * (lo + hi);
}

/// Longitudinal extent of a box of lateral extent x inscribed in a curved
/// lane, written exactly as the textbook chord expression.
inline long double chord_extent(long double x, long double w, long double r) {
  const long double outer = r + w / 2;
  const long double inner_offset = x + r - w / 2;
  return 2.0L * std::sqrt(outer * outer - inner_offset * inner_offset);
}

/// Inverse of chord_extent by bisection over x in (0, w].
inline long double chord_lateral(long double y, long double w, long double r) {
  long double lo = 0.0L;
  long double hi = w;
  for (int i = 0; i < 300; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (chord_extent(mid, w, r) > y) lo = mid;
    else hi = mid;
  }
  return 0.5L * (lo + hi);
}

struct Triple {
  long double lat, lon, vert;
};

/// Coupled lateral/longitudinal/vertical budget solved as the linear system
/// it is, by Cramer's rule.
///   lat + (lon + vert + L/2) dl                 = A
///   lon + (lat + W/2) dp + vert dp               = B
///   vert + (lat + W/2) dt + (lon + L/2) dp       = C
inline Triple coupled_linear(long double A, long double B, long double C,
                             long double L, long double W, long double dl,
                             long double dp, long double dt) {
  const long double m[3][3] = {{1, dl, dl}, {dp, 1, dp}, {dt, dp, 1}};
  const long double rhs[3] = {A - L / 2 * dl, B - W / 2 * dp,
                              C - W / 2 * dt - L / 2 * dp};
  auto det = [](const long double a[3][3]) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const long double d = det(m);
  long double out[3];
  for (int col = 0; col < 3; ++col) {
    long double t[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[i][j] = j == col ? rhs[i] : m[i][j];
    out[col] = det(t) / d;
  }
  return {out[0], out[1], out[2]};
}

/// Whether an error triple keeps every coupled axis within its limit.
inline bool coupled_feasible(long double lat, long double lon, long double vert,
                             long double A, long double B, long double C,
                             long double L, long double W, long double dl,
                             long double dp, long double dt) {
  return lat + (lon + vert + L / 2) * dl <= A &&
         lon + (lat + W / 2) * dp + vert * dp <= B &&
         vert + (lat + W / 2) * dt + (lon + L / 2) * dp <= C;
}

}  // namespace oracle

#endif
