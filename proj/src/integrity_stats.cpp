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

#include "locreq/integrity_stats.hpp"

#include <cmath>
#include <numbers>

#include "locreq/error.hpp"

namespace locreq::stats {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

// Lower-tail quantile, Acklam's rational approximation (|rel err| < 1.2e-9).
double acklam_quantile(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00, 2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) return -acklam_quantile(1.0 - p);
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-15; }

}  // namespace

double standard_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / kSqrt2);
}

double two_sided_sigma_from_tail(double tail) {
  require(tail > 0.0 && tail < 1.0, ErrorCode::invalid_argument,
          "two-sided tail mass must lie in (0, 1)");
  // Solve erfc(z / sqrt2) = tail, i.e. 2 Phi(-z) = tail.
  double z = -acklam_quantile(tail / 2.0);
  for (int i = 0; i < 2; ++i) {
    const double f = std::erfc(z / kSqrt2) - tail;
    z += f / (2.0 * normal_pdf(z));
  }
  return z;
}

double two_sided_sigma(double confidence) {
  require(confidence > 0.0 && confidence < 1.0, ErrorCode::invalid_argument,
          "confidence must lie in (0, 1)");
  return two_sided_sigma_from_tail(1.0 - confidence);
}

double two_sided_sigma(double confidence, QuantileMode mode) {
  if (mode == QuantileMode::paper) {
    if (near(confidence, kAccuracyConfidence)) return kRoundedSigma95;
    if (near(confidence, kIntegrityConfidence)) return kRoundedSigmaIntegrity;
  }
  return two_sided_sigma(confidence);
}

double confidence_ratio(double high, double low, QuantileMode mode) {
  require(high > 0.0 && high < 1.0 && low > 0.0 && low < 1.0,
          ErrorCode::invalid_argument, "confidences must lie in (0, 1)");
  if (high == low) return 1.0;
  if (mode == QuantileMode::paper) {
    if (near(high, kIntegrityConfidence) && near(low, kAccuracyConfidence))
      return kRoundedRatio;
    if (near(high, kAccuracyConfidence) && near(low, kIntegrityConfidence))
      return 1.0 / kRoundedRatio;
  }
  return two_sided_sigma(high) / two_sided_sigma(low);
}

double rescale_accuracy(double value, double conf_from, double conf_to,
                        QuantileMode mode) {
  require(value >= 0.0, ErrorCode::invalid_argument,
          "rescale_accuracy: value must be >= 0");
  const double ratio = confidence_ratio(conf_from, conf_to, mode);
  return value / ratio;
}

}  // namespace locreq::stats
