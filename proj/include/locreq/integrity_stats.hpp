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

#pragma once

namespace locreq::stats {

/// Containment probability of the localization integrity requirement.
inline constexpr double kIntegrityConfidence = 1.0 - 1e-9;
/// Containment probability of a "95%" accuracy figure.
inline constexpr double kAccuracyConfidence = 0.95;

/// Rounded quantile constants.
inline constexpr double kRoundedSigma95 = 1.96;
inline constexpr double kRoundedSigmaIntegrity = 6.11;
inline constexpr double kRoundedRatio = 3.12;

enum class QuantileMode { paper, exact };

/// Phi(z) for the standard normal distribution.
double standard_normal_cdf(double z);

/// z with Phi(z) - Phi(-z) = confidence. Accurate to ~1e-12 relative out to
/// z = 8; confidence must lie in (0, 1).
double two_sided_sigma(double confidence);

/// Same quantile addressed by its two-sided tail mass 1 - confidence, which
/// avoids the rounding in forming 1 - 1e-9.
double two_sided_sigma_from_tail(double tail);

/// In paper mode 0.95 and 1 - 1e-9 map to 1.96 and 6.11; everything else is
/// exact.
double two_sided_sigma(double confidence, QuantileMode mode);

/// two_sided_sigma(high) / two_sided_sigma(low). Paper mode pins the
/// (1 - 1e-9, 0.95) pair to exactly 3.12 (and its reciprocal).
double confidence_ratio(double high, double low, QuantileMode mode);

/// Rescales an error bound quoted at one confidence to another under the
/// Gaussian model.
double rescale_accuracy(double value, double conf_from, double conf_to,
                        QuantileMode mode = QuantileMode::exact);

struct IntegritySpec {
  double confidence;

  double sigma_multiplier() const { return two_sided_sigma(confidence); }
};

}  // namespace locreq::stats
