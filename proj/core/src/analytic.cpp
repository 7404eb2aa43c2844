// Copyright 2026 The twinbeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twinbeam/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace twinbeam {

Negativity negativity(const TwinBeamParams& params) {
  const auto [bp, bs, bi] = validate(params);
  const double root = std::sqrt((bs - bi) * (bs - bi) + 4.0 * bp * (bp + 1.0));
  const double numerator =
      2.0 * bp - (bs + bi) * (4.0 * bp + 1.0) - 4.0 * bs * bi + root;
  const double denominator =
      4.0 * (bs + bi) * (2.0 * bp + 1.0) + 8.0 * bs * bi + 2.0;
  Negativity n;
  n.raw = numerator / denominator;
  n.value = std::max(n.raw, 0.0);
  return n;
}

double negativity_block_form(const TwinBeamParams& params) {
  const GaussianMoments m = derive_moments(params);
  const double sum = m.bt1 + m.bt2;
  const double root = std::sqrt((m.bt1 - m.bt2) * (m.bt1 - m.bt2) +
                                4.0 * m.d12 * m.d12);
  return 0.5 * (3.0 * sum + root - 4.0 * m.kt - 2.0) /
         (4.0 * m.kt - 2.0 * sum + 1.0);
}

bool is_entangled(const TwinBeamParams& params) {
  const auto [bp, bs, bi] = validate(params);
  return bp * (1.0 - (bs + bi)) > bs * bi;
}

std::optional<double> b_p_threshold(double b_s, double b_i) {
  validate({0.0, b_s, b_i});
  if (b_s + b_i >= 1.0) return std::nullopt;
  return b_s * b_i / (1.0 - (b_s + b_i));
}

double nonclassical_depth(const TwinBeamParams& params) {
  const auto [bp, bs, bi] = validate(params);
  // sqrt(a) - b rewritten as (a - b^2) / (sqrt(a) + b); a - b^2 reduces to
  // the separability polynomial, so tau vanishes exactly where it does.
  const double root = std::sqrt((bs - bi) * (bs - bi) + 4.0 * bp * (bp + 1.0));
  const double shift = 2.0 * bp + bs + bi;
  const double denominator = root + shift;
  if (denominator == 0.0) return 0.0;
  return 2.0 * (bp * (1.0 - (bs + bi)) - bs * bi) / denominator;
}

double negativity_from_tau(double tau) {
  if (!(tau < 0.5)) {
    throw DomainError("negativity_from_tau: tau must be < 1/2");
  }
  return tau / (1.0 - 2.0 * tau);
}

double tau_from_negativity(double negativity) {
  if (!(negativity > -0.5)) {
    throw DomainError("tau_from_negativity: negativity must be > -1/2");
  }
  return negativity / (1.0 + 2.0 * negativity);
}

double entanglement_dimensionality(const TwinBeamParams& params) {
  return 2.0 * negativity(params).value + 1.0;
}

double participation_ratio(const TwinBeamParams& params, Field field) {
  const auto [bp, bs, bi] = validate(params);
  const double noise = field == Field::kSignal ? bs : bi;
  return 2.0 * (bp + noise) + 1.0;
}

std::vector<double> schmidt_coefficients(double b_p, int j_max) {
  validate({b_p, 0.0, 0.0});
  if (j_max < 0) throw ParamError("j_max must be ≥ 0");
  std::vector<double> c(static_cast<std::size_t>(j_max) + 1);
  const double ratio = b_p / (b_p + 1.0);
  double weight = 1.0 / (b_p + 1.0);  // c_j^2
  for (auto& cj : c) {
    cj = std::sqrt(weight);
    weight *= ratio;
  }
  return c;
}

double modified_k_ent(const TwinBeamParams& params) {
  const double bp = validate(params).b_p;
  const double scale =
      (2.0 * bp + 1.0) / (2.0 * bp + 1.0 + 2.0 * std::sqrt(bp * bp + bp));
  return scale * entanglement_dimensionality(params);
}

double r_ent(const TwinBeamParams& params) {
  return 2.0 * modified_k_ent(params) /
         (participation_ratio(params, Field::kSignal) +
          participation_ratio(params, Field::kIdler));
}

double thermal_entropy(double mean_photons) {
  if (!(mean_photons >= 0.0) || !std::isfinite(mean_photons)) {
    throw DomainError("thermal_entropy: mean photon number must be finite and ≥ 0");
  }
  if (mean_photons == 0.0) return 0.0;
  return (1.0 + mean_photons) * std::log1p(mean_photons) -
         mean_photons * std::log(mean_photons);
}

double entropy(const TwinBeamParams& params, Field field) {
  const auto [bp, bs, bi] = validate(params);
  return thermal_entropy(bp + (field == Field::kSignal ? bs : bi));
}

double entropy_from_r(double r, EntropyOffset offset) {
  if (!(r >= 1.0) || !std::isfinite(r)) {
    throw DomainError("entropy_from_r: participation ratio must be ≥ 1");
  }
  const double upper = (r + 1.0) * std::log(r + 1.0);
  const double lower = r == 1.0 ? 0.0 : (r - 1.0) * std::log(r - 1.0);
  const double constant =
      offset == EntropyOffset::kLnTwo ? std::numbers::ln2 : 1.0;
  return 0.5 * (upper - lower) - constant;
}

QuantReport analyze(const TwinBeamParams& params) {
  const TwinBeamParams p = validate(params);
  const Negativity n = negativity(p);
  QuantReport r;
  r.negativity = n.value;
  r.raw_negativity = n.raw;
  r.tau = nonclassical_depth(p);
  r.k_ent = entanglement_dimensionality(p);
  r.k_ent_mod = modified_k_ent(p);
  r.r_s = participation_ratio(p, Field::kSignal);
  r.r_i = participation_ratio(p, Field::kIdler);
  r.r_ent = r_ent(p);
  r.s_s = entropy(p, Field::kSignal);
  r.s_i = entropy(p, Field::kIdler);
  r.entangled = r.negativity > 0.0;
  return r;
}

}  // namespace twinbeam
