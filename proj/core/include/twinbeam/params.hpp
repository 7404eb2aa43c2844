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

#pragma once

#include <stdexcept>
#include <string>

namespace twinbeam {

/// Thrown when a physical input is outside its admissible domain.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Physical inputs of a single-mode noisy twin beam. All values are mean
/// photon numbers per mode.
struct TwinBeamParams {
  double b_p = 0.0;  ///< mean number of photon pairs
  double b_s = 0.0;  ///< mean signal noise photons
  double b_i = 0.0;  ///< mean idler noise photons

  friend bool operator==(const TwinBeamParams&, const TwinBeamParams&) = default;
};

enum class Field { kSignal, kIdler };

const char* to_string(Field field) noexcept;

/// Returns `params` unchanged when every field is finite and non-negative.
/// Throws ParamError naming the first offending field otherwise.
TwinBeamParams validate(const TwinBeamParams& params);

/// Second-order moments of the Gaussian state built from TwinBeamParams.
///
/// `bt1`, `bt2` are the anti-normally ordered intensities B + 1, `d12` is
/// the modulus of the signal-idler correlation (its phase never enters any
/// observable, so only the modulus is kept) and `kt` is the determinant
/// bt1 * bt2 - d12^2.
struct GaussianMoments {
  double b1 = 0.0;
  double b2 = 0.0;
  double bt1 = 1.0;
  double bt2 = 1.0;
  double d12 = 0.0;
  double kt = 1.0;
};

/// Maps physical parameters to Gaussian moments. Validates its input.
GaussianMoments derive_moments(const TwinBeamParams& params);

}  // namespace twinbeam
