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

#include "twinbeam/params.hpp"

#include <cmath>

namespace twinbeam {

const char* to_string(Field field) noexcept {
  return field == Field::kSignal ? "signal" : "idler";
}

namespace {

void check_field(const char* name, double value) {
  if (!std::isfinite(value)) {
    throw ParamError(std::string(name) + " must be finite");
  }
  if (value < 0.0) {
    throw ParamError(std::string(name) + " must be ≥ 0");
  }
}

}  // namespace

TwinBeamParams validate(const TwinBeamParams& params) {
  check_field("b_p", params.b_p);
  check_field("b_s", params.b_s);
  check_field("b_i", params.b_i);
  return params;
}

GaussianMoments derive_moments(const TwinBeamParams& params) {
  const TwinBeamParams p = validate(params);
  GaussianMoments m;
  m.b1 = p.b_p + p.b_s;
  m.b2 = p.b_p + p.b_i;
  m.bt1 = m.b1 + 1.0;
  m.bt2 = m.b2 + 1.0;
  m.d12 = std::sqrt(p.b_p * (p.b_p + 1.0));
  m.kt = m.bt1 * m.bt2 - m.d12 * m.d12;
  return m;
}

}  // namespace twinbeam
