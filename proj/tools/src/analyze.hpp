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

#include <optional>

#include "json.hpp"
#include "twinbeam/fock.hpp"
#include "twinbeam/params.hpp"

namespace twinbeam::cli {

struct AnalyzeOptions {
  bool oracle = false;
  double eps_trunc = kDefaultEpsTrunc;
  std::optional<int> n_max = std::nullopt;
  int modes = 1;
};

struct AnalyzeResult {
  nlohmann::json report;
  bool truncated = false;
};

/// Analytic report for one point, with the per-mode quantities and, when
/// requested, oracle values and their absolute deviations.
AnalyzeResult analyze_point(const TwinBeamParams& params, const AnalyzeOptions& options);

}  // namespace twinbeam::cli
