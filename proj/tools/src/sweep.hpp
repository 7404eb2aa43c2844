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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "twinbeam/fock.hpp"

namespace twinbeam::cli {

enum class Output { kNegativity, kTau, kKEnt, kKEntMod, kRS, kRI, kREnt, kSS, kSI, kTauW };

/// Output keys in their canonical order; these are also the CSV column names.
const std::vector<std::string>& output_names();
std::string_view output_name(Output output);
Output parse_output(std::string_view name);

/// `steps` evenly spaced points from start to stop inclusive.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  std::vector<double> values() const;
};

struct ModeCounts {
  int m_p = 1;
  int m_s = 1;
  int m_i = 1;
};

struct SweepConfig {
  std::vector<double> b_p_values;
  Range b_s_range;
  Range b_i_range;
  std::vector<Output> outputs;
  bool oracle = false;
  double eps_trunc = kDefaultEpsTrunc;
  std::optional<int> n_max = std::nullopt;
  ModeCounts mode_counts;  ///< used by tau_w only
};

/// Throws ConfigError naming the offending field.
void validate(const SweepConfig& config);

/// Reads a YAML sweep file. Unknown keys and type errors are ConfigErrors
/// that carry the file name and line number.
SweepConfig load_sweep_config(const std::string& path);

/// "x" or "start:stop:steps".
Range parse_range(std::string_view text, std::string_view field);
/// Comma-separated reals.
std::vector<double> parse_list(std::string_view text, std::string_view field);
/// Comma-separated output keys.
std::vector<Output> parse_outputs(std::string_view text);

/// Writes the CSV grid. Returns true when some oracle truncation was capped.
bool run_sweep(const SweepConfig& config, std::ostream& out);

}  // namespace twinbeam::cli
