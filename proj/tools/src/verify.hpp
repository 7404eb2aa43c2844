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

#include <ostream>
#include <string>
#include <vector>

namespace twinbeam::cli {

struct VerifyOptions {
  bool quick = false;
  /// Test hook: evaluate the entropy relation with the unity offset, which
  /// must make that property fail.
  bool entropy_fault = false;
};

struct PropertyResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t checks = 0;
  double seconds = 0.0;
  bool passed = false;
  std::string note;
};

std::vector<PropertyResult> run_verify(const VerifyOptions& options);

/// One line per property; returns true when all passed.
bool print_verify_report(const std::vector<PropertyResult>& results, std::ostream& out);

}  // namespace twinbeam::cli
