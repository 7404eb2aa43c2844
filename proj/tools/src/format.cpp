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

#include "format.hpp"

#include <cstdio>

namespace twinbeam::cli {

std::string csv_number(double value) {
  if (value == 0.0) value = 0.0;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

void CsvWriter::header(std::span<const std::string> names) {
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) out_ << ',';
    out_ << names[k];
  }
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out_ << ',';
    out_ << csv_number(values[k]);
  }
  out_ << '\n';
}

}  // namespace twinbeam::cli
