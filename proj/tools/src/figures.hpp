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
#include <string_view>
#include <vector>

namespace twinbeam::cli {

enum class FigureId { kFig1 = 1, kFig2, kFig3, kFig4, kFig5, kFig6, kFig7, kFig8, kFig9, kFig10, kFig11 };

inline constexpr int kDefaultResolution = 101;

struct FigureSpec {
  FigureId id = FigureId::kFig1;
  int resolution = kDefaultResolution;  ///< grid points per axis
};

/// "fig1" .. "fig11"; ConfigError otherwise.
FigureId parse_figure_id(std::string_view text);
std::string figure_name(FigureId id);

/// Writes the long-format CSV behind one figure.
void write_figure(const FigureSpec& spec, std::ostream& out);

}  // namespace twinbeam::cli
