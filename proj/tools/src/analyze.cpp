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

#include "analyze.hpp"

#include <cmath>

#include "twinbeam/analytic.hpp"
#include "twinbeam/multimode.hpp"

namespace twinbeam::cli {

using nlohmann::json;

AnalyzeResult analyze_point(const TwinBeamParams& params, const AnalyzeOptions& options) {
  const QuantReport r = analyze(params);
  AnalyzeResult result;
  json& out = result.report;
  out["params"] = {{"b_p", params.b_p}, {"b_s", params.b_s}, {"b_i", params.b_i}};
  out["negativity"] = r.negativity;
  out["raw_negativity"] = r.raw_negativity;
  out["tau"] = r.tau;
  out["k_ent"] = r.k_ent;
  out["k_ent_mod"] = r.k_ent_mod;
  out["r_s"] = r.r_s;
  out["r_i"] = r.r_i;
  out["r_ent"] = r.r_ent;
  out["s_s"] = r.s_s;
  out["s_i"] = r.s_i;
  out["entangled"] = r.entangled;

  const PerModeQuantities q = per_mode_quantities({options.modes, params});
  out["per_mode"] = {
      {"modes", options.modes},
      {"log_negativity", q.log_negativity},
      {"log_r_s", q.log_r_s},
      {"log_r_i", q.log_r_i},
      {"s_s", q.s_s},
      {"s_i", q.s_i},
      {"tau", q.tau},
      {"log_negativity_total", q.log_negativity_total},
      {"log_r_s_total", q.log_r_s_total},
      {"log_r_i_total", q.log_r_i_total},
      {"s_s_total", q.s_s_total},
      {"s_i_total", q.s_i_total},
      {"trace_norm", q.trace_norm},
      {"negativity_of_product", q.negativity_of_product},
  };

  if (options.oracle) {
    const OracleResult o = run_oracle(
        params, {.eps_trunc = options.eps_trunc, .n_max = options.n_max, .check_positivity = true});
    json numeric = {
        {"negativity", o.negativity}, {"r_s", o.r_s}, {"r_i", o.r_i},
        {"s_s", o.s_s},               {"s_i", o.s_i},
    };
    json deviation = {
        {"negativity", std::abs(o.negativity - r.negativity)},
        {"r_s", std::abs(o.r_s - r.r_s)},
        {"r_i", std::abs(o.r_i - r.r_i)},
        {"s_s", std::abs(o.s_s - r.s_s)},
        {"s_i", std::abs(o.s_i - r.s_i)},
    };
    out["oracle"] = {
        {"n_max", o.truncation.n_max},
        {"eps_trunc", options.eps_trunc},
        {"trace_deficit", o.trace_deficit},
        {"min_eigenvalue", o.min_eigenvalue},
        {"numeric", numeric},
        {"abs_err", deviation},
    };
    result.truncated = o.truncation.capped;
    out["truncated"] = result.truncated;
  }
  return result;
}

}  // namespace twinbeam::cli
