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

#include "sweep.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "format.hpp"
#include "parallel.hpp"
#include "twinbeam/analytic.hpp"
#include "twinbeam/multimode.hpp"

namespace twinbeam::cli {

namespace {

constexpr Output kAllOutputs[] = {Output::kNegativity, Output::kTau,  Output::kKEnt,
                                  Output::kKEntMod,    Output::kRS,   Output::kRI,
                                  Output::kREnt,       Output::kSS,   Output::kSI,
                                  Output::kTauW};

double parse_double(std::string_view text, std::string_view field) {
  const std::string s(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw ConfigError(std::string(field) + ": '" + s + "' is not a number");
  }
  return value;
}

int parse_int(std::string_view text, std::string_view field) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ConfigError(std::string(field) + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

// ---- YAML ----------------------------------------------------------------

std::string where(const std::string& path, const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  if (mark.is_null()) return path;
  return path + ":" + std::to_string(mark.line + 1);
}

template <typename T>
T read_scalar(const std::string& path, const YAML::Node& node, std::string_view field) {
  if (!node.IsScalar()) {
    throw ConfigError(where(path, node) + ": " + std::string(field) + " must be a scalar");
  }
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(where(path, node) + ": " + std::string(field) + ": cannot read '" +
                      node.Scalar() + "'");
  }
}

void check_keys(const std::string& path, const YAML::Node& map, std::string_view field,
                const std::set<std::string>& allowed) {
  if (!map.IsMap()) {
    throw ConfigError(where(path, map) + ": " + std::string(field) + " must be a mapping");
  }
  for (const auto& entry : map) {
    const std::string key = entry.first.Scalar();
    if (!allowed.contains(key)) {
      throw ConfigError(where(path, entry.first) + ": unknown key '" + key + "'" +
                        (field.empty() ? "" : " in " + std::string(field)));
    }
  }
}

Range read_range(const std::string& path, const YAML::Node& node, std::string_view field) {
  if (node.IsScalar()) {
    const double x = read_scalar<double>(path, node, field);
    return {x, x, 1};
  }
  check_keys(path, node, field, {"start", "stop", "steps"});
  Range r;
  for (const char* key : {"start", "stop", "steps"}) {
    if (!node[key]) {
      throw ConfigError(where(path, node) + ": " + std::string(field) + "." + key + " is missing");
    }
  }
  r.start = read_scalar<double>(path, node["start"], std::string(field) + ".start");
  r.stop = read_scalar<double>(path, node["stop"], std::string(field) + ".stop");
  r.steps = read_scalar<int>(path, node["steps"], std::string(field) + ".steps");
  return r;
}

// ---- evaluation ------------------------------------------------------------

struct PointResult {
  std::vector<double> cells;
  bool capped = false;
};

bool has_numeric(Output o) { return o != Output::kTau && o != Output::kTauW; }

double analytic_value(Output o, const QuantReport& r, const TwinBeamParams& p,
                      const ModeCounts& m) {
  switch (o) {
    case Output::kNegativity: return r.negativity;
    case Output::kTau: return r.tau;
    case Output::kKEnt: return r.k_ent;
    case Output::kKEntMod: return r.k_ent_mod;
    case Output::kRS: return r.r_s;
    case Output::kRI: return r.r_i;
    case Output::kREnt: return r.r_ent;
    case Output::kSS: return r.s_s;
    case Output::kSI: return r.s_i;
    case Output::kTauW: return tau_w({m.m_p, m.m_s, m.m_i, p.b_p, p.b_s, p.b_i});
  }
  return 0.0;
}

// Oracle counterparts. Dimensionalities follow from the numeric negativity
// and participation ratios through the same relations the analytic side uses.
double numeric_value(Output o, const OracleResult& n, const TwinBeamParams& p) {
  const double k_ent = 2.0 * n.negativity + 1.0;
  const double k_ent_mod = modified_k_ent(p) / entanglement_dimensionality(p) * k_ent;
  switch (o) {
    case Output::kNegativity: return n.negativity;
    case Output::kKEnt: return k_ent;
    case Output::kKEntMod: return k_ent_mod;
    case Output::kRS: return n.r_s;
    case Output::kRI: return n.r_i;
    case Output::kREnt: return 2.0 * k_ent_mod / (n.r_s + n.r_i);
    case Output::kSS: return n.s_s;
    case Output::kSI: return n.s_i;
    default: return std::nan("");
  }
}

}  // namespace

const std::vector<std::string>& output_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (Output o : kAllOutputs) v.emplace_back(output_name(o));
    return v;
  }();
  return names;
}

std::string_view output_name(Output output) {
  switch (output) {
    case Output::kNegativity: return "negativity";
    case Output::kTau: return "tau";
    case Output::kKEnt: return "k_ent";
    case Output::kKEntMod: return "k_ent_mod";
    case Output::kRS: return "r_s";
    case Output::kRI: return "r_i";
    case Output::kREnt: return "r_ent";
    case Output::kSS: return "s_s";
    case Output::kSI: return "s_i";
    case Output::kTauW: return "tau_w";
  }
  return "";
}

Output parse_output(std::string_view name) {
  for (Output o : kAllOutputs) {
    if (output_name(o) == name) return o;
  }
  throw ConfigError("unknown output '" + std::string(name) + "'");
}

std::vector<double> Range::values() const {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    v[k] = steps == 1 ? start : start + (stop - start) * k / (steps - 1);
  }
  if (steps > 1) v.back() = stop;
  return v;
}

void validate(const SweepConfig& config) {
  if (config.b_p_values.empty()) throw ConfigError("b_p_values must not be empty");
  for (const auto& [range, field] :
       {std::pair{config.b_s_range, "b_s_range"}, std::pair{config.b_i_range, "b_i_range"}}) {
    if (range.steps < 1) throw ConfigError(std::string(field) + ".steps must be ≥ 1");
    if (!(range.start <= range.stop)) {
      throw ConfigError(std::string(field) + ": start must not exceed stop");
    }
  }
  if (config.outputs.empty()) throw ConfigError("outputs must not be empty");
  if (!(config.eps_trunc > 0.0 && config.eps_trunc < 1.0)) {
    throw ConfigError("eps_trunc must lie in (0, 1)");
  }
  if (config.n_max && (*config.n_max < 0 || *config.n_max > kMaxTruncation)) {
    throw ConfigError("n_max must lie in [0, " + std::to_string(kMaxTruncation) + "]");
  }
  const ModeCounts& m = config.mode_counts;
  if (m.m_p < 0 || m.m_s < 0 || m.m_i < 0 || m.m_p + m.m_s + m.m_i < 1) {
    throw ConfigError("mode_counts must be ≥ 0 with at least one positive");
  }
}

SweepConfig load_sweep_config(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::BadFile&) {
    throw ConfigError(path + ": cannot open config file");
  } catch (const YAML::ParserException& e) {
    throw ConfigError(path + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (root.IsNull()) throw ConfigError(path + ": config file is empty");
  check_keys(path, root, "",
             {"b_p_values", "b_s_range", "b_i_range", "outputs", "oracle", "eps_trunc", "n_max",
              "mode_counts"});

  SweepConfig c;
  if (const YAML::Node n = root["b_p_values"]) {
    if (n.IsSequence()) {
      for (const auto& item : n) c.b_p_values.push_back(read_scalar<double>(path, item, "b_p_values"));
    } else {
      c.b_p_values.push_back(read_scalar<double>(path, n, "b_p_values"));
    }
  } else {
    throw ConfigError(path + ": b_p_values is missing");
  }
  if (const YAML::Node n = root["b_s_range"]) c.b_s_range = read_range(path, n, "b_s_range");
  if (const YAML::Node n = root["b_i_range"]) c.b_i_range = read_range(path, n, "b_i_range");
  if (const YAML::Node n = root["outputs"]) {
    if (!n.IsSequence()) throw ConfigError(where(path, n) + ": outputs must be a list");
    for (const auto& item : n) {
      const auto name = read_scalar<std::string>(path, item, "outputs");
      try {
        c.outputs.push_back(parse_output(name));
      } catch (const ConfigError& e) {
        throw ConfigError(where(path, item) + ": " + e.what());
      }
    }
    if (c.outputs.empty()) throw ConfigError(where(path, n) + ": outputs must not be empty");
  } else {
    throw ConfigError(path + ": outputs is missing");
  }
  if (const YAML::Node n = root["oracle"]) c.oracle = read_scalar<bool>(path, n, "oracle");
  if (const YAML::Node n = root["eps_trunc"]) c.eps_trunc = read_scalar<double>(path, n, "eps_trunc");
  if (const YAML::Node n = root["n_max"]) c.n_max = read_scalar<int>(path, n, "n_max");
  if (const YAML::Node n = root["mode_counts"]) {
    check_keys(path, n, "mode_counts", {"m_p", "m_s", "m_i"});
    if (n["m_p"]) c.mode_counts.m_p = read_scalar<int>(path, n["m_p"], "mode_counts.m_p");
    if (n["m_s"]) c.mode_counts.m_s = read_scalar<int>(path, n["m_s"], "mode_counts.m_s");
    if (n["m_i"]) c.mode_counts.m_i = read_scalar<int>(path, n["m_i"], "mode_counts.m_i");
  }
  try {
    validate(c);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return c;
}

Range parse_range(std::string_view text, std::string_view field) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    const double x = parse_double(parts[0], field);
    return {x, x, 1};
  }
  if (parts.size() != 3) {
    throw ConfigError(std::string(field) + ": expected a value or start:stop:steps");
  }
  return {parse_double(parts[0], field), parse_double(parts[1], field),
          parse_int(parts[2], field)};
}

std::vector<double> parse_list(std::string_view text, std::string_view field) {
  std::vector<double> values;
  for (std::string_view part : split(text, ',')) values.push_back(parse_double(part, field));
  return values;
}

std::vector<Output> parse_outputs(std::string_view text) {
  std::vector<Output> outputs;
  for (std::string_view part : split(text, ',')) {
    if (!part.empty()) outputs.push_back(parse_output(part));
  }
  return outputs;
}

bool run_sweep(const SweepConfig& config, std::ostream& out) {
  validate(config);
  std::vector<TwinBeamParams> points;
  for (double bp : config.b_p_values)
    for (double bs : config.b_s_range.values())
      for (double bi : config.b_i_range.values())
        points.push_back(twinbeam::validate(TwinBeamParams{bp, bs, bi}));

  std::vector<std::string> header{"b_p", "b_s", "b_i"};
  for (Output o : config.outputs) {
    header.emplace_back(output_name(o));
    if (config.oracle && has_numeric(o)) {
      header.push_back(std::string(output_name(o)) + "_numeric");
      header.push_back(std::string(output_name(o)) + "_abs_err");
    }
  }

  const auto rows = parallel_map(points.size(), [&](std::size_t k) {
    const TwinBeamParams& p = points[k];
    const QuantReport r = analyze(p);
    std::optional<OracleResult> oracle;
    if (config.oracle) {
      oracle = run_oracle(p, {.eps_trunc = config.eps_trunc,
                              .n_max = config.n_max,
                              .check_positivity = false});
    }
    PointResult row;
    row.cells = {p.b_p, p.b_s, p.b_i};
    for (Output o : config.outputs) {
      const double a = analytic_value(o, r, p, config.mode_counts);
      row.cells.push_back(a);
      if (oracle && has_numeric(o)) {
        const double n = numeric_value(o, *oracle, p);
        row.cells.push_back(n);
        row.cells.push_back(std::abs(n - a));
      }
    }
    row.capped = oracle && oracle->truncation.capped;
    return row;
  });

  CsvWriter csv(out);
  csv.header(header);
  bool capped = false;
  for (const PointResult& row : rows) {
    csv.row(row.cells);
    capped = capped || row.capped;
  }
  return capped;
}

}  // namespace twinbeam::cli
