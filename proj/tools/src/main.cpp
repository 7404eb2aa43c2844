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

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "analyze.hpp"
#include "figures.hpp"
#include "format.hpp"
#include "sweep.hpp"
#include "twinbeam/analytic.hpp"
#include "twinbeam/fock.hpp"
#include "verify.hpp"

namespace {

using namespace twinbeam;
using namespace twinbeam::cli;

// Destination chosen by --out; stdout when empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Flags {
  double b_p = 0.0;
  double b_s = 0.0;
  double b_i = 0.0;
  std::string bp_list;
  std::string bs_range;
  std::string bi_range;
  std::string outputs;
  bool oracle = false;
  double eps_trunc = kDefaultEpsTrunc;
  std::optional<int> n_max;
  int modes = 1;
  std::string out;
  std::string config;
  std::string figure;
  int resolution = kDefaultResolution;
  bool quick = false;
  bool entropy_fault = false;
};

void check_truncation_flags(const Flags& f) {
  if (!(f.eps_trunc > 0.0 && f.eps_trunc < 1.0)) throw ConfigError("--eps-trunc must lie in (0, 1)");
  if (f.n_max && (*f.n_max < 0 || *f.n_max > kMaxTruncation)) {
    throw ConfigError("--nmax must lie in [0, " + std::to_string(kMaxTruncation) + "]");
  }
}

int cmd_analyze(const Flags& f) {
  check_truncation_flags(f);
  if (f.modes < 1) throw ConfigError("--modes must be ≥ 1");
  const TwinBeamParams params = validate({f.b_p, f.b_s, f.b_i});
  const AnalyzeResult result = analyze_point(
      params, {.oracle = f.oracle || f.n_max.has_value(),
               .eps_trunc = f.eps_trunc,
               .n_max = f.n_max,
               .modes = f.modes});
  Output out(f.out);
  out.stream() << result.report.dump(2) << '\n';
  if (result.truncated) {
    std::cerr << "warning: oracle truncation capped at n_max = " << kMaxTruncation
              << "; numeric values are lower bounds\n";
    return kExitTruncated;
  }
  return kExitOk;
}

int cmd_sweep(const Flags& f, const CLI::App& sub) {
  SweepConfig config;
  if (!f.config.empty()) {
    config = load_sweep_config(f.config);
  } else {
    if (f.bp_list.empty()) throw ConfigError("sweep needs --config or --bp");
    config.b_p_values = parse_list(f.bp_list, "--bp");
    config.b_s_range = f.bs_range.empty() ? Range{} : parse_range(f.bs_range, "--bs");
    config.b_i_range = f.bi_range.empty() ? Range{} : parse_range(f.bi_range, "--bi");
    config.outputs = sub.count("--outputs") ? parse_outputs(f.outputs)
                                            : std::vector<cli::Output>{};
    if (!sub.count("--outputs")) {
      for (const auto& name : output_names()) config.outputs.push_back(parse_output(name));
    }
  }
  // Command-line flags refine a config file.
  if (f.oracle) config.oracle = true;
  if (sub.count("--eps-trunc")) config.eps_trunc = f.eps_trunc;
  if (f.n_max) {
    config.n_max = f.n_max;
    config.oracle = true;
  }
  validate(config);

  Output out(f.out);
  if (run_sweep(config, out.stream())) {
    std::cerr << "warning: oracle truncation capped at n_max = " << kMaxTruncation
              << " for some points; numeric values are lower bounds\n";
    return kExitTruncated;
  }
  return kExitOk;
}

int cmd_figure(const Flags& f) {
  const FigureSpec spec{parse_figure_id(f.figure), f.resolution};
  Output out(f.out);
  write_figure(spec, out.stream());
  return kExitOk;
}

int cmd_verify(const Flags& f) {
  const auto results = run_verify({.quick = f.quick, .entropy_fault = f.entropy_fault});
  Output out(f.out);
  return print_verify_report(results, out.stream()) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement, nonclassicality and dimensionality of noisy twin beams"};
  app.require_subcommand(1);
  Flags f;

  auto add_truncation = [&](CLI::App* sub) {
    sub->add_flag("--oracle", f.oracle, "Cross-check against the Fock-space oracle");
    sub->add_option("--eps-trunc", f.eps_trunc, "Oracle truncation tolerance")->capture_default_str();
    sub->add_option("--nmax", f.n_max, "Override the oracle truncation (implies --oracle)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Report every quantity at one point as JSON");
  analyze->add_option("--bp", f.b_p, "Mean photon-pair number")->required();
  analyze->add_option("--bs", f.b_s, "Mean signal noise photon number")->capture_default_str();
  analyze->add_option("--bi", f.b_i, "Mean idler noise photon number")->capture_default_str();
  analyze->add_option("--modes", f.modes, "Mode count for the per-mode totals")->capture_default_str();
  add_truncation(analyze);
  analyze->add_option("--out", f.out, "Output file (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid as CSV");
  sweep->add_option("--config", f.config, "YAML sweep definition");
  sweep->add_option("--bp", f.bp_list, "Comma-separated b_p values");
  sweep->add_option("--bs", f.bs_range, "b_s value or start:stop:steps");
  sweep->add_option("--bi", f.bi_range, "b_i value or start:stop:steps");
  sweep->add_option("--outputs", f.outputs, "Comma-separated output keys (default: all)");
  add_truncation(sweep);
  sweep->add_option("--out", f.out, "Output file (default stdout)");

  CLI::App* figure = app.add_subcommand("figure", "Emit the data behind one figure as CSV");
  figure->add_option("--figure", f.figure, "fig1 .. fig11")->required();
  figure->add_option("--resolution", f.resolution, "Grid points per axis")->capture_default_str();
  figure->add_option("--out", f.out, "Output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Run the analytic-versus-oracle property suite");
  verify->add_flag("--quick", f.quick, "Coarser grids");
  verify->add_option("--out", f.out, "Output file (default stdout)");
  verify->add_flag("--inject-entropy-fault", f.entropy_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(f);
    if (*sweep) return cmd_sweep(f, *sweep);
    if (*figure) return cmd_figure(f);
    if (*verify) return cmd_verify(f);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTruncated;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
