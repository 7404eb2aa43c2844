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

#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

#include "parallel.hpp"
#include "twinbeam/analytic.hpp"
#include "twinbeam/fock.hpp"
#include "twinbeam/multimode.hpp"

namespace twinbeam::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = n == 1 ? a : a + (b - a) * k / (n - 1);
  return v;
}

std::vector<TwinBeamParams> product_grid(const std::vector<double>& bp,
                                         const std::vector<double>& bs,
                                         const std::vector<double>& bi) {
  std::vector<TwinBeamParams> points;
  for (double p : bp)
    for (double s : bs)
      for (double i : bi) points.push_back({p, s, i});
  return points;
}

// Runs body, which fills max_deviation / checks / note, and times it.
PropertyResult timed(std::string name, double tolerance,
                     const std::function<void(PropertyResult&)>& body) {
  PropertyResult r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = (std::isfinite(r.max_deviation) && r.max_deviation <= tolerance);
  return r;
}

std::vector<TwinBeamParams> analytic_grid(bool quick) {
  auto grid = product_grid(linspace(0, 8, 5), linspace(0, 2, 5), linspace(0, 2, 5));
  if (!quick) {
    const auto fine = product_grid(linspace(0, 8, 33), linspace(0, 2, 17), linspace(0, 2, 17));
    grid.insert(grid.end(), fine.begin(), fine.end());
  }
  return grid;
}

PropertyResult oracle_agreement(bool quick) {
  return timed("analytic_equals_oracle", 1e-6, [&](PropertyResult& r) {
    const auto grid = quick ? product_grid({0, 0.25, 1}, {0, 0.5}, {0, 0.5})
                            : product_grid({0, 0.25, 1, 2, 4}, {0, 0.1, 0.5, 1}, {0, 0.1, 0.5, 1});
    const auto devs = parallel_map(grid.size(), [&](std::size_t k) {
      const TwinBeamParams& p = grid[k];
      const QuantReport a = analyze(p);
      const OracleResult o = run_oracle(p, {.check_positivity = false});
      return std::max({std::abs(o.negativity - a.negativity), std::abs(o.r_s - a.r_s),
                       std::abs(o.r_i - a.r_i), std::abs(o.s_s - a.s_s),
                       std::abs(o.s_i - a.s_i)});
    });
    r.max_deviation = *std::max_element(devs.begin(), devs.end());
    r.checks = grid.size() * 5;
    r.note = "N, R_s, R_i, S_s, S_i";
  });
}

PropertyResult positivity(bool quick) {
  return timed("density_matrix_positivity", kPositivityTolerance, [&](PropertyResult& r) {
    std::vector<TwinBeamParams> points{{1, 0, 0}, {2, 0.3, 0.7}};
    if (!quick) points.push_back({4, 1, 1});
    for (const TwinBeamParams& p : points) {
      const PositivityReport rep =
          positivity_check(build_density_matrix(p, choose_truncation(p).n_max));
      r.max_deviation = std::max(r.max_deviation, -rep.min_eigenvalue);
      ++r.checks;
    }
    r.max_deviation = std::max(r.max_deviation, 0.0);
    r.note = "-min eigenvalue of rho";
  });
}

PropertyResult tau_map(bool quick) {
  return timed("negativity_tau_map", 1e-12, [&](PropertyResult& r) {
    for (const TwinBeamParams& p : analytic_grid(quick)) {
      const double raw = negativity(p).raw;
      const double tau = nonclassical_depth(p);
      r.max_deviation =
          std::max(r.max_deviation, std::abs(raw - tau / (1.0 - 2.0 * tau)) / (1.0 + std::abs(raw)));
      ++r.checks;
    }
    r.note = "relative to 1 + |N|";
  });
}

PropertyResult block_form(bool quick) {
  return timed("block_form_equals_closed_form", 1e-12, [&](PropertyResult& r) {
    for (const TwinBeamParams& p : analytic_grid(quick)) {
      const double raw = negativity(p).raw;
      r.max_deviation = std::max(r.max_deviation,
                                 std::abs(negativity_block_form(p) - raw) / (1.0 + std::abs(raw)));
      ++r.checks;
    }
    r.note = "relative to 1 + |N|";
  });
}

PropertyResult boundary(bool quick) {
  return timed("boundary_coincidence", 1e-10, [&](PropertyResult& r) {
    std::mt19937_64 rng(20160615);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int count = quick ? 100 : 1000;
    for (int k = 0; k < count; ++k) {
      const double bs = u(rng);
      const double bi = u(rng) * (1.0 - bs);
      const auto bp = b_p_threshold(bs, bi);
      if (!bp) continue;
      const TwinBeamParams p{*bp, bs, bi};
      r.max_deviation = std::max({r.max_deviation, std::abs(nonclassical_depth(p)),
                                  std::abs(negativity(p).raw)});
      ++r.checks;
    }
    r.note = "|tau| and |raw N| on the separability threshold";
  });
}

PropertyResult distribution(bool quick) {
  return timed("d_n_normalization", 1e-6, [&](PropertyResult& r) {
    (void)quick;
    double dip[2] = {0.0, 0.0};
    const TwinBeamParams points[] = {{2, 0, 0}, {2, 0.1, 0.1}};
    for (int k = 0; k < 2; ++k) {
      const TwinBeamParams& p = points[k];
      const OracleResult o = run_oracle(p, {.check_positivity = false});
      double sum = 0.0;
      for (double d : o.distribution.d_n) sum += d;
      if (sum != o.negativity) {
        r.max_deviation = kInf;
        r.note = "sum of d_n differs from the oracle negativity";
        return;
      }
      r.max_deviation = std::max(r.max_deviation, std::abs(sum - negativity(p).value));
      const auto& d = o.distribution.d_n;
      dip[k] = 1.0 - d[2] / (0.5 * (d[1] + d[3]));
      r.checks += 2;
      if (k == 0) {
        const double q = 2.0 / 3.0;
        for (int m = 1; m <= 3; ++m) {
          const double closed = ((m + 1) / 2) * std::pow(q, 0.5 * m) / 3.0;
          r.max_deviation = std::max(r.max_deviation, std::abs(d[m] - closed));
          ++r.checks;
        }
      }
    }
    if (!(dip[1] < dip[0])) {
      r.max_deviation = kInf;
      r.note = "noise did not suppress the d_n dip at M = 2";
      return;
    }
    r.note = "exact regrouping; dip at M = 2: noiseless " + std::to_string(dip[0]) +
             ", noisy " + std::to_string(dip[1]);
  });
}

PropertyResult entropy_relation(bool fault) {
  return timed("entropy_relation", 1e-12, [&](PropertyResult& r) {
    const EntropyOffset offset = fault ? EntropyOffset::kUnity : EntropyOffset::kLnTwo;
    for (double t : linspace(0, 10, 101)) {
      r.max_deviation = std::max(
          r.max_deviation, std::abs(entropy_from_r(2.0 * t + 1.0, offset) - thermal_entropy(t)));
      ++r.checks;
    }
    if (entropy_from_r(1.0, offset) != 0.0) {
      r.max_deviation = std::max(r.max_deviation, std::abs(entropy_from_r(1.0, offset)));
      r.note = "pure state does not give zero entropy";
    }
    ++r.checks;
  });
}

PropertyResult noiseless_dimensionality(bool quick) {
  return timed("noiseless_dimensionality", 1e-12, [&](PropertyResult& r) {
    for (double bp : linspace(0, 10, quick ? 21 : 101)) {
      const TwinBeamParams p{bp, 0, 0};
      const double rs = participation_ratio(p, Field::kSignal);
      r.max_deviation = std::max(
          {r.max_deviation,
           std::abs(entanglement_dimensionality(p) - (rs + std::sqrt(rs * rs - 1.0))) / rs,
           std::abs(modified_k_ent(p) - rs) / rs, std::abs(r_ent(p) - 1.0)});
      r.checks += 3;
    }
    r.note = "relative to R_s";
  });
}

PropertyResult tau_w_sign(bool quick) {
  return timed("tau_w_sign", 1e-12, [&](PropertyResult& r) {
    const std::vector<int> counts = quick ? std::vector<int>{1, 5} : std::vector<int>{1, 2, 5};
    const double values[] = {0, 0.5, 1, 2, 4};
    for (int mp : counts)
      for (int ms : counts)
        for (int mi : counts)
          for (double bp : values)
            for (double bs : values)
              for (double bi : values) {
                const double t = tau_w({mp, ms, mi, bp, bs, bi});
                const double strength = 2.0 * mp * bp - ms * bs * bs - mi * bi * bi;
                double dev = 0.0;
                if (strength == 0.0) {
                  dev = std::abs(t);
                } else if ((strength > 0.0) != (t > 0.0)) {
                  dev = kInf;
                }
                r.max_deviation = std::max(r.max_deviation, dev);
                ++r.checks;
              }
    r.note = "sign mismatches count as infinite deviation";
  });
}

PropertyResult multiplicativity() {
  return timed("multimode_multiplicativity", 1e-4, [&](PropertyResult& r) {
    const TwinBeamParams p{0.5, 0, 0};
    const int n = 12;
    const double single = negativity_numeric(p, n);
    const double two = two_pair_pt_trace_norm(p, n);
    r.max_deviation = std::abs(two - (1.0 + 2.0 * single) * (1.0 + 2.0 * single));
    r.checks = 1;
    r.note = "n_max = " + std::to_string(n) + " per mode; N from the same truncation";
  });
}

}  // namespace

std::vector<PropertyResult> run_verify(const VerifyOptions& options) {
  const bool quick = options.quick;
  return {
      oracle_agreement(quick),   positivity(quick),        tau_map(quick),
      block_form(quick),         boundary(quick),          distribution(quick),
      entropy_relation(options.entropy_fault),             noiseless_dimensionality(quick),
      tau_w_sign(quick),         multiplicativity(),
  };
}

bool print_verify_report(const std::vector<PropertyResult>& results, std::ostream& out) {
  bool all = true;
  char line[256];
  for (const PropertyResult& r : results) {
    std::snprintf(line, sizeof line, "%-4s %-30s max_dev=%-10.3g tol=%-8.1g checks=%-6zu %7.2fs",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_deviation, r.tolerance,
                  r.checks, r.seconds);
    out << line;
    if (!r.note.empty()) out << "  (" << r.note << ')';
    out << '\n';
    all = all && r.passed;
  }
  out << (all ? "all properties passed" : "some properties FAILED") << '\n';
  return all;
}

}  // namespace twinbeam::cli
