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

#include "figures.hpp"

#include <string>

#include "format.hpp"
#include "twinbeam/analytic.hpp"
#include "twinbeam/fock.hpp"
#include "twinbeam/multimode.hpp"

namespace twinbeam::cli {

namespace {

// Parameter sets printed in the figure captions, and the axis ranges used
// for the swept variables.
struct FigureConstants {
  std::vector<double> b_p;     // one series per entry
  double axis_min = 0.0;       // swept variable(s)
  double axis_max = 1.0;
  std::vector<double> noise;   // fig4 only: b_s = b_i per series
};

const FigureConstants& constants(FigureId id) {
  static const FigureConstants table[] = {
      /* fig1  N vs b_p, noiseless         */ {{}, 0.0, 4.0, {}},
      /* fig2  N surfaces over b_s, b_i    */ {{0.5, 1, 2, 4}, 0.0, 1.0, {}},
      /* fig3  separability boundaries     */ {{0.01, 0.1, 0.5, 2, 100}, 0.0, 1.0, {}},
      /* fig4  d_N, b_p = 2, noise 0 / 0.1 */ {{2}, 0.0, 0.0, {0.0, 0.1}},
      /* fig5  tau vs b_p, noiseless       */ {{}, 0.0, 4.0, {}},
      /* fig6  tau surfaces                */ {{0.1, 0.5, 4}, 0.0, 1.0, {}},
      /* fig7  N vs tau                    */ {{}, 0.0, 0.475, {}},
      /* fig8  K~_ent and R_s, b_p = 1     */ {{1}, 0.0, 1.0, {}},
      /* fig9  r_ent surfaces              */ {{1, 10}, 0.0, 1.0, {}},
      /* fig10 S vs R                      */ {{}, 1.0, 20.0, {}},
      /* fig11 tau_W, m_p = m_s = m_i = 1  */ {{2, 4, 8}, 0.0, 4.0, {}},
  };
  return table[static_cast<int>(id) - 1];
}

std::vector<double> axis(const FigureConstants& c, int resolution) {
  std::vector<double> v(static_cast<std::size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    v[k] = resolution == 1 ? c.axis_min
                           : c.axis_min + (c.axis_max - c.axis_min) * k / (resolution - 1);
  }
  if (resolution > 1) v.back() = c.axis_max;
  return v;
}

template <typename F>
void surface(const FigureConstants& c, int resolution, std::ostream& out,
             const std::string& value_name, F value) {
  CsvWriter csv(out);
  csv.header(std::vector<std::string>{"b_p", "b_s", "b_i", value_name});
  const auto grid = axis(c, resolution);
  for (double bp : c.b_p)
    for (double bs : grid)
      for (double bi : grid) {
        const double row[] = {bp, bs, bi, value(TwinBeamParams{bp, bs, bi})};
        csv.row(row);
      }
}

}  // namespace

FigureId parse_figure_id(std::string_view text) {
  if (text.starts_with("fig")) {
    const std::string digits(text.substr(3));
    if (!digits.empty() && digits.size() <= 2 &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      const int n = std::stoi(digits);
      if (n >= 1 && n <= 11 && std::to_string(n) == digits) return static_cast<FigureId>(n);
    }
  }
  throw ConfigError("unknown figure '" + std::string(text) + "' (expected fig1 .. fig11)");
}

std::string figure_name(FigureId id) { return "fig" + std::to_string(static_cast<int>(id)); }

void write_figure(const FigureSpec& spec, std::ostream& out) {
  if (spec.resolution < 1) throw ConfigError("resolution must be ≥ 1");
  const FigureConstants& c = constants(spec.id);
  const int res = spec.resolution;
  CsvWriter csv(out);

  switch (spec.id) {
    case FigureId::kFig1: {
      csv.header(std::vector<std::string>{"b_p", "negativity"});
      for (double bp : axis(c, res)) {
        const double row[] = {bp, negativity({bp, 0, 0}).value};
        csv.row(row);
      }
      break;
    }
    case FigureId::kFig2:
      surface(c, res, out, "negativity",
              [](const TwinBeamParams& p) { return negativity(p).value; });
      break;
    case FigureId::kFig3: {
      csv.header(std::vector<std::string>{"b_p", "b_s", "b_i_boundary"});
      for (double bp : c.b_p) {
        for (double bs : axis(c, res)) {
          // b_p (1 - b_s - b_i) = b_s b_i solved for b_i.
          const double bi = bp * (1.0 - bs) / (bp + bs);
          if (bi < 0.0 || !(bs + bi < 1.0)) continue;
          const double row[] = {bp, bs, bi};
          csv.row(row);
        }
      }
      break;
    }
    case FigureId::kFig4: {
      csv.header(std::vector<std::string>{"b_p", "b_s", "b_i", "m", "d_n"});
      for (double bp : c.b_p) {
        for (double noise : c.noise) {
          const TwinBeamParams p{bp, noise, noise};
          const int n = oracle_truncation(p).n_max;
          const NegativityDistribution dist = negativity_distribution(p, n);
          // Blocks above n_max are cut by the truncation and left out.
          const int m_last = std::min(n, res - 1);
          for (int m = 0; m <= m_last; ++m) {
            const double row[] = {bp, noise, noise, static_cast<double>(m), dist.d_n[m]};
            csv.row(row);
          }
        }
      }
      break;
    }
    case FigureId::kFig5: {
      csv.header(std::vector<std::string>{"b_p", "tau"});
      for (double bp : axis(c, res)) {
        const double row[] = {bp, nonclassical_depth({bp, 0, 0})};
        csv.row(row);
      }
      break;
    }
    case FigureId::kFig6:
      surface(c, res, out, "tau", [](const TwinBeamParams& p) { return nonclassical_depth(p); });
      break;
    case FigureId::kFig7: {
      csv.header(std::vector<std::string>{"tau", "negativity"});
      for (double tau : axis(c, res)) {
        const double row[] = {tau, negativity_from_tau(tau)};
        csv.row(row);
      }
      break;
    }
    case FigureId::kFig8: {
      csv.header(std::vector<std::string>{"b_p", "b_s", "b_i", "value", "series"});
      const auto grid = axis(c, res);
      for (const char* series : {"k_ent_mod", "r_s"})
        for (double bp : c.b_p)
          for (double bs : grid)
            for (double bi : grid) {
              const TwinBeamParams p{bp, bs, bi};
              const double v = series[0] == 'k' ? modified_k_ent(p)
                                                : participation_ratio(p, Field::kSignal);
              out << csv_number(bp) << ',' << csv_number(bs) << ',' << csv_number(bi) << ','
                  << csv_number(v) << ',' << series << '\n';
            }
      break;
    }
    case FigureId::kFig9:
      surface(c, res, out, "r_ent", [](const TwinBeamParams& p) { return r_ent(p); });
      break;
    case FigureId::kFig10: {
      csv.header(std::vector<std::string>{"r", "s"});
      for (double r : axis(c, res)) {
        const double row[] = {r, entropy_from_r(r)};
        csv.row(row);
      }
      break;
    }
    case FigureId::kFig11:
      surface(c, res, out, "tau_w", [](const TwinBeamParams& p) {
        return tau_w({1, 1, 1, p.b_p, p.b_s, p.b_i});
      });
      break;
  }
}

}  // namespace twinbeam::cli
