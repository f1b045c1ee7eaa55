// Copyright 2026 The readscore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Linear UES model: coefficient sets, weighted least squares fitting,
// diagnostics and persistence.

#ifndef READSCORE_MODEL_HPP
#define READSCORE_MODEL_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "readscore/features.hpp"

namespace readscore {

/// How the frequency predictor enters the linear predictor.
enum class FrequencyEncoding {
  kProportion,
  /// zipf_scale(proportion).
  kZipf,
};

std::string_view encoding_name(FrequencyEncoding encoding);
FrequencyEncoding encoding_from_name(std::string_view name);

struct CoefficientSet {
  double intercept = 0.0;
  std::vector<std::pair<std::string, double>> weights;
  FrequencyEncoding frequency_encoding = FrequencyEncoding::kProportion;
  std::string provenance;

  /// Throws ValidationError for an unknown name.
  double weight(std::string_view name) const;

  friend bool operator==(const CoefficientSet&, const CoefficientSet&) = default;
};

/// The B column of the published regression table, proportion encoding.
CoefficientSet published_model();

/// Predictor values as the model sees them (frequency re-encoded).
std::array<double, kPredictorCount> design_row(const WordFeatures& features,
                                               FrequencyEncoding encoding);

/// intercept + sum of weight * predictor. Throws ValidationError unless the
/// weights are exactly the nine predictors in table order.
double predict(const CoefficientSet& coefficients, const WordFeatures& features);

struct DesignMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  std::vector<double> weights;
  std::vector<std::string> labels;

  explicit DesignMatrix(std::vector<std::string> predictor_names = {})
      : names(std::move(predictor_names)) {}

  /// Throws ValidationError on a dimension mismatch, a non-finite value or
  /// a non-positive weight.
  void add_row(std::string label, std::vector<double> row, double response,
               double weight = 1.0);
  std::size_t rows() const { return y.size(); }
  std::size_t predictors() const { return names.size(); }
};

/// One row per word; `weights` may be empty (all 1).
DesignMatrix make_design(const std::vector<WordFeatures>& features,
                         const std::vector<double>& ues,
                         FrequencyEncoding encoding,
                         const std::vector<double>& weights = {});

/// Per-term vectors are indexed with the intercept first; beta[0] is NaN.
struct RegressionFit {
  std::vector<std::string> names;
  std::vector<double> b;
  std::vector<double> se;
  std::vector<double> beta;
  std::vector<double> t;
  std::vector<double> p;
  double r2 = 0.0;
  double adjusted_r2 = 0.0;
  double f_stat = 0.0;
  double f_p = 0.0;
  double df_residual = 0.0;
  /// Residual standard error.
  double sigma = 0.0;
  double total_weight = 0.0;
  std::vector<double> residuals;
  std::vector<double> fitted;
  std::vector<double> weights;
  std::vector<std::string> labels;

  /// Valid when the fit used the nine predictors in table order.
  CoefficientSet coefficients(FrequencyEncoding encoding,
                              std::string provenance) const;
};

/// Weighted least squares through a column-pivoted Householder QR of the
/// column-scaled, sqrt(weight)-scaled design. Residual degrees of freedom
/// are sum(weights) - predictors - 1. Throws NumericalError with too few
/// rows or a rank-deficient design (naming the dependent columns).
RegressionFit fit_ols(const DesignMatrix& design);

struct TermRow {
  std::string term;
  double b;
  double se;
  double beta;
  double t;
  double p;
};

struct PPPoint {
  std::string label;
  double standardized_residual;
  double theoretical_quantile;
  double observed_cumulative;
  double expected_cumulative;
};

struct DiagnosticsReport {
  std::vector<TermRow> terms;
  double r2 = 0.0;
  double adjusted_r2 = 0.0;
  double f_stat = 0.0;
  double f_p = 0.0;
  double df_residual = 0.0;
  std::size_t rows = 0;
  bool zero_residual_variance = false;
  /// Sorted by standardized residual.
  std::vector<PPPoint> pp;
};

DiagnosticsReport diagnostics_report(const RegressionFit& fit);

/// term,B,SE_B,beta,t,p with three decimals.
std::string coefficient_table_csv(const DiagnosticsReport& report);
std::string pp_csv(const DiagnosticsReport& report);
/// Human-readable fit summary; `reference_adjusted_r2` is printed alongside
/// when finite.
std::string fit_summary(const DiagnosticsReport& report,
                        double reference_adjusted_r2);

/// Versioned text record; doubles are written in round-trip form.
std::string serialize_model(const CoefficientSet& coefficients);
CoefficientSet parse_model(std::string_view text, const std::string& source);
void save_model(const std::filesystem::path& path,
                const CoefficientSet& coefficients);
CoefficientSet load_model(const std::filesystem::path& path);

}  // namespace readscore

#endif  // READSCORE_MODEL_HPP
