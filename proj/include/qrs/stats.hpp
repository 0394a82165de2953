// Copyright 2026 The qrstates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRS_STATS_HPP
#define QRS_STATS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrs/entropy.hpp"

namespace qrs::stats {

using entropy::EntropySource;

// ---------------------------------------------------------------------------
// Goodness of fit

struct GofResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 0.0;
  std::size_t cells = 0;  // after pooling
};

// Pearson chi-square of observed counts against cell probabilities. Adjacent
// cells are pooled left to right until each expected count is at least
// `min_expected` (the trailing remainder joins the last pooled cell).
GofResult chi_square_test(std::span<const std::uint64_t> observed,
                          std::span<const double> probabilities, double min_expected = 5.0);

GofResult chi_square_uniform(std::span<const std::uint64_t> observed);

// One-sample Kolmogorov-Smirnov against a continuous CDF, with the
// asymptotic Kolmogorov tail (Stephens small-sample correction).
GofResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

// Upper tail of the Kolmogorov distribution, Q(lambda).
double kolmogorov_tail(double lambda);

// ---------------------------------------------------------------------------
// Reports

// Welford mean/variance with Chan's pairwise merge.
struct RunningMoments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept;
  void merge(const RunningMoments& other) noexcept;
  double variance() const noexcept;  // unbiased; 0 when n < 2
  double sem() const noexcept;
};

struct ReportRow {
  double x = 0.0;
  double empirical = 0.0;
  std::optional<double> analytic;
  double std_error = 0.0;
  std::optional<bool> pass;
};

struct MomentRow {
  std::size_t index = 0;  // 1-based, eigenvalues sorted descending
  double mean = 0.0;
  double std_error = 0.0;
};

struct ExperimentReport {
  std::string experiment;
  std::uint64_t samples = 0;
  std::vector<ReportRow> rows;
  std::vector<MomentRow> moments;
  std::optional<GofResult> gof;
  std::optional<double> max_simplex_deviation;

  // Every verdict row passes and, when present, the chi-square p > 0.001.
  bool all_pass() const;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

inline constexpr double kSemBand = 5.0;
inline constexpr double kGofAlpha = 1e-3;

// ---------------------------------------------------------------------------
// Eigenvalue distribution under the Hilbert-Schmidt measure

struct EigenvalueParams {
  int dim = 4;
  std::uint64_t samples = 2000;
  std::size_t bins = 40;
};

void validate(const EigenvalueParams& p);

// Sufficient statistics; merge() combines shards drawn from independent sources.
class EigenvalueAccumulator {
 public:
  explicit EigenvalueAccumulator(const EigenvalueParams& params);

  void add(std::span<const double> eigenvalues);
  void merge(const EigenvalueAccumulator& other);
  ExperimentReport finish() const;

  // Histogram range: [1/2, 1] of the largest eigenvalue for N = 2, all
  // eigenvalues jointly on [0, 1] otherwise.
  double lower() const noexcept;
  double upper() const noexcept;
  int dim() const noexcept { return params_.dim; }

 private:
  EigenvalueParams params_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> histogram_;
  std::vector<RunningMoments> ordered_;
  double max_simplex_deviation_ = 0.0;
};

void sample_eigenvalues(EntropySource& src, std::uint64_t samples, EigenvalueAccumulator& acc);

ExperimentReport eigenvalue_experiment(EntropySource& src, const EigenvalueParams& params);

// Splits the samples over independent sources, one worker thread each.
ExperimentReport eigenvalue_experiment(std::span<EntropySource> sources,
                                       const EigenvalueParams& params);

// Probability that the larger eigenvalue of an HS-random qubit state lies in
// [a, b] (subset of [1/2, 1]): (2b-1)^3 - (2a-1)^3.
double hs_qubit_lambda_max_probability(double a, double b);

// ---------------------------------------------------------------------------
// Mean fidelity under mu_{2,K}

struct FidelityParams {
  std::vector<long long> k_values{2, 3, 5, 10, 20};
  std::uint64_t pairs = 50;
};

void validate(const FidelityParams& p);

class FidelityAccumulator {
 public:
  explicit FidelityAccumulator(const FidelityParams& params);

  void add(std::size_t k_index, double fidelity);
  void merge(const FidelityAccumulator& other);
  ExperimentReport finish() const;
  const std::vector<long long>& k_values() const noexcept { return params_.k_values; }

 private:
  FidelityParams params_;
  std::vector<RunningMoments> per_k_;
};

void sample_fidelities(EntropySource& src, std::uint64_t pairs, FidelityAccumulator& acc);

ExperimentReport mean_fidelity_experiment(EntropySource& src, const FidelityParams& params);
ExperimentReport mean_fidelity_experiment(std::span<EntropySource> sources,
                                          const FidelityParams& params);

}  // namespace qrs::stats

#endif  // QRS_STATS_HPP
