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

#include "qrs/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>

#include "qrs/linalg.hpp"
#include "qrs/qstates.hpp"
#include "qrs/quantmetrics.hpp"

namespace qrs::stats {

// ---------------------------------------------------------------------------
// Goodness of fit

GofResult chi_square_test(std::span<const std::uint64_t> observed,
                          std::span<const double> probabilities, double min_expected) {
  if (observed.size() != probabilities.size() || observed.empty()) {
    throw Error(Errc::DimensionMismatch, "chi-square needs matching non-empty cells");
  }
  double total = 0.0;
  for (auto o : observed) total += static_cast<double>(o);

  std::vector<double> pooled_obs;
  std::vector<double> pooled_exp;
  double obs_acc = 0.0;
  double exp_acc = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    obs_acc += static_cast<double>(observed[i]);
    exp_acc += probabilities[i] * total;
    if (exp_acc >= min_expected) {
      pooled_obs.push_back(obs_acc);
      pooled_exp.push_back(exp_acc);
      obs_acc = exp_acc = 0.0;
    }
  }
  if (exp_acc > 0.0 || obs_acc > 0.0) {
    if (pooled_obs.empty()) {
      pooled_obs.push_back(obs_acc);
      pooled_exp.push_back(exp_acc);
    } else {
      pooled_obs.back() += obs_acc;
      pooled_exp.back() += exp_acc;
    }
  }

  GofResult r;
  r.cells = pooled_obs.size();
  for (std::size_t i = 0; i < pooled_obs.size(); ++i) {
    if (pooled_exp[i] <= 0.0) {
      r.statistic = pooled_obs[i] > 0.0 ? INFINITY : r.statistic;
      continue;
    }
    const double d = pooled_obs[i] - pooled_exp[i];
    r.statistic += d * d / pooled_exp[i];
  }
  r.dof = static_cast<double>(r.cells) - 1.0;
  if (r.dof < 1.0) {
    r.p_value = 1.0;
  } else if (!std::isfinite(r.statistic)) {
    r.p_value = 0.0;
  } else {
    r.p_value = boost::math::gamma_q(r.dof / 2.0, r.statistic / 2.0);
  }
  return r;
}

GofResult chi_square_uniform(std::span<const std::uint64_t> observed) {
  std::vector<double> p(observed.size(), 1.0 / static_cast<double>(observed.size()));
  return chi_square_test(observed, p);
}

double kolmogorov_tail(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-17) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

GofResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw Error(Errc::InvalidParameter, "KS test needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  const double root_n = std::sqrt(n);
  GofResult r;
  r.statistic = d;
  r.cells = samples.size();
  r.p_value = kolmogorov_tail((root_n + 0.12 + 0.11 / root_n) * d);
  return r;
}

// ---------------------------------------------------------------------------
// Reports

void RunningMoments::add(double x) noexcept {
  ++n;
  const double delta = x - mean;
  mean += delta / static_cast<double>(n);
  m2 += delta * (x - mean);
}

void RunningMoments::merge(const RunningMoments& other) noexcept {
  if (other.n == 0) return;
  if (n == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n);
  const double nb = static_cast<double>(other.n);
  const double delta = other.mean - mean;
  const double total = na + nb;
  mean += delta * nb / total;
  m2 += other.m2 + delta * delta * na * nb / total;
  n += other.n;
}

double RunningMoments::variance() const noexcept {
  return n < 2 ? 0.0 : m2 / static_cast<double>(n - 1);
}

double RunningMoments::sem() const noexcept {
  return n < 1 ? 0.0 : std::sqrt(variance() / static_cast<double>(n));
}

bool ExperimentReport::all_pass() const {
  for (const auto& row : rows) {
    if (row.pass && !*row.pass) return false;
  }
  return !gof || gof->p_value > kGofAlpha;
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["samples"] = samples;
  auto& out_rows = j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["x"] = row.x;
    r["empirical"] = row.empirical;
    r["analytic"] = row.analytic ? nlohmann::json(*row.analytic) : nlohmann::json(nullptr);
    r["stderr"] = row.std_error;
    r["pass"] = row.pass ? nlohmann::json(*row.pass) : nlohmann::json(nullptr);
    out_rows.push_back(std::move(r));
  }
  if (!moments.empty()) {
    auto& m = j["moments"] = nlohmann::json::array();
    for (const auto& row : moments) {
      m.push_back({{"index", row.index}, {"mean", row.mean}, {"stderr", row.std_error}});
    }
  }
  if (gof) {
    j["gof"] = {{"test", "chi-square"},
                {"statistic", gof->statistic},
                {"dof", gof->dof},
                {"p_value", gof->p_value},
                {"cells", gof->cells}};
  }
  if (max_simplex_deviation) j["max_simplex_deviation"] = *max_simplex_deviation;
  return j;
}

namespace {

// Shortest text that reads back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string ExperimentReport::to_csv() const {
  std::string out = "x,empirical,analytic,stderr,pass\n";
  for (const auto& row : rows) {
    out += shortest(row.x) + ',' + shortest(row.empirical) + ',';
    if (row.analytic) out += shortest(*row.analytic);
    out += ',' + shortest(row.std_error) + ',';
    if (row.pass) out += *row.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

namespace {

// Runs `work(source, share, accumulator)` on each source in its own thread
// and merges the shards in source order.
template <class Acc, class Params, class Work>
Acc run_sharded(std::span<EntropySource> sources, const Params& params, std::uint64_t total,
                Work work) {
  if (sources.empty()) throw Error(Errc::InvalidParameter, "no entropy sources for experiment");
  const std::uint64_t jobs = sources.size();
  std::vector<Acc> shards(jobs, Acc(params));
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::uint64_t w = 0; w < jobs; ++w) {
    const std::uint64_t share = total / jobs + (w < total % jobs ? 1 : 0);
    workers.emplace_back([&, w, share] {
      try {
        work(sources[w], share, shards[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc merged(params);
  for (const auto& shard : shards) merged.merge(shard);
  return merged;
}

}  // namespace

// ---------------------------------------------------------------------------
// Eigenvalue experiment

void validate(const EigenvalueParams& p) {
  if (p.dim < 2) throw Error(Errc::InvalidParameter, "eigenvalue experiment needs dim >= 2");
  if (p.samples < 100) throw Error(Errc::InvalidParameter, "eigenvalue experiment needs >= 100 samples");
  if (p.bins < 10) throw Error(Errc::InvalidParameter, "eigenvalue experiment needs >= 10 bins");
}

double hs_qubit_lambda_max_probability(double a, double b) {
  const auto cdf = [](double x) {
    const double t = 2.0 * std::clamp(x, 0.5, 1.0) - 1.0;
    return t * t * t;
  };
  return cdf(b) - cdf(a);
}

EigenvalueAccumulator::EigenvalueAccumulator(const EigenvalueParams& params)
    : params_(params),
      histogram_(params.bins, 0),
      ordered_(static_cast<std::size_t>(std::max(params.dim, 0))) {}

double EigenvalueAccumulator::lower() const noexcept { return params_.dim == 2 ? 0.5 : 0.0; }
double EigenvalueAccumulator::upper() const noexcept { return 1.0; }

void EigenvalueAccumulator::add(std::span<const double> eigenvalues) {
  if (eigenvalues.size() != ordered_.size()) {
    throw Error(Errc::DimensionMismatch, "eigenvalue vector has wrong length");
  }
  std::vector<double> desc(eigenvalues.begin(), eigenvalues.end());
  std::sort(desc.begin(), desc.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < desc.size(); ++i) {
    ordered_[i].add(desc[i]);
    sum += desc[i];
    max_simplex_deviation_ = std::max(max_simplex_deviation_, -desc[i]);
  }
  max_simplex_deviation_ = std::max(max_simplex_deviation_, std::abs(sum - 1.0));

  const double lo = lower();
  const double width = (upper() - lo) / static_cast<double>(params_.bins);
  const auto bin_of = [&](double x) {
    const auto b = static_cast<long long>(std::floor((x - lo) / width));
    return static_cast<std::size_t>(std::clamp<long long>(b, 0, static_cast<long long>(params_.bins) - 1));
  };
  if (params_.dim == 2) {
    ++histogram_[bin_of(desc.front())];
  } else {
    for (double x : desc) ++histogram_[bin_of(x)];
  }
  ++count_;
}

void EigenvalueAccumulator::merge(const EigenvalueAccumulator& other) {
  if (other.params_.dim != params_.dim || other.params_.bins != params_.bins) {
    throw Error(Errc::DimensionMismatch, "cannot merge accumulators with different shapes");
  }
  count_ += other.count_;
  for (std::size_t i = 0; i < histogram_.size(); ++i) histogram_[i] += other.histogram_[i];
  for (std::size_t i = 0; i < ordered_.size(); ++i) ordered_[i].merge(other.ordered_[i]);
  max_simplex_deviation_ = std::max(max_simplex_deviation_, other.max_simplex_deviation_);
}

ExperimentReport EigenvalueAccumulator::finish() const {
  ExperimentReport report;
  report.experiment = "eigenvalues-hs-n" + std::to_string(params_.dim);
  report.samples = count_;
  report.max_simplex_deviation = max_simplex_deviation_;

  const double lo = lower();
  const double width = (upper() - lo) / static_cast<double>(params_.bins);
  const bool closed_form = params_.dim == 2;
  // For N = 2 each sample contributes one value (its largest eigenvalue).
  const double values = static_cast<double>(count_) * (closed_form ? 1.0 : params_.dim);

  std::vector<double> probs;
  for (std::size_t b = 0; b < params_.bins; ++b) {
    const double a = lo + width * static_cast<double>(b);
    const double count = static_cast<double>(histogram_[b]);
    ReportRow row;
    row.x = a + 0.5 * width;
    row.empirical = values > 0 ? count / (values * width) : 0.0;
    if (closed_form) {
      const double p = hs_qubit_lambda_max_probability(a, a + width);
      probs.push_back(p);
      const double sd_count = std::sqrt(values * p * (1.0 - p));
      row.analytic = p / width;
      row.std_error = sd_count / (values * width);
      // One count of continuity slack keeps sparse edge bins meaningful.
      row.pass = std::abs(count - values * p) <= kSemBand * sd_count + 1.0;
    } else {
      const double p_hat = (count + 0.5) / (values + 1.0);
      row.std_error = std::sqrt(p_hat * (1.0 - p_hat) / std::max(values, 1.0)) / width;
    }
    report.rows.push_back(row);
  }
  if (closed_form && count_ > 0) report.gof = chi_square_test(histogram_, probs);

  for (std::size_t i = 0; i < ordered_.size(); ++i) {
    report.moments.push_back(MomentRow{i + 1, ordered_[i].mean, ordered_[i].sem()});
  }
  return report;
}

void sample_eigenvalues(EntropySource& src, std::uint64_t samples, EigenvalueAccumulator& acc) {
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto rho = states::random_state_hs(src, acc.dim());
    const linalg::RealVector ev = linalg::hermitian_eigenvalues(rho.matrix());
    acc.add(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
  }
}

ExperimentReport eigenvalue_experiment(EntropySource& src, const EigenvalueParams& params) {
  return eigenvalue_experiment(std::span<EntropySource>(&src, 1), params);
}

ExperimentReport eigenvalue_experiment(std::span<EntropySource> sources,
                                       const EigenvalueParams& params) {
  validate(params);
  auto acc = run_sharded<EigenvalueAccumulator>(
      sources, params, params.samples,
      [](EntropySource& src, std::uint64_t share, EigenvalueAccumulator& out) {
        sample_eigenvalues(src, share, out);
      });
  return acc.finish();
}

// ---------------------------------------------------------------------------
// Mean fidelity experiment

void validate(const FidelityParams& p) {
  if (p.k_values.empty()) throw Error(Errc::InvalidParameter, "mean-fidelity needs at least one K");
  for (auto k : p.k_values) {
    if (k < 1) throw Error(Errc::InvalidParameter, "mean-fidelity needs every K >= 1");
  }
  if (p.pairs < 10) throw Error(Errc::InvalidParameter, "mean-fidelity needs >= 10 pairs per K");
}

FidelityAccumulator::FidelityAccumulator(const FidelityParams& params)
    : params_(params), per_k_(params.k_values.size()) {}

void FidelityAccumulator::add(std::size_t k_index, double fidelity) {
  per_k_.at(k_index).add(fidelity);
}

void FidelityAccumulator::merge(const FidelityAccumulator& other) {
  if (other.per_k_.size() != per_k_.size()) {
    throw Error(Errc::DimensionMismatch, "cannot merge accumulators with different K lists");
  }
  for (std::size_t i = 0; i < per_k_.size(); ++i) per_k_[i].merge(other.per_k_[i]);
}

ExperimentReport FidelityAccumulator::finish() const {
  ExperimentReport report;
  report.experiment = "mean-fidelity-qubit";
  report.samples = per_k_.empty() ? 0 : per_k_.front().n;
  for (std::size_t i = 0; i < per_k_.size(); ++i) {
    const auto& m = per_k_[i];
    ReportRow row;
    row.x = static_cast<double>(params_.k_values[i]);
    row.empirical = m.mean;
    row.analytic = metrics::mean_fidelity_2K(params_.k_values[i]);
    row.std_error = m.sem();
    row.pass = std::abs(m.mean - *row.analytic) < kSemBand * row.std_error;
    report.rows.push_back(row);
  }
  return report;
}

void sample_fidelities(EntropySource& src, std::uint64_t pairs, FidelityAccumulator& acc) {
  const auto& ks = acc.k_values();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto k = static_cast<linalg::Index>(ks[i]);
    for (std::uint64_t p = 0; p < pairs; ++p) {
      const auto a = states::random_state_induced(src, 2, k);
      const auto b = states::random_state_induced(src, 2, k);
      acc.add(i, metrics::fidelity(a, b));
    }
  }
}

ExperimentReport mean_fidelity_experiment(EntropySource& src, const FidelityParams& params) {
  return mean_fidelity_experiment(std::span<EntropySource>(&src, 1), params);
}

ExperimentReport mean_fidelity_experiment(std::span<EntropySource> sources,
                                          const FidelityParams& params) {
  validate(params);
  auto acc = run_sharded<FidelityAccumulator>(
      sources, params, params.pairs,
      [](EntropySource& src, std::uint64_t share, FidelityAccumulator& out) {
        sample_fidelities(src, share, out);
      });
  return acc.finish();
}

}  // namespace qrs::stats
