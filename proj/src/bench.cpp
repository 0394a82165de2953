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

#include "qrs/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

namespace qrs::bench {
namespace {

std::uint64_t parse_count(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v >= 1.0) || v > 1e15 || v != std::floor(v)) {
    throw Error(Errc::InvalidParameter, "bad sample size: " + s);
  }
  return static_cast<std::uint64_t>(v);
}

// Elapsed seconds for one timed run, or the error that stopped it.
struct Trial {
  double seconds = 0.0;
  std::optional<std::string> error;
};

Trial time_once(const entropy::EntropySpec& spec, std::uint64_t size, std::uint64_t warmup) {
  try {
    auto src = entropy::EntropySource::from_spec(spec);
    double sink = 0.0;
    for (std::uint64_t i = 0; i < warmup; ++i) sink += src.read_double_unit();
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < size; ++i) sink += src.read_double_unit();
    const auto stop = std::chrono::steady_clock::now();
    volatile double keep = sink;
    (void)keep;
    const double secs = std::chrono::duration<double>(stop - start).count();
    return Trial{std::max(secs, 1e-9), std::nullopt};
  } catch (const Error& e) {
    return Trial{0.0, std::string(e.what())};
  }
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.backends.empty()) throw Error(Errc::InvalidParameter, "bench needs at least one backend");
  if (config.sizes.empty()) throw Error(Errc::InvalidParameter, "bench needs at least one size");
  for (std::size_t i = 1; i < config.sizes.size(); ++i) {
    if (config.sizes[i] < config.sizes[i - 1]) {
      throw Error(Errc::InvalidParameter, "bench sizes must be ascending");
    }
  }
  if (config.repeats < 1) throw Error(Errc::InvalidParameter, "bench needs repeats >= 1");

  std::vector<BenchRow> rows;
  for (const auto& spec : config.backends) {
    for (std::uint64_t size : config.sizes) {
      BenchRow row;
      row.backend = spec.label();
      row.backend_kind = spec.kind;
      row.sample_size = size;
      double best = std::numeric_limits<double>::infinity();
      for (unsigned r = 0; r < config.repeats; ++r) {
        const Trial t = time_once(spec, size, config.warmup);
        if (t.error) {
          row.error = *t.error;
          break;
        }
        best = std::min(best, t.seconds);
      }
      row.ok = row.error.empty();
      if (row.ok) {
        row.elapsed_s = best;
        row.throughput_per_s = static_cast<double>(size) / best;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<std::uint64_t> parse_sizes(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::uint64_t lo = parse_count(text.substr(0, dots));
    const std::uint64_t hi = parse_count(text.substr(dots + 2));
    if (lo > hi) throw Error(Errc::InvalidParameter, "size range must be ascending");
    for (std::uint64_t v = lo; v <= hi; v *= 10) {
      out.push_back(v);
      if (v > hi / 10) break;
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_count(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_csv(std::span<const BenchRow> rows, bool redact_timings) {
  std::string out = "backend,size,elapsed_s,throughput_per_s,status\n";
  char buf[64];
  for (const auto& row : rows) {
    out += row.backend;
    out += ',' + std::to_string(row.sample_size) + ',';
    if (row.ok) {
      std::snprintf(buf, sizeof buf, "%.9g", redact_timings ? 0.0 : row.elapsed_s);
      out += buf;
      out += ',';
      std::snprintf(buf, sizeof buf, "%.6g", redact_timings ? 0.0 : row.throughput_per_s);
      out += buf;
    } else {
      out += ',';
    }
    out += row.ok ? ",ok\n" : ",failed\n";
  }
  return out;
}

nlohmann::json to_json(std::span<const BenchRow> rows, bool redact_timings) {
  auto out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j;
    j["backend"] = row.backend;
    j["backend_kind"] = std::string(entropy::to_string(row.backend_kind));
    j["sample_size"] = row.sample_size;
    if (row.ok) {
      j["elapsed_s"] = redact_timings ? 0.0 : row.elapsed_s;
      j["throughput_per_s"] = redact_timings ? 0.0 : row.throughput_per_s;
      j["status"] = "ok";
    } else {
      j["elapsed_s"] = nullptr;
      j["throughput_per_s"] = nullptr;
      j["status"] = "failed";
      j["error"] = row.error;
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace qrs::bench
