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

#ifndef QRS_BENCH_HPP
#define QRS_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qrs/entropy.hpp"

namespace qrs::bench {

struct BenchRow {
  std::string backend;  // entropy spec label, e.g. "prng:1"
  entropy::BackendKind backend_kind = entropy::BackendKind::Prng;
  std::uint64_t sample_size = 0;
  double elapsed_s = 0.0;
  double throughput_per_s = 0.0;
  bool ok = false;
  std::string error;  // set when !ok
};

struct BenchConfig {
  std::vector<entropy::EntropySpec> backends;
  std::vector<std::uint64_t> sizes;  // ascending
  unsigned repeats = 5;
  std::uint64_t warmup = 1000;
};

// Times the generation of `size` unit doubles per backend and size; each
// repeat opens a fresh source and draws `warmup` values before the clock
// starts. Reports the fastest repeat. Backend failures mark the row failed.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// "1e1..1e5" (decades), or a comma list such as "10,100,1e3".
std::vector<std::uint64_t> parse_sizes(std::string_view text);

// Header: backend,size,elapsed_s,throughput_per_s,status. With
// `redact_timings` the timing columns are written as 0 for golden files.
std::string to_csv(std::span<const BenchRow> rows, bool redact_timings = false);
nlohmann::json to_json(std::span<const BenchRow> rows, bool redact_timings = false);

}  // namespace qrs::bench

#endif  // QRS_BENCH_HPP
