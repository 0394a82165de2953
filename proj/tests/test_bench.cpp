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

#include <doctest.h>

#include <sstream>
#include <vector>

#include "qrs/bench.hpp"
#include "test_support.hpp"

using qrs::Error;
using namespace qrs::bench;
using qrs::entropy::BackendKind;
using qrs::entropy::parse_spec;

namespace {

// Elapsed per backend must not decrease with size; 10% slack at sizes <= 100.
bool monotone(const std::vector<BenchRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].backend != rows[i - 1].backend) continue;
    const double slack = rows[i - 1].sample_size <= 100 ? 0.9 : 1.0;
    if (rows[i].elapsed_s < slack * rows[i - 1].elapsed_s) return false;
  }
  return true;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("parse_sizes") {
  CHECK(parse_sizes("1e1..1e5") == std::vector<std::uint64_t>{10, 100, 1000, 10000, 100000});
  CHECK(parse_sizes("1e1") == std::vector<std::uint64_t>{10});
  CHECK(parse_sizes("10,200,3000") == std::vector<std::uint64_t>{10, 200, 3000});
  CHECK(parse_sizes("1e3..1e3") == std::vector<std::uint64_t>{1000});
  for (const char* bad : {"", "abc", "0", "1.5", "1e5..1e1", "10,,20", "-5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_sizes(bad), Error);
  }
}

TEST_CASE("single prng row") {
  BenchConfig cfg{{parse_spec("prng:1")}, {10}, 3, 100};
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ok);
  CHECK(rows[0].elapsed_s > 0.0);
  CHECK(rows[0].backend == "prng:1");
  CHECK(rows[0].throughput_per_s == doctest::Approx(10 / rows[0].elapsed_s));
}

TEST_CASE("prng and os: complete and monotone over 1e1..1e5") {
  BenchConfig cfg{{parse_spec("prng:1"), parse_spec("os")}, parse_sizes("1e1..1e5"), 5, 1000};
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 10);
  for (const auto& r : rows) CHECK(r.ok);
  CHECK(monotone(rows));
  CHECK(rows[0].backend_kind == BackendKind::Prng);
  CHECK(rows[5].backend_kind == BackendKind::Os);
}

TEST_CASE("device fixture: exhaustion marks larger sizes failed") {
  qrs::testing::TempDir dir;
  const auto path = dir / "mb.bin";
  qrs::testing::write_fixture(path, qrs::testing::reference_bytes(5, 1 << 20));
  BenchConfig cfg{{parse_spec("dev:" + path.string())}, {10, 1000, 100000, 1000000}, 2, 1000};
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].ok);
  CHECK(rows[1].ok);
  CHECK(rows[2].ok);
  CHECK_FALSE(rows[3].ok);
  CHECK(rows[3].error.find("ShortRead") != std::string::npos);
}

TEST_CASE("unreachable remote yields failed rows and the run continues") {
  BenchConfig cfg{{parse_spec("http:http://127.0.0.1:9/x"), parse_spec("prng:2")}, {10}, 1, 10};
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].ok);
  CHECK(rows[1].ok);
  const auto csv = lines_of(to_csv(rows));
  REQUIRE(csv.size() == 3);
  CHECK(csv[0] == "backend,size,elapsed_s,throughput_per_s,status");
  CHECK(csv[1] == "http:http://127.0.0.1:9/x,10,,,failed");
  CHECK(csv[2].rfind("prng:2,10,", 0) == 0);
  CHECK(csv[2].substr(csv[2].size() - 3) == ",ok");
}

TEST_CASE("mock remote backend benches ok") {
  qrs::testing::MockQrngServer server(3);
  BenchConfig cfg{{parse_spec("http:" + server.endpoint())}, {10, 100}, 1, 10};
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ok);
  CHECK(rows[1].ok);
}

TEST_CASE("redacted output is stable") {
  BenchConfig cfg{{parse_spec("prng:1")}, {10, 100}, 1, 10};
  const auto a = to_csv(run_bench(cfg), true);
  const auto b = to_csv(run_bench(cfg), true);
  CHECK(a == b);
  CHECK(lines_of(a)[1] == "prng:1,10,0,0,ok");
  const auto j = to_json(run_bench(cfg), true);
  CHECK(j.size() == 2);
  CHECK(j[0]["elapsed_s"] == 0.0);
  CHECK(j[0]["status"] == "ok");
  CHECK(j[0]["backend_kind"] == "prng");
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(run_bench({{}, {10}, 1, 0}), Error);
  CHECK_THROWS_AS(run_bench({{parse_spec("os")}, {}, 1, 0}), Error);
  CHECK_THROWS_AS(run_bench({{parse_spec("os")}, {100, 10}, 1, 0}), Error);
  CHECK_THROWS_AS(run_bench({{parse_spec("os")}, {10}, 0, 0}), Error);
}
