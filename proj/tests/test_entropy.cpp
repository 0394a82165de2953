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

#include <array>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "qrs/entropy.hpp"
#include "qrs/stats.hpp"
#include "test_support.hpp"

using qrs::Errc;
using qrs::Error;
using namespace qrs::entropy;

namespace {

std::vector<std::byte> to_bytes(std::initializer_list<int> values) {
  std::vector<std::byte> out;
  for (int v : values) out.push_back(static_cast<std::byte>(v));
  return out;
}

template <class F>
Errc error_code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qrs::Error");
  return Errc::Format;
}

}  // namespace

TEST_CASE("prng golden bytes, seed 0") {
  // SplitMix64 reference words 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, little-endian.
  auto src = EntropySource::prng(0);
  const auto got = src.read_bytes(16);
  CHECK(got == to_bytes({175, 205, 29, 123, 57, 168, 32, 226, 244, 101, 185, 161, 106, 158, 120,
                         110}));
  const auto third = src.read_bytes(8);
  std::uint64_t w = 0;
  for (int i = 7; i >= 0; --i) w = (w << 8) | std::to_integer<std::uint8_t>(third[i]);
  CHECK(w == 0x06c45d188009454fULL);
}

TEST_CASE("prng golden unit doubles, seed 42") {
  auto src = EntropySource::prng(42);
  CHECK(src.read_double_unit() == 0.7415648787718233);
  CHECK(src.read_double_unit() == 0.1599103928769201);
  CHECK(src.read_double_unit() == 0.27860113025513866);
}

TEST_CASE("read_bytes: zero length and determinism") {
  auto a = EntropySource::prng(1);
  CHECK(a.read_bytes(0).empty());
  CHECK(a.byte_counter() == 0);

  auto s1 = EntropySource::prng(12345);
  auto s2 = EntropySource::prng(12345);
  CHECK(s1.read_bytes(16) == s2.read_bytes(16));
}

TEST_CASE("prng stream does not depend on read chunking") {
  auto whole = EntropySource::prng(5);
  const auto ref = whole.read_bytes(103);
  auto pieces = EntropySource::prng(5);
  std::vector<std::byte> joined;
  for (std::size_t n : {1, 2, 3, 5, 7, 11, 13, 17, 19, 25}) {
    const auto part = pieces.read_bytes(n);
    joined.insert(joined.end(), part.begin(), part.end());
  }
  CHECK(joined == ref);
}

TEST_CASE("distinct seeds give distinct streams") {
  auto a = EntropySource::prng(1);
  auto b = EntropySource::prng(2);
  CHECK(a.read_bytes(32) != b.read_bytes(32));
}

TEST_CASE("device backend: short fixture raises ShortRead") {
  qrs::testing::TempDir dir;
  const auto path = dir / "eight.bin";
  qrs::testing::write_fixture(path, std::vector<std::byte>(8, std::byte{0}));
  auto src = EntropySource::device(path);
  CHECK(error_code_of([&] { src.read_bytes(16); }) == Errc::ShortRead);
}

TEST_CASE("device backend: missing path raises DeviceUnavailable") {
  qrs::testing::TempDir dir;
  CHECK(error_code_of([&] { EntropySource::device(dir / "nope.bin"); }) ==
        Errc::DeviceUnavailable);
}

TEST_CASE("device backend reads fixture sequentially") {
  qrs::testing::TempDir dir;
  const auto path = dir / "seq.bin";
  const auto bytes = qrs::testing::reference_bytes(3, 64);
  qrs::testing::write_fixture(path, bytes);
  auto src = EntropySource::device(path);
  const auto head = src.read_bytes(10);
  const auto tail = src.read_bytes(54);
  CHECK(std::equal(head.begin(), head.end(), bytes.begin()));
  CHECK(std::equal(tail.begin(), tail.end(), bytes.begin() + 10));
  CHECK(src.byte_counter() == 64);
}

TEST_CASE("read_int_in edge cases") {
  auto src = EntropySource::prng(9);
  CHECK(src.read_int_in(5, 5) == 5);
  CHECK(src.byte_counter() == 0);

  for (int i = 0; i < 1000; ++i) {
    const auto v = src.read_int_in(0, 1);
    CHECK((v == 0 || v == 1));
  }
  for (int i = 0; i < 1000; ++i) {
    const auto v = src.read_int_in(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  CHECK(error_code_of([&] { src.read_int_in(2, 1); }) == Errc::InvalidRange);
  CHECK(error_code_of([&] { src.read_int_in(0, std::int64_t{1} << 32); }) == Errc::InvalidRange);
  const auto wide = src.read_int_in(0, (std::int64_t{1} << 32) - 1);
  CHECK(wide >= 0);
}

TEST_CASE("read_int_in(0,5), seed 7: chi-square uniform") {
  auto src = EntropySource::prng(7);
  std::vector<std::uint64_t> counts(6, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(src.read_int_in(0, 5))];
  const double sigma = std::sqrt(n * (1.0 / 6) * (5.0 / 6));
  for (auto c : counts) CHECK(std::abs(static_cast<double>(c) - n / 6.0) < 5 * sigma);
  CHECK(qrs::stats::chi_square_uniform(counts).p_value > 1e-3);
}

TEST_CASE("acceptance limit is a multiple of the range") {
  using detail::acceptance_limit;
  using detail::byte_width_for;
  for (std::uint64_t range = 1; range <= 70000; range += (range < 600 ? 1 : 97)) {
    const unsigned w = byte_width_for(range);
    const std::uint64_t space = std::uint64_t{1} << (8 * w);
    CHECK(space >= range);
    if (w > 1) CHECK((std::uint64_t{1} << (8 * (w - 1))) < range);
    const std::uint64_t lim = acceptance_limit(range, w);
    CHECK(lim % range == 0);
    CHECK(lim <= space);
    CHECK(space - lim < range);
  }
  const std::uint64_t top = std::uint64_t{1} << 32;
  CHECK(byte_width_for(top) == 4);
  CHECK(acceptance_limit(top, 4) == top);
  CHECK(acceptance_limit(3, 1) == 255);
  CHECK(acceptance_limit(256, 1) == 256);
}

TEST_CASE("unit double bit mapping") {
  std::array<std::byte, 8> zeros{};
  CHECK(detail::unit_double_from_bytes(zeros) == 0.0);
  std::array<std::byte, 8> ones{};
  ones.fill(std::byte{0xff});
  CHECK(detail::unit_double_from_bytes(ones) == (std::ldexp(1.0, 53) - 1.0) / std::ldexp(1.0, 53));

  qrs::testing::TempDir dir;
  qrs::testing::write_fixture(dir / "z.bin", std::vector<std::byte>(8, std::byte{0}));
  qrs::testing::write_fixture(dir / "f.bin", std::vector<std::byte>(8, std::byte{0xff}));
  auto z = EntropySource::device(dir / "z.bin");
  auto f = EntropySource::device(dir / "f.bin");
  CHECK(z.read_double_unit() == 0.0);
  CHECK(f.read_double_unit() == 1.0 - std::ldexp(1.0, -53));
}

TEST_CASE("read_double_unit mean") {
  auto src = EntropySource::prng(11);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = src.read_double_unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 5 * std::sqrt(1.0 / 12 / n));
}

TEST_CASE("read_double_in") {
  auto a = EntropySource::prng(4);
  auto b = EntropySource::prng(4);
  for (int i = 0; i < 100; ++i) CHECK(a.read_double_in(0.0, 1.0) == b.read_double_unit());

  const double eps = 1e-15;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.read_double_in(2.0, 2.0 + eps);
    CHECK(x >= 2.0);
    CHECK(x < 2.0 + eps);
  }
  for (int i = 0; i < 1000; ++i) {
    const double phi = a.read_double_in(0.0, 2 * M_PI);
    CHECK(phi >= 0.0);
    CHECK(phi < 2 * M_PI);
  }
  CHECK(error_code_of([&] { a.read_double_in(1.0, 1.0); }) == Errc::InvalidRange);
  CHECK(error_code_of([&] { a.read_double_in(0.0, INFINITY); }) == Errc::InvalidRange);
  CHECK(error_code_of([&] { a.read_double_in(NAN, 1.0); }) == Errc::InvalidRange);
}

TEST_CASE("read_double_in never returns hi after rounding") {
  qrs::testing::TempDir dir;
  qrs::testing::write_fixture(dir / "f.bin", std::vector<std::byte>(8, std::byte{0xff}));
  auto f = EntropySource::device(dir / "f.bin");
  const double x = f.read_double_in(1.0, 1.0 + 4 * std::numeric_limits<double>::epsilon());
  CHECK(x < 1.0 + 4 * std::numeric_limits<double>::epsilon());
}

TEST_CASE("describe per backend") {
  const auto p = EntropySource::prng(1).describe();
  CHECK(p.backend_kind == BackendKind::Prng);
  CHECK(p.library_version == kLibraryVersion);
  CHECK_FALSE(p.serial_number);
  CHECK_FALSE(p.device_id);
  CHECK_FALSE(p.device_type);

  const auto o = EntropySource::os().describe();
  CHECK(o.backend_kind == BackendKind::Os);
  CHECK_FALSE(o.serial_number);
  CHECK_FALSE(o.device_type);

  qrs::testing::TempDir dir;
  qrs::testing::write_fixture(dir / "d.bin", std::vector<std::byte>(4, std::byte{1}));
  const auto d = EntropySource::device(dir / "d.bin").describe();
  CHECK(to_string(d.backend_kind) == "device");
  REQUIRE(d.device_type);
  CHECK(*d.device_type == "regular-file");
  CHECK(d.serial_number);
  CHECK(d.device_id);
}

TEST_CASE("stream accounting over mixed reads") {
  auto src = EntropySource::prng(8);
  std::uint64_t expected = 0;
  std::uint64_t prev = 0;
  for (std::size_t n : {0, 1, 7, 64, 3, 1000}) {
    src.read_bytes(n);
    expected += n;
    CHECK(src.byte_counter() == expected);
  }
  for (int i = 0; i < 200; ++i) {
    prev = src.byte_counter();
    src.read_int_in(0, 999);
    CHECK(src.byte_counter() >= prev + 2);
    prev = src.byte_counter();
    src.read_double_unit();
    CHECK(src.byte_counter() == prev + 8);
  }
}

TEST_CASE("every read operation is deterministic under a seed") {
  auto a = EntropySource::prng(77);
  auto b = EntropySource::prng(77);
  for (int i = 0; i < 500; ++i) {
    CHECK(a.read_int_in(-1000, 1000) == b.read_int_in(-1000, 1000));
    CHECK(a.read_double_unit() == b.read_double_unit());
    CHECK(a.read_double_in(-3.0, 9.5) == b.read_double_in(-3.0, 9.5));
  }
}

TEST_CASE("parse_spec") {
  const auto p = parse_spec("prng:42");
  CHECK(p.kind == BackendKind::Prng);
  CHECK(p.seed == 42);
  CHECK(p.label() == "prng:42");
  CHECK(parse_spec("os").kind == BackendKind::Os);
  const auto d = parse_spec("dev:/tmp/x.bin");
  CHECK(d.kind == BackendKind::Device);
  CHECK(d.target == "/tmp/x.bin");
  const auto h = parse_spec("http:http://localhost:9/q");
  CHECK(h.kind == BackendKind::Remote);
  CHECK(h.target == "http://localhost:9/q");
  for (const char* bad : {"", "prng", "prng:", "prng:x1", "os:1", "dev:", "ftp:x", "http:"}) {
    CAPTURE(bad);
    CHECK(error_code_of([&] { parse_spec(bad); }) == Errc::InvalidParameter);
  }
}

TEST_CASE("remote backend round trip against mock server") {
  qrs::testing::MockQrngServer server(99);
  auto src = EntropySource::remote(server.endpoint());
  const auto got = src.read_bytes(3000);
  CHECK(got == qrs::testing::reference_bytes(99, 3000));
  CHECK(src.byte_counter() == 3000);

  const auto d = src.describe();
  CHECK(d.backend_kind == BackendKind::Remote);
  REQUIRE(d.serial_number);
  CHECK(*d.serial_number == "MOCK-0001");
  REQUIRE(d.device_type);
  CHECK(*d.device_type == "mock-usb");
  CHECK(d.device_id);
}

TEST_CASE("remote backend error paths") {
  SUBCASE("server error status") {
    qrs::testing::MockQrngServer server(1, qrs::testing::MockQrngServer::Mode::ServerError);
    auto src = EntropySource::remote(server.endpoint());
    CHECK(error_code_of([&] { src.read_bytes(16); }) == Errc::DeviceUnavailable);
  }
  SUBCASE("short body") {
    qrs::testing::MockQrngServer server(1, qrs::testing::MockQrngServer::Mode::ShortBody);
    auto src = EntropySource::remote(server.endpoint());
    CHECK(error_code_of([&] { src.read_bytes(16); }) == Errc::ShortRead);
  }
  SUBCASE("unreachable endpoint") {
    int port = 0;
    {
      qrs::testing::MockQrngServer gone(1);
      port = gone.port();
    }
    const std::string url = "http://127.0.0.1:" + std::to_string(port) + "/qrng";
    auto src = EntropySource::remote(url, std::chrono::milliseconds(300));
    CHECK(error_code_of([&] { src.read_bytes(4); }) == Errc::DeviceUnavailable);
    CHECK(error_code_of([&] { src.describe(); }) == Errc::DeviceUnavailable);
  }
  SUBCASE("unsupported scheme") {
    CHECK(error_code_of([&] { EntropySource::remote("https://example.invalid/q"); }) ==
          Errc::InvalidParameter);
  }
}

TEST_CASE("Error classification") {
  CHECK(Error(Errc::DeviceUnavailable, "x").is_backend_failure());
  CHECK(Error(Errc::ShortRead, "x").is_backend_failure());
  CHECK_FALSE(Error(Errc::InvalidRange, "x").is_backend_failure());
  CHECK(std::string(Error(Errc::NotPsd, "m").what()).find("m") != std::string::npos);
}

TEST_CASE("SynchronizedSource serialises concurrent readers") {
  SynchronizedSource shared(EntropySource::prng(31));
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 2500; ++i) shared.read_bytes(4);
    });
  }
  for (auto& th : threads) th.join();
  CHECK(shared.with([](EntropySource& s) { return s.byte_counter(); }) == 40000);

  // Total stream consumed equals a single-threaded read of the same length.
  auto ref = EntropySource::prng(31);
  ref.read_bytes(40000);
  CHECK(shared.read_bytes(8) == ref.read_bytes(8));
}

TEST_CASE("moved source keeps its stream position") {
  auto a = EntropySource::prng(3);
  a.read_bytes(5);
  EntropySource b = std::move(a);
  auto ref = EntropySource::prng(3);
  ref.read_bytes(5);
  CHECK(b.read_bytes(9) == ref.read_bytes(9));
  CHECK(b.byte_counter() == 14);
}
