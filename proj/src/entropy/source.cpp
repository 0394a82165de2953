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

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>

#include "backends.hpp"
#include "qrs/entropy.hpp"

namespace qrs::entropy {

std::string_view to_string(BackendKind kind) noexcept {
  switch (kind) {
    case BackendKind::Prng: return "prng";
    case BackendKind::Os: return "os";
    case BackendKind::Device: return "device";
    case BackendKind::Remote: return "remote";
  }
  return "unknown";
}

std::string EntropySpec::label() const {
  switch (kind) {
    case BackendKind::Prng: return "prng:" + std::to_string(seed);
    case BackendKind::Os: return "os";
    case BackendKind::Device: return "dev:" + target;
    case BackendKind::Remote: return "http:" + target;
  }
  return "unknown";
}

EntropySpec parse_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  EntropySpec spec;
  if (head == "os" && colon == std::string_view::npos) {
    spec.kind = BackendKind::Os;
  } else if (head == "prng") {
    spec.kind = BackendKind::Prng;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), spec.seed);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw Error(Errc::InvalidParameter, "bad prng seed in entropy spec: " + std::string(text));
    }
  } else if (head == "dev" && !rest.empty()) {
    spec.kind = BackendKind::Device;
    spec.target = std::string(rest);
  } else if (head == "http" && !rest.empty()) {
    spec.kind = BackendKind::Remote;
    spec.target = std::string(rest);
  } else {
    throw Error(Errc::InvalidParameter,
                "entropy spec must be prng:<seed>, os, dev:<path> or http:<url>, got: " +
                    std::string(text));
  }
  return spec;
}

namespace detail {

unsigned byte_width_for(std::uint64_t range) noexcept {
  if (range <= 1) return 1;
  const auto bits = static_cast<unsigned>(std::bit_width(range - 1));
  return std::max(1U, (bits + 7) / 8);
}

std::uint64_t acceptance_limit(std::uint64_t range, unsigned width) noexcept {
  const std::uint64_t space = std::uint64_t{1} << (8 * width);
  return space - space % range;
}

double unit_double_from_bytes(std::span<const std::byte, 8> bytes) noexcept {
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    word |= std::uint64_t{std::to_integer<std::uint8_t>(bytes[i])} << (8 * i);
  }
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace detail

EntropySource::EntropySource(std::unique_ptr<Backend> backend) : backend_(std::move(backend)) {
  if (!backend_) throw Error(Errc::InvalidParameter, "null entropy backend");
}

EntropySource EntropySource::prng(std::uint64_t seed) {
  return EntropySource(backends::make_prng(seed));
}

EntropySource EntropySource::os() { return EntropySource(backends::make_os()); }

EntropySource EntropySource::device(const std::filesystem::path& path) {
  return EntropySource(backends::make_device(path));
}

EntropySource EntropySource::remote(std::string endpoint, std::chrono::milliseconds timeout) {
  return EntropySource(backends::make_remote(std::move(endpoint), timeout));
}

EntropySource EntropySource::from_spec(const EntropySpec& spec) {
  switch (spec.kind) {
    case BackendKind::Prng: return prng(spec.seed);
    case BackendKind::Os: return os();
    case BackendKind::Device: return device(spec.target);
    case BackendKind::Remote: return remote(spec.target, spec.timeout);
  }
  throw Error(Errc::InvalidParameter, "unknown backend kind");
}

std::vector<std::byte> EntropySource::read_bytes(std::size_t n) {
  std::vector<std::byte> out(n);
  read_into(out);
  return out;
}

void EntropySource::read_into(std::span<std::byte> out) {
  if (out.empty()) return;
  backend_->fill(out);
  byte_counter_ += out.size();
}

std::int64_t EntropySource::read_int_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw Error(Errc::InvalidRange,
                "empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  const std::uint64_t span_minus_one = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span_minus_one >= (std::uint64_t{1} << 32)) {
    throw Error(Errc::InvalidRange, "range wider than 2^32 values");
  }
  const std::uint64_t range = span_minus_one + 1;
  if (range == 1) return lo;

  const unsigned width = detail::byte_width_for(range);
  const std::uint64_t limit = detail::acceptance_limit(range, width);
  std::array<std::byte, 4> raw{};
  for (;;) {
    read_into(std::span<std::byte>(raw.data(), width));
    std::uint64_t x = 0;
    for (unsigned i = 0; i < width; ++i) {
      x |= std::uint64_t{std::to_integer<std::uint8_t>(raw[i])} << (8 * i);
    }
    if (x < limit) {
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
    }
  }
}

double EntropySource::read_double_unit() {
  std::array<std::byte, 8> raw{};
  read_into(raw);
  return detail::unit_double_from_bytes(raw);
}

double EntropySource::read_double_in(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi) || !std::isfinite(hi - lo)) {
    throw Error(Errc::InvalidRange, "need finite lo < hi");
  }
  const double x = lo + (hi - lo) * read_double_unit();
  // Rounding can land exactly on hi; keep the interval half-open.
  return x < hi ? x : std::nextafter(hi, lo);
}

SourceDescriptor EntropySource::describe() const { return backend_->describe(); }

}  // namespace qrs::entropy
