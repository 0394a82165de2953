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

#ifndef QRS_ENTROPY_HPP
#define QRS_ENTROPY_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrs/error.hpp"

namespace qrs::entropy {

inline constexpr std::string_view kLibraryVersion = "qrstates 1.0.0";

enum class BackendKind { Prng, Os, Device, Remote };

std::string_view to_string(BackendKind kind) noexcept;

// Device-style backends carry serial/id/type metadata; the others do not.
constexpr bool is_device_backend(BackendKind kind) noexcept {
  return kind == BackendKind::Device || kind == BackendKind::Remote;
}

struct SourceDescriptor {
  BackendKind backend_kind = BackendKind::Prng;
  std::string library_version;
  std::optional<std::string> serial_number;
  std::optional<std::int64_t> device_id;
  std::optional<std::string> device_type;
};

// A raw byte supplier. Implementations throw qrs::Error with
// Errc::DeviceUnavailable or Errc::ShortRead.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual BackendKind kind() const noexcept = 0;
  virtual void fill(std::span<std::byte> out) = 0;
  virtual SourceDescriptor describe() = 0;
};

// Parsed form of "prng:<seed>", "os", "dev:<path>" or "http:<url>".
struct EntropySpec {
  BackendKind kind = BackendKind::Os;
  std::uint64_t seed = 0;
  std::string target;  // path or URL
  std::chrono::milliseconds timeout{2000};

  std::string label() const;
};

// Throws Errc::InvalidParameter on malformed text.
EntropySpec parse_spec(std::string_view text);

inline constexpr const char* kEntropyEnvVar = "QRS_ENTROPY";

namespace detail {

// Smallest number of bytes whose value space covers [0, range).
unsigned byte_width_for(std::uint64_t range) noexcept;

// Largest multiple of `range` not exceeding 2^(8*width). Draws below this
// limit are accepted by read_int_in; the rest are rejected.
std::uint64_t acceptance_limit(std::uint64_t range, unsigned width) noexcept;

// Maps 8 raw bytes (little-endian word) to [0,1) via the top 53 bits.
double unit_double_from_bytes(std::span<const std::byte, 8> bytes) noexcept;

}  // namespace detail

// Single-owner randomness source. Movable between threads, never shared;
// wrap in SynchronizedSource for shared use.
class EntropySource {
 public:
  explicit EntropySource(std::unique_ptr<Backend> backend);

  static EntropySource prng(std::uint64_t seed);
  static EntropySource os();
  static EntropySource device(const std::filesystem::path& path);
  static EntropySource remote(std::string endpoint,
                              std::chrono::milliseconds timeout = std::chrono::milliseconds{2000});
  static EntropySource from_spec(const EntropySpec& spec);

  EntropySource(EntropySource&&) noexcept = default;
  EntropySource& operator=(EntropySource&&) noexcept = default;
  EntropySource(const EntropySource&) = delete;
  EntropySource& operator=(const EntropySource&) = delete;

  std::vector<std::byte> read_bytes(std::size_t n);
  void read_into(std::span<std::byte> out);

  // Uniform on the inclusive range, by rejection on the smallest byte width.
  std::int64_t read_int_in(std::int64_t lo, std::int64_t hi);

  double read_double_unit();
  double read_double_in(double lo, double hi);

  SourceDescriptor describe() const;
  BackendKind kind() const noexcept { return backend_->kind(); }
  std::uint64_t byte_counter() const noexcept { return byte_counter_; }

 private:
  std::unique_ptr<Backend> backend_;
  std::uint64_t byte_counter_ = 0;
};

// Exclusive-access adapter for sharing one source across threads.
class SynchronizedSource {
 public:
  explicit SynchronizedSource(EntropySource source) : source_(std::move(source)) {}

  template <class F>
  decltype(auto) with(F&& fn) {
    std::lock_guard<std::mutex> lock(mutex_);
    return std::forward<F>(fn)(source_);
  }

  std::vector<std::byte> read_bytes(std::size_t n) {
    return with([n](EntropySource& s) { return s.read_bytes(n); });
  }
  double read_double_unit() {
    return with([](EntropySource& s) { return s.read_double_unit(); });
  }
  std::int64_t read_int_in(std::int64_t lo, std::int64_t hi) {
    return with([=](EntropySource& s) { return s.read_int_in(lo, hi); });
  }

 private:
  std::mutex mutex_;
  EntropySource source_;
};

}  // namespace qrs::entropy

#endif  // QRS_ENTROPY_HPP
