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

// SplitMix64 byte stream. Each 64-bit output word is emitted little-endian;
// partially consumed words are buffered so the stream does not depend on how
// callers chunk their reads.

#include <array>
#include <cstring>

#include "backends.hpp"

namespace qrs::entropy::backends {
namespace {

class PrngBackend final : public Backend {
 public:
  explicit PrngBackend(std::uint64_t seed) : state_(seed) {}

  BackendKind kind() const noexcept override { return BackendKind::Prng; }

  void fill(std::span<std::byte> out) override {
    for (auto& b : out) {
      if (pos_ == buffer_.size()) {
        refill();
      }
      b = buffer_[pos_++];
    }
  }

  SourceDescriptor describe() override {
    return SourceDescriptor{BackendKind::Prng, std::string(kLibraryVersion), {}, {}, {}};
  }

 private:
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  void refill() noexcept {
    std::uint64_t word = next();
    for (auto& b : buffer_) {
      b = static_cast<std::byte>(word & 0xffU);
      word >>= 8;
    }
    pos_ = 0;
  }

  std::uint64_t state_;
  std::array<std::byte, 8> buffer_{};
  std::size_t pos_ = 8;
};

}  // namespace

std::unique_ptr<Backend> make_prng(std::uint64_t seed) {
  return std::make_unique<PrngBackend>(seed);
}

}  // namespace qrs::entropy::backends
