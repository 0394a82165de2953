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

// Sequential reader over any readable path: a hardware character device or a
// recorded-entropy fixture file, consumed from offset 0.

#include <sys/stat.h>

#include <fstream>

#include "backends.hpp"

namespace qrs::entropy::backends {
namespace {

class DeviceBackend final : public Backend {
 public:
  explicit DeviceBackend(std::filesystem::path path) : path_(std::move(path)) {
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) {
      throw Error(Errc::DeviceUnavailable, "no such device: " + path_.string());
    }
    stream_.open(path_, std::ios::binary);
    if (!stream_) {
      throw Error(Errc::DeviceUnavailable, "cannot open device: " + path_.string());
    }
  }

  BackendKind kind() const noexcept override { return BackendKind::Device; }

  void fill(std::span<std::byte> out) override {
    if (out.empty()) return;
    stream_.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(out.size()));
    const auto got = static_cast<std::size_t>(stream_.gcount());
    if (got < out.size()) {
      throw Error(Errc::ShortRead, path_.string() + ": wanted " + std::to_string(out.size()) +
                                       " bytes, stream ended after " + std::to_string(got));
    }
  }

  SourceDescriptor describe() override {
    struct stat st {};
    if (::stat(path_.c_str(), &st) != 0) {
      throw Error(Errc::DeviceUnavailable, "cannot stat device: " + path_.string());
    }
    std::string type = "other";
    std::int64_t id = static_cast<std::int64_t>(st.st_ino);
    if (S_ISCHR(st.st_mode)) {
      type = "character-device";
      id = static_cast<std::int64_t>(st.st_rdev);
    } else if (S_ISREG(st.st_mode)) {
      type = "regular-file";
    } else if (S_ISFIFO(st.st_mode)) {
      type = "fifo";
    }
    std::error_code ec;
    auto canonical = std::filesystem::weakly_canonical(path_, ec);
    return SourceDescriptor{BackendKind::Device, std::string(kLibraryVersion),
                            ec ? path_.string() : canonical.string(), id, type};
  }

 private:
  std::filesystem::path path_;
  std::ifstream stream_;
};

}  // namespace

std::unique_ptr<Backend> make_device(const std::filesystem::path& path) {
  return std::make_unique<DeviceBackend>(path);
}

}  // namespace qrs::entropy::backends
