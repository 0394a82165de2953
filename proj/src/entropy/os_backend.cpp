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

#include <sys/random.h>

#include <cerrno>
#include <cstring>

#include "backends.hpp"

namespace qrs::entropy::backends {
namespace {

class OsBackend final : public Backend {
 public:
  BackendKind kind() const noexcept override { return BackendKind::Os; }

  void fill(std::span<std::byte> out) override {
    std::byte* p = out.data();
    std::size_t left = out.size();
    while (left > 0) {
      const ssize_t got = ::getrandom(p, left, 0);
      if (got < 0) {
        if (errno == EINTR) continue;
        throw Error(Errc::DeviceUnavailable,
                    std::string("getrandom failed: ") + std::strerror(errno));
      }
      p += got;
      left -= static_cast<std::size_t>(got);
    }
  }

  SourceDescriptor describe() override {
    return SourceDescriptor{BackendKind::Os, std::string(kLibraryVersion), {}, {}, {}};
  }
};

}  // namespace

std::unique_ptr<Backend> make_os() { return std::make_unique<OsBackend>(); }

}  // namespace qrs::entropy::backends
