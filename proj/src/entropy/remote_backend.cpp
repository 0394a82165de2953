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

// HTTP client for a remote QRNG service:
//   GET {endpoint}/randbytes?n=<count> -> 200, application/octet-stream, <count> bytes
//   GET {endpoint}/info                -> 200, {"version", "serial", "device_type"}

#include <algorithm>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "backends.hpp"

namespace qrs::entropy::backends {
namespace {

constexpr std::size_t kMinFetch = 1024;

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path without trailing slash
};

ParsedUrl parse_url(const std::string& url) {
  constexpr std::string_view scheme = "http://";
  if (url.rfind(scheme, 0) != 0 || url.size() == scheme.size()) {
    throw Error(Errc::InvalidParameter, "remote endpoint must be an http:// URL: " + url);
  }
  const auto slash = url.find('/', scheme.size());
  ParsedUrl out;
  out.origin = url.substr(0, slash);
  out.prefix = slash == std::string::npos ? "" : url.substr(slash);
  while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  return out;
}

class RemoteBackend final : public Backend {
 public:
  RemoteBackend(std::string endpoint, std::chrono::milliseconds timeout)
      : endpoint_(std::move(endpoint)), url_(parse_url(endpoint_)), timeout_(timeout) {}

  BackendKind kind() const noexcept override { return BackendKind::Remote; }

  void fill(std::span<std::byte> out) override {
    std::size_t done = 0;
    while (done < out.size()) {
      if (pos_ == buffer_.size()) {
        fetch(std::max(out.size() - done, kMinFetch));
      }
      const std::size_t take = std::min(out.size() - done, buffer_.size() - pos_);
      std::copy_n(buffer_.begin() + static_cast<std::ptrdiff_t>(pos_), take, out.begin() + static_cast<std::ptrdiff_t>(done));
      pos_ += take;
      done += take;
    }
  }

  SourceDescriptor describe() override {
    auto client = make_client();
    auto res = client.Get(url_.prefix + "/info");
    if (!res) {
      throw Error(Errc::DeviceUnavailable,
                  endpoint_ + "/info: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw Error(Errc::DeviceUnavailable,
                  endpoint_ + "/info: HTTP status " + std::to_string(res->status));
    }
    nlohmann::json info;
    try {
      info = nlohmann::json::parse(res->body);
      SourceDescriptor d;
      d.backend_kind = BackendKind::Remote;
      d.library_version = info.at("version").get<std::string>();
      d.serial_number = info.at("serial").get<std::string>();
      d.device_type = info.at("device_type").get<std::string>();
      d.device_id = info.value("device_id", std::int64_t{0});
      return d;
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::DeviceUnavailable, endpoint_ + "/info: malformed metadata: " + e.what());
    }
  }

 private:
  httplib::Client make_client() const {
    httplib::Client client(url_.origin);
    const auto secs = static_cast<time_t>(timeout_.count() / 1000);
    const auto usecs = static_cast<time_t>((timeout_.count() % 1000) * 1000);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);
    return client;
  }

  void fetch(std::size_t n) {
    auto client = make_client();
    auto res = client.Get(url_.prefix + "/randbytes?n=" + std::to_string(n));
    if (!res) {
      throw Error(Errc::DeviceUnavailable,
                  endpoint_ + "/randbytes: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw Error(Errc::DeviceUnavailable,
                  endpoint_ + "/randbytes: HTTP status " + std::to_string(res->status));
    }
    if (res->body.size() < n) {
      throw Error(Errc::ShortRead, endpoint_ + "/randbytes: wanted " + std::to_string(n) +
                                       " bytes, got " + std::to_string(res->body.size()));
    }
    buffer_.resize(n);
    std::transform(res->body.begin(), res->body.begin() + static_cast<std::ptrdiff_t>(n),
                   buffer_.begin(), [](char c) { return static_cast<std::byte>(c); });
    pos_ = 0;
  }

  std::string endpoint_;
  ParsedUrl url_;
  std::chrono::milliseconds timeout_;
  std::vector<std::byte> buffer_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Backend> make_remote(std::string endpoint, std::chrono::milliseconds timeout) {
  return std::make_unique<RemoteBackend>(std::move(endpoint), timeout);
}

}  // namespace qrs::entropy::backends
